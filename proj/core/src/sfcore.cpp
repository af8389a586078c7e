#include "kummerscan/sfcore.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ks::sfcore {

namespace {

struct SeriesOut {
    BigReal sum;
    BigReal tail_bound; // absolute bound on the discarded tail
    std::uint64_t terms = 1;
};

constexpr std::uint64_t kMaxSeriesTerms = 5'000'000;

// Parameter accumulators carry a few guard bits so that the running a+k
// shifts stay exact at the working precision.
inline unsigned param_bits(unsigned bits) { return std::max(bits + 16, 64u); }

// Sums sum_k prod_i (a_i)_k / (prod_j (b_j)_k k!) x^k for positive
// parameters and x >= 0. All terms are positive, so plain accumulation is
// stable. The stop rule needs an upper bound on every future term ratio:
// each paired factor (a+k)/(c+k) moves monotonically toward 1 with k, so
// max(current, 1) dominates it forever; unpaired denominator factors only
// shrink. For p <= q the bound must drop below 1/2 before we stop; for
// p = q+1 it tends to x and stopping only needs bound < 1.
SeriesOut sum_hyp_series(const std::vector<BigReal>& a,
                         const std::vector<BigReal>& b,
                         const BigReal& x,
                         const BigReal& stop_tol,
                         unsigned bits) {
    const std::size_t p = a.size();
    const std::size_t q = b.size();
    const bool over = (p == q + 1);

    SeriesOut out{BigReal(1.0, bits), BigReal(0.0, bits), 1};
    if (x.is_zero())
        return out;

    const unsigned pbits = param_bits(bits);
    std::vector<BigReal> an, bn;
    an.reserve(p);
    bn.reserve(q);
    for (const auto& v : a) an.emplace_back(0.0, pbits), an.back().set(v);
    for (const auto& v : b) bn.emplace_back(0.0, pbits), bn.back().set(v);

    BigReal kf(1.0, pbits); // k+1 for the k! factor
    BigReal term(1.0, bits), ratio(0.0, bits), bound(0.0, bits), factor(0.0, pbits),
        tail(0.0, bits);
    const std::size_t npairs = over ? q : p;
    const double cutoff = over ? 1.0 : 0.5;

    for (;;) {
        ratio.set(x);
        bound.set(x);
        for (std::size_t i = 0; i < npairs; ++i) {
            factor.set(an[i]);
            factor /= bn[i];
            ratio *= factor;
            if (factor > 1)
                bound *= factor;
        }
        if (over) {
            factor.set(an[q]);
            factor /= kf;
            ratio *= factor;
            if (factor > 1)
                bound *= factor;
        } else {
            for (std::size_t j = p; j < q; ++j) {
                ratio /= bn[j];
                bound /= bn[j];
            }
            ratio /= kf;
            bound /= kf;
        }

        term *= ratio;
        out.sum += term;
        ++out.terms;

        for (auto& v : an) v += 1;
        for (auto& v : bn) v += 1;
        kf += 1;

        if (bound < cutoff) {
            tail.set(term);
            tail *= bound;
            tail /= 1.0 - bound;
            if (tail <= stop_tol * out.sum) {
                out.tail_bound = tail;
                break;
            }
        }
        if (out.terms > kMaxSeriesTerms)
            throw PrecisionError("hypergeometric series did not converge within the term budget");
    }
    return out;
}

EvalResult make_result(const SeriesOut& s, unsigned bits, unsigned extra_roundings = 0) {
    EvalResult r;
    r.value = s.sum;
    r.rel_error_bound = s.tail_bound / s.sum +
                        double(s.terms + extra_roundings) * eps_for_bits(bits);
    r.terms_used = s.terms;
    r.precision_bits = bits;
    return r;
}

void check_pfq_domain(const std::vector<double>& a, const std::vector<double>& b, double x) {
    for (double ai : a)
        if (!(ai > 0))
            throw DomainError("pFq numerator parameters must be positive");
    for (double bj : b)
        if (!(bj > 0))
            throw DomainError("pFq denominator parameters must be positive");
    if (x < 0)
        throw DomainError("pFq argument must be nonnegative");
    if (a.size() > b.size() + 1)
        throw DivergentSeries("pFq diverges for p > q+1");
    if (a.size() == b.size() + 1 && x >= 1)
        throw DivergentSeries("pFq with p = q+1 requires x < 1");
}

BigReal stop_tol_for(unsigned bits) {
    BigReal t;
    mpfr_set_ui_2exp(t.raw(), 1, -static_cast<mpfr_exp_t>(bits), MPFR_RNDN);
    return t;
}

EvalResult pfq_big(const std::vector<BigReal>& a,
                   const std::vector<BigReal>& b,
                   const BigReal& x,
                   unsigned bits) {
    return make_result(sum_hyp_series(a, b, x, stop_tol_for(bits), bits), bits);
}

std::vector<BigReal> to_big(const std::vector<double>& v, int shift = 0) {
    std::vector<BigReal> out;
    out.reserve(v.size());
    for (double d : v) {
        BigReal b(d, 96);
        if (shift != 0)
            b += shift;
        out.push_back(std::move(b));
    }
    return out;
}

} // namespace

BigReal pochhammer(double a, unsigned k) {
    BigReal r(1.0, kDefaultPrecisionBits);
    BigReal t(a, 96);
    for (unsigned i = 0; i < k; ++i) {
        r *= t;
        t += 1;
    }
    return r;
}

EvalResult kummer_1f1(const KummerParams& p, unsigned prec_bits) {
    if (!(p.a > 0) || !(p.b > 0))
        throw DomainError("1F1 requires a > 0 and b > 0");
    if (p.x < 0)
        throw DomainError("1F1 argument must be nonnegative");
    return pfq_big({BigReal(p.a)}, {BigReal(p.b)}, BigReal(p.x), prec_bits);
}

EvalResult kummer_1f1_dx(const KummerParams& p, unsigned prec_bits) {
    if (!(p.a > 0) || !(p.b > 0))
        throw DomainError("1F1 requires a > 0 and b > 0");
    if (p.x < 0)
        throw DomainError("1F1 argument must be nonnegative");
    BigReal a1(p.a, 96);
    a1 += 1;
    BigReal b1(p.b, 96);
    b1 += 1;
    EvalResult r = pfq_big({a1}, {b1}, BigReal(p.x), prec_bits);
    r.value *= BigReal(p.a) / BigReal(p.b);
    r.rel_error_bound += 2.0 * eps_for_bits(prec_bits);
    return r;
}

EvalResult pfq(const PfqParams& p, unsigned prec_bits) {
    check_pfq_domain(p.a, p.b, p.x);
    return pfq_big(to_big(p.a), to_big(p.b), BigReal(p.x), prec_bits);
}

EvalResult pfq_exact(const std::vector<BigReal>& a,
                     const std::vector<BigReal>& b,
                     const BigReal& x,
                     unsigned prec_bits) {
    for (const auto& ai : a)
        if (!(ai > 0))
            throw DomainError("pFq numerator parameters must be positive");
    for (const auto& bj : b)
        if (!(bj > 0))
            throw DomainError("pFq denominator parameters must be positive");
    if (x < 0)
        throw DomainError("pFq argument must be nonnegative");
    if (a.size() > b.size() + 1)
        throw DivergentSeries("pFq diverges for p > q+1");
    if (a.size() == b.size() + 1 && x >= 1)
        throw DivergentSeries("pFq with p = q+1 requires x < 1");
    return pfq_big(a, b, x, prec_bits);
}

EvalResult pfq_dx(const PfqParams& p, unsigned prec_bits) {
    check_pfq_domain(p.a, p.b, p.x);
    EvalResult r = pfq_big(to_big(p.a, 1), to_big(p.b, 1), BigReal(p.x), prec_bits);
    BigReal scale(1.0, prec_bits);
    for (double ai : p.a) scale *= ai;
    for (double bj : p.b) scale /= bj;
    r.value *= scale;
    r.rel_error_bound += double(p.a.size() + p.b.size() + 1) * eps_for_bits(prec_bits);
    return r;
}

EvalResult exp_remainder(const RemainderParams& p, unsigned prec_bits) {
    if (p.n < 0)
        throw DomainError("remainder order n must be >= 0");
    if (p.x < 0)
        throw DomainError("remainder argument must be nonnegative");
    if (p.x == 0)
        return EvalResult{BigReal(0.0, prec_bits), BigReal(0.0, prec_bits), 1, prec_bits};

    const BigReal bx(p.x);
    const BigReal tol = stop_tol_for(prec_bits);

    // leading term x^{n+1}/(n+1)!
    BigReal term(1.0, prec_bits);
    for (int i = 1; i <= p.n + 1; ++i) {
        term *= bx;
        term /= i;
    }
    BigReal sum = term;
    std::uint64_t terms = 1;
    BigReal bk(p.n + 2.0, param_bits(prec_bits));
    BigReal rb(0.0, prec_bits), tail(0.0, prec_bits);
    bool tail_valid = false;
    for (;;) {
        term *= bx;
        term /= bk;
        sum += term;
        ++terms;
        bk += 1;
        rb.set(bx);
        rb /= bk; // every later ratio x/k is below this
        if (rb < 0.5) {
            tail.set(term);
            tail *= rb;
            tail /= 1.0 - rb;
            if (tail <= tol * sum) {
                tail_valid = true;
                break;
            }
        }
        if (terms > kMaxSeriesTerms)
            throw PrecisionError("exponential tail series did not converge within the term budget");
    }
    (void)tail_valid;
    EvalResult r;
    r.value = sum;
    r.rel_error_bound = tail / sum +
                        double(terms + static_cast<std::uint64_t>(p.n) + 1) * eps_for_bits(prec_bits);
    r.terms_used = terms;
    r.precision_bits = prec_bits;
    return r;
}

EvalResult exp_remainder_via_kummer(const RemainderParams& p, unsigned prec_bits) {
    if (p.n < 0)
        throw DomainError("remainder order n must be >= 0");
    if (p.x < 0)
        throw DomainError("remainder argument must be nonnegative");
    if (p.x == 0)
        return EvalResult{BigReal(0.0, prec_bits), BigReal(0.0, prec_bits), 1, prec_bits};

    EvalResult r = pfq_big({BigReal(1)}, {BigReal(p.n + 2.0)}, BigReal(p.x), prec_bits);
    BigReal pre(1.0, prec_bits);
    const BigReal bx(p.x);
    for (int i = 1; i <= p.n + 1; ++i) {
        pre *= bx;
        pre /= i;
    }
    r.value *= pre;
    r.rel_error_bound += double(2 * p.n + 4) * eps_for_bits(prec_bits);
    return r;
}

EvalResult reg_lower_gamma(double s, double x, unsigned prec_bits) {
    if (!(s > 0))
        throw DomainError("incomplete gamma requires s > 0");
    if (x < 0)
        throw DomainError("incomplete gamma requires x >= 0");
    if (x == 0)
        return EvalResult{BigReal(0.0, prec_bits), BigReal(0.0, prec_bits), 1, prec_bits};

    // P(s,x) = x^s e^{-x} / Gamma(s+1) * 1F1(1; s+1; x), all terms positive.
    const BigReal bx(x);
    BigReal s1(s, 96);
    s1 += 1;
    SeriesOut series = sum_hyp_series({BigReal(1)}, {s1}, bx, stop_tol_for(prec_bits), prec_bits);

    BigReal pre = pow(bx, BigReal(s), prec_bits);
    pre *= exp(-bx, prec_bits);
    pre /= tgamma(s1, prec_bits);

    EvalResult r;
    r.value = pre * series.sum;
    r.rel_error_bound = series.tail_bound / series.sum +
                        double(series.terms + 8) * eps_for_bits(prec_bits);
    r.terms_used = series.terms;
    r.precision_bits = prec_bits;
    return r;
}

EvalResult eval_to_tolerance(const std::function<EvalResult(unsigned)>& thunk,
                             double rel_tol,
                             unsigned start_bits,
                             unsigned ceiling_bits) {
    if (!(rel_tol > 0))
        throw DomainError("rel_tol must be positive");
    unsigned bits = start_bits;
    for (;;) {
        EvalResult r = thunk(bits);
        if (r.rel_error_bound <= rel_tol)
            return r;
        if (bits >= ceiling_bits)
            throw PrecisionError("tolerance " + std::to_string(rel_tol) +
                                 " unreachable at precision ceiling " +
                                 std::to_string(ceiling_bits) + " bits");
        bits = std::min(bits * 2, ceiling_bits);
    }
}

} // namespace ks::sfcore

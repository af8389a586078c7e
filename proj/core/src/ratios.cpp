#include "kummerscan/ratios.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ks::ratios {

using sfcore::EvalResult;

const char* family_name(RatioFamily f) {
    switch (f) {
        case RatioFamily::FRemainder: return "f";
        case RatioFamily::GKummer: return "g";
        case RatioFamily::HAbc: return "habc";
        case RatioFamily::HPfq: return "hpfq";
    }
    return "?";
}

namespace {

std::string fmt_double(double d) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
}

std::string fmt_vec(const std::vector<double>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += fmt_double(v[i]);
    }
    return s + "]";
}

// Value with an absolute error bound, for first-order propagation through
// the quotient-rule expressions (which subtract positive terms, so the
// bound must be tracked in absolute form).
struct VE {
    BigReal v;
    BigReal e;
};

VE from_eval(const EvalResult& r) {
    return {r.value, r.rel_error_bound * abs(r.value)};
}

VE mul(const VE& a, const VE& b, const BigReal& eps) {
    VE r;
    r.v = a.v * b.v;
    r.e = abs(a.v) * b.e + abs(b.v) * a.e + a.e * b.e + abs(r.v) * eps;
    return r;
}

VE div(const VE& a, const VE& b, const BigReal& eps) {
    VE r;
    r.v = a.v / b.v;
    r.e = a.e / abs(b.v) + abs(r.v) * b.e / abs(b.v) + abs(r.v) * eps;
    return r;
}

VE add(const VE& a, const VE& b, const BigReal& eps) {
    VE r;
    r.v = a.v + b.v;
    r.e = a.e + b.e + abs(r.v) * eps;
    return r;
}

VE sub(const VE& a, const VE& b, const BigReal& eps) {
    VE r;
    r.v = a.v - b.v;
    r.e = a.e + b.e + abs(r.v) * eps;
    return r;
}

RatioValue finish(const VE& x, bool by_limit = false) {
    RatioValue r;
    r.value = x.v;
    r.abs_error_bound = x.e;
    r.rel_error_bound = x.v.is_zero() ? x.e : x.e / abs(x.v);
    r.defined_by_limit = by_limit;
    return r;
}

RatioValue exact(const BigReal& v, const BigReal& eps, bool by_limit = false) {
    RatioValue r;
    r.value = v;
    r.rel_error_bound = eps;
    r.abs_error_bound = eps * abs(v);
    r.defined_by_limit = by_limit;
    return r;
}

// P(s,x) with P(0,x) := 1 (the s = 0 slot stands for R_{-1} = e^x after the
// common e^x factor cancels out of f_n).
VE p_value(int s, double x, unsigned bits) {
    if (s == 0)
        return {BigReal(1), BigReal(0)};
    return from_eval(sfcore::reg_lower_gamma(s, x, bits));
}

// d/dx P(s,x) = x^{s-1} e^{-x} / Gamma(s); zero for the constant s = 0 slot.
VE p_derivative(int s, double x, unsigned bits, const BigReal& eps) {
    if (s == 0)
        return {BigReal(0), BigReal(0)};
    BigReal bx(x, bits);
    BigReal v = pow(bx, BigReal(s - 1.0), bits);
    v *= exp(-bx, bits);
    v /= tgamma(BigReal(double(s)), bits);
    return {v, 4 * eps * v};
}

// The three series of an h-style ratio share this shape: numerator
// parameters `a`, denominator vectors b-c, b+c, b.
struct HShape {
    std::vector<BigReal> a;
    std::vector<BigReal> bminus, bplus, bmid;
    bool zero_shift = false;
};

HShape habc_shape(double a, double b, double c) {
    HShape s;
    c = std::fabs(c);
    if (!(a > 0))
        throw DomainError("h(a,b,c,x) requires a > 0");
    // b +- c at 96 bits: a double subtraction here would shift the series
    // parameters by more than the error model accounts for.
    s.a = {BigReal(a)};
    s.bminus = {BigReal(b, 96) - c};
    s.bplus = {BigReal(b, 96) + c};
    s.bmid = {BigReal(b, 96)};
    if (!(s.bminus[0] > 0))
        throw DomainError("h(a,b,c,x) requires b - |c| > 0");
    s.zero_shift = (c == 0);
    return s;
}

HShape hpfq_shape(const std::vector<double>& a, const std::vector<double>& b,
                  const std::vector<double>& c) {
    HShape s;
    if (a.empty())
        throw DomainError("h_pq requires at least one numerator parameter");
    if (b.size() != c.size())
        throw DomainError("h_pq requires b and c vectors of equal length");
    if (a.size() > b.size() + 1)
        throw DivergentSeries("h_pq requires p <= q+1");
    s.zero_shift = true;
    for (double ai : a) {
        if (!(ai > 0))
            throw DomainError("h_pq requires positive a entries");
        s.a.push_back(BigReal(ai));
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
        double cj = std::fabs(c[j]);
        s.bminus.push_back(BigReal(b[j], 96) - cj);
        s.bplus.push_back(BigReal(b[j], 96) + cj);
        s.bmid.push_back(BigReal(b[j], 96));
        if (!(s.bminus.back() > 0))
            throw DomainError("h_pq requires b_j - |c_j| > 0");
        if (cj != 0)
            s.zero_shift = false;
    }
    return s;
}

RatioValue h_value(const HShape& s, double x, unsigned bits) {
    if (x < 0)
        throw DomainError("ratio argument must be nonnegative");
    const BigReal eps = eps_for_bits(bits);
    const BigReal bx(x);
    VE f1 = from_eval(sfcore::pfq_exact(s.a, s.bminus, bx, bits));
    VE f2 = from_eval(sfcore::pfq_exact(s.a, s.bplus, bx, bits));
    VE f3 = from_eval(sfcore::pfq_exact(s.a, s.bmid, bx, bits));
    return finish(div(mul(f1, f2, eps), mul(f3, f3, eps), eps));
}

VE shifted_derivative(const std::vector<BigReal>& a, const std::vector<BigReal>& b,
                      const BigReal& x, unsigned bits, const BigReal& eps) {
    std::vector<BigReal> a1, b1;
    a1.reserve(a.size());
    b1.reserve(b.size());
    for (const auto& v : a) a1.push_back(v + 1);
    for (const auto& v : b) b1.push_back(v + 1);
    VE r = from_eval(sfcore::pfq_exact(a1, b1, x, bits));
    BigReal scale(1.0, bits < 96 ? 96 : bits);
    for (const auto& v : a) scale *= v;
    for (const auto& v : b) scale /= v;
    r.v *= scale;
    r.e = r.e * abs(scale) + abs(r.v) * eps * double(a.size() + b.size());
    return r;
}

RatioValue h_derivative(const HShape& s, double x, unsigned bits) {
    if (x < 0)
        throw DomainError("ratio argument must be nonnegative");
    const BigReal eps = eps_for_bits(bits);
    if (s.zero_shift)
        return exact(BigReal(0), BigReal(0)); // h == 1 identically
    const BigReal bx(x);
    VE f1 = from_eval(sfcore::pfq_exact(s.a, s.bminus, bx, bits));
    VE f2 = from_eval(sfcore::pfq_exact(s.a, s.bplus, bx, bits));
    VE f3 = from_eval(sfcore::pfq_exact(s.a, s.bmid, bx, bits));
    VE d1 = shifted_derivative(s.a, s.bminus, bx, bits, eps);
    VE d2 = shifted_derivative(s.a, s.bplus, bx, bits, eps);
    VE d3 = shifted_derivative(s.a, s.bmid, bx, bits, eps);

    VE den = mul(f3, f3, eps);
    VE t1 = div(add(mul(d1, f2, eps), mul(f1, d2, eps), eps), den, eps);
    VE t2 = div(mul(mul(f1, f2, eps), d3, eps), mul(den, f3, eps), eps);
    t2.v *= 2;
    t2.e *= 2;
    return finish(sub(t1, t2, eps));
}

void validate_fg(int n, double x, bool allow_n0) {
    if (n < (allow_n0 ? 0 : 1))
        throw DomainError("ratio order n must be >= 1");
    if (x < 0)
        throw DomainError("ratio argument must be nonnegative");
}

} // namespace

RatioSpec RatioSpec::f(int n) {
    RatioSpec s;
    s.family = RatioFamily::FRemainder;
    s.n = n;
    return s;
}

RatioSpec RatioSpec::g(int n) {
    RatioSpec s;
    s.family = RatioFamily::GKummer;
    s.n = n;
    return s;
}

RatioSpec RatioSpec::habc(double a, double b, double c) {
    RatioSpec s;
    s.family = RatioFamily::HAbc;
    s.a = a;
    s.b = b;
    s.c = c;
    return s;
}

RatioSpec RatioSpec::hpfq(std::vector<double> a, std::vector<double> b, std::vector<double> c) {
    RatioSpec s;
    s.family = RatioFamily::HPfq;
    s.av = std::move(a);
    s.bv = std::move(b);
    s.cv = std::move(c);
    return s;
}

RatioSpec RatioSpec::reciprocal_of() const {
    RatioSpec s = *this;
    s.reciprocal = !s.reciprocal;
    return s;
}

void RatioSpec::validate() const {
    switch (family) {
        case RatioFamily::FRemainder:
            if (n < (allow_n0 ? 0 : 1))
                throw DomainError("f_n requires n >= 1 (n = 0 only behind allow_n0)");
            break;
        case RatioFamily::GKummer:
            if (n < 1)
                throw DomainError("g_n requires n >= 1");
            break;
        case RatioFamily::HAbc:
            habc_shape(a, b, c);
            break;
        case RatioFamily::HPfq:
            hpfq_shape(av, bv, cv);
            break;
    }
}

std::string RatioSpec::canonical_key() const {
    std::string s = reciprocal ? "recip:" : "";
    s += family_name(family);
    switch (family) {
        case RatioFamily::FRemainder:
        case RatioFamily::GKummer:
            s += "(n=" + std::to_string(n) + ")";
            break;
        case RatioFamily::HAbc:
            s += "(a=" + fmt_double(a) + ",b=" + fmt_double(b) + ",c=" + fmt_double(std::fabs(c)) + ")";
            break;
        case RatioFamily::HPfq:
            s += "(a=" + fmt_vec(av) + ",b=" + fmt_vec(bv) + ",c=" + fmt_vec(cv) + ")";
            break;
    }
    return s;
}

RatioValue f_ratio(int n, double x, unsigned prec_bits, bool allow_n0) {
    validate_fg(n, x, allow_n0);
    const BigReal eps = eps_for_bits(prec_bits);
    if (x == 0) {
        BigReal lower(n + 1.0, prec_bits);
        lower /= n + 2.0;
        return exact(lower, eps, true);
    }
    VE pa = p_value(n, x, prec_bits);
    VE pb = p_value(n + 1, x, prec_bits);
    VE pc = p_value(n + 2, x, prec_bits);
    return finish(div(mul(pa, pc, eps), mul(pb, pb, eps), eps));
}

RatioValue g_ratio(int n, double x, unsigned prec_bits) {
    validate_fg(n, x, false);
    return h_value(habc_shape(1, n + 2, 1), x, prec_bits);
}

RatioValue h_abc(double a, double b, double c, double x, unsigned prec_bits) {
    return h_value(habc_shape(a, b, c), x, prec_bits);
}

RatioValue h_pfq(const std::vector<double>& a, const std::vector<double>& b,
                 const std::vector<double>& c, double x, unsigned prec_bits) {
    return h_value(hpfq_shape(a, b, c), x, prec_bits);
}

RatioValue ratio_value(const RatioSpec& spec, double x, unsigned prec_bits) {
    RatioValue u;
    switch (spec.family) {
        case RatioFamily::FRemainder:
            u = f_ratio(spec.n, x, prec_bits, spec.allow_n0);
            break;
        case RatioFamily::GKummer:
            u = g_ratio(spec.n, x, prec_bits);
            break;
        case RatioFamily::HAbc:
            u = h_abc(spec.a, spec.b, spec.c, x, prec_bits);
            break;
        case RatioFamily::HPfq:
            u = h_pfq(spec.av, spec.bv, spec.cv, x, prec_bits);
            break;
    }
    if (spec.reciprocal) {
        const BigReal eps = eps_for_bits(prec_bits);
        VE r = div({BigReal(1), BigReal(0)}, {u.value, u.abs_error_bound}, eps);
        RatioValue out = finish(r, u.defined_by_limit);
        return out;
    }
    return u;
}

RatioValue ratio_derivative(const RatioSpec& spec, double x, unsigned prec_bits) {
    spec.validate();
    if (x < 0)
        throw DomainError("ratio argument must be nonnegative");
    const BigReal eps = eps_for_bits(prec_bits);

    RatioValue d;
    switch (spec.family) {
        case RatioFamily::FRemainder: {
            if (x == 0) {
                // f = (n+1)/(n+2) g, and the h-shape derivative at 0 is
                // a (1/(b-c) + 1/(b+c) - 2/b) with (a,b,c) = (1, n+2, 1).
                BigReal m(spec.n + 2.0, prec_bits);
                BigReal g0 = 1 / (m - 1) + 1 / (m + 1) - 2 / m;
                g0 *= (m - 1) / m;
                d = exact(g0, 8 * eps, true);
            } else {
                VE pa = p_value(spec.n, x, prec_bits);
                VE pb = p_value(spec.n + 1, x, prec_bits);
                VE pc = p_value(spec.n + 2, x, prec_bits);
                VE da = p_derivative(spec.n, x, prec_bits, eps);
                VE db = p_derivative(spec.n + 1, x, prec_bits, eps);
                VE dc = p_derivative(spec.n + 2, x, prec_bits, eps);
                VE den = mul(pb, pb, eps);
                VE t1 = div(add(mul(da, pc, eps), mul(pa, dc, eps), eps), den, eps);
                VE t2 = div(mul(mul(pa, pc, eps), db, eps), mul(den, pb, eps), eps);
                t2.v *= 2;
                t2.e *= 2;
                d = finish(sub(t1, t2, eps));
            }
            break;
        }
        case RatioFamily::GKummer:
            d = h_derivative(habc_shape(1, spec.n + 2, 1), x, prec_bits);
            break;
        case RatioFamily::HAbc:
            d = h_derivative(habc_shape(spec.a, spec.b, spec.c), x, prec_bits);
            break;
        case RatioFamily::HPfq:
            d = h_derivative(hpfq_shape(spec.av, spec.bv, spec.cv), x, prec_bits);
            break;
    }

    if (spec.reciprocal) {
        // (1/u)' = -u'/u^2
        RatioSpec plain = spec;
        plain.reciprocal = false;
        RatioValue u = ratio_value(plain, x, prec_bits);
        VE uu{u.value, u.abs_error_bound};
        VE dd{d.value, d.abs_error_bound};
        VE r = div(dd, mul(uu, uu, eps), eps);
        r.v = -r.v;
        RatioValue out = finish(r, d.defined_by_limit);
        return out;
    }
    return d;
}

std::pair<Limit, Limit> ratio_limits(const RatioSpec& spec) {
    Limit zero, inf;
    switch (spec.family) {
        case RatioFamily::FRemainder:
            zero = {true, double(spec.n + 1) / double(spec.n + 2)};
            inf = {true, 1.0};
            break;
        case RatioFamily::GKummer:
            zero = {true, 1.0};
            inf = {true, double(spec.n + 2) / double(spec.n + 1)};
            break;
        case RatioFamily::HAbc:
            zero = {true, 1.0};
            if (spec.a == 1.0) {
                double c = std::fabs(spec.c);
                inf = {true, std::tgamma(spec.b - c) * std::tgamma(spec.b + c) /
                                 (std::tgamma(spec.b) * std::tgamma(spec.b))};
            }
            break;
        case RatioFamily::HPfq:
            zero = {true, 1.0};
            break;
    }
    if (spec.reciprocal) {
        auto invert = [](Limit l) {
            if (l.known && l.value != 0)
                return Limit{true, 1.0 / l.value};
            return Limit{};
        };
        zero = invert(zero);
        inf = invert(inf);
    }
    return {zero, inf};
}

} // namespace ks::ratios

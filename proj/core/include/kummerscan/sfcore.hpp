#pragma once

#include "kummerscan/bigreal.hpp"
#include "kummerscan/errors.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace ks::sfcore {

// Value with a rigorous relative error bound covering series truncation
// and accumulated rounding.
struct EvalResult {
    BigReal value;
    BigReal rel_error_bound;
    std::uint64_t terms_used = 1;
    unsigned precision_bits = kDefaultPrecisionBits;
};

struct KummerParams {
    double a;
    double b;
    double x;
};

struct PfqParams {
    std::vector<double> a;
    std::vector<double> b;
    double x;
};

struct RemainderParams {
    int n;
    double x;
};

// Rising factorial a(a+1)...(a+k-1); 1 for k = 0.
BigReal pochhammer(double a, unsigned k);

// 1F1(a; b; x) = sum_k (a)_k / ((b)_k k!) x^k, a,b > 0, x >= 0.
EvalResult kummer_1f1(const KummerParams& p, unsigned prec_bits = kDefaultPrecisionBits);

// d/dx 1F1(a;b;x) = (a/b) 1F1(a+1; b+1; x).
EvalResult kummer_1f1_dx(const KummerParams& p, unsigned prec_bits = kDefaultPrecisionBits);

// pFq(a; b; x). Converges everywhere for p <= q; for p = q+1 only x in [0,1).
EvalResult pfq(const PfqParams& p, unsigned prec_bits = kDefaultPrecisionBits);

// d/dx pFq(a;b;x) = (prod a_i / prod b_j) pFq(a+1; b+1; x).
EvalResult pfq_dx(const PfqParams& p, unsigned prec_bits = kDefaultPrecisionBits);

// pFq with exact multiprecision parameters (used by callers that form
// parameter shifts like b-c without double rounding).
EvalResult pfq_exact(const std::vector<BigReal>& a,
                     const std::vector<BigReal>& b,
                     const BigReal& x,
                     unsigned prec_bits = kDefaultPrecisionBits);

// Exponential series tail R_n(x) = sum_{k>n} x^k/k!, summed directly.
EvalResult exp_remainder(const RemainderParams& p, unsigned prec_bits = kDefaultPrecisionBits);

// Same value through R_n(x) = x^{n+1}/(n+1)! * 1F1(1; n+2; x).
EvalResult exp_remainder_via_kummer(const RemainderParams& p, unsigned prec_bits = kDefaultPrecisionBits);

// Regularized lower incomplete gamma P(s,x) = gamma(s,x)/Gamma(s), s > 0, x >= 0.
EvalResult reg_lower_gamma(double s, double x, unsigned prec_bits = kDefaultPrecisionBits);

// Re-runs `thunk` with doubling mantissa bits until its reported
// rel_error_bound meets rel_tol. Throws PrecisionError at the ceiling.
EvalResult eval_to_tolerance(const std::function<EvalResult(unsigned)>& thunk,
                             double rel_tol,
                             unsigned start_bits = kDefaultPrecisionBits,
                             unsigned ceiling_bits = kDefaultPrecisionCeilingBits);

} // namespace ks::sfcore

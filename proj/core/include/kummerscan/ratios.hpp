#pragma once

#include "kummerscan/bigreal.hpp"
#include "kummerscan/errors.hpp"
#include "kummerscan/sfcore.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ks::ratios {

enum class RatioFamily { FRemainder, GKummer, HAbc, HPfq };

const char* family_name(RatioFamily f);

// Tagged description of one ratio under study. The reciprocal flag wraps
// any family in 1/(.), giving the monotonicity checker a known-decreasing
// control subject.
struct RatioSpec {
    RatioFamily family = RatioFamily::FRemainder;
    bool reciprocal = false;

    int n = 1;                     // F / G families
    double a = 1, b = 3, c = 1;    // H_abc
    std::vector<double> av, bv, cv; // H_pfq (bv and cv share a length)

    // n = 0 for the F family needs R_{-1} = e^x; only honored when asked for.
    bool allow_n0 = false;

    static RatioSpec f(int n);
    static RatioSpec g(int n);
    static RatioSpec habc(double a, double b, double c);
    static RatioSpec hpfq(std::vector<double> a, std::vector<double> b, std::vector<double> c);
    RatioSpec reciprocal_of() const;

    void validate() const; // throws DomainError
    std::string canonical_key() const;
};

struct RatioValue {
    BigReal value;
    BigReal rel_error_bound;
    BigReal abs_error_bound;
    bool defined_by_limit = false;
};

// f_n(x) = R_{n-1} R_{n+1} / R_n^2, evaluated through regularized
// incomplete gamma ratios (the e^x factors cancel). x = 0 is the
// continuous extension (n+1)/(n+2).
RatioValue f_ratio(int n, double x, unsigned prec_bits = kDefaultPrecisionBits,
                   bool allow_n0 = false);

// g_n(x) = 1F1(1;n+1;x) 1F1(1;n+3;x) / 1F1(1;n+2;x)^2.
RatioValue g_ratio(int n, double x, unsigned prec_bits = kDefaultPrecisionBits);

// h(a,b,c,x) = 1F1(a;b-c;x) 1F1(a;b+c;x) / 1F1(a;b;x)^2, c normalized to |c|.
RatioValue h_abc(double a, double b, double c, double x,
                 unsigned prec_bits = kDefaultPrecisionBits);

// Vector-parameter form with componentwise b +- c shifts.
RatioValue h_pfq(const std::vector<double>& a, const std::vector<double>& b,
                 const std::vector<double>& c, double x,
                 unsigned prec_bits = kDefaultPrecisionBits);

RatioValue ratio_value(const RatioSpec& spec, double x,
                       unsigned prec_bits = kDefaultPrecisionBits);

// Analytic x-derivative via parameter-shift derivatives and the quotient
// rule; F family uses d/dx P(s,x) = x^{s-1} e^{-x} / Gamma(s).
RatioValue ratio_derivative(const RatioSpec& spec, double x,
                            unsigned prec_bits = kDefaultPrecisionBits);

struct Limit {
    bool known = false;
    double value = 0;
};

// (x -> 0 limit, x -> infinity limit or unknown).
std::pair<Limit, Limit> ratio_limits(const RatioSpec& spec);

} // namespace ks::ratios

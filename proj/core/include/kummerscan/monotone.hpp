#pragma once

#include "kummerscan/bigreal.hpp"
#include "kummerscan/errors.hpp"
#include "kummerscan/ratios.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ks::monotone {

struct MonotoneConfig {
    int initial_samples = 256;
    int max_refinement_depth = 12;
    double zero_band_factor = 10.0; // multiplies the derivative error bound
    unsigned precision_bits = kDefaultPrecisionBits;
    double rel_tol = 1e-12;
    unsigned max_precision_bits = kDefaultPrecisionCeilingBits;

    void validate() const; // throws DomainError
};

enum class SignClass { Positive, Negative, Indeterminate };

struct DerivativeSign {
    SignClass cls = SignClass::Indeterminate;
    BigReal derivative;
    BigReal error_bound; // absolute
    BigReal band;        // zero_band_factor * error_bound
    bool exact_zero = false;
    unsigned precision_bits = 0;
    std::uint64_t evals = 0;
    std::string diagnostic;
};

enum class Verdict { Increasing, Violation, Inconclusive, Vacuous };

const char* verdict_name(Verdict v);

struct Witness {
    double x = 0;
    BigReal derivative;
    BigReal error_bound;
};

// Numerical evidence about monotonicity, never a proof. VIOLATION is the
// only verdict meant as a strong claim (certified negative derivative,
// stable under precision escalation).
struct MonotonicityReport {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Witness> witness;
    double min_derivative_x = 0;
    BigReal min_derivative;
    std::uint64_t samples_evaluated = 0;
    bool strict = true; // false when flat (zero-derivative) regions were seen
    bool flat = false;
    std::string diagnostic;
    ratios::RatioSpec spec;
    MonotoneConfig config;
    double x_lo = 0, x_hi = 0;
};

// Sampling grid: half uniform on [lo, hi], half log-spaced from
// max(lo, 1e-6). Shared by the checker and the harness campaigns.
std::vector<double> blended_grid(double lo, double hi, int samples);

// Certified sign of the analytic derivative at x, escalating precision
// before giving up. PrecisionError maps to Indeterminate with a diagnostic.
DerivativeSign derivative_sign(const ratios::RatioSpec& spec, double x,
                               const MonotoneConfig& cfg);

// Samples the derivative sign on a blended uniform/log grid, refines around
// negatives and indeterminates, and classifies the interval.
MonotonicityReport check_monotone(const ratios::RatioSpec& spec,
                                  double x_lo, double x_hi,
                                  const MonotoneConfig& cfg);

// Bisects a bracket whose endpoint signs differ (or are indeterminate)
// until it is narrower than rel_tol * max(1, x2) or depth runs out.
std::optional<std::pair<double, double>> locate_sign_change(
    const ratios::RatioSpec& spec, double x1, double x2,
    const MonotoneConfig& cfg);

} // namespace ks::monotone

#include "kummerscan/monotone.hpp"

#include "kummerscan/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace ks::monotone {

using ratios::RatioSpec;
using ratios::RatioValue;

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Increasing: return "increasing";
        case Verdict::Violation: return "violation";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::Vacuous: return "vacuous";
    }
    return "?";
}

void MonotoneConfig::validate() const {
    if (initial_samples < 2)
        throw DomainError("initial_samples must be >= 2");
    if (max_refinement_depth < 0)
        throw DomainError("max_refinement_depth must be >= 0");
    if (zero_band_factor < 1)
        throw DomainError("zero_band_factor must be >= 1");
    if (!(rel_tol > 0))
        throw DomainError("rel_tol must be positive");
    if (precision_bits < 8 || max_precision_bits < precision_bits)
        throw DomainError("bad precision configuration");
}

DerivativeSign derivative_sign(const RatioSpec& spec, double x, const MonotoneConfig& cfg) {
    cfg.validate();
    DerivativeSign out;
    unsigned bits = cfg.precision_bits;
    for (;;) {
        RatioValue rv;
        try {
            rv = ratios::ratio_derivative(spec, x, bits);
        } catch (const PrecisionError& e) {
            out.cls = SignClass::Indeterminate;
            out.diagnostic = e.what();
            out.precision_bits = bits;
            return out;
        }
        ++out.evals;
        out.derivative = rv.value;
        out.error_bound = rv.abs_error_bound;
        out.band = cfg.zero_band_factor * rv.abs_error_bound;
        out.precision_bits = bits;
        if (rv.value.is_zero() && rv.abs_error_bound.is_zero()) {
            out.cls = SignClass::Indeterminate;
            out.exact_zero = true;
            return out;
        }
        if (rv.value > out.band) {
            out.cls = SignClass::Positive;
            return out;
        }
        if (rv.value < -out.band) {
            out.cls = SignClass::Negative;
            return out;
        }
        if (bits >= cfg.max_precision_bits) {
            out.cls = SignClass::Indeterminate;
            out.diagnostic = "sign unresolved at precision ceiling";
            return out;
        }
        bits = std::min(bits * 2, cfg.max_precision_bits);
    }
}

// Half uniform, half log-spaced from max(x_lo, 1e-6): failures of these
// ratio families cluster near 0 where the limits live.
std::vector<double> blended_grid(double lo, double hi, int samples) {
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(samples) + 2);
    int nu = std::max(2, samples / 2);
    for (int i = 0; i < nu; ++i)
        pts.push_back(lo + (hi - lo) * i / (nu - 1));
    int nl = samples - nu;
    double llo = std::max(lo, 1e-6);
    if (nl > 1 && llo < hi) {
        double ratio = hi / llo;
        for (int i = 0; i < nl; ++i)
            pts.push_back(llo * std::pow(ratio, double(i) / (nl - 1)));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

namespace {

struct Refiner {
    const RatioSpec& spec;
    const MonotoneConfig& cfg;
    std::uint64_t samples = 0;

    // Looks for a certified negative derivative inside (lo, hi); recurses
    // only through indeterminate midpoints.
    std::optional<Witness> find_negative(double lo, double hi, int depth) {
        if (depth <= 0)
            return std::nullopt;
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            return std::nullopt;
        DerivativeSign s = derivative_sign(spec, mid, cfg);
        samples += s.evals;
        if (s.cls == SignClass::Negative)
            return Witness{mid, s.derivative, s.error_bound};
        if (s.cls == SignClass::Indeterminate && !s.exact_zero) {
            if (auto w = find_negative(lo, mid, depth - 1))
                return w;
            return find_negative(mid, hi, depth - 1);
        }
        return std::nullopt;
    }
};

} // namespace

MonotonicityReport check_monotone(const RatioSpec& spec, double x_lo, double x_hi,
                                  const MonotoneConfig& cfg) {
    cfg.validate();
    spec.validate();
    if (x_lo < 0 || x_hi < x_lo)
        throw DomainError("interval must satisfy 0 <= x_lo <= x_hi");

    MonotonicityReport rep;
    rep.spec = spec;
    rep.config = cfg;
    rep.x_lo = x_lo;
    rep.x_hi = x_hi;

    if (x_lo == x_hi) {
        rep.verdict = Verdict::Vacuous;
        rep.diagnostic = "degenerate interval";
        return rep;
    }

    const std::vector<double> grid = blended_grid(x_lo, x_hi, cfg.initial_samples);
    std::vector<DerivativeSign> signs(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        signs[i] = derivative_sign(spec, grid[i], cfg);
    });

    bool have_min = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rep.samples_evaluated += signs[i].evals;
        if (signs[i].evals > 0 && (!have_min || signs[i].derivative < rep.min_derivative)) {
            rep.min_derivative = signs[i].derivative;
            rep.min_derivative_x = grid[i];
            have_min = true;
        }
    }

    // Certified negative sample: a violation, refined toward the earliest
    // sign change for a tighter witness location.
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (signs[i].cls != SignClass::Negative)
            continue;
        Witness w{grid[i], signs[i].derivative, signs[i].error_bound};
        if (i > 0 && signs[i - 1].cls == SignClass::Positive) {
            if (auto bracket = locate_sign_change(spec, grid[i - 1], grid[i], cfg)) {
                DerivativeSign s = derivative_sign(spec, bracket->second, cfg);
                rep.samples_evaluated += s.evals;
                if (s.cls == SignClass::Negative)
                    w = Witness{bracket->second, s.derivative, s.error_bound};
            }
        }
        rep.verdict = Verdict::Violation;
        rep.witness = w;
        rep.strict = false;
        return rep;
    }

    // Indeterminate samples: bisect for a hidden certified negative, then
    // fall back to a value-level check across the band.
    std::size_t unresolved = 0;
    Refiner refiner{spec, cfg};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (signs[i].cls != SignClass::Indeterminate)
            continue;
        if (signs[i].exact_zero) {
            rep.flat = true;
            rep.strict = false;
            continue;
        }
        double lo = (i > 0) ? grid[i - 1] : x_lo;
        double hi = (i + 1 < grid.size()) ? grid[i + 1] : x_hi;
        if (auto w = refiner.find_negative(lo, hi, cfg.max_refinement_depth)) {
            rep.samples_evaluated += refiner.samples;
            rep.verdict = Verdict::Violation;
            rep.witness = *w;
            rep.strict = false;
            return rep;
        }
        RatioValue vlo = ratios::ratio_value(spec, lo, cfg.precision_bits);
        RatioValue vhi = ratios::ratio_value(spec, hi, cfg.precision_bits);
        rep.samples_evaluated += 2;
        BigReal diff = vhi.value - vlo.value;
        BigReal errs = vlo.abs_error_bound + vhi.abs_error_bound;
        if (diff > errs) {
            continue; // values rise across the band
        } else if (diff >= -errs) {
            rep.flat = true; // indistinguishable from flat
            rep.strict = false;
        } else {
            ++unresolved;
            rep.diagnostic = "value decrease across indeterminate band without certified negative derivative";
        }
    }
    rep.samples_evaluated += refiner.samples;

    rep.verdict = unresolved ? Verdict::Inconclusive : Verdict::Increasing;
    return rep;
}

std::optional<std::pair<double, double>> locate_sign_change(
    const RatioSpec& spec, double x1, double x2, const MonotoneConfig& cfg) {
    cfg.validate();
    if (!(x1 <= x2))
        throw DomainError("bracket must satisfy x1 <= x2");
    if (x1 == x2)
        return std::nullopt;

    DerivativeSign s1 = derivative_sign(spec, x1, cfg);
    DerivativeSign s2 = derivative_sign(spec, x2, cfg);
    if (s1.cls == s2.cls && s1.cls != SignClass::Indeterminate)
        return std::nullopt;

    double lo = x1, hi = x2;
    SignClass slo = s1.cls;
    const double target = cfg.rel_tol * std::max(1.0, x2);
    // The depth knob governs sign-probing; pure interval halving is cheap,
    // so allow enough iterations to actually reach the width target.
    const int max_iters = std::max(64, cfg.max_refinement_depth * 8);
    for (int it = 0; it < max_iters && (hi - lo) > target; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        DerivativeSign sm = derivative_sign(spec, mid, cfg);
        if (sm.cls != slo || sm.cls == SignClass::Indeterminate) {
            hi = mid;
        } else {
            lo = mid;
            slo = sm.cls;
        }
    }
    return std::make_pair(lo, hi);
}

} // namespace ks::monotone

// Acceptance gate: one line per criterion, PASS/FAIL, nonzero exit on any
// failure. Criteria 6 and 9 are evidence suites over open conjectures, not
// reproductions of proved results.

#include <kummerscan/harness.hpp>
#include <kummerscan/monotone.hpp>
#include <kummerscan/ratios.hpp>
#include <kummerscan/sfcore.hpp>

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace ks;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, const std::string& name, bool ok, double secs, const std::string& note = "") {
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                secs, note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

double rel_diff(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}

// 1. f_n(0) = (n+1)/(n+2) for n = 1..20, 1e-14 relative, under 1 second.
void criterion1() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    for (int n = 1; n <= 20; ++n) {
        ratios::RatioValue v = ratios::f_ratio(n, 0);
        double want = double(n + 1) / double(n + 2);
        if (!v.defined_by_limit || rel_diff(static_cast<double>(v.value), want) > 1e-14) {
            ok = false;
            note = "mismatch at n = " + std::to_string(n);
            break;
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 1.0) {
        ok = false;
        note = "runtime budget exceeded";
    }
    report(1, "best-constant limit f_n(0) = (n+1)/(n+2), n = 1..20", ok, secs, note);
}

// 2. (n+1)/(n+2) <= f_n <= 1 on n = 1..10 x 1000 points over [0,100],
//    tolerance 10x reported error bounds, under 30 s at 128 bits.
void criterion2() {
    auto t0 = Clock::now();
    harness::BoundsReport rep = harness::verify_bounds(1, 10, 100, 1000, 128);
    double secs = seconds_since(t0);
    bool ok = rep.pass && secs < 30.0;
    std::string note = rep.pass ? "" : std::to_string(rep.violations.size()) + " violations";
    if (rep.pass && secs >= 30.0)
        note = "runtime budget exceeded";
    report(2, "proved bounds sweep, n = 1..10, 1000 points on [0,100]", ok, secs, note);
}

// 3. |f_n - (n+1)/(n+2) g_n| / f_n <= 1e-12 at 256 bits on the same grid.
void criterion3() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    const auto grid = monotone::blended_grid(0, 100, 1000);
    for (int n = 1; n <= 10 && ok; ++n) {
        for (double x : grid) {
            BigReal f = ratios::f_ratio(n, x, 256).value;
            BigReal g = ratios::g_ratio(n, x, 256).value;
            BigReal lhs = abs(f - BigReal(n + 1.0, 256) / (n + 2.0) * g) / f;
            if (lhs > 1e-12) {
                ok = false;
                note = "diverged at n = " + std::to_string(n) + ", x = " + std::to_string(x);
                break;
            }
        }
    }
    report(3, "f_n = (n+1)/(n+2) g_n equivalence at 256 bits", ok, seconds_since(t0), note);
}

// 4. Triple-route remainder agreement to 1e-12 for n <= 10, x <= 30;
//    gamma route finite and in bounds at x = 1e4.
void criterion4() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    for (int n = 0; n <= 10 && ok; ++n) {
        for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0}) {
            BigReal tail = sfcore::exp_remainder({n, x}).value;
            BigReal kum = sfcore::exp_remainder_via_kummer({n, x}).value;
            BigReal gam = sfcore::reg_lower_gamma(n + 1, x).value * exp(BigReal(x, 128), 128);
            if (abs(tail - kum) / tail > 1e-12 || abs(tail - gam) / tail > 1e-12) {
                ok = false;
                note = "routes disagree at n = " + std::to_string(n) + ", x = " + std::to_string(x);
                break;
            }
        }
    }
    if (ok) {
        sfcore::EvalResult big = sfcore::reg_lower_gamma(6, 1e4);
        if (!big.value.is_finite() || big.value <= 0 || big.value > 1) {
            ok = false;
            note = "gamma route out of bounds at x = 1e4";
        }
    }
    report(4, "triple-route remainder agreement, gamma route at x = 1e4", ok,
           seconds_since(t0), note);
}

// 5. Analytic derivatives vs central differences to 1e-6 relative on the
//    standard grid; h'(0) closed form 2ac^2/(b(b^2-c^2)) to 1e-8 on the
//    default abc box.
void criterion5() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    std::vector<ratios::RatioSpec> specs;
    for (int n = 1; n <= 3; ++n) {
        specs.push_back(ratios::RatioSpec::f(n));
        specs.push_back(ratios::RatioSpec::g(n));
    }
    specs.push_back(ratios::RatioSpec::habc(0.5, 3, 1));
    specs.push_back(ratios::RatioSpec::habc(2, 6, 1.5));
    specs.push_back(ratios::RatioSpec::hpfq({1, 2}, {4, 5}, {0.5, 1}));
    const double h = 1e-6;
    for (const auto& spec : specs) {
        for (double x : {0.5, 2.0, 10.0}) {
            double fd = (static_cast<double>(ratios::ratio_value(spec, x + h, 192).value) -
                         static_cast<double>(ratios::ratio_value(spec, x - h, 192).value)) /
                        (2 * h);
            double an = static_cast<double>(ratios::ratio_derivative(spec, x, 192).value);
            if (rel_diff(an, fd) > 1e-6) {
                ok = false;
                note = "FD mismatch for " + spec.canonical_key() + " at x = " + std::to_string(x);
            }
        }
    }
    if (ok) {
        harness::ScanGrid box = harness::default_abc_grid();
        for (const auto& av : box.axes[0].values) {
            for (const auto& bv : box.axes[1].values) {
                for (const auto& cv : box.axes[2].values) {
                    double a = av[0], b = bv[0], c = cv[0];
                    if (b - c <= 0)
                        continue;
                    double want = 2 * a * c * c / (b * (b * b - c * c));
                    double got = static_cast<double>(
                        ratios::ratio_derivative(ratios::RatioSpec::habc(a, b, c), 0).value);
                    if (rel_diff(got, want) > 1e-8) {
                        ok = false;
                        note = "h'(0) mismatch at a,b,c = " + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c);
                    }
                }
            }
        }
    }
    report(5, "analytic derivative vs finite differences; h'(0) closed form", ok,
           seconds_since(t0), note);
}

// 6. Evidence suite: f_n and g_n INCREASING for n = 1..10 on [0,100] at
//    defaults, no violation, <= 1% inconclusive, F/G verdicts agree; < 2 min.
void criterion6() {
    auto t0 = Clock::now();
    monotone::MonotoneConfig cfg; // defaults
    auto f_reports = harness::verify_conjecture(ratios::RatioFamily::FRemainder, 1, 10, 100, cfg);
    auto g_reports = harness::verify_conjecture(ratios::RatioFamily::GKummer, 1, 10, 100, cfg);
    bool ok = true;
    std::string note;
    int inconclusive = 0;
    for (std::size_t i = 0; i < f_reports.size(); ++i) {
        if (f_reports[i].verdict == monotone::Verdict::Violation ||
            g_reports[i].verdict == monotone::Verdict::Violation) {
            ok = false;
            note = "violation at n = " + std::to_string(i + 1);
        }
        if (f_reports[i].verdict == monotone::Verdict::Inconclusive)
            ++inconclusive;
        if (g_reports[i].verdict == monotone::Verdict::Inconclusive)
            ++inconclusive;
        if (f_reports[i].verdict != g_reports[i].verdict) {
            ok = false;
            note = "F/G verdicts differ at n = " + std::to_string(i + 1);
        }
    }
    if (inconclusive * 100 > static_cast<int>(f_reports.size() + g_reports.size())) {
        ok = false;
        note = "too many inconclusive cells";
    }
    double secs = seconds_since(t0);
    if (secs >= 120.0) {
        ok = false;
        note = "runtime budget exceeded";
    }
    report(6, "conjecture evidence suite f_n, g_n, n = 1..10 on [0,100]", ok, secs, note);
}

// 7. Reciprocal of g_1 yields VIOLATION with a witness still negative at
//    4x precision.
void criterion7() {
    auto t0 = Clock::now();
    monotone::MonotoneConfig cfg;
    ratios::RatioSpec spec = ratios::RatioSpec::g(1).reciprocal_of();
    auto rep = monotone::check_monotone(spec, 0, 100, cfg);
    bool ok = rep.verdict == monotone::Verdict::Violation && rep.witness.has_value();
    std::string note = ok ? "" : "no violation found";
    if (ok) {
        monotone::MonotoneConfig hi = cfg;
        hi.precision_bits = cfg.precision_bits * 4;
        hi.max_precision_bits = std::max(hi.max_precision_bits, hi.precision_bits);
        auto s = monotone::derivative_sign(spec, rep.witness->x, hi);
        if (s.cls != monotone::SignClass::Negative) {
            ok = false;
            note = "witness not stable at 4x precision";
        } else {
            std::ostringstream os;
            os << "witness x = " << rep.witness->x;
            note = os.str();
        }
    }
    report(7, "known-decreasing control: reciprocal g_1 violation", ok, seconds_since(t0), note);
}

// 8. h_pq([1],[n+2],[1],x) = h_abc(1,n+2,1,x) = g_n(x) to 1e-12, n = 1..5.
void criterion8() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;
    for (int n = 1; n <= 5 && ok; ++n) {
        for (double x : {0.1, 1.0, 10.0}) {
            double hp = static_cast<double>(ratios::h_pfq({1}, {n + 2.0}, {1}, x, 256).value);
            double ha = static_cast<double>(ratios::h_abc(1, n + 2.0, 1, x, 256).value);
            double g = static_cast<double>(ratios::g_ratio(n, x, 256).value);
            if (rel_diff(hp, ha) > 1e-12 || rel_diff(ha, g) > 1e-12) {
                ok = false;
                note = "chain broken at n = " + std::to_string(n) + ", x = " + std::to_string(x);
                break;
            }
        }
    }
    report(8, "reduction chain h_pq -> h_abc -> g_n", ok, seconds_since(t0), note);
}

// 9. Default abc box scan: identical grid hash and verdicts across two
//    runs; resume recomputes only the missing cells; < 5 min.
void criterion9() {
    auto t0 = Clock::now();
    harness::ScanGrid grid = harness::default_abc_grid();
    harness::ScanResult first = harness::scan_abc(grid);
    harness::ScanResult second = harness::scan_abc(grid);
    bool ok = true;
    std::string note;
    if (first.metadata.grid_hash != second.metadata.grid_hash) {
        ok = false;
        note = "grid hashes differ";
    }
    if (ok && first.cells.size() != second.cells.size()) {
        ok = false;
        note = "cell counts differ";
    }
    std::size_t violations = 0;
    for (std::size_t i = 0; ok && i < first.cells.size(); ++i) {
        const auto& a = first.cells[i];
        const auto& b = second.cells[i];
        if (a.key() != b.key() || a.status != b.status ||
            (a.status == harness::CellStatus::Report &&
             a.report->verdict != b.report->verdict)) {
            ok = false;
            note = "verdict mismatch at cell " + a.key();
        }
        if (a.status == harness::CellStatus::Report &&
            a.report->verdict == monotone::Verdict::Violation)
            ++violations;
    }
    if (ok) {
        // resume after a simulated kill: drop a quarter of the cells
        nlohmann::json doc = harness::scan_to_json(first);
        auto& cells = doc.at("cells");
        const std::size_t drop = cells.size() / 4;
        for (std::size_t i = 0; i < drop; ++i)
            cells.erase(cells.size() - 1);
        const std::string path = "./acceptance_scan.json";
        harness::save_result(doc, path);
        harness::ScanResult resumed = harness::resume_scan(path, grid);
        std::remove(path.c_str());
        if (resumed.metadata.cells_computed != drop) {
            ok = false;
            note = "resume recomputed " + std::to_string(resumed.metadata.cells_computed) +
                   " cells, expected " + std::to_string(drop);
        } else {
            for (std::size_t i = 0; i < first.cells.size(); ++i) {
                const auto& a = first.cells[i];
                const auto& b = resumed.cells[i];
                if (a.key() != b.key() || a.status != b.status) {
                    ok = false;
                    note = "resumed cell differs: " + a.key();
                    break;
                }
            }
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 300.0) {
        ok = false;
        note = "runtime budget exceeded";
    }
    if (ok && note.empty())
        note = std::to_string(first.cells.size()) + " cells, " + std::to_string(violations) +
               " violations";
    report(9, "default abc box scan reproducibility and resume", ok, secs, note);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) {
        std::printf("%d criteria FAILED\n", failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}

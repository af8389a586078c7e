// kummerscan: evaluate exponential-remainder / Kummer ratios, verify the
// proved bounds, and scan parameter boxes for monotonicity counterexamples.
//
// Exit codes: 0 pass / all increasing, 1 violation found, 2 inconclusive
// or skipped cells present (no violation), 3 usage or domain error.

#include <kummerscan/harness.hpp>
#include <kummerscan/monotone.hpp>
#include <kummerscan/ratios.hpp>
#include <kummerscan/sfcore.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace ks;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

unsigned precision_ceiling() {
    if (const char* env = std::getenv("KUMMERSCAN_MAX_PREC_BITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 64 && v <= 1 << 24)
            return static_cast<unsigned>(v);
        throw DomainError("KUMMERSCAN_MAX_PREC_BITS must be an integer >= 64");
    }
    return kDefaultPrecisionCeilingBits;
}

// "lo..hi", "lo..hi:step" (inclusive endpoints), "1,2,3", or a scalar.
std::vector<double> parse_values(const std::string& s) {
    auto dots = s.find("..");
    if (dots != std::string::npos) {
        double lo = std::stod(s.substr(0, dots));
        std::string rest = s.substr(dots + 2);
        double step = 1;
        auto colon = rest.find(':');
        if (colon != std::string::npos) {
            step = std::stod(rest.substr(colon + 1));
            rest = rest.substr(0, colon);
        }
        double hi = std::stod(rest);
        if (!(step > 0) || hi < lo)
            throw DomainError("bad range '" + s + "': need lo <= hi and step > 0");
        std::vector<double> out;
        for (double v = lo; v <= hi + step * 1e-9; v += step)
            out.push_back(v);
        return out;
    }
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stod(item));
    if (out.empty())
        throw DomainError("empty value list '" + s + "'");
    return out;
}

double parse_scalar(const std::string& s, const char* name) {
    auto v = parse_values(s);
    if (v.size() != 1)
        throw DomainError(std::string(name) + " must be a single value here");
    return v.front();
}

std::vector<int> parse_int_range(const std::string& s, const char* name) {
    std::vector<int> out;
    for (double v : parse_values(s)) {
        int i = static_cast<int>(v);
        if (double(i) != v)
            throw DomainError(std::string(name) + " must be integral");
        out.push_back(i);
    }
    return out;
}

// Semicolons separate axis entries, commas separate vector components:
// "1;2" -> {[1],[2]};  "1,2;1,3" -> {[1,2],[1,3]}.
std::vector<std::vector<double>> parse_vector_values(const std::string& s) {
    std::vector<std::vector<double>> out;
    std::stringstream ss(s);
    std::string group;
    while (std::getline(ss, group, ';'))
        out.push_back(parse_values(group));
    if (out.empty())
        throw DomainError("empty axis '" + s + "'");
    return out;
}

struct OutputOpts {
    std::string format = "text";
    std::string out_path;
    unsigned digits = 17;
};

void add_output_flags(CLI::App* cmd, OutputOpts& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", o.out_path, "Write output to a file instead of stdout");
    cmd->add_option("--digits", o.digits, "Significant decimal digits to print")
        ->check(CLI::Range(2u, 10000u));
}

void emit(const OutputOpts& o, const std::string& body) {
    if (o.out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(o.out_path);
    if (!f)
        throw std::runtime_error("cannot write " + o.out_path);
    f << body;
}

struct RatioFlags {
    std::string family = "f";
    std::string n_str = "1";
    std::string a_str, b_str, c_str;
    bool reciprocal = false;
    bool allow_n0 = false;
};

void add_ratio_flags(CLI::App* cmd, RatioFlags& r) {
    cmd->add_option("--family", r.family, "Ratio family")
        ->check(CLI::IsMember({"f", "g", "habc", "hpfq"}));
    cmd->add_option("--n", r.n_str, "Order n (f and g families)");
    cmd->add_option("--a", r.a_str, "Parameter a (scalar, or comma-vector for hpfq)");
    cmd->add_option("--b", r.b_str, "Parameter b");
    cmd->add_option("--c", r.c_str, "Parameter shift c");
    cmd->add_flag("--reciprocal", r.reciprocal, "Study 1/ratio instead");
    cmd->add_flag("--allow-n0", r.allow_n0, "Permit n = 0 for the f family");
}

ratios::RatioSpec spec_from_flags(const RatioFlags& r) {
    ratios::RatioSpec spec;
    if (r.family == "f" || r.family == "g") {
        auto ns = parse_int_range(r.n_str, "--n");
        if (ns.size() != 1)
            throw DomainError("--n must be a single integer here");
        spec = (r.family == "f") ? ratios::RatioSpec::f(ns[0]) : ratios::RatioSpec::g(ns[0]);
        spec.allow_n0 = r.allow_n0;
    } else if (r.family == "habc") {
        if (r.a_str.empty() || r.b_str.empty() || r.c_str.empty())
            throw DomainError("habc requires --a, --b and --c");
        spec = ratios::RatioSpec::habc(parse_scalar(r.a_str, "--a"),
                                       parse_scalar(r.b_str, "--b"),
                                       parse_scalar(r.c_str, "--c"));
    } else {
        if (r.a_str.empty() || r.b_str.empty() || r.c_str.empty())
            throw DomainError("hpfq requires --a, --b and --c");
        spec = ratios::RatioSpec::hpfq(parse_values(r.a_str), parse_values(r.b_str),
                                       parse_values(r.c_str));
    }
    if (r.reciprocal)
        spec = spec.reciprocal_of();
    spec.validate();
    return spec;
}

json eval_json(const sfcore::EvalResult& r, unsigned digits) {
    return {{"value", r.value.str(digits)},
            {"rel_error_bound", r.rel_error_bound.str(3)},
            {"terms_used", r.terms_used},
            {"precision_bits", r.precision_bits}};
}

int worst_exit(const std::vector<monotone::MonotonicityReport>& reports) {
    bool violation = false, inconclusive = false;
    for (const auto& rep : reports) {
        if (rep.verdict == monotone::Verdict::Violation)
            violation = true;
        else if (rep.verdict != monotone::Verdict::Increasing)
            inconclusive = true;
    }
    if (violation)
        return kExitViolation;
    return inconclusive ? kExitInconclusive : kExitPass;
}

int scan_exit(const harness::ScanResult& result) {
    if (result.has_violation())
        return kExitViolation;
    return result.fully_conclusive() ? kExitPass : kExitInconclusive;
}

std::string report_text(const monotone::MonotonicityReport& rep, unsigned digits) {
    std::ostringstream os;
    os << rep.spec.canonical_key() << " on [" << rep.x_lo << ", " << rep.x_hi
       << "]: " << monotone::verdict_name(rep.verdict);
    if (!rep.strict && rep.verdict == monotone::Verdict::Increasing)
        os << " (non-strict: flat region)";
    os << "\n";
    if (rep.witness) {
        os << "  witness: x = " << rep.witness->x
           << ", derivative = " << rep.witness->derivative.str(digits)
           << " +- " << rep.witness->error_bound.str(3) << "\n";
    }
    os << "  min derivative " << rep.min_derivative.str(digits) << " at x = "
       << rep.min_derivative_x << "; samples = " << rep.samples_evaluated << "\n";
    if (!rep.diagnostic.empty())
        os << "  note: " << rep.diagnostic << "\n";
    return os.str();
}

int cmd_eval(const std::string& a_str, const std::string& b_str, double x,
             unsigned prec, double rel_tol, const OutputOpts& out) {
    sfcore::PfqParams p{parse_values(a_str), parse_values(b_str), x};
    sfcore::EvalResult r;
    if (rel_tol > 0) {
        r = sfcore::eval_to_tolerance(
            [&](unsigned bits) { return sfcore::pfq(p, bits); }, rel_tol, prec,
            precision_ceiling());
    } else {
        r = sfcore::pfq(p, prec);
    }
    if (out.format == "json")
        emit(out, eval_json(r, out.digits).dump(2) + "\n");
    else
        emit(out, r.value.str(out.digits) + "  (rel err <= " + r.rel_error_bound.str(3) +
                      ", " + std::to_string(r.terms_used) + " terms)\n");
    return kExitPass;
}

int cmd_remainder(int n, double x, const std::string& route, unsigned prec,
                  const OutputOpts& out) {
    sfcore::EvalResult r;
    if (route == "tail") {
        r = sfcore::exp_remainder({n, x}, prec);
    } else if (route == "kummer") {
        r = sfcore::exp_remainder_via_kummer({n, x}, prec);
    } else { // gamma: R_n(x) = e^x P(n+1, x)
        r = sfcore::reg_lower_gamma(n + 1, x, prec);
        r.value *= exp(BigReal(x, prec), prec);
        r.rel_error_bound += 2.0 * eps_for_bits(prec);
    }
    if (out.format == "json") {
        json j = eval_json(r, out.digits);
        j["route"] = route;
        emit(out, j.dump(2) + "\n");
    } else {
        emit(out, r.value.str(out.digits) + "  (route " + route + ", rel err <= " +
                      r.rel_error_bound.str(3) + ")\n");
    }
    return kExitPass;
}

int cmd_point(bool derivative, const RatioFlags& rf, double x, double x_max,
              int samples, unsigned prec, const OutputOpts& out) {
    ratios::RatioSpec spec = spec_from_flags(rf);
    if (out.format == "csv") {
        std::ostringstream os;
        harness::trace_csv(spec, 0, x_max > 0 ? x_max : x, samples, prec, os);
        emit(out, os.str());
        return kExitPass;
    }
    ratios::RatioValue v = derivative ? ratios::ratio_derivative(spec, x, prec)
                                      : ratios::ratio_value(spec, x, prec);
    if (out.format == "json") {
        json j = {{"spec", spec.canonical_key()},
                  {"x", x},
                  {"value", v.value.str(out.digits)},
                  {"rel_error_bound", v.rel_error_bound.str(3)},
                  {"abs_error_bound", v.abs_error_bound.str(3)},
                  {"defined_by_limit", v.defined_by_limit}};
        emit(out, j.dump(2) + "\n");
    } else {
        std::string line = v.value.str(out.digits);
        if (v.defined_by_limit)
            line += "  [limit]";
        line += "  (abs err <= " + v.abs_error_bound.str(3) + ")\n";
        emit(out, line);
    }
    return kExitPass;
}

int cmd_verify_bounds(const std::string& n_str, double x_max, int samples,
                      unsigned prec, const OutputOpts& out) {
    auto ns = parse_int_range(n_str, "--n");
    harness::BoundsReport rep =
        harness::verify_bounds(ns.front(), ns.back(), x_max, samples, prec);
    if (out.format == "json") {
        emit(out, harness::bounds_to_json(rep).dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << (rep.pass ? "PASS" : "FAIL") << ": (n+1)/(n+2) <= f_n(x) <= 1 on n = "
           << rep.n_lo << ".." << rep.n_hi << ", x in [0, " << rep.x_max << "], "
           << rep.samples.size() << " samples at " << rep.precision_bits << " bits\n";
        for (std::size_t i : rep.violations) {
            const auto& s = rep.samples[i];
            os << "  violated at n = " << s.n << ", x = " << s.x << ": f = "
               << s.value.str(out.digits) << ", margins " << s.lower_margin.str(3)
               << " / " << s.upper_margin.str(3) << "\n";
        }
        emit(out, os.str());
    }
    return rep.pass ? kExitPass : kExitViolation;
}

monotone::MonotoneConfig config_from_flags(int samples, unsigned prec, double rel_tol,
                                           int depth, double zero_band) {
    monotone::MonotoneConfig cfg;
    if (samples > 0)
        cfg.initial_samples = samples;
    if (prec > 0)
        cfg.precision_bits = prec;
    if (rel_tol > 0)
        cfg.rel_tol = rel_tol;
    if (depth > 0)
        cfg.max_refinement_depth = depth;
    if (zero_band > 0)
        cfg.zero_band_factor = zero_band;
    cfg.max_precision_bits = std::max(precision_ceiling(), cfg.precision_bits);
    cfg.validate();
    return cfg;
}

int cmd_verify_monotone(const RatioFlags& rf, double x_max,
                        const monotone::MonotoneConfig& cfg, const OutputOpts& out) {
    std::vector<monotone::MonotonicityReport> reports;
    if (rf.family == "f" || rf.family == "g") {
        auto ns = parse_int_range(rf.n_str, "--n");
        for (int n : ns) {
            ratios::RatioSpec spec =
                (rf.family == "f") ? ratios::RatioSpec::f(n) : ratios::RatioSpec::g(n);
            spec.allow_n0 = rf.allow_n0;
            if (rf.reciprocal)
                spec = spec.reciprocal_of();
            reports.push_back(monotone::check_monotone(spec, 0, x_max, cfg));
        }
    } else {
        reports.push_back(monotone::check_monotone(spec_from_flags(rf), 0, x_max, cfg));
    }
    if (out.format == "json") {
        emit(out, harness::conjecture_to_json(reports).dump(2) + "\n");
    } else {
        std::string body;
        for (const auto& rep : reports)
            body += report_text(rep, out.digits);
        emit(out, body);
    }
    return worst_exit(reports);
}

int cmd_scan(bool pfq, const std::string& a_str, const std::string& b_str,
             const std::string& c_str, double x_max,
             const monotone::MonotoneConfig& cfg, bool resume, const OutputOpts& out) {
    harness::ScanGrid grid;
    if (pfq) {
        grid.kind = "pfq";
        grid.axes = {{"a", parse_vector_values(a_str)},
                     {"b", parse_vector_values(b_str)},
                     {"c", parse_vector_values(c_str)}};
    } else if (a_str.empty() && b_str.empty() && c_str.empty()) {
        grid = harness::default_abc_grid();
    } else {
        if (a_str.empty() || b_str.empty() || c_str.empty())
            throw DomainError("scan-abc needs all of --a, --b, --c (or none for the default box)");
        auto scalars = [](const std::string& s) {
            std::vector<std::vector<double>> vals;
            for (double v : parse_values(s))
                vals.push_back({v});
            return vals;
        };
        grid.kind = "abc";
        grid.axes = {{"a", scalars(a_str)}, {"b", scalars(b_str)}, {"c", scalars(c_str)}};
    }
    grid.x_max = x_max;
    grid.cfg = cfg;

    harness::ScanResult result;
    if (resume) {
        if (out.out_path.empty())
            throw DomainError("--resume requires --out");
        result = harness::resume_scan(out.out_path, grid);
    } else {
        result = pfq ? harness::scan_pfq(grid) : harness::scan_abc(grid);
    }

    json doc = harness::scan_to_json(result);
    if (!out.out_path.empty())
        harness::save_result(doc, out.out_path);

    if (out.format == "json") {
        if (out.out_path.empty())
            std::cout << doc.dump(2) << "\n";
    } else {
        std::size_t inc = 0, vio = 0, inconclusive = 0, vac = 0, skipped = 0, errors = 0;
        for (const auto& cell : result.cells) {
            if (cell.status == harness::CellStatus::SkippedDomain) { ++skipped; continue; }
            if (cell.status == harness::CellStatus::Error) { ++errors; continue; }
            switch (cell.report->verdict) {
                case monotone::Verdict::Increasing: ++inc; break;
                case monotone::Verdict::Violation: ++vio; break;
                case monotone::Verdict::Inconclusive: ++inconclusive; break;
                case monotone::Verdict::Vacuous: ++vac; break;
            }
        }
        std::ostringstream os;
        os << "scan " << grid.kind << ": " << result.cells.size() << " cells ("
           << result.metadata.cells_computed << " computed), hash "
           << result.metadata.grid_hash << "\n"
           << "  increasing " << inc << ", violation " << vio << ", inconclusive "
           << inconclusive << ", vacuous " << vac << ", skipped_domain " << skipped
           << ", error " << errors << "\n";
        for (const auto& cell : result.cells) {
            if (cell.status != harness::CellStatus::Report ||
                cell.report->verdict != monotone::Verdict::Violation)
                continue;
            os << "  violation at " << cell.key();
            if (cell.report->witness)
                os << " x = " << cell.report->witness->x << ", derivative = "
                   << cell.report->witness->derivative.str(out.digits);
            os << "\n";
        }
        std::cout << os.str();
    }
    return scan_exit(result);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exponential-remainder and Kummer ratio evaluator / monotonicity scanner"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate pFq(a; b; x)");
    std::string ev_a = "1", ev_b = "2";
    double ev_x = 0, ev_rel_tol = 0;
    unsigned ev_prec = kDefaultPrecisionBits;
    OutputOpts ev_out;
    eval->add_option("--a", ev_a, "Numerator parameters (comma-separated)");
    eval->add_option("--b", ev_b, "Denominator parameters (comma-separated)");
    eval->add_option("--x", ev_x, "Argument")->required();
    eval->add_option("--prec", ev_prec, "Working precision in bits");
    eval->add_option("--rel-tol", ev_rel_tol, "Escalate precision until this relative tolerance");
    add_output_flags(eval, ev_out);

    // remainder
    auto* rem = app.add_subcommand("remainder", "Evaluate R_n(x) = sum_{k>n} x^k/k!");
    int rm_n = 1;
    double rm_x = 0;
    std::string rm_route = "tail";
    unsigned rm_prec = kDefaultPrecisionBits;
    OutputOpts rm_out;
    rem->add_option("--n", rm_n, "Order n")->required();
    rem->add_option("--x", rm_x, "Argument")->required();
    rem->add_option("--route", rm_route, "Evaluation route")
        ->check(CLI::IsMember({"tail", "kummer", "gamma"}));
    rem->add_option("--prec", rm_prec, "Working precision in bits");
    add_output_flags(rem, rm_out);

    // ratio / derivative
    RatioFlags rt_flags, dv_flags;
    double rt_x = 0, rt_xmax = 0, dv_x = 0, dv_xmax = 0;
    int rt_samples = 64, dv_samples = 64;
    unsigned rt_prec = kDefaultPrecisionBits, dv_prec = kDefaultPrecisionBits;
    OutputOpts rt_out, dv_out;
    auto* ratio = app.add_subcommand("ratio", "Evaluate a ratio at x (csv format traces [0, x-max])");
    add_ratio_flags(ratio, rt_flags);
    ratio->add_option("--x", rt_x, "Argument");
    ratio->add_option("--x-max", rt_xmax, "Trace upper endpoint (csv)");
    ratio->add_option("--samples", rt_samples, "Trace sample count (csv)");
    ratio->add_option("--prec", rt_prec, "Working precision in bits");
    add_output_flags(ratio, rt_out);

    auto* deriv = app.add_subcommand("derivative", "Evaluate a ratio's x-derivative");
    add_ratio_flags(deriv, dv_flags);
    deriv->add_option("--x", dv_x, "Argument");
    deriv->add_option("--x-max", dv_xmax, "Trace upper endpoint (csv)");
    deriv->add_option("--samples", dv_samples, "Trace sample count (csv)");
    deriv->add_option("--prec", dv_prec, "Working precision in bits");
    add_output_flags(deriv, dv_out);

    // verify-bounds
    auto* vb = app.add_subcommand("verify-bounds", "Check (n+1)/(n+2) <= f_n <= 1 on a grid");
    std::string vb_n = "1..10";
    double vb_xmax = 100;
    int vb_samples = 1000;
    unsigned vb_prec = kDefaultPrecisionBits;
    OutputOpts vb_out;
    vb->add_option("--n", vb_n, "Order range (lo..hi)");
    vb->add_option("--x-max", vb_xmax, "Upper endpoint");
    vb->add_option("--samples", vb_samples, "Samples per n");
    vb->add_option("--prec", vb_prec, "Working precision in bits");
    add_output_flags(vb, vb_out);

    // verify-monotone
    auto* vm = app.add_subcommand("verify-monotone", "Derivative-sign monotonicity check");
    RatioFlags vm_flags;
    double vm_xmax = 100, vm_rel_tol = 0, vm_zero_band = 0;
    int vm_samples = 0, vm_depth = 0;
    unsigned vm_prec = 0;
    OutputOpts vm_out;
    add_ratio_flags(vm, vm_flags);
    vm->add_option("--x-max", vm_xmax, "Upper endpoint");
    vm->add_option("--samples", vm_samples, "Initial grid samples");
    vm->add_option("--prec", vm_prec, "Starting precision in bits");
    vm->add_option("--rel-tol", vm_rel_tol, "Sign-change bracket width tolerance");
    vm->add_option("--depth", vm_depth, "Max refinement depth");
    vm->add_option("--zero-band", vm_zero_band, "Zero-band factor");
    add_output_flags(vm, vm_out);

    // scan-abc / scan-pfq
    auto add_scan = [&](const char* name, const char* desc, std::string& a, std::string& b,
                        std::string& c, double& xmax, int& samples, unsigned& prec,
                        double& rel_tol, int& depth, double& zero_band, bool& resume,
                        OutputOpts& o) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->add_option("--a", a, "Axis values for a");
        cmd->add_option("--b", b, "Axis values for b");
        cmd->add_option("--c", c, "Axis values for c");
        cmd->add_option("--x-max", xmax, "Upper endpoint of the x interval");
        cmd->add_option("--samples", samples, "Initial grid samples per cell");
        cmd->add_option("--prec", prec, "Starting precision in bits");
        cmd->add_option("--rel-tol", rel_tol, "Sign-change bracket width tolerance");
        cmd->add_option("--depth", depth, "Max refinement depth");
        cmd->add_option("--zero-band", zero_band, "Zero-band factor");
        cmd->add_flag("--resume", resume, "Resume from --out, recomputing only missing cells");
        add_output_flags(cmd, o);
        return cmd;
    };
    std::string sa_a, sa_b, sa_c, sp_a, sp_b, sp_c;
    double sa_xmax = 50, sp_xmax = 0.5, sa_rel_tol = 0, sp_rel_tol = 0;
    double sa_zero_band = 0, sp_zero_band = 0;
    int sa_samples = 0, sp_samples = 0, sa_depth = 0, sp_depth = 0;
    unsigned sa_prec = 0, sp_prec = 0;
    bool sa_resume = false, sp_resume = false;
    OutputOpts sa_out, sp_out;
    auto* sa = add_scan("scan-abc", "Scan the h(a,b,c,x) parameter box (scalar axes)",
                        sa_a, sa_b, sa_c, sa_xmax, sa_samples, sa_prec, sa_rel_tol,
                        sa_depth, sa_zero_band, sa_resume, sa_out);
    auto* sp = add_scan("scan-pfq", "Scan h_pq over vector parameter axes (';' separates values)",
                        sp_a, sp_b, sp_c, sp_xmax, sp_samples, sp_prec, sp_rel_tol,
                        sp_depth, sp_zero_band, sp_resume, sp_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed())
            return cmd_eval(ev_a, ev_b, ev_x, ev_prec, ev_rel_tol, ev_out);
        if (rem->parsed())
            return cmd_remainder(rm_n, rm_x, rm_route, rm_prec, rm_out);
        if (ratio->parsed())
            return cmd_point(false, rt_flags, rt_x, rt_xmax, rt_samples, rt_prec, rt_out);
        if (deriv->parsed())
            return cmd_point(true, dv_flags, dv_x, dv_xmax, dv_samples, dv_prec, dv_out);
        if (vb->parsed())
            return cmd_verify_bounds(vb_n, vb_xmax, vb_samples, vb_prec, vb_out);
        if (vm->parsed()) {
            auto cfg = config_from_flags(vm_samples, vm_prec, vm_rel_tol, vm_depth, vm_zero_band);
            return cmd_verify_monotone(vm_flags, vm_xmax, cfg, vm_out);
        }
        if (sa->parsed()) {
            auto cfg = config_from_flags(sa_samples, sa_prec, sa_rel_tol, sa_depth, sa_zero_band);
            return cmd_scan(false, sa_a, sa_b, sa_c, sa_xmax, cfg, sa_resume, sa_out);
        }
        if (sp->parsed()) {
            auto cfg = config_from_flags(sp_samples, sp_prec, sp_rel_tol, sp_depth, sp_zero_band);
            return cmd_scan(true, sp_a, sp_b, sp_c, sp_xmax, cfg, sp_resume, sp_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

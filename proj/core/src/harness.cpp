#include "kummerscan/harness.hpp"

#include "kummerscan/parallel.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>

namespace ks::harness {

using monotone::MonotoneConfig;
using monotone::MonotonicityReport;
using monotone::Verdict;
using nlohmann::json;
using ratios::RatioFamily;
using ratios::RatioSpec;

namespace {

std::string fmt_double(double d) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
}

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string iso_timestamp() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string params_key(const std::map<std::string, std::vector<double>>& params) {
    std::string s;
    for (const auto& [name, vals] : params) {
        s += name + "=[";
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (i) s += ",";
            s += fmt_double(vals[i]);
        }
        s += "];";
    }
    return s;
}

std::vector<std::map<std::string, std::vector<double>>> enumerate_cells(const ScanGrid& grid) {
    std::vector<std::map<std::string, std::vector<double>>> cells;
    std::size_t total = 1;
    for (const auto& ax : grid.axes)
        total *= ax.values.size();
    cells.reserve(total);
    std::vector<std::size_t> idx(grid.axes.size(), 0);
    for (std::size_t c = 0; c < total; ++c) {
        std::map<std::string, std::vector<double>> params;
        for (std::size_t a = 0; a < grid.axes.size(); ++a)
            params[grid.axes[a].name] = grid.axes[a].values[idx[a]];
        cells.push_back(std::move(params));
        for (std::size_t a = grid.axes.size(); a-- > 0;) {
            if (++idx[a] < grid.axes[a].values.size())
                break;
            idx[a] = 0;
        }
    }
    return cells;
}

double scalar_param(const std::map<std::string, std::vector<double>>& params,
                    const std::string& name) {
    auto it = params.find(name);
    if (it == params.end() || it->second.size() != 1)
        throw DomainError("grid cell parameter '" + name + "' must be a single scalar");
    return it->second.front();
}

std::vector<double> vector_param(const std::map<std::string, std::vector<double>>& params,
                                 const std::string& name) {
    auto it = params.find(name);
    if (it == params.end() || it->second.empty())
        throw DomainError("grid cell parameter '" + name + "' missing");
    return it->second;
}

RatioSpec cell_spec(const std::map<std::string, std::vector<double>>& params, bool pfq) {
    if (pfq)
        return RatioSpec::hpfq(vector_param(params, "a"), vector_param(params, "b"),
                               vector_param(params, "c"));
    return RatioSpec::habc(scalar_param(params, "a"), scalar_param(params, "b"),
                           scalar_param(params, "c"));
}

ScanResult run_scan(const ScanGrid& grid, bool pfq, const std::set<std::string>* done_keys) {
    if (!(grid.x_max > 0))
        throw DomainError("scan requires x_max > 0");
    grid.cfg.validate();

    ScanResult result;
    result.grid = grid;
    auto all_params = enumerate_cells(grid);
    result.cells.resize(all_params.size());

    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < all_params.size(); ++i) {
        result.cells[i].params = std::move(all_params[i]);
        if (!done_keys || !done_keys->count(result.cells[i].key()))
            todo.push_back(i);
    }

    // One failing cell must never abort the scan; everything is recorded.
    parallel_for(todo.size(), [&](std::size_t t) {
        ScanCell& cell = result.cells[todo[t]];
        try {
            RatioSpec spec = cell_spec(cell.params, pfq);
            if (pfq && spec.av.size() == spec.bv.size() + 1 && grid.x_max >= 1)
                throw DivergentSeries("pFq with p = q+1 requires x_max < 1");
            spec.validate();
            cell.report = monotone::check_monotone(spec, 0, grid.x_max, grid.cfg);
            cell.status = CellStatus::Report;
        } catch (const DomainError& e) {
            cell.status = CellStatus::SkippedDomain;
            cell.error = e.what();
        } catch (const std::exception& e) {
            cell.status = CellStatus::Error;
            cell.error = e.what();
        }
    });

    result.metadata.precision_bits = grid.cfg.precision_bits;
    result.metadata.timestamp = iso_timestamp();
    result.metadata.tool_version = kToolVersion;
    result.metadata.grid_hash = grid_hash(grid);
    result.metadata.cells_computed = todo.size();
    return result;
}

json spec_to_json(const RatioSpec& spec) {
    json j;
    j["family"] = family_name(spec.family);
    j["reciprocal"] = spec.reciprocal;
    switch (spec.family) {
        case RatioFamily::FRemainder:
        case RatioFamily::GKummer:
            j["n"] = spec.n;
            break;
        case RatioFamily::HAbc:
            j["a"] = spec.a;
            j["b"] = spec.b;
            j["c"] = spec.c;
            break;
        case RatioFamily::HPfq:
            j["a"] = spec.av;
            j["b"] = spec.bv;
            j["c"] = spec.cv;
            break;
    }
    return j;
}

Verdict verdict_from_name(const std::string& s) {
    if (s == "increasing") return Verdict::Increasing;
    if (s == "violation") return Verdict::Violation;
    if (s == "inconclusive") return Verdict::Inconclusive;
    if (s == "vacuous") return Verdict::Vacuous;
    throw std::runtime_error("unknown verdict: " + s);
}

json cell_params_json(const std::map<std::string, std::vector<double>>& params, bool scalar) {
    json j = json::object();
    for (const auto& [name, vals] : params) {
        if (scalar && vals.size() == 1)
            j[name] = vals.front();
        else
            j[name] = vals;
    }
    return j;
}

std::map<std::string, std::vector<double>> cell_params_from_json(const json& j) {
    std::map<std::string, std::vector<double>> params;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_array())
            params[it.key()] = it->get<std::vector<double>>();
        else
            params[it.key()] = {it->get<double>()};
    }
    return params;
}

json cell_to_json(const ScanCell& cell, bool scalar_params) {
    json j;
    j["params"] = cell_params_json(cell.params, scalar_params);
    switch (cell.status) {
        case CellStatus::SkippedDomain:
            j["verdict"] = "skipped_domain";
            break;
        case CellStatus::Error:
            j["verdict"] = "error";
            break;
        case CellStatus::Report:
            j["verdict"] = verdict_name(cell.report->verdict);
            break;
    }
    if (cell.status == CellStatus::Report) {
        const MonotonicityReport& rep = *cell.report;
        if (rep.witness) {
            j["witness"] = {{"x", rep.witness->x},
                            {"derivative", static_cast<double>(rep.witness->derivative)},
                            {"error_bound", static_cast<double>(rep.witness->error_bound)}};
        } else {
            j["witness"] = nullptr;
        }
        j["min_derivative"] = {{"x", rep.min_derivative_x},
                               {"value", static_cast<double>(rep.min_derivative)}};
        j["samples"] = rep.samples_evaluated;
        j["strict"] = rep.strict;
        j["flat"] = rep.flat;
    } else {
        j["witness"] = nullptr;
        j["min_derivative"] = nullptr;
        j["samples"] = 0;
        j["error"] = cell.error;
    }
    return j;
}

ScanCell cell_from_json(const json& j) {
    ScanCell cell;
    cell.params = cell_params_from_json(j.at("params"));
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "skipped_domain") {
        cell.status = CellStatus::SkippedDomain;
        cell.error = j.value("error", "");
    } else if (verdict == "error") {
        cell.status = CellStatus::Error;
        cell.error = j.value("error", "");
    } else {
        cell.status = CellStatus::Report;
        MonotonicityReport rep;
        rep.verdict = verdict_from_name(verdict);
        if (j.contains("witness") && !j.at("witness").is_null()) {
            monotone::Witness w;
            w.x = j["witness"].at("x").get<double>();
            w.derivative = BigReal(j["witness"].at("derivative").get<double>());
            w.error_bound = BigReal(j["witness"].at("error_bound").get<double>());
            rep.witness = w;
        }
        if (j.contains("min_derivative") && !j.at("min_derivative").is_null()) {
            rep.min_derivative_x = j["min_derivative"].at("x").get<double>();
            rep.min_derivative = BigReal(j["min_derivative"].at("value").get<double>());
        }
        rep.samples_evaluated = j.value("samples", std::uint64_t{0});
        rep.strict = j.value("strict", true);
        rep.flat = j.value("flat", false);
        cell.report = std::move(rep);
    }
    return cell;
}

json grid_to_json(const ScanGrid& grid) {
    json axes = json::array();
    for (const auto& ax : grid.axes)
        axes.push_back({{"name", ax.name}, {"values", ax.values}});
    return {{"kind", grid.kind},
            {"axes", axes},
            {"x_interval", {0.0, grid.x_max}},
            {"cfg",
             {{"initial_samples", grid.cfg.initial_samples},
              {"max_refinement_depth", grid.cfg.max_refinement_depth},
              {"zero_band_factor", grid.cfg.zero_band_factor},
              {"precision_bits", grid.cfg.precision_bits},
              {"rel_tol", grid.cfg.rel_tol},
              {"max_precision_bits", grid.cfg.max_precision_bits}}}};
}

ScanGrid grid_from_json(const json& j) {
    ScanGrid grid;
    grid.kind = j.at("kind").get<std::string>();
    for (const auto& ax : j.at("axes")) {
        Axis axis;
        axis.name = ax.at("name").get<std::string>();
        axis.values = ax.at("values").get<std::vector<std::vector<double>>>();
        grid.axes.push_back(std::move(axis));
    }
    grid.x_max = j.at("x_interval").at(1).get<double>();
    const json& cfg = j.at("cfg");
    grid.cfg.initial_samples = cfg.at("initial_samples").get<int>();
    grid.cfg.max_refinement_depth = cfg.at("max_refinement_depth").get<int>();
    grid.cfg.zero_band_factor = cfg.at("zero_band_factor").get<double>();
    grid.cfg.precision_bits = cfg.at("precision_bits").get<unsigned>();
    grid.cfg.rel_tol = cfg.at("rel_tol").get<double>();
    grid.cfg.max_precision_bits = cfg.at("max_precision_bits").get<unsigned>();
    return grid;
}

json metadata_json(const ScanResult::Meta& m) {
    return {{"precision_bits", m.precision_bits},
            {"timestamp", m.timestamp},
            {"tool_version", m.tool_version},
            {"grid_hash", m.grid_hash},
            {"cells_computed", m.cells_computed}};
}

} // namespace

std::string ScanCell::key() const { return params_key(params); }

bool ScanResult::has_violation() const {
    for (const auto& c : cells)
        if (c.status == CellStatus::Report && c.report->verdict == Verdict::Violation)
            return true;
    return false;
}

bool ScanResult::fully_conclusive() const {
    for (const auto& c : cells) {
        if (c.status != CellStatus::Report)
            return false;
        if (c.report->verdict == Verdict::Inconclusive)
            return false;
    }
    return true;
}

ScanGrid default_abc_grid() {
    ScanGrid grid;
    grid.kind = "abc";
    Axis a{"a", {}}, b{"b", {}}, c{"c", {}};
    for (double v : {0.5, 1.0, 2.0, 4.0})
        a.values.push_back({v});
    for (double v = 1.5; v <= 12.0 + 1e-9; v += 0.5)
        b.values.push_back({v});
    for (double v = 0.25; v <= 2.0 + 1e-9; v += 0.25)
        c.values.push_back({v});
    grid.axes = {a, b, c};
    grid.x_max = 50;
    return grid;
}

std::string grid_hash(const ScanGrid& grid) {
    std::string s = "kind=" + grid.kind + ";";
    for (const auto& ax : grid.axes) {
        s += "axis:" + ax.name + "=";
        for (const auto& v : ax.values) {
            s += "[";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += ",";
                s += fmt_double(v[i]);
            }
            s += "]";
        }
        s += ";";
    }
    s += "x=[0," + fmt_double(grid.x_max) + "];";
    s += "cfg=" + std::to_string(grid.cfg.initial_samples) + "," +
         std::to_string(grid.cfg.max_refinement_depth) + "," +
         fmt_double(grid.cfg.zero_band_factor) + "," +
         std::to_string(grid.cfg.precision_bits) + "," +
         fmt_double(grid.cfg.rel_tol) + "," +
         std::to_string(grid.cfg.max_precision_bits) + ";";
    s += "math=";
    s += kMathVersion;
    return fnv1a_hex(s);
}

BoundsReport verify_bounds(int n_lo, int n_hi, double x_max, int samples, unsigned prec_bits) {
    if (n_lo < 1 || n_hi < n_lo)
        throw DomainError("verify_bounds requires 1 <= n_lo <= n_hi");
    if (!(x_max > 0))
        throw DomainError("verify_bounds requires x_max > 0");
    if (samples < 2)
        throw DomainError("verify_bounds requires at least 2 samples");

    BoundsReport report;
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    report.x_max = x_max;
    report.samples_per_n = samples;
    report.precision_bits = prec_bits;

    const std::vector<double> grid = monotone::blended_grid(0, x_max, samples);
    report.samples.resize(static_cast<std::size_t>(n_hi - n_lo + 1) * grid.size());

    parallel_for(report.samples.size(), [&](std::size_t i) {
        const int n = n_lo + static_cast<int>(i / grid.size());
        const double x = grid[i % grid.size()];
        ratios::RatioValue f = ratios::f_ratio(n, x, prec_bits);
        BoundsSample s;
        s.n = n;
        s.x = x;
        s.value = f.value;
        s.error_bound = f.abs_error_bound;
        // Same operations as the x = 0 limit inside f_ratio, so the margin
        // there is exactly zero.
        BigReal lower(n + 1.0, prec_bits);
        lower /= n + 2.0;
        s.lower_margin = f.value - lower;
        s.upper_margin = 1 - f.value;
        const BigReal tol = 10 * f.abs_error_bound;
        s.pass = (s.lower_margin >= -tol) && (s.upper_margin >= -tol);
        report.samples[i] = std::move(s);
    });

    for (std::size_t i = 0; i < report.samples.size(); ++i) {
        if (!report.samples[i].pass) {
            report.pass = false;
            report.violations.push_back(i);
        }
    }
    return report;
}

std::vector<MonotonicityReport> verify_conjecture(RatioFamily family, int n_lo, int n_hi,
                                                  double x_max, const MonotoneConfig& cfg) {
    if (family != RatioFamily::FRemainder && family != RatioFamily::GKummer)
        throw DomainError("conjecture sweeps cover the f and g families only");
    if (n_lo < 1)
        throw DomainError("conjecture sweeps require n >= 1");
    std::vector<MonotonicityReport> reports;
    for (int n = n_lo; n <= n_hi; ++n) {
        RatioSpec spec = (family == RatioFamily::FRemainder) ? RatioSpec::f(n) : RatioSpec::g(n);
        reports.push_back(monotone::check_monotone(spec, 0, x_max, cfg));
    }
    return reports;
}

ScanResult scan_abc(const ScanGrid& grid) {
    if (grid.kind != "abc")
        throw DomainError("scan_abc requires a grid of kind 'abc'");
    return run_scan(grid, /*pfq=*/false, nullptr);
}

ScanResult scan_pfq(const ScanGrid& grid) {
    if (grid.kind != "pfq")
        throw DomainError("scan_pfq requires a grid of kind 'pfq'");
    return run_scan(grid, /*pfq=*/true, nullptr);
}

json report_to_json(const MonotonicityReport& rep) {
    json j;
    j["verdict"] = verdict_name(rep.verdict);
    if (rep.witness) {
        j["witness"] = {{"x", rep.witness->x},
                        {"derivative", static_cast<double>(rep.witness->derivative)},
                        {"error_bound", static_cast<double>(rep.witness->error_bound)}};
    } else {
        j["witness"] = nullptr;
    }
    j["min_derivative"] = {{"x", rep.min_derivative_x},
                           {"value", static_cast<double>(rep.min_derivative)}};
    j["samples"] = rep.samples_evaluated;
    j["strict"] = rep.strict;
    j["flat"] = rep.flat;
    j["diagnostic"] = rep.diagnostic;
    j["spec"] = spec_to_json(rep.spec);
    j["x_interval"] = {rep.x_lo, rep.x_hi};
    return j;
}

json scan_to_json(const ScanResult& result) {
    const bool scalar = result.grid.kind == "abc";
    json cells = json::array();
    for (const auto& c : result.cells)
        cells.push_back(cell_to_json(c, scalar));
    return {{"schema_version", kSchemaVersion},
            {"kind", "scan"},
            {"grid", grid_to_json(result.grid)},
            {"cells", cells},
            {"metadata", metadata_json(result.metadata)}};
}

json bounds_to_json(const BoundsReport& report) {
    json cells = json::array();
    for (const auto& s : report.samples) {
        cells.push_back({{"params", {{"n", s.n}, {"x", s.x}}},
                         {"verdict", s.pass ? "pass" : "fail"},
                         {"value", static_cast<double>(s.value)},
                         {"error_bound", static_cast<double>(s.error_bound)},
                         {"lower_margin", static_cast<double>(s.lower_margin)},
                         {"upper_margin", static_cast<double>(s.upper_margin)}});
    }
    return {{"schema_version", kSchemaVersion},
            {"kind", "bounds"},
            {"grid",
             {{"n_range", {report.n_lo, report.n_hi}},
              {"x_interval", {0.0, report.x_max}},
              {"samples", report.samples_per_n}}},
            {"pass", report.pass},
            {"cells", cells},
            {"metadata",
             {{"precision_bits", report.precision_bits},
              {"tool_version", kToolVersion},
              {"timestamp", iso_timestamp()}}}};
}

json conjecture_to_json(const std::vector<MonotonicityReport>& reports) {
    json cells = json::array();
    for (const auto& rep : reports) {
        json j = report_to_json(rep);
        j["params"] = spec_to_json(rep.spec);
        cells.push_back(std::move(j));
    }
    return {{"schema_version", kSchemaVersion},
            {"kind", "conjecture"},
            {"cells", cells},
            {"metadata", {{"tool_version", kToolVersion}, {"timestamp", iso_timestamp()}}}};
}

void save_result(const json& doc, const std::string& path) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            throw std::runtime_error("cannot write " + tmp);
        out << doc.dump(2) << "\n";
        if (!out)
            throw std::runtime_error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("atomic rename to " + path + " failed");
}

json load_result(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    return json::parse(in);
}

ScanResult scan_from_json(const json& doc) {
    if (doc.at("kind").get<std::string>() != "scan")
        throw std::runtime_error("not a scan result document");
    ScanResult result;
    result.grid = grid_from_json(doc.at("grid"));
    for (const auto& c : doc.at("cells"))
        result.cells.push_back(cell_from_json(c));
    const json& m = doc.at("metadata");
    result.metadata.precision_bits = m.at("precision_bits").get<unsigned>();
    result.metadata.timestamp = m.value("timestamp", "");
    result.metadata.tool_version = m.value("tool_version", "");
    result.metadata.grid_hash = m.at("grid_hash").get<std::string>();
    result.metadata.cells_computed = m.value("cells_computed", std::uint64_t{0});
    return result;
}

ScanResult resume_scan(const std::string& path, const ScanGrid& grid) {
    ScanResult stored = scan_from_json(load_result(path));
    const std::string expect = grid_hash(grid);
    if (stored.metadata.grid_hash != expect)
        throw GridMismatch("stored grid hash " + stored.metadata.grid_hash +
                           " does not match requested grid " + expect);

    std::set<std::string> done;
    std::map<std::string, const ScanCell*> by_key;
    for (const auto& c : stored.cells) {
        done.insert(c.key());
        by_key[c.key()] = &c;
    }

    ScanResult merged = run_scan(grid, grid.kind == "pfq", &done);
    for (auto& cell : merged.cells) {
        auto it = by_key.find(cell.key());
        if (it != by_key.end())
            cell = *it->second;
    }
    return merged;
}

void trace_csv(const RatioSpec& spec, double x_lo, double x_hi, int samples,
               unsigned prec_bits, std::ostream& out) {
    out << "x,value,derivative,error_bound\n";
    for (double x : monotone::blended_grid(x_lo, x_hi, samples)) {
        ratios::RatioValue v = ratios::ratio_value(spec, x, prec_bits);
        ratios::RatioValue d = ratios::ratio_derivative(spec, x, prec_bits);
        out << fmt_double(x) << "," << to_decimal(v.value) << "," << to_decimal(d.value)
            << "," << to_decimal(d.abs_error_bound) << "\n";
    }
}

} // namespace ks::harness

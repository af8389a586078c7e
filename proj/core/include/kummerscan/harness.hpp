#pragma once

#include "kummerscan/monotone.hpp"
#include "kummerscan/ratios.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ks::harness {

inline constexpr const char* kToolVersion = "kummerscan 0.1.0";
// Bumped whenever the evaluation math changes; part of every grid hash so
// results from different math are never mixed by resume.
inline constexpr const char* kMathVersion = "series-m1";
inline constexpr int kSchemaVersion = 1;

// One axis of a parameter grid. Scalar families use single-element value
// vectors; the pFq scan uses full vectors per value.
struct Axis {
    std::string name;
    std::vector<std::vector<double>> values;
};

struct ScanGrid {
    std::string kind; // "abc" or "pfq"
    std::vector<Axis> axes;
    double x_max = 50;
    monotone::MonotoneConfig cfg;
};

// The default exploration box for the abc-problem; brackets the known
// a = 1, c = 1 family from both sides.
ScanGrid default_abc_grid();

enum class CellStatus { Report, SkippedDomain, Error };

struct ScanCell {
    std::map<std::string, std::vector<double>> params;
    CellStatus status = CellStatus::Error;
    std::optional<monotone::MonotonicityReport> report;
    std::string error;

    std::string key() const; // canonical identity within a grid
};

struct ScanResult {
    ScanGrid grid;
    std::vector<ScanCell> cells;
    struct Meta {
        unsigned precision_bits = 0;
        std::string timestamp;
        std::string tool_version;
        std::string grid_hash;
        std::uint64_t cells_computed = 0;
    } metadata;

    bool has_violation() const;
    bool fully_conclusive() const; // no inconclusive/skipped/error cells
};

struct BoundsSample {
    int n = 0;
    double x = 0;
    BigReal value;
    BigReal error_bound;   // absolute
    BigReal lower_margin;  // f - (n+1)/(n+2)
    BigReal upper_margin;  // 1 - f
    bool pass = true;
};

struct BoundsReport {
    bool pass = true;
    int n_lo = 0, n_hi = 0;
    double x_max = 0;
    int samples_per_n = 0;
    unsigned precision_bits = 0;
    std::vector<BoundsSample> samples;
    std::vector<std::size_t> violations; // indices into samples
};

// Checks the proved inequality (n+1)/(n+2) <= f_n(x) <= 1 on a blended
// grid, with tolerance 10x the reported error bound. A FAIL means an
// implementation bug, not a mathematical discovery.
BoundsReport verify_bounds(int n_lo, int n_hi, double x_max, int samples,
                           unsigned prec_bits = kDefaultPrecisionBits);

// One monotonicity report per n over [0, x_max]; family F or G.
std::vector<monotone::MonotonicityReport> verify_conjecture(
    ratios::RatioFamily family, int n_lo, int n_hi, double x_max,
    const monotone::MonotoneConfig& cfg);

ScanResult scan_abc(const ScanGrid& grid);
ScanResult scan_pfq(const ScanGrid& grid);

std::string grid_hash(const ScanGrid& grid);

// JSON forms (schema_version 1).
nlohmann::json report_to_json(const monotone::MonotonicityReport& rep);
nlohmann::json scan_to_json(const ScanResult& result);
nlohmann::json bounds_to_json(const BoundsReport& report);
nlohmann::json conjecture_to_json(const std::vector<monotone::MonotonicityReport>& reports);

// Atomic (tmp + rename) persistence.
void save_result(const nlohmann::json& doc, const std::string& path);
nlohmann::json load_result(const std::string& path);

ScanResult scan_from_json(const nlohmann::json& doc);

// Recomputes only the cells missing from the file; throws GridMismatch
// when the stored grid hash differs from the requested grid's.
ScanResult resume_scan(const std::string& path, const ScanGrid& grid);

// Per-cell trace: columns x,value,derivative,error_bound.
void trace_csv(const ratios::RatioSpec& spec, double x_lo, double x_hi,
               int samples, unsigned prec_bits, std::ostream& out);

} // namespace ks::harness

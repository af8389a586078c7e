#pragma once

#include <stdexcept>
#include <string>

namespace ks {

// Input outside the supported parameter domain.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Requested tolerance unreachable within the precision ceiling.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// pFq series outside its region of convergence.
class DivergentSeries : public std::runtime_error {
public:
    explicit DivergentSeries(const std::string& what) : std::runtime_error(what) {}
};

// Resume attempted against a result file produced by a different grid.
class GridMismatch : public std::runtime_error {
public:
    explicit GridMismatch(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ks

#pragma once

#include <stdexcept>
#include <string>

namespace drgg {

// Bad argument values (dimension mismatch, out-of-range probability, ...).
struct invalid_input : std::invalid_argument {
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// Parameters that describe no realizable model (e.g. r0 >= 1/2).
struct model_infeasible : std::runtime_error {
    explicit model_infeasible(const std::string& what) : std::runtime_error(what) {}
};

// Statistic undefined on this input (e.g. reciprocity of an empty graph).
struct undefined_statistic : std::runtime_error {
    explicit undefined_statistic(const std::string& what) : std::runtime_error(what) {}
};

// Not enough data to run an estimator.
struct insufficient_data : std::runtime_error {
    explicit insufficient_data(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed file whose contents violate a model invariant.
struct integrity_error : std::runtime_error {
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace drgg

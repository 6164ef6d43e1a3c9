#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "benchrank/error.hpp"

namespace benchrank {

enum class Direction { Minimize, Maximize };

/// A cell of the results or times matrix; empty means "missing"
/// (no feasible solution found before the time limit).
using Cell = std::optional<double>;
using CellMatrix = std::vector<std::vector<Cell>>;

/// Paired results/times matrices for m benchmarks (rows) by n algorithms
/// (columns). A cell is missing iff its *results* entry is absent; times
/// never create missingness. Immutable by convention after construction.
struct BenchmarkDataset {
    std::vector<std::string> algorithm_names; // n >= 2, non-empty, unique
    std::vector<std::string> benchmark_names; // m >= 1, non-empty, unique
    CellMatrix results;                       // objective values, finite when present
    CellMatrix times;                         // seconds, finite and >= 0 when present
    Direction direction = Direction::Minimize;
    std::optional<double> cutoff;             // seconds; required only for PAR10

    std::size_t num_benchmarks() const { return benchmark_names.size(); }
    std::size_t num_algorithms() const { return algorithm_names.size(); }

    bool is_missing(std::size_t row, std::size_t col) const {
        return !results[row][col].has_value();
    }

    /// Number of missing cells in algorithm column `col`.
    std::size_t missing_count(std::size_t col) const;
};

struct ValidationIssue {
    std::string message;   // includes (benchmark, algorithm) coordinates where applicable
};

struct ValidationReport {
    std::vector<ValidationIssue> errors;
    std::vector<ValidationIssue> warnings; // e.g. fully-missing rows (valid, rule 3 handles them)
    bool ok() const { return errors.empty(); }
};

/// Parses the paired CSV sources (see README for the CSV contract) into a
/// validated dataset. Missing markers in the results file: empty cell, "NA",
/// "nan", "inf" (case-insensitive). A time paired with a missing result is
/// kept but ignored downstream.
BenchmarkDataset parse_dataset(std::istream& results_source, std::istream& times_source,
                               Direction direction = Direction::Minimize,
                               std::optional<double> cutoff = std::nullopt);

/// Checks every dataset invariant, reporting all violations rather than the
/// first one. Fully-missing rows are valid but produce a warning.
ValidationReport validate(const BenchmarkDataset& dataset);

/// Throws Error(Format) listing every violation found by validate().
void ensure_valid(const BenchmarkDataset& dataset);

/// Writes a cell matrix in the same CSV contract used for input.
void serialize_matrix(std::ostream& out, const std::vector<std::string>& algorithm_names,
                      const std::vector<std::string>& benchmark_names, const CellMatrix& cells);

/// Copy of the dataset with every present time rounded to the nearest
/// multiple of `quantum`. Published tables often round times; quantizing
/// before the ranking's tie-break reproduces them.
BenchmarkDataset with_quantized_times(const BenchmarkDataset& dataset, double quantum);

/// Shortest decimal representation that parses back to the same double.
std::string format_number(double value);

} // namespace benchrank

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "benchrank/dataset.hpp"

namespace benchrank {

/// Fractional ranks produced by the bi-objective lexicographic ranking rules.
/// Every entry lies in [1, n]; every row sums to exactly n(n+1)/2 (midrank
/// averaging preserves the total, and midranks are half-integers, which
/// doubles represent and sum exactly).
struct RankMatrix {
    std::vector<std::string> algorithm_names;
    std::vector<std::string> benchmark_names;
    std::vector<std::vector<double>> ranks; // m x n

    std::size_t num_benchmarks() const { return benchmark_names.size(); }
    std::size_t num_algorithms() const { return algorithm_names.size(); }
};

/// Column sums, mean ranks and per-algorithm rank histograms of a RankMatrix.
struct RankSummary {
    std::vector<double> rank_sums;  // length n, sum over rows of each column
    std::vector<double> mean_ranks; // rank_sums / m
    std::vector<std::map<double, std::size_t>> histograms; // rank value -> count, per algorithm
    std::size_t num_rows = 0;
};

/// Ranks one benchmark row of n algorithms:
///   1. smaller value ranks better (after direction normalization),
///   2. equal values are broken by smaller time; exact value-and-time ties
///      share the midrank,
///   3. missing entries rank worse than every present entry and tie among
///      themselves at the midrank of the trailing positions.
/// Throws Error(Format) when a present value has a missing time or n < 2.
std::vector<double> rank_row(std::span<const Cell> values, std::span<const Cell> times,
                             Direction direction);

/// Applies rank_row to every row of the dataset; rows are independent.
RankMatrix build_rank_matrix(const BenchmarkDataset& dataset);

RankSummary summarize(const RankMatrix& matrix);

/// Writes the rank matrix in the input CSV contract (ranks as decimals, e.g. "2.5").
void serialize_rank_matrix(std::ostream& out, const RankMatrix& matrix);

} // namespace benchrank

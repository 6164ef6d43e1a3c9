#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "benchrank/ranking.hpp"

namespace benchrank {

/// Rank-count table behind the histogram: one bucket per distinct rank value
/// that occurs anywhere in the matrix (fractional ranks such as 2.5 are their
/// own buckets). Counts per algorithm sum to m.
struct HistogramTable {
    std::vector<double> rank_values;                // sorted ascending
    std::vector<std::vector<std::size_t>> counts;   // [algorithm][bucket]
    std::vector<std::string> algorithm_names;
};

HistogramTable histogram_table(const RankSummary& summary,
                               const std::vector<std::string>& algorithm_names);

/// Grouped-bar SVG of the rank counts. Deterministic byte output.
void write_histogram_svg(std::ostream& out, const HistogramTable& table);

/// CSV companion: header "rank,<algo1>,...,<algoN>", one row per bucket.
void write_histogram_csv(std::ostream& out, const HistogramTable& table);

} // namespace benchrank

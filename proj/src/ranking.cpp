#include "benchrank/ranking.hpp"

#include <algorithm>
#include <ostream>

namespace benchrank {

std::vector<double> rank_row(std::span<const Cell> values, std::span<const Cell> times,
                             Direction direction) {
    const std::size_t n = values.size();
    if (n < 2) throw Error(ErrorKind::Format, "rank_row: need at least 2 algorithms");
    if (times.size() != n)
        throw Error(ErrorKind::Format, "rank_row: values and times lengths differ");

    struct Entry {
        double value; // after direction normalization
        double time;
        std::size_t index;
    };
    std::vector<Entry> present;
    std::vector<std::size_t> missing;
    present.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!values[j].has_value()) {
            missing.push_back(j);
            continue;
        }
        if (!times[j].has_value())
            throw Error(ErrorKind::Format,
                        "present value with missing time at column " + std::to_string(j + 1));
        double v = *values[j];
        if (direction == Direction::Maximize) v = -v;
        present.push_back({v, *times[j], j});
    }

    std::sort(present.begin(), present.end(), [](const Entry& a, const Entry& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.time != b.time) return a.time < b.time;
        return a.index < b.index;
    });

    std::vector<double> ranks(n, 0.0);
    // Midranks over groups of exact (value, time) ties; positions are 1-based.
    std::size_t pos = 0;
    while (pos < present.size()) {
        std::size_t end = pos + 1;
        while (end < present.size() && present[end].value == present[pos].value &&
               present[end].time == present[pos].time)
            ++end;
        const double midrank = static_cast<double>(pos + 1 + end) / 2.0;
        for (std::size_t k = pos; k < end; ++k) ranks[present[k].index] = midrank;
        pos = end;
    }
    if (!missing.empty()) {
        // Rule 3: co-missing entries share the midrank of the trailing positions.
        const double midrank = static_cast<double>(2 * n - missing.size() + 1) / 2.0;
        for (std::size_t j : missing) ranks[j] = midrank;
    }
    return ranks;
}

RankMatrix build_rank_matrix(const BenchmarkDataset& dataset) {
    RankMatrix matrix;
    matrix.algorithm_names = dataset.algorithm_names;
    matrix.benchmark_names = dataset.benchmark_names;
    matrix.ranks.reserve(dataset.num_benchmarks());
    for (std::size_t i = 0; i < dataset.num_benchmarks(); ++i) {
        try {
            matrix.ranks.push_back(
                rank_row(dataset.results[i], dataset.times[i], dataset.direction));
        } catch (const Error& e) {
            throw Error(e.kind(),
                        "benchmark \"" + dataset.benchmark_names[i] + "\": " + e.what());
        }
    }
    return matrix;
}

RankSummary summarize(const RankMatrix& matrix) {
    const std::size_t n = matrix.num_algorithms();
    RankSummary summary;
    summary.num_rows = matrix.ranks.size();
    summary.rank_sums.assign(n, 0.0);
    summary.histograms.assign(n, {});
    for (const auto& row : matrix.ranks) {
        for (std::size_t j = 0; j < n; ++j) {
            summary.rank_sums[j] += row[j];
            ++summary.histograms[j][row[j]];
        }
    }
    summary.mean_ranks.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        summary.mean_ranks[j] =
            summary.num_rows ? summary.rank_sums[j] / static_cast<double>(summary.num_rows) : 0.0;
    return summary;
}

void serialize_rank_matrix(std::ostream& out, const RankMatrix& matrix) {
    out << "benchmark";
    for (const auto& name : matrix.algorithm_names) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < matrix.benchmark_names.size(); ++i) {
        out << matrix.benchmark_names[i];
        for (double r : matrix.ranks[i]) out << ',' << format_number(r);
        out << '\n';
    }
}

} // namespace benchrank

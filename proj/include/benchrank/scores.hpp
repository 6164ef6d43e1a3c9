#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "benchrank/dataset.hpp"

namespace benchrank {

/// Per-algorithm PAR10 and ERT summaries. A score is null when it cannot be
/// computed; the paired reason string says why.
struct ScoreReport {
    std::vector<std::string> algorithm_names;
    std::vector<std::optional<double>> par10;
    std::vector<std::string> par10_reasons;
    std::vector<std::optional<double>> ert;
    std::vector<std::string> ert_reasons;
    std::vector<std::size_t> solved_counts;
};

/// Penalized average runtime: (sum of present times + 10 * cutoff * #missing) / m.
/// Present times above the cutoff are clamped to it for scoring and reported
/// through `warnings` when given.
double par10(std::span<const Cell> times, double cutoff,
             std::vector<std::string>* warnings = nullptr);

/// Expected runtime  ERT = RT_S + ((1 - p_S) / p_S) * RT_US  with
/// p_S = successes / m, RT_S / RT_US the mean time over successful /
/// unsuccessful trials (0 when there are none). All trials must carry a
/// time: unsuccessful ones still consumed runtime up to their stop point.
/// Returns nullopt when there are no successes. Unit-agnostic: seconds in,
/// seconds out; evaluation counts in, evaluation counts out.
std::optional<double> ert(std::span<const double> times, const std::vector<bool>& success);

/// Builds the per-algorithm score table for a dataset. PAR10 needs the
/// dataset cutoff; ERT uses the recorded time of unsolved cells when the
/// times file has one, falling back to the cutoff.
ScoreReport build_score_report(const BenchmarkDataset& dataset,
                               std::vector<std::string>* warnings = nullptr);

} // namespace benchrank

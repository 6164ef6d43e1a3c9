#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "benchrank/ranking.hpp"

namespace benchrank {

struct FriedmanResult {
    double statistic = 0.0;      // FM, or the tie-corrected variant
    int degrees_of_freedom = 0;  // n - 1
    double p_value = 1.0;
    bool tie_corrected = false;
    bool reject_null = false;    // p_value < alpha
    double alpha = 0.05;
};

/// All-pairs Nemenyi comparison. Matrices are n x n, symmetric; the
/// statistics diagonal is zero and the p-value diagonal is one.
struct PosthocResult {
    std::vector<std::vector<double>> statistics;
    std::vector<std::vector<double>> p_values;
    std::vector<std::vector<bool>> significant; // p < alpha
    double alpha = 0.05;
};

struct ShapiroResult {
    double w_statistic = 0.0; // in (0, 1]
    double p_value = 1.0;
    std::size_t sample_size = 0;
};

/// Friedman's statistic FM = (12 / (m n (n+1))) * sum(s_i^2) - 3 m (n+1)
/// from the column rank sums of an m x n rank matrix; n = rank_sums.size().
/// Rank sums whose total strays more than 5% from m n(n+1)/2 are rejected
/// as inconsistent (published sums are often rounded, so small deviations
/// are accepted; see README).
double friedman_statistic(std::span<const double> rank_sums, std::size_t m);

/// Friedman's omnibus test on a rank matrix. When tie_correction is set the
/// statistic is divided by 1 - sum(t^3 - t) / (m (n^3 - n)) over all tie
/// groups of all rows, matching common implementations. A dataset in which
/// every row is fully tied has a zero correction factor and no discrimination
/// at all; this raises Error(Degenerate) in both modes.
FriedmanResult friedman_test(const RankMatrix& matrix, double alpha, bool tie_correction);

/// Nemenyi post-hoc test from rank sums:
///   q_ij = |s_i - s_j| / (m * sqrt(n(n+1)/(12m))),   p_ij = P(Q_{n,inf} >= q_ij).
PosthocResult nemenyi(std::span<const double> rank_sums, std::size_t m, double alpha);

/// Shapiro-Wilk W test, AS R94 (Royston 1995), n in [3, 5000].
/// Throws Error(Degenerate) for a constant sample and Error(Format) for a
/// sample size out of range.
ShapiroResult shapiro_wilk(std::span<const double> sample);

} // namespace benchrank

#include "benchrank/stats.hpp"

#include <algorithm>
#include <cmath>

#include "benchrank/distributions.hpp"

namespace benchrank {

namespace {

// Rank sums must come from some m x n rank matrix: entries in [m, m*n] and a
// grand total of m*n(n+1)/2. Published sums are frequently rounded, so the
// total is only held to 5%; anything further off is rejected as misuse.
void check_rank_sums(std::span<const double> rank_sums, std::size_t m) {
    const std::size_t n = rank_sums.size();
    if (n < 2) throw Error(ErrorKind::Format, "rank sums: need at least 2 algorithms");
    if (m < 1) throw Error(ErrorKind::Format, "rank sums: m must be positive");
    const double dm = static_cast<double>(m);
    const double dn = static_cast<double>(n);
    double total = 0.0;
    for (double s : rank_sums) {
        if (!(s >= dm - 1e-9) || !(s <= dm * dn + 1e-9))
            throw Error(ErrorKind::Format,
                        "inconsistent rank sums: entry " + std::to_string(s) +
                            " outside [m, m*n] = [" + std::to_string(m) + ", " +
                            std::to_string(m * n) + "]");
        total += s;
    }
    const double expected = dm * dn * (dn + 1.0) / 2.0;
    if (std::abs(total - expected) > 0.05 * expected)
        throw Error(ErrorKind::Format,
                    "inconsistent rank sums: total " + std::to_string(total) +
                        " deviates more than 5% from m*n(n+1)/2 = " + std::to_string(expected));
}

double check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw Error(ErrorKind::Format, "alpha must lie strictly between 0 and 1");
    return alpha;
}

} // namespace

double friedman_statistic(std::span<const double> rank_sums, std::size_t m) {
    check_rank_sums(rank_sums, m);
    const double dm = static_cast<double>(m);
    const double dn = static_cast<double>(rank_sums.size());
    double sum_sq = 0.0;
    for (double s : rank_sums) sum_sq += s * s;
    const double fm = 12.0 / (dm * dn * (dn + 1.0)) * sum_sq - 3.0 * dm * (dn + 1.0);
    return std::max(fm, 0.0);
}

FriedmanResult friedman_test(const RankMatrix& matrix, double alpha, bool tie_correction) {
    check_alpha(alpha);
    const std::size_t m = matrix.ranks.size();
    const std::size_t n = matrix.num_algorithms();
    if (m < 1 || n < 2)
        throw Error(ErrorKind::Format, "friedman_test: need m >= 1 rows and n >= 2 columns");

    const double expected_row_sum = static_cast<double>(n) * (static_cast<double>(n) + 1.0) / 2.0;
    double tie_sum = 0.0; // sum over rows and tie groups of t^3 - t
    std::vector<double> sorted_row(n);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = matrix.ranks[i];
        if (row.size() != n)
            throw Error(ErrorKind::Format, "friedman_test: ragged rank matrix");
        double row_sum = 0.0;
        for (double r : row) row_sum += r;
        if (row_sum != expected_row_sum)
            throw Error(ErrorKind::Format,
                        "friedman_test: row \"" + matrix.benchmark_names[i] +
                            "\" is not a valid fractional ranking (sum != n(n+1)/2)");
        // Equal midranks within a row identify a tie group.
        sorted_row.assign(row.begin(), row.end());
        std::sort(sorted_row.begin(), sorted_row.end());
        std::size_t k = 0;
        while (k < n) {
            std::size_t e = k + 1;
            while (e < n && sorted_row[e] == sorted_row[k]) ++e;
            const double t = static_cast<double>(e - k);
            tie_sum += t * t * t - t;
            k = e;
        }
    }

    const double dm = static_cast<double>(m);
    const double dn = static_cast<double>(n);
    const double correction = 1.0 - tie_sum / (dm * (dn * dn * dn - dn));
    if (correction <= 0.0)
        throw Error(ErrorKind::Degenerate, "degenerate: no discrimination in any row");

    RankSummary summary = summarize(matrix);
    double statistic = friedman_statistic(summary.rank_sums, m);
    if (tie_correction) statistic /= correction;

    FriedmanResult result;
    result.statistic = statistic;
    result.degrees_of_freedom = static_cast<int>(n) - 1;
    result.p_value = chi_square_sf(statistic, result.degrees_of_freedom);
    result.tie_corrected = tie_correction;
    result.alpha = alpha;
    result.reject_null = result.p_value < alpha;
    return result;
}

PosthocResult nemenyi(std::span<const double> rank_sums, std::size_t m, double alpha) {
    check_alpha(alpha);
    check_rank_sums(rank_sums, m);
    const std::size_t n = rank_sums.size();
    const double dm = static_cast<double>(m);
    const double dn = static_cast<double>(n);
    const double denom = dm * std::sqrt(dn * (dn + 1.0) / (12.0 * dm));

    PosthocResult result;
    result.alpha = alpha;
    result.statistics.assign(n, std::vector<double>(n, 0.0));
    result.p_values.assign(n, std::vector<double>(n, 1.0));
    result.significant.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double q = std::abs(rank_sums[i] - rank_sums[j]) / denom;
            const double p = studentized_range_sf(q, static_cast<int>(n));
            result.statistics[i][j] = result.statistics[j][i] = q;
            result.p_values[i][j] = result.p_values[j][i] = p;
            result.significant[i][j] = result.significant[j][i] = p < alpha;
        }
    }
    return result;
}

namespace {

double polynomial(std::span<const double> coeffs, double x) {
    double p = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) p = p * x + coeffs[i];
    return p;
}

// AS R94 polynomial corrections (Royston 1995), uncensored samples.
constexpr double kC1[6] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
constexpr double kC2[6] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
constexpr double kC3[4] = {0.5440, -0.39978, 0.025054, -6.714e-4};
constexpr double kC4[4] = {1.3822, -0.77857, 0.062767, -0.0020322};
constexpr double kC5[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
constexpr double kC6[3] = {-0.4803, -0.082676, 0.0030302};
constexpr double kG[2] = {-2.273, 0.459};

// Normalized W-test coefficient vector (full length n, antisymmetric).
std::vector<double> shapiro_coefficients(std::size_t n) {
    std::vector<double> coeff(n, 0.0);
    const std::size_t half = n / 2;
    if (n == 3) {
        coeff[0] = -std::sqrt(0.5);
        coeff[2] = std::sqrt(0.5);
        return coeff;
    }
    const double dn = static_cast<double>(n);
    std::vector<double> scores(half); // Blom-type normal scores of the lower half
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < half; ++i) {
        scores[i] = normal_quantile((static_cast<double>(i + 1) - 0.375) / (dn + 0.25));
        sum_sq += scores[i] * scores[i];
    }
    sum_sq *= 2.0;
    const double norm = std::sqrt(sum_sq);
    const double rsn = 1.0 / std::sqrt(dn);
    const double a1 = polynomial(kC1, rsn) - scores[0] / norm;

    std::size_t tail; // number of leading coefficients replaced by corrections
    double fac;
    double a2 = 0.0;
    if (n > 5) {
        tail = 2;
        a2 = polynomial(kC2, rsn) - scores[1] / norm;
        fac = std::sqrt((sum_sq - 2.0 * scores[0] * scores[0] - 2.0 * scores[1] * scores[1]) /
                        (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
    } else {
        tail = 1;
        fac = std::sqrt((sum_sq - 2.0 * scores[0] * scores[0]) / (1.0 - 2.0 * a1 * a1));
    }

    // Upper-half coefficients are positive; the lower half mirrors them.
    for (std::size_t i = 0; i < half; ++i) {
        double a;
        if (i == 0)
            a = a1;
        else if (i == 1 && tail == 2)
            a = a2;
        else
            a = -scores[i] / fac;
        coeff[n - 1 - i] = a;
        coeff[i] = -a;
    }
    return coeff;
}

} // namespace

ShapiroResult shapiro_wilk(std::span<const double> sample) {
    const std::size_t n = sample.size();
    if (n < 3 || n > 5000)
        throw Error(ErrorKind::Format,
                    "shapiro_wilk: sample size " + std::to_string(n) + " outside [3, 5000]");

    std::vector<double> x(sample.begin(), sample.end());
    std::sort(x.begin(), x.end());
    if (x.back() - x.front() <= 0.0)
        throw Error(ErrorKind::Degenerate, "shapiro_wilk: zero variance (constant sample)");

    const std::vector<double> coeff = shapiro_coefficients(n);
    const double dn = static_cast<double>(n);
    double x_mean = 0.0, c_mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        x_mean += x[i];
        c_mean += coeff[i];
    }
    x_mean /= dn;
    c_mean /= dn;

    // 1 - W computed directly from the correlation form; avoids cancellation
    // when W is very near 1 in large samples.
    double ssx = 0.0, ssa = 0.0, sax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - x_mean;
        const double da = coeff[i] - c_mean;
        ssx += dx * dx;
        ssa += da * da;
        sax += da * dx;
    }
    const double ssassx = std::sqrt(ssa * ssx);
    const double w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
    const double w = 1.0 - w1;

    ShapiroResult result;
    result.w_statistic = w;
    result.sample_size = n;

    if (n == 3) {
        // Exact for n = 3.
        const double pi6 = 6.0 / M_PI;
        const double stqr = std::asin(std::sqrt(0.75));
        double pw = pi6 * (std::asin(std::sqrt(std::clamp(w, 0.0, 1.0))) - stqr);
        result.p_value = std::clamp(pw, 0.0, 1.0);
        return result;
    }

    if (!(w1 > 0.0)) { // rounding can nudge a perfect correlation past 1
        result.w_statistic = 1.0;
        result.p_value = 1.0;
        return result;
    }
    double y = std::log(w1);
    const double log_n = std::log(dn);
    double mu, sigma;
    if (n <= 11) {
        const double gamma = polynomial(kG, dn);
        if (y >= gamma) {
            result.p_value = 1e-19; // guard; unreachable for uncensored samples
            return result;
        }
        y = -std::log(gamma - y);
        mu = polynomial(kC3, dn);
        sigma = std::exp(polynomial(kC4, dn));
    } else {
        mu = polynomial(kC5, log_n);
        sigma = std::exp(polynomial(kC6, log_n));
    }
    result.p_value = std::clamp(normal_sf((y - mu) / sigma), 0.0, 1.0);
    return result;
}

} // namespace benchrank

#include "benchrank/scores.hpp"

#include <cmath>

namespace benchrank {

double par10(std::span<const Cell> times, double cutoff, std::vector<std::string>* warnings) {
    const std::size_t m = times.size();
    if (m == 0) throw Error(ErrorKind::Format, "par10: empty time vector");
    if (!(cutoff > 0.0 && std::isfinite(cutoff)))
        throw Error(ErrorKind::Format, "par10: cutoff must be positive and finite");

    double sum = 0.0;
    std::size_t missing = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (!times[i].has_value()) {
            ++missing;
            continue;
        }
        double t = *times[i];
        if (t > cutoff) {
            if (warnings)
                warnings->push_back("par10: time " + format_number(t) + " exceeds cutoff " +
                                    format_number(cutoff) + "; clamped");
            t = cutoff;
        }
        sum += t;
    }
    return (sum + 10.0 * cutoff * static_cast<double>(missing)) / static_cast<double>(m);
}

std::optional<double> ert(std::span<const double> times, const std::vector<bool>& success) {
    const std::size_t m = times.size();
    if (m == 0) throw Error(ErrorKind::Format, "ert: empty time vector");
    if (success.size() != m)
        throw Error(ErrorKind::Format, "ert: times and success lengths differ");

    double sum_success = 0.0, sum_fail = 0.0;
    std::size_t n_success = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (success[i]) {
            sum_success += times[i];
            ++n_success;
        } else {
            sum_fail += times[i];
        }
    }
    if (n_success == 0) return std::nullopt;

    const std::size_t n_fail = m - n_success;
    const double rt_s = sum_success / static_cast<double>(n_success);
    const double rt_us = n_fail ? sum_fail / static_cast<double>(n_fail) : 0.0;
    // (1 - p_S) / p_S with p_S = n_success / m reduces to n_fail / n_success.
    const double odds = static_cast<double>(n_fail) / static_cast<double>(n_success);
    return rt_s + odds * rt_us;
}

ScoreReport build_score_report(const BenchmarkDataset& dataset,
                               std::vector<std::string>* warnings) {
    const std::size_t m = dataset.num_benchmarks();
    const std::size_t n = dataset.num_algorithms();
    ScoreReport report;
    report.algorithm_names = dataset.algorithm_names;
    report.par10.resize(n);
    report.par10_reasons.resize(n);
    report.ert.resize(n);
    report.ert_reasons.resize(n);
    report.solved_counts.resize(n);

    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Cell> column(m);
        std::size_t solved = 0;
        for (std::size_t i = 0; i < m; ++i) {
            column[i] = dataset.is_missing(i, j) ? Cell{} : dataset.times[i][j];
            if (!dataset.is_missing(i, j)) ++solved;
        }
        report.solved_counts[j] = solved;

        if (dataset.cutoff)
            report.par10[j] = par10(column, *dataset.cutoff, warnings);
        else
            report.par10_reasons[j] = "cutoff not set";

        if (solved == 0) {
            report.ert_reasons[j] = "no successful trials";
            continue;
        }
        // Unsolved cells still need a runtime: the recorded time when the
        // times file has one, otherwise the cutoff.
        std::vector<double> ert_times(m);
        std::vector<bool> success(m);
        bool complete = true;
        for (std::size_t i = 0; i < m; ++i) {
            success[i] = !dataset.is_missing(i, j);
            if (dataset.times[i][j].has_value()) {
                ert_times[i] = *dataset.times[i][j];
            } else if (dataset.cutoff) {
                ert_times[i] = *dataset.cutoff;
            } else {
                report.ert_reasons[j] = "unsolved benchmark \"" + dataset.benchmark_names[i] +
                                        "\" has no recorded time and no cutoff is set";
                complete = false;
                break;
            }
        }
        if (!complete) continue;
        report.ert[j] = ert(ert_times, success);
        if (!report.ert[j]) report.ert_reasons[j] = "no successful trials";
    }
    return report;
}

} // namespace benchrank

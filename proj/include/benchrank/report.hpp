#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "benchrank/dataset.hpp"
#include "benchrank/ranking.hpp"
#include "benchrank/scores.hpp"
#include "benchrank/stats.hpp"

namespace benchrank {

enum class OutputFormat { Json, Text, Csv };

struct AnalysisConfig {
    Direction direction = Direction::Minimize;
    double alpha = 0.05;
    bool tie_correction = true;
    std::optional<double> cutoff;       // seconds; enables PAR10
    std::optional<double> time_quantum; // pre-ranking quantization of times
    OutputFormat output_format = OutputFormat::Text;
};

/// Everything the analyze pipeline produces. Nullable sections carry a reason
/// string explaining why they are absent; reasons are empty when the section
/// is present.
struct AnalysisReport {
    std::string version;
    AnalysisConfig config;

    std::vector<std::string> algorithm_names;
    std::size_t num_benchmarks = 0;
    std::vector<std::size_t> missing_counts;          // per algorithm
    std::vector<std::string> fully_missing_benchmarks;

    RankSummary summary;

    std::vector<std::optional<ShapiroResult>> shapiro; // per algorithm, on its rank column
    std::vector<std::string> shapiro_reasons;

    std::optional<FriedmanResult> friedman;
    std::string friedman_reason;
    bool degenerate = false; // drives exit code 4

    // Present iff the Friedman test rejects the null hypothesis.
    std::optional<PosthocResult> posthoc;
    std::string posthoc_reason;

    ScoreReport scores;
    std::vector<std::string> warnings;
};

/// Runs the full pipeline: ranking, Shapiro-Wilk screening of each rank
/// column, Friedman's omnibus test, and the Nemenyi post-hoc when Friedman
/// rejects. Statistical outcomes never throw; a degenerate Friedman test is
/// recorded in the report.
AnalysisReport analyze(const BenchmarkDataset& dataset, const AnalysisConfig& config);

void render_report(std::ostream& out, const AnalysisReport& report, OutputFormat format,
                   bool color = false);

/// Renders a stand-alone score report (the `scores` subcommand).
void render_scores(std::ostream& out, const ScoreReport& scores, OutputFormat format,
                   bool color = false);

} // namespace benchrank

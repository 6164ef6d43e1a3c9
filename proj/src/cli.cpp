#include "benchrank/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "benchrank/dataset.hpp"
#include "benchrank/histogram.hpp"
#include "benchrank/report.hpp"
#include "benchrank/version.hpp"

#if defined(_WIN32)
#else
#include <unistd.h>
#endif

namespace benchrank::cli {

namespace {

struct CommonOptions {
    std::string results_path;
    std::string times_path;
    std::string direction = "min";
    double alpha = 0.05;
    bool no_tie_correction = false;
    double cutoff = 0.0;        // 0 = unset
    double time_quantum = 0.0;  // 0 = unset
    std::string format = "text";
    std::string out_path;
};

void add_common_options(CLI::App* cmd, CommonOptions& opt, bool with_stats_flags) {
    cmd->add_option("--results", opt.results_path, "CSV of objective values")->required();
    cmd->add_option("--times", opt.times_path, "CSV of running times (seconds)")->required();
    cmd->add_option("--direction", opt.direction, "Optimization sense: min or max")
        ->check(CLI::IsMember({"min", "max"}))
        ->default_str("min");
    cmd->add_option("--cutoff", opt.cutoff, "Cut-off time in seconds (enables PAR10)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--time-quantum", opt.time_quantum,
                    "Quantize times to this resolution before ranking")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", opt.out_path, "Write output to this file instead of stdout");
    if (with_stats_flags) {
        cmd->add_option("--alpha", opt.alpha, "Significance level")
            ->check(CLI::Range(1e-12, 1.0 - 1e-12))
            ->default_str("0.05");
        cmd->add_flag("--no-tie-correction", opt.no_tie_correction,
                      "Use the uncorrected Friedman statistic");
        cmd->add_option("--format", opt.format, "Report format")
            ->check(CLI::IsMember({"json", "text", "csv"}))
            ->default_str("text");
    }
}

AnalysisConfig to_config(const CommonOptions& opt) {
    AnalysisConfig config;
    config.direction = opt.direction == "max" ? Direction::Maximize : Direction::Minimize;
    config.alpha = opt.alpha;
    config.tie_correction = !opt.no_tie_correction;
    if (opt.cutoff > 0.0) config.cutoff = opt.cutoff;
    if (opt.time_quantum > 0.0) config.time_quantum = opt.time_quantum;
    config.output_format = opt.format == "json"
                               ? OutputFormat::Json
                               : (opt.format == "csv" ? OutputFormat::Csv : OutputFormat::Text);
    return config;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open \"" + path + "\" for reading");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot open \"" + path + "\" for writing");
    return out;
}

BenchmarkDataset load_dataset(const CommonOptions& opt, const AnalysisConfig& config) {
    std::ifstream results = open_input(opt.results_path);
    std::ifstream times = open_input(opt.times_path);
    return parse_dataset(results, times, config.direction, config.cutoff);
}

bool want_color(const std::ostream& out) {
    if (std::getenv("BENCHRANK_NO_COLOR") != nullptr) return false;
    if (&out != static_cast<const std::ostream*>(&std::cout)) return false;
#if defined(_WIN32)
    return false;
#else
    return isatty(fileno(stdout)) != 0;
#endif
}

// Writes through `emit` either to --out or to the default stream.
template <typename Emit>
void with_output(const CommonOptions& opt, std::ostream& fallback, Emit&& emit) {
    if (opt.out_path.empty()) {
        emit(fallback);
        if (!fallback) throw Error(ErrorKind::Io, "error writing output");
    } else {
        std::ofstream file = open_output(opt.out_path);
        emit(file);
        file.flush();
        if (!file) throw Error(ErrorKind::Io, "error writing \"" + opt.out_path + "\"");
    }
}

int cmd_rank(const CommonOptions& opt, std::ostream& out) {
    const AnalysisConfig config = to_config(opt);
    BenchmarkDataset dataset = load_dataset(opt, config);
    if (config.time_quantum) dataset = with_quantized_times(dataset, *config.time_quantum);
    const RankMatrix matrix = build_rank_matrix(dataset);
    with_output(opt, out, [&](std::ostream& sink) { serialize_rank_matrix(sink, matrix); });
    return 0;
}

int cmd_analyze(const CommonOptions& opt, std::ostream& out, std::ostream& err) {
    const AnalysisConfig config = to_config(opt);
    const BenchmarkDataset dataset = load_dataset(opt, config);
    const AnalysisReport report = analyze(dataset, config);
    with_output(opt, out, [&](std::ostream& sink) {
        render_report(sink, report, config.output_format,
                      opt.out_path.empty() && want_color(out));
    });
    if (report.degenerate) {
        err << "benchrank: " << report.friedman_reason << '\n';
        return static_cast<int>(ErrorKind::Degenerate);
    }
    return 0;
}

int cmd_hist(const CommonOptions& opt, std::ostream& err) {
    const AnalysisConfig config = to_config(opt);
    const BenchmarkDataset dataset = load_dataset(opt, config);
    const RankMatrix matrix = build_rank_matrix(dataset);
    const HistogramTable table =
        histogram_table(summarize(matrix), dataset.algorithm_names);

    std::filesystem::path svg_path(opt.out_path);
    if (svg_path.extension().empty()) svg_path.replace_extension(".svg");
    std::filesystem::path csv_path(svg_path);
    csv_path.replace_extension(".csv");
    if (csv_path == svg_path) csv_path += ".csv";

    {
        std::ofstream svg = open_output(svg_path.string());
        write_histogram_svg(svg, table);
        svg.flush();
        if (!svg) throw Error(ErrorKind::Io, "error writing \"" + svg_path.string() + "\"");
    }
    {
        std::ofstream csv = open_output(csv_path.string());
        write_histogram_csv(csv, table);
        csv.flush();
        if (!csv) throw Error(ErrorKind::Io, "error writing \"" + csv_path.string() + "\"");
    }
    err << "benchrank: wrote " << svg_path.string() << " and " << csv_path.string() << '\n';
    return 0;
}

int cmd_scores(const CommonOptions& opt, std::ostream& out) {
    const AnalysisConfig config = to_config(opt);
    const BenchmarkDataset dataset = load_dataset(opt, config);
    std::vector<std::string> warnings;
    const ScoreReport report = build_score_report(dataset, &warnings);
    with_output(opt, out, [&](std::ostream& sink) {
        render_scores(sink, report, config.output_format,
                      opt.out_path.empty() && want_color(out));
    });
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Statistical comparison of algorithms over benchmark suites "
                 "with missing (infeasible) results",
                 "benchrank"};
    app.set_version_flag("--version", BENCHRANK_VERSION);
    app.require_subcommand(1);

    CommonOptions rank_opt, analyze_opt, hist_opt, scores_opt;
    CLI::App* rank =
        app.add_subcommand("rank", "Emit the bi-objective lexicographic rank matrix as CSV");
    add_common_options(rank, rank_opt, false);
    CLI::App* analyze_cmd = app.add_subcommand(
        "analyze", "Full pipeline: ranking, Shapiro-Wilk, Friedman, Nemenyi post-hoc, scores");
    add_common_options(analyze_cmd, analyze_opt, true);
    CLI::App* hist =
        app.add_subcommand("hist", "Write the rank histogram as SVG plus a CSV of the counts");
    add_common_options(hist, hist_opt, false);
    hist->get_option("--out")->required();
    CLI::App* scores = app.add_subcommand("scores", "Per-algorithm PAR10 and ERT table");
    add_common_options(scores, scores_opt, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion& e) {
        out << app.version() << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "benchrank: " << e.what() << '\n';
        return static_cast<int>(ErrorKind::Format);
    }

    try {
        if (rank->parsed()) return cmd_rank(rank_opt, out);
        if (analyze_cmd->parsed()) return cmd_analyze(analyze_opt, out, err);
        if (hist->parsed()) return cmd_hist(hist_opt, err);
        if (scores->parsed()) return cmd_scores(scores_opt, out);
    } catch (const Error& e) {
        err << "benchrank: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        err << "benchrank: internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace benchrank::cli

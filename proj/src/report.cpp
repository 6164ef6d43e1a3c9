#include "benchrank/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "benchrank/version.hpp"

namespace benchrank {

namespace {

const char* direction_name(Direction d) {
    return d == Direction::Minimize ? "minimize" : "maximize";
}

} // namespace

AnalysisReport analyze(const BenchmarkDataset& dataset, const AnalysisConfig& config) {
    if (!(config.alpha > 0.0 && config.alpha < 1.0))
        throw Error(ErrorKind::Format, "alpha must lie strictly between 0 and 1");
    if (config.time_quantum && !(*config.time_quantum > 0.0))
        throw Error(ErrorKind::Format, "time quantum must be positive");
    ensure_valid(dataset);

    AnalysisReport report;
    report.version = BENCHRANK_VERSION;
    report.config = config;
    report.algorithm_names = dataset.algorithm_names;
    report.num_benchmarks = dataset.num_benchmarks();

    const std::size_t m = dataset.num_benchmarks();
    const std::size_t n = dataset.num_algorithms();
    report.missing_counts.resize(n);
    for (std::size_t j = 0; j < n; ++j) report.missing_counts[j] = dataset.missing_count(j);
    for (std::size_t i = 0; i < m; ++i) {
        bool any_present = false;
        for (std::size_t j = 0; j < n; ++j) any_present |= !dataset.is_missing(i, j);
        if (!any_present) report.fully_missing_benchmarks.push_back(dataset.benchmark_names[i]);
    }
    for (const auto& name : report.fully_missing_benchmarks)
        report.warnings.push_back("benchmark \"" + name +
                                  "\" has no feasible result for any algorithm");

    const RankMatrix matrix =
        config.time_quantum
            ? build_rank_matrix(with_quantized_times(dataset, *config.time_quantum))
            : build_rank_matrix(dataset);
    report.summary = summarize(matrix);

    // Shapiro-Wilk screening on each algorithm's rank column, as the pipeline's
    // normality gate. Failures are reported, never fatal.
    report.shapiro.resize(n);
    report.shapiro_reasons.resize(n);
    std::vector<double> column(m);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) column[i] = matrix.ranks[i][j];
        try {
            report.shapiro[j] = shapiro_wilk(column);
        } catch (const Error& e) {
            report.shapiro_reasons[j] = e.what();
        }
    }

    try {
        report.friedman = friedman_test(matrix, config.alpha, config.tie_correction);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Degenerate) throw;
        report.friedman_reason = e.what();
        report.degenerate = true;
    }

    if (report.friedman && report.friedman->reject_null)
        report.posthoc = nemenyi(report.summary.rank_sums, m, config.alpha);
    else if (report.degenerate)
        report.posthoc_reason = "Friedman test is degenerate";
    else
        report.posthoc_reason = "Friedman test did not reject the null hypothesis";

    report.scores = build_score_report(dataset, &report.warnings);
    return report;
}

// ---------------------------------------------------------------------------
// JSON rendering. Doubles carry 17 significant digits so every value parses
// back to the identical bit pattern.

namespace {

class JsonWriter {
  public:
    explicit JsonWriter(std::ostream& out) : out_(out) {}

    void begin_object() { separator(); out_ << '{'; stack_.push_back(true); }
    void end_object() { out_ << '}'; stack_.pop_back(); fresh_ = false; }
    void begin_array() { separator(); out_ << '['; stack_.push_back(true); }
    void end_array() { out_ << ']'; stack_.pop_back(); fresh_ = false; }

    void key(const char* k) {
        separator();
        write_string(k);
        out_ << ':';
        fresh_ = true;
    }

    void value(const std::string& s) { separator(); write_string(s); }
    void value(const char* s) { separator(); write_string(s); }
    void value(bool b) { separator(); out_ << (b ? "true" : "false"); }
    void value(std::size_t v) { separator(); out_ << v; }
    void value(int v) { separator(); out_ << v; }
    void value(double v) {
        separator();
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out_ << buf;
    }
    void null() { separator(); out_ << "null"; }

  private:
    // Emits "," between siblings; nothing right after a key, "{", or "[".
    void separator() {
        if (fresh_) {
            fresh_ = false;
            return;
        }
        if (!stack_.empty()) {
            if (stack_.back())
                stack_.back() = false;
            else
                out_ << ',';
        }
    }

    void write_string(const std::string& s) {
        out_ << '"';
        for (char c : s) {
            switch (c) {
                case '"': out_ << "\\\""; break;
                case '\\': out_ << "\\\\"; break;
                case '\n': out_ << "\\n"; break;
                case '\r': out_ << "\\r"; break;
                case '\t': out_ << "\\t"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                        out_ << buf;
                    } else {
                        out_ << c;
                    }
            }
        }
        out_ << '"';
    }

    std::ostream& out_;
    std::vector<bool> stack_;
    bool fresh_ = false;
};

} // namespace

namespace {

void json_config(JsonWriter& w, const AnalysisConfig& c) {
    w.begin_object();
    w.key("direction"); w.value(direction_name(c.direction));
    w.key("alpha"); w.value(c.alpha);
    w.key("tie_correction"); w.value(c.tie_correction);
    w.key("cutoff");
    if (c.cutoff) w.value(*c.cutoff); else w.null();
    w.key("time_quantum");
    if (c.time_quantum) w.value(*c.time_quantum); else w.null();
    const char* fmt = c.output_format == OutputFormat::Json
                          ? "json"
                          : (c.output_format == OutputFormat::Text ? "text" : "csv");
    w.key("format"); w.value(fmt);
    w.end_object();
}

void json_matrix(JsonWriter& w, const std::vector<std::vector<double>>& mat) {
    w.begin_array();
    for (const auto& row : mat) {
        w.begin_array();
        for (double v : row) w.value(v);
        w.end_array();
    }
    w.end_array();
}

} // namespace

static void render_json(std::ostream& out, const AnalysisReport& r) {
    JsonWriter w(out);
    w.begin_object();
    w.key("schema"); w.value(1);
    w.key("tool");
    w.begin_object();
    w.key("name"); w.value("benchrank");
    w.key("version"); w.value(r.version);
    w.end_object();
    w.key("config"); json_config(w, r.config);

    w.key("dataset");
    w.begin_object();
    w.key("benchmarks"); w.value(r.num_benchmarks);
    w.key("algorithms"); w.value(r.algorithm_names.size());
    w.key("algorithm_names");
    w.begin_array();
    for (const auto& name : r.algorithm_names) w.value(name);
    w.end_array();
    w.key("missing_counts");
    w.begin_array();
    for (std::size_t c : r.missing_counts) w.value(c);
    w.end_array();
    w.key("fully_missing_benchmarks");
    w.begin_array();
    for (const auto& name : r.fully_missing_benchmarks) w.value(name);
    w.end_array();
    w.end_object();

    w.key("ranks");
    w.begin_object();
    w.key("rank_sums");
    w.begin_array();
    for (double s : r.summary.rank_sums) w.value(s);
    w.end_array();
    w.key("mean_ranks");
    w.begin_array();
    for (double s : r.summary.mean_ranks) w.value(s);
    w.end_array();
    w.key("histogram");
    w.begin_array();
    for (std::size_t j = 0; j < r.summary.histograms.size(); ++j) {
        w.begin_object();
        w.key("algorithm"); w.value(r.algorithm_names[j]);
        w.key("counts");
        w.begin_array();
        for (const auto& [rank, count] : r.summary.histograms[j]) {
            w.begin_object();
            w.key("rank"); w.value(rank);
            w.key("count"); w.value(count);
            w.end_object();
        }
        w.end_array();
        w.end_object();
    }
    w.end_array();
    w.end_object();

    w.key("shapiro");
    w.begin_array();
    for (std::size_t j = 0; j < r.shapiro.size(); ++j) {
        w.begin_object();
        w.key("algorithm"); w.value(r.algorithm_names[j]);
        w.key("result");
        if (r.shapiro[j]) {
            w.begin_object();
            w.key("w_statistic"); w.value(r.shapiro[j]->w_statistic);
            w.key("p_value"); w.value(r.shapiro[j]->p_value);
            w.key("sample_size"); w.value(r.shapiro[j]->sample_size);
            w.end_object();
        } else {
            w.null();
        }
        w.key("reason"); w.value(r.shapiro_reasons[j]);
        w.end_object();
    }
    w.end_array();

    w.key("friedman");
    if (r.friedman) {
        w.begin_object();
        w.key("statistic"); w.value(r.friedman->statistic);
        w.key("degrees_of_freedom"); w.value(r.friedman->degrees_of_freedom);
        w.key("p_value"); w.value(r.friedman->p_value);
        w.key("tie_corrected"); w.value(r.friedman->tie_corrected);
        w.key("reject_null"); w.value(r.friedman->reject_null);
        w.end_object();
    } else {
        w.null();
    }
    w.key("friedman_reason"); w.value(r.friedman_reason);

    w.key("posthoc");
    if (r.posthoc) {
        w.begin_object();
        w.key("method"); w.value("nemenyi");
        w.key("alpha"); w.value(r.posthoc->alpha);
        w.key("statistics"); json_matrix(w, r.posthoc->statistics);
        w.key("p_values"); json_matrix(w, r.posthoc->p_values);
        w.key("significant");
        w.begin_array();
        for (const auto& row : r.posthoc->significant) {
            w.begin_array();
            for (bool b : row) w.value(b);
            w.end_array();
        }
        w.end_array();
        w.end_object();
    } else {
        w.null();
    }
    w.key("posthoc_reason"); w.value(r.posthoc_reason);

    w.key("scores");
    w.begin_array();
    for (std::size_t j = 0; j < r.scores.algorithm_names.size(); ++j) {
        w.begin_object();
        w.key("algorithm"); w.value(r.scores.algorithm_names[j]);
        w.key("solved"); w.value(r.scores.solved_counts[j]);
        w.key("par10");
        if (r.scores.par10[j]) w.value(*r.scores.par10[j]); else w.null();
        w.key("par10_reason"); w.value(r.scores.par10_reasons[j]);
        w.key("ert");
        if (r.scores.ert[j]) w.value(*r.scores.ert[j]); else w.null();
        w.key("ert_reason"); w.value(r.scores.ert_reasons[j]);
        w.end_object();
    }
    w.end_array();

    w.key("warnings");
    w.begin_array();
    for (const auto& warning : r.warnings) w.value(warning);
    w.end_array();

    w.end_object();
    out << '\n';
}

// ---------------------------------------------------------------------------
// Text rendering.

namespace {

struct Style {
    bool on;
    const char* bold() const { return on ? "\x1b[1m" : ""; }
    const char* green() const { return on ? "\x1b[32m" : ""; }
    const char* red() const { return on ? "\x1b[31m" : ""; }
    const char* yellow() const { return on ? "\x1b[33m" : ""; }
    const char* reset() const { return on ? "\x1b[0m" : ""; }
};

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

static void render_text(std::ostream& out, const AnalysisReport& r, bool color) {
    const Style st{color};
    const std::size_t n = r.algorithm_names.size();

    out << st.bold() << "benchrank " << r.version << st.reset() << "  (" << r.num_benchmarks
        << " benchmarks x " << n << " algorithms, direction "
        << direction_name(r.config.direction) << ", alpha " << fmt_g(r.config.alpha) << ")\n";
    for (const auto& warning : r.warnings)
        out << st.yellow() << "warning: " << warning << st.reset() << '\n';

    out << '\n' << st.bold() << "Ranks" << st.reset() << '\n';
    for (std::size_t j = 0; j < n; ++j) {
        out << "  " << r.algorithm_names[j] << ": sum " << format_number(r.summary.rank_sums[j])
            << ", mean " << fmt_g(r.summary.mean_ranks[j]) << ", missing "
            << r.missing_counts[j] << '/' << r.num_benchmarks << '\n';
    }

    out << '\n' << st.bold() << "Shapiro-Wilk (per rank column)" << st.reset() << '\n';
    for (std::size_t j = 0; j < n; ++j) {
        out << "  " << r.algorithm_names[j] << ": ";
        if (r.shapiro[j])
            out << "W " << fmt_g(r.shapiro[j]->w_statistic) << ", p "
                << fmt_g(r.shapiro[j]->p_value) << '\n';
        else
            out << "not computed (" << r.shapiro_reasons[j] << ")\n";
    }

    out << '\n' << st.bold() << "Friedman test" << st.reset() << '\n';
    if (r.friedman) {
        out << "  statistic " << fmt_g(r.friedman->statistic) << " (df "
            << r.friedman->degrees_of_freedom << ", "
            << (r.friedman->tie_corrected ? "tie-corrected" : "uncorrected") << "), p "
            << fmt_g(r.friedman->p_value) << " -> "
            << (r.friedman->reject_null ? st.green() : st.red())
            << (r.friedman->reject_null ? "reject null" : "no significant difference")
            << st.reset() << '\n';
    } else {
        out << "  " << st.red() << "not computed: " << r.friedman_reason << st.reset() << '\n';
    }

    out << '\n' << st.bold() << "Nemenyi post-hoc" << st.reset() << '\n';
    if (r.posthoc) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                out << "  " << r.algorithm_names[i] << " vs " << r.algorithm_names[j] << ": q "
                    << fmt_g(r.posthoc->statistics[i][j]) << ", p "
                    << fmt_g(r.posthoc->p_values[i][j]) << (r.posthoc->significant[i][j]
                                                                ? " (significant)"
                                                                : " (not significant)")
                    << '\n';
            }
        }
    } else {
        out << "  skipped: " << r.posthoc_reason << '\n';
    }

    out << '\n' << st.bold() << "Scores" << st.reset() << '\n';
    for (std::size_t j = 0; j < n; ++j) {
        out << "  " << r.scores.algorithm_names[j] << ": solved " << r.scores.solved_counts[j]
            << '/' << r.num_benchmarks << ", PAR10 ";
        if (r.scores.par10[j])
            out << fmt_g(*r.scores.par10[j]);
        else
            out << "n/a (" << r.scores.par10_reasons[j] << ")";
        out << ", ERT ";
        if (r.scores.ert[j])
            out << fmt_g(*r.scores.ert[j]);
        else
            out << "n/a (" << r.scores.ert_reasons[j] << ")";
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// CSV rendering: flat "section,key,value" rows.

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += "\"\"";
        else quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

static void render_csv(std::ostream& out, const AnalysisReport& r) {
    auto row = [&](const std::string& section, const std::string& key, const std::string& value) {
        out << csv_quote(section) << ',' << csv_quote(key) << ',' << csv_quote(value) << '\n';
    };
    const std::size_t n = r.algorithm_names.size();
    out << "section,key,value\n";
    row("tool", "name", "benchrank");
    row("tool", "version", r.version);
    row("config", "direction", direction_name(r.config.direction));
    row("config", "alpha", format_number(r.config.alpha));
    row("config", "tie_correction", r.config.tie_correction ? "true" : "false");
    row("config", "cutoff", r.config.cutoff ? format_number(*r.config.cutoff) : "");
    row("config", "time_quantum",
        r.config.time_quantum ? format_number(*r.config.time_quantum) : "");
    row("dataset", "benchmarks", std::to_string(r.num_benchmarks));
    row("dataset", "algorithms", std::to_string(n));
    for (std::size_t j = 0; j < n; ++j)
        row("dataset", "missing[" + r.algorithm_names[j] + "]",
            std::to_string(r.missing_counts[j]));
    for (std::size_t j = 0; j < n; ++j) {
        row("ranks", "sum[" + r.algorithm_names[j] + "]",
            format_number(r.summary.rank_sums[j]));
        row("ranks", "mean[" + r.algorithm_names[j] + "]",
            format_number(r.summary.mean_ranks[j]));
    }
    for (std::size_t j = 0; j < n; ++j) {
        const std::string key = "[" + r.algorithm_names[j] + "]";
        if (r.shapiro[j]) {
            row("shapiro", "w" + key, format_number(r.shapiro[j]->w_statistic));
            row("shapiro", "p" + key, format_number(r.shapiro[j]->p_value));
        } else {
            row("shapiro", "reason" + key, r.shapiro_reasons[j]);
        }
    }
    if (r.friedman) {
        row("friedman", "statistic", format_number(r.friedman->statistic));
        row("friedman", "df", std::to_string(r.friedman->degrees_of_freedom));
        row("friedman", "p_value", format_number(r.friedman->p_value));
        row("friedman", "tie_corrected", r.friedman->tie_corrected ? "true" : "false");
        row("friedman", "reject_null", r.friedman->reject_null ? "true" : "false");
    } else {
        row("friedman", "reason", r.friedman_reason);
    }
    if (r.posthoc) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const std::string key =
                    "[" + r.algorithm_names[i] + "][" + r.algorithm_names[j] + "]";
                row("posthoc", "q" + key, format_number(r.posthoc->statistics[i][j]));
                row("posthoc", "p" + key, format_number(r.posthoc->p_values[i][j]));
                row("posthoc", "significant" + key,
                    r.posthoc->significant[i][j] ? "true" : "false");
            }
        }
    } else {
        row("posthoc", "reason", r.posthoc_reason);
    }
    for (std::size_t j = 0; j < n; ++j) {
        const std::string key = "[" + r.scores.algorithm_names[j] + "]";
        row("scores", "solved" + key, std::to_string(r.scores.solved_counts[j]));
        row("scores", "par10" + key,
            r.scores.par10[j] ? format_number(*r.scores.par10[j]) : "");
        row("scores", "ert" + key, r.scores.ert[j] ? format_number(*r.scores.ert[j]) : "");
    }
    for (const auto& warning : r.warnings) row("warnings", "warning", warning);
}

void render_report(std::ostream& out, const AnalysisReport& report, OutputFormat format,
                   bool color) {
    switch (format) {
        case OutputFormat::Json: render_json(out, report); break;
        case OutputFormat::Text: render_text(out, report, color); break;
        case OutputFormat::Csv: render_csv(out, report); break;
    }
}

void render_scores(std::ostream& out, const ScoreReport& scores, OutputFormat format,
                   bool color) {
    const std::size_t n = scores.algorithm_names.size();
    switch (format) {
        case OutputFormat::Json: {
            JsonWriter w(out);
            w.begin_object();
            w.key("schema"); w.value(1);
            w.key("scores");
            w.begin_array();
            for (std::size_t j = 0; j < n; ++j) {
                w.begin_object();
                w.key("algorithm"); w.value(scores.algorithm_names[j]);
                w.key("solved"); w.value(scores.solved_counts[j]);
                w.key("par10");
                if (scores.par10[j]) w.value(*scores.par10[j]); else w.null();
                w.key("par10_reason"); w.value(scores.par10_reasons[j]);
                w.key("ert");
                if (scores.ert[j]) w.value(*scores.ert[j]); else w.null();
                w.key("ert_reason"); w.value(scores.ert_reasons[j]);
                w.end_object();
            }
            w.end_array();
            w.end_object();
            out << '\n';
            break;
        }
        case OutputFormat::Text: {
            const Style st{color};
            out << st.bold() << "Scores" << st.reset() << '\n';
            for (std::size_t j = 0; j < n; ++j) {
                out << "  " << scores.algorithm_names[j] << ": solved "
                    << scores.solved_counts[j] << ", PAR10 ";
                if (scores.par10[j])
                    out << fmt_g(*scores.par10[j]);
                else
                    out << "n/a (" << scores.par10_reasons[j] << ")";
                out << ", ERT ";
                if (scores.ert[j])
                    out << fmt_g(*scores.ert[j]);
                else
                    out << "n/a (" << scores.ert_reasons[j] << ")";
                out << '\n';
            }
            break;
        }
        case OutputFormat::Csv: {
            out << "algorithm,solved,par10,ert\n";
            for (std::size_t j = 0; j < n; ++j) {
                out << csv_quote(scores.algorithm_names[j]) << ',' << scores.solved_counts[j]
                    << ',' << (scores.par10[j] ? format_number(*scores.par10[j]) : "") << ','
                    << (scores.ert[j] ? format_number(*scores.ert[j]) : "") << '\n';
            }
            break;
        }
    }
}

} // namespace benchrank

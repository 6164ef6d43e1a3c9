#include "benchrank/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace benchrank {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

bool iequals(const std::string& a, const char* b) {
    std::size_t i = 0;
    for (; i < a.size() && b[i]; ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) != b[i]) return false;
    return i == a.size() && b[i] == '\0';
}

// Missing markers: empty cell, "NA", "nan", "inf" (case-insensitive).
bool is_missing_marker(const std::string& token) {
    return token.empty() || iequals(token, "na") || iequals(token, "nan") ||
           iequals(token, "inf");
}

struct CsvTable {
    std::vector<std::string> column_names;
    std::vector<std::string> row_names;
    CellMatrix cells;
};

CsvTable parse_table(std::istream& in, const char* what) {
    CsvTable table;
    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back(); // CRLF
        if (line.empty() && in.peek() == EOF) break;               // trailing newline
        auto fields = split_csv_line(line);
        if (!saw_header) {
            if (fields.empty() || fields[0] != "benchmark")
                throw Error(ErrorKind::Format,
                            std::string(what) + ": header must start with \"benchmark\"");
            if (fields.size() < 3)
                throw Error(ErrorKind::Format,
                            std::string(what) + ": need at least 2 algorithm columns");
            table.column_names.assign(fields.begin() + 1, fields.end());
            saw_header = true;
            continue;
        }
        if (fields.empty()) continue;
        if (fields.size() != table.column_names.size() + 1)
            throw Error(ErrorKind::Format,
                        std::string(what) + " line " + std::to_string(lineno) + " (\"" +
                            (fields.empty() ? "" : fields[0]) + "\"): expected " +
                            std::to_string(table.column_names.size() + 1) + " fields, got " +
                            std::to_string(fields.size()));
        if (fields[0].empty())
            throw Error(ErrorKind::Format, std::string(what) + " line " +
                                               std::to_string(lineno) + ": empty benchmark name");
        table.row_names.push_back(fields[0]);
        std::vector<Cell> row;
        row.reserve(table.column_names.size());
        for (std::size_t j = 1; j < fields.size(); ++j) {
            const std::string& tok = fields[j];
            if (is_missing_marker(tok)) {
                row.emplace_back(std::nullopt);
                continue;
            }
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            const auto coord = [&] {
                return " \"" + tok + "\" at (" + fields[0] + ", " +
                       table.column_names[j - 1] + ")";
            };
            if (ec == std::errc::result_out_of_range)
                throw Error(ErrorKind::Format,
                            std::string(what) + ": value out of range" + coord());
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw Error(ErrorKind::Format,
                            std::string(what) + ": non-numeric token" + coord());
            if (!std::isfinite(v))
                throw Error(ErrorKind::Format,
                            std::string(what) + ": non-finite value" + coord());
            row.emplace_back(v);
        }
        table.cells.push_back(std::move(row));
    }
    if (!saw_header)
        throw Error(ErrorKind::Format, std::string(what) + ": empty input, no header row");
    if (table.cells.empty())
        throw Error(ErrorKind::Format, std::string(what) + ": no data rows");
    return table;
}

void check_unique(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& name : names) {
        if (name.empty())
            throw Error(ErrorKind::Format, std::string("empty ") + what + " name");
        if (!seen.insert(name).second)
            throw Error(ErrorKind::Format, std::string("duplicate ") + what + " name \"" + name + "\"");
    }
}

} // namespace

std::size_t BenchmarkDataset::missing_count(std::size_t col) const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < results.size(); ++i)
        if (!results[i][col].has_value()) ++count;
    return count;
}

BenchmarkDataset parse_dataset(std::istream& results_source, std::istream& times_source,
                               Direction direction, std::optional<double> cutoff) {
    CsvTable res = parse_table(results_source, "results");
    CsvTable tim = parse_table(times_source, "times");

    if (res.column_names != tim.column_names)
        throw Error(ErrorKind::Format,
                    "results and times disagree on algorithm names or their order");
    if (res.row_names != tim.row_names) {
        if (res.row_names.size() != tim.row_names.size())
            throw Error(ErrorKind::Format,
                        "dimension mismatch: results has " + std::to_string(res.row_names.size()) +
                            " rows, times has " + std::to_string(tim.row_names.size()));
        throw Error(ErrorKind::Format,
                    "results and times disagree on benchmark names or their order");
    }
    check_unique(res.column_names, "algorithm");
    check_unique(res.row_names, "benchmark");

    BenchmarkDataset dataset;
    dataset.algorithm_names = std::move(res.column_names);
    dataset.benchmark_names = std::move(res.row_names);
    dataset.results = std::move(res.cells);
    dataset.times = std::move(tim.cells);
    dataset.direction = direction;
    dataset.cutoff = cutoff;

    ensure_valid(dataset);
    return dataset;
}

ValidationReport validate(const BenchmarkDataset& d) {
    ValidationReport report;
    auto error = [&](std::string msg) { report.errors.push_back({std::move(msg)}); };

    const std::size_t m = d.benchmark_names.size();
    const std::size_t n = d.algorithm_names.size();
    if (m < 1) error("dataset has no benchmarks (m >= 1 required)");
    if (n < 2) error("dataset has fewer than 2 algorithms (n >= 2 required)");
    if (d.results.size() != m || d.times.size() != m) {
        error("results/times row count does not match benchmark names");
        return report;
    }
    if (d.cutoff && !(*d.cutoff > 0.0 && std::isfinite(*d.cutoff)))
        error("cutoff must be a positive finite number of seconds");

    for (std::size_t i = 0; i < m; ++i) {
        if (d.results[i].size() != n || d.times[i].size() != n) {
            error("row \"" + d.benchmark_names[i] + "\": results/times width does not match n");
            continue;
        }
        std::size_t present = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const auto coord = [&] {
                return "(" + d.benchmark_names[i] + ", " + d.algorithm_names[j] + ")";
            };
            const Cell& r = d.results[i][j];
            const Cell& t = d.times[i][j];
            if (r.has_value()) {
                ++present;
                if (!std::isfinite(*r)) error("non-finite result at " + coord());
                if (!t.has_value())
                    error("present result with missing time at " + coord());
                else if (!std::isfinite(*t))
                    error("present result with non-finite time at " + coord());
            }
            if (t.has_value() && std::isfinite(*t) && *t < 0.0)
                error("negative time at " + coord());
        }
        if (present == 0)
            report.warnings.push_back(
                {"benchmark \"" + d.benchmark_names[i] +
                 "\" has no feasible result for any algorithm (rule 3 ranks the whole row tied)"});
    }
    return report;
}

void ensure_valid(const BenchmarkDataset& dataset) {
    ValidationReport report = validate(dataset);
    if (report.ok()) return;
    std::string message = "invalid dataset:";
    for (const auto& issue : report.errors) message += "\n  " + issue.message;
    throw Error(ErrorKind::Format, message);
}

std::string format_number(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

BenchmarkDataset with_quantized_times(const BenchmarkDataset& dataset, double quantum) {
    if (!(quantum > 0.0 && std::isfinite(quantum)))
        throw Error(ErrorKind::Format, "time quantum must be positive and finite");
    BenchmarkDataset copy = dataset;
    for (auto& row : copy.times)
        for (auto& cell : row)
            if (cell.has_value()) cell = std::round(*cell / quantum) * quantum;
    return copy;
}

void serialize_matrix(std::ostream& out, const std::vector<std::string>& algorithm_names,
                      const std::vector<std::string>& benchmark_names, const CellMatrix& cells) {
    out << "benchmark";
    for (const auto& name : algorithm_names) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < benchmark_names.size(); ++i) {
        out << benchmark_names[i];
        for (const Cell& cell : cells[i]) {
            out << ',';
            if (cell.has_value())
                out << format_number(*cell);
            else
                out << "NA";
        }
        out << '\n';
    }
}

} // namespace benchrank

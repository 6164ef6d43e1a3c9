#include "benchrank/histogram.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "benchrank/dataset.hpp"

namespace benchrank {

HistogramTable histogram_table(const RankSummary& summary,
                               const std::vector<std::string>& algorithm_names) {
    HistogramTable table;
    table.algorithm_names = algorithm_names;
    std::set<double> values;
    for (const auto& hist : summary.histograms)
        for (const auto& [rank, count] : hist) values.insert(rank);
    table.rank_values.assign(values.begin(), values.end());

    table.counts.assign(algorithm_names.size(),
                        std::vector<std::size_t>(table.rank_values.size(), 0));
    for (std::size_t j = 0; j < summary.histograms.size(); ++j) {
        for (const auto& [rank, count] : summary.histograms[j]) {
            const auto it =
                std::lower_bound(table.rank_values.begin(), table.rank_values.end(), rank);
            table.counts[j][static_cast<std::size_t>(it - table.rank_values.begin())] = count;
        }
    }
    return table;
}

void write_histogram_csv(std::ostream& out, const HistogramTable& table) {
    out << "rank";
    for (const auto& name : table.algorithm_names) out << ',' << name;
    out << '\n';
    for (std::size_t b = 0; b < table.rank_values.size(); ++b) {
        out << format_number(table.rank_values[b]);
        for (std::size_t j = 0; j < table.algorithm_names.size(); ++j)
            out << ',' << table.counts[j][b];
        out << '\n';
    }
}

namespace {

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1",
                          "#76b7b2", "#edc948", "#9c755f", "#bab0ac", "#ff9da7"};

std::string fmt_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

void write_histogram_svg(std::ostream& out, const HistogramTable& table) {
    const std::size_t n_algos = table.algorithm_names.size();
    const std::size_t n_buckets = table.rank_values.size();

    std::size_t max_count = 1;
    for (const auto& row : table.counts)
        for (std::size_t c : row) max_count = std::max(max_count, c);

    const double margin_left = 56.0, margin_right = 24.0, margin_top = 48.0,
                 margin_bottom = 56.0;
    const double bar_width = 22.0, bar_gap = 4.0, group_gap = 26.0;
    const double group_width = static_cast<double>(n_algos) * (bar_width + bar_gap) - bar_gap;
    const double plot_width =
        static_cast<double>(n_buckets) * (group_width + group_gap) + group_gap;
    const double plot_height = 260.0;
    const double width = margin_left + plot_width + margin_right;
    const double height = margin_top + plot_height + margin_bottom;
    const double x0 = margin_left, y0 = margin_top + plot_height;

    // Integer y ticks at a 1/2/5 step keeping at most ~8 labels.
    std::size_t tick_step = 1;
    while (max_count / tick_step > 8)
        tick_step = (tick_step % 10 == 2) ? tick_step / 2 * 5 : tick_step * 2;

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt_coord(width)
        << "\" height=\"" << fmt_coord(height) << "\" viewBox=\"0 0 " << fmt_coord(width) << ' '
        << fmt_coord(height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    out << "<text x=\"" << fmt_coord(width / 2.0)
        << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
        << "Ranks attributed per algorithm</text>\n";

    // Axes.
    out << "<line x1=\"" << fmt_coord(x0) << "\" y1=\"" << fmt_coord(margin_top) << "\" x2=\""
        << fmt_coord(x0) << "\" y2=\"" << fmt_coord(y0) << "\" stroke=\"#333333\"/>\n";
    out << "<line x1=\"" << fmt_coord(x0) << "\" y1=\"" << fmt_coord(y0) << "\" x2=\""
        << fmt_coord(x0 + plot_width) << "\" y2=\"" << fmt_coord(y0)
        << "\" stroke=\"#333333\"/>\n";
    for (std::size_t tick = 0; tick <= max_count; tick += tick_step) {
        const double y = y0 - plot_height * static_cast<double>(tick) /
                                  static_cast<double>(max_count);
        out << "<line x1=\"" << fmt_coord(x0 - 4.0) << "\" y1=\"" << fmt_coord(y) << "\" x2=\""
            << fmt_coord(x0) << "\" y2=\"" << fmt_coord(y) << "\" stroke=\"#333333\"/>\n";
        out << "<text x=\"" << fmt_coord(x0 - 8.0) << "\" y=\"" << fmt_coord(y + 4.0)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << tick
            << "</text>\n";
    }

    // Bars.
    for (std::size_t b = 0; b < n_buckets; ++b) {
        const double gx = x0 + group_gap +
                          static_cast<double>(b) * (group_width + group_gap);
        for (std::size_t j = 0; j < n_algos; ++j) {
            const std::size_t count = table.counts[j][b];
            if (count == 0) continue;
            const double h =
                plot_height * static_cast<double>(count) / static_cast<double>(max_count);
            const double bx = gx + static_cast<double>(j) * (bar_width + bar_gap);
            out << "<rect x=\"" << fmt_coord(bx) << "\" y=\"" << fmt_coord(y0 - h)
                << "\" width=\"" << fmt_coord(bar_width) << "\" height=\"" << fmt_coord(h)
                << "\" fill=\"" << kPalette[j % 10] << "\"/>\n";
            out << "<text x=\"" << fmt_coord(bx + bar_width / 2.0) << "\" y=\""
                << fmt_coord(y0 - h - 4.0)
                << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">"
                << count << "</text>\n";
        }
        out << "<text x=\"" << fmt_coord(gx + group_width / 2.0) << "\" y=\""
            << fmt_coord(y0 + 18.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << format_number(table.rank_values[b]) << "</text>\n";
    }
    out << "<text x=\"" << fmt_coord(x0 + plot_width / 2.0) << "\" y=\""
        << fmt_coord(height - 14.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">rank</text>\n";

    // Legend row between the title and the plot area.
    double lx = x0;
    const double ly = margin_top - 16.0;
    for (std::size_t j = 0; j < n_algos; ++j) {
        out << "<rect x=\"" << fmt_coord(lx) << "\" y=\"" << fmt_coord(ly)
            << "\" width=\"12\" height=\"12\" fill=\"" << kPalette[j % 10] << "\"/>\n";
        out << "<text x=\"" << fmt_coord(lx + 16.0) << "\" y=\"" << fmt_coord(ly + 10.0)
            << "\" font-family=\"sans-serif\" font-size=\"12\">"
            << xml_escape(table.algorithm_names[j]) << "</text>\n";
        lx += 28.0 + 8.0 * static_cast<double>(table.algorithm_names[j].size());
    }
    out << "</svg>\n";
}

} // namespace benchrank

#include "cedrf/table.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace cedrf {
namespace {

void check_table(const CurveTable& table) {
    if (table.columns.empty())
        throw std::domain_error("table must have a header row");
    for (const auto& row : table.rows)
        if (row.size() != table.columns.size())
            throw std::domain_error("every row must match the header width");
}

std::string fixed2(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    if (ec != std::errc{})
        throw std::domain_error("number formatting failed");
    return std::string(buf, end);
}

} // namespace

std::string format_number(double v) {
    char buf[64];
    auto [end, ec] =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    if (ec != std::errc{})
        throw std::domain_error("number formatting failed");
    return std::string(buf, end);
}

std::string to_csv(const CurveTable& table) {
    check_table(table);
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c)
            out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out += ',';
            out += format_number(row[c]);
        }
        out += '\n';
    }
    return out;
}

CurveTable parse_csv(const std::string& text) {
    CurveTable table;
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos)
            eol = text.size();
        std::string_view line(text.data() + pos, eol - pos);
        pos = eol + 1;
        if (line.empty())
            continue;
        std::vector<std::string_view> cells;
        std::size_t cell_start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                cells.push_back(line.substr(cell_start, i - cell_start));
                cell_start = i + 1;
            }
        }
        if (header) {
            for (auto c : cells)
                table.columns.emplace_back(c);
            header = false;
            continue;
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (auto c : cells) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
            if (ec != std::errc{} || ptr != c.data() + c.size())
                throw std::domain_error("csv cell is not a number");
            row.push_back(v);
        }
        table.rows.push_back(std::move(row));
    }
    check_table(table);
    return table;
}

std::string emit_svg(const CurveTable& table, const SvgOptions& options) {
    check_table(table);
    if (table.rows.size() < 2 || table.columns.size() < 2)
        throw std::domain_error("svg plot needs at least 2 rows and 2 columns");

    const double w = options.width;
    const double h = options.height;
    const double ml = 70, mr = 20, mt = 30, mb = 50;

    double xmin = table.rows.front()[0], xmax = xmin;
    double ymin = table.rows.front()[1], ymax = ymin;
    for (const auto& row : table.rows) {
        xmin = std::min(xmin, row[0]);
        xmax = std::max(xmax, row[0]);
        for (std::size_t c = 1; c < row.size(); ++c) {
            ymin = std::min(ymin, row[c]);
            ymax = std::max(ymax, row[c]);
        }
    }
    if (xmax == xmin) {
        xmin -= 1.0;
        xmax += 1.0;
    }
    if (ymax == ymin) {
        ymin -= 1.0;
        ymax += 1.0;
    }
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
    auto py = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };

    static constexpr std::array<const char*, 8> palette = {
        "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
        "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " +
           std::to_string(options.width) + " " + std::to_string(options.height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!options.title.empty())
        svg += "<text x=\"" + fixed2(w / 2) +
               "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"14\">" +
               options.title + "</text>\n";

    // axes
    svg += "<line x1=\"" + fixed2(ml) + "\" y1=\"" + fixed2(h - mb) + "\" x2=\"" +
           fixed2(w - mr) + "\" y2=\"" + fixed2(h - mb) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + fixed2(ml) + "\" y1=\"" + fixed2(mt) + "\" x2=\"" + fixed2(ml) +
           "\" y2=\"" + fixed2(h - mb) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    // axis extent labels
    svg += "<text x=\"" + fixed2(ml) + "\" y=\"" + fixed2(h - mb + 18) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + format_number(xmin) +
           "</text>\n";
    svg += "<text x=\"" + fixed2(w - mr) + "\" y=\"" + fixed2(h - mb + 18) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           format_number(xmax) + "</text>\n";
    svg += "<text x=\"" + fixed2(ml - 6) + "\" y=\"" + fixed2(h - mb) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           format_number(ymin) + "</text>\n";
    svg += "<text x=\"" + fixed2(ml - 6) + "\" y=\"" + fixed2(mt + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           format_number(ymax) + "</text>\n";
    svg += "<text x=\"" + fixed2((ml + w - mr) / 2) + "\" y=\"" + fixed2(h - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
           table.columns[0] + "</text>\n";

    for (std::size_t c = 1; c < table.columns.size(); ++c) {
        const char* color = palette[(c - 1) % palette.size()];
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            if (r)
                svg += ' ';
            svg += fixed2(px(table.rows[r][0]));
            svg += ',';
            svg += fixed2(py(table.rows[r][c]));
        }
        svg += "\"/>\n";
        // legend entry
        const double ly = mt + 16.0 * static_cast<double>(c - 1);
        svg += "<line x1=\"" + fixed2(w - mr - 150) + "\" y1=\"" + fixed2(ly) + "\" x2=\"" +
               fixed2(w - mr - 130) + "\" y2=\"" + fixed2(ly) + "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fixed2(w - mr - 124) + "\" y=\"" + fixed2(ly + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + table.columns[c] +
               "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace cedrf

#pragma once

// Curve tables and their serializations (CSV and minimal SVG line plots).
// All formatting is locale-independent and byte-deterministic.

#include <string>
#include <vector>

namespace cedrf {

struct CurveTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows; // each row matches columns.size()
};

/// Format a double with 12 significant digits (shortest form, '.' decimal).
std::string format_number(double v);

/// Comma-separated values with a header row and LF line endings.
std::string to_csv(const CurveTable& table);

/// Strict inverse of to_csv for numeric tables.
CurveTable parse_csv(const std::string& text);

struct SvgOptions {
    int width = 800;
    int height = 600;
    std::string title;
};

/// Self-contained SVG 1.1 line plot: first column is the abscissa, every
/// other column becomes a polyline; legend entries come from the header.
/// Requires at least 2 rows and 2 columns.
std::string emit_svg(const CurveTable& table, const SvgOptions& options = {});

} // namespace cedrf

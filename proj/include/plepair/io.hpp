#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace plepair {

/// Shortest representation with 12 significant digits ("%.12g").
std::string format_double(double v);

/// Minimal single-polyline SVG plot with labeled axes.
void write_line_svg(std::ostream& out, const std::vector<double>& x,
                    const std::vector<double>& y, const std::string& x_label,
                    const std::string& y_label);

}  // namespace plepair

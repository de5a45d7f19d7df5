#include "plepair/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace plepair {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

std::string format_tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace

void write_line_svg(std::ostream& out, const std::vector<double>& x,
                    const std::vector<double>& y, const std::string& x_label,
                    const std::string& y_label) {
  const int width = 800, height = 500;
  const int ml = 70, mr = 20, mt = 20, mb = 50;  // margins
  const double pw = width - ml - mr, ph = height - mt - mb;

  double x0 = x.empty() ? 0.0 : *std::min_element(x.begin(), x.end());
  double x1 = x.empty() ? 1.0 : *std::max_element(x.begin(), x.end());
  double y0 = y.empty() ? 0.0 : *std::min_element(y.begin(), y.end());
  double y1 = y.empty() ? 1.0 : *std::max_element(y.begin(), y.end());
  if (x1 <= x0) x1 = x0 + 1.0;
  if (y1 <= y0) y1 = y0 + 1.0;

  const auto px = [&](double v) { return ml + pw * (v - x0) / (x1 - x0); };
  const auto py = [&](double v) { return mt + ph * (1.0 - (v - y0) / (y1 - y0)); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
      << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
      << mt + ph << "\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0;
    const double yv = y0 + (y1 - y0) * i / 4.0;
    out << "<text x=\"" << px(xv) << "\" y=\"" << mt + ph + 18
        << "\" font-size=\"12\" text-anchor=\"middle\">" << format_tick(xv)
        << "</text>\n";
    out << "<text x=\"" << ml - 6 << "\" y=\"" << py(yv) + 4
        << "\" font-size=\"12\" text-anchor=\"end\">" << format_tick(yv)
        << "</text>\n";
  }
  out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
      << "\" font-size=\"14\" text-anchor=\"middle\">" << x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << mt + ph / 2
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << mt + ph / 2 << ")\">" << y_label << "</text>\n";

  out << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (i) out << ' ';
    out << format_tick(px(x[i])) << ',' << format_tick(py(y[i]));
  }
  out << "\"/>\n</svg>\n";
}

}  // namespace plepair

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace leakstat {

// Minimal self-contained SVG scatter/line plots; presentation only, never
// feeds back into computation.
struct SvgSeries {
  std::vector<std::pair<double, double>> points;
  bool as_line = false;
  std::string color = "#1f77b4";
  std::string label;
};

struct SvgPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<SvgSeries> series;
};

std::string render_svg(const SvgPlot& plot);
void write_svg(const SvgPlot& plot, const std::string& path);

}  // namespace leakstat

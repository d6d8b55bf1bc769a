#include "leakstat/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "leakstat/errors.hpp"

namespace leakstat {
namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 55.0;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string escape_text(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const SvgPlot& plot) {
  double min_x = std::numeric_limits<double>::infinity();
  double max_x = -min_x, min_y = min_x, max_y = -min_x;
  for (const SvgSeries& s : plot.series)
    for (const auto& [x, y] : s.points) {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  if (!(min_x <= max_x)) {  // no points at all
    min_x = 0.0;
    max_x = 1.0;
    min_y = 0.0;
    max_y = 1.0;
  }
  if (max_x == min_x) {
    min_x -= 0.5;
    max_x += 0.5;
  }
  if (max_y == min_y) {
    min_y -= 0.5;
    max_y += 0.5;
  }
  const double pad_x = 0.04 * (max_x - min_x);
  const double pad_y = 0.06 * (max_y - min_y);
  min_x -= pad_x;
  max_x += pad_x;
  min_y -= pad_y;
  max_y += pad_y;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto sx = [&](double x) {
    return kMarginLeft + (x - min_x) / (max_x - min_x) * plot_w;
  };
  auto sy = [&](double y) {
    return kHeight - kMarginBottom - (y - min_y) / (max_y - min_y) * plot_h;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) +
         "\" height=\"" + fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) +
         " " + fmt(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"24\" font-family=\"sans-serif\""
         " font-size=\"15\" text-anchor=\"middle\">" +
         escape_text(plot.title) + "</text>\n";

  // Axes with 5 ticks each.
  svg += "<g stroke=\"#333\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" +
         fmt(kHeight - kMarginBottom) + "\" x2=\"" + fmt(kWidth - kMarginRight) +
         "\" y2=\"" + fmt(kHeight - kMarginBottom) + "\"/>\n";
  svg += "<line x1=\"" + fmt(kMarginLeft) + "\" y1=\"" + fmt(kMarginTop) +
         "\" x2=\"" + fmt(kMarginLeft) + "\" y2=\"" +
         fmt(kHeight - kMarginBottom) + "\"/>\n";
  svg += "</g>\n";

  svg += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  for (int t = 0; t <= 4; ++t) {
    const double vx = min_x + (max_x - min_x) * t / 4.0;
    const double vy = min_y + (max_y - min_y) * t / 4.0;
    svg += "<line x1=\"" + fmt(sx(vx)) + "\" y1=\"" +
           fmt(kHeight - kMarginBottom) + "\" x2=\"" + fmt(sx(vx)) + "\" y2=\"" +
           fmt(kHeight - kMarginBottom + 5) + "\" stroke=\"#333\"/>\n";
    svg += "<text x=\"" + fmt(sx(vx)) + "\" y=\"" +
           fmt(kHeight - kMarginBottom + 18) + "\" text-anchor=\"middle\">" +
           fmt(vx) + "</text>\n";
    svg += "<line x1=\"" + fmt(kMarginLeft - 5) + "\" y1=\"" + fmt(sy(vy)) +
           "\" x2=\"" + fmt(kMarginLeft) + "\" y2=\"" + fmt(sy(vy)) +
           "\" stroke=\"#333\"/>\n";
    svg += "<text x=\"" + fmt(kMarginLeft - 8) + "\" y=\"" + fmt(sy(vy) + 4) +
           "\" text-anchor=\"end\">" + fmt(vy) + "</text>\n";
  }
  svg += "<text x=\"" + fmt(kMarginLeft + plot_w / 2) + "\" y=\"" +
         fmt(kHeight - 12) + "\" text-anchor=\"middle\" font-size=\"13\">" +
         escape_text(plot.x_label) + "</text>\n";
  svg += "<text x=\"16\" y=\"" + fmt(kMarginTop + plot_h / 2) +
         "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 " +
         fmt(kMarginTop + plot_h / 2) + ")\">" + escape_text(plot.y_label) +
         "</text>\n";
  svg += "</g>\n";

  double legend_y = kMarginTop + 6.0;
  for (const SvgSeries& s : plot.series) {
    if (s.as_line) {
      std::string pts;
      for (const auto& [x, y] : s.points) {
        if (!pts.empty()) pts.push_back(' ');
        pts += fmt(sx(x)) + "," + fmt(sy(y));
      }
      svg += "<polyline fill=\"none\" stroke=\"" + s.color +
             "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
    } else {
      for (const auto& [x, y] : s.points)
        svg += "<circle cx=\"" + fmt(sx(x)) + "\" cy=\"" + fmt(sy(y)) +
               "\" r=\"2.5\" fill=\"" + s.color + "\" fill-opacity=\"0.6\"/>\n";
    }
    if (!s.label.empty()) {
      svg += "<rect x=\"" + fmt(kWidth - kMarginRight - 130) + "\" y=\"" +
             fmt(legend_y - 8) + "\" width=\"10\" height=\"10\" fill=\"" +
             s.color + "\"/>\n";
      svg += "<text x=\"" + fmt(kWidth - kMarginRight - 115) + "\" y=\"" +
             fmt(legend_y + 1) +
             "\" font-family=\"sans-serif\" font-size=\"11\">" +
             escape_text(s.label) + "</text>\n";
      legend_y += 16.0;
    }
  }
  svg += "</svg>\n";
  return svg;
}

void write_svg(const SvgPlot& plot, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write SVG file: " + path);
  out << render_svg(plot);
}

}  // namespace leakstat

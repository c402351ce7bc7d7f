#pragma once

#include <algorithm>
#include <cstdio>
#include <span>
#include <string>

#include "zagreb/format.hpp"
#include "zagreb/qspr.hpp"

namespace zagreb {

// Static scatter-plus-regression-line SVG, one <circle> per data point
// and exactly one <line class="fit">. Output is deterministic for equal
// inputs (fixed canvas, fixed-precision coordinates).

namespace detail {

inline std::string svg_coord(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

inline std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace detail

inline std::string svg_scatter_plot(std::span<const DataPoint> points,
                                    const RegressionModel& model,
                                    const std::string& title,
                                    const std::string& x_label,
                                    const std::string& y_label) {
  constexpr double kWidth = 640.0, kHeight = 480.0;
  constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 50.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double x_min = points.empty() ? 0.0 : points[0].x, x_max = x_min;
  double y_min = points.empty() ? 0.0 : points[0].y, y_max = y_min;
  for (const DataPoint& p : points) {
    x_min = std::min(x_min, p.x);
    x_max = std::max(x_max, p.x);
    y_min = std::min(y_min, p.y);
    y_max = std::max(y_max, p.y);
  }
  // the fitted line must stay on canvas at both ends
  if (!points.empty()) {
    const double fit_left = model.slope * x_min + model.intercept;
    const double fit_right = model.slope * x_max + model.intercept;
    y_min = std::min({y_min, fit_left, fit_right});
    y_max = std::max({y_max, fit_left, fit_right});
  }
  if (x_max == x_min) {
    x_min -= 1.0;
    x_max += 1.0;
  }
  if (y_max == y_min) {
    y_min -= 1.0;
    y_max += 1.0;
  }
  const double x_pad = 0.05 * (x_max - x_min);
  const double y_pad = 0.05 * (y_max - y_min);
  x_min -= x_pad;
  x_max += x_pad;
  y_min -= y_pad;
  y_max += y_pad;

  const auto px = [&](double x) {
    return kLeft + (x - x_min) / (x_max - x_min) * plot_w;
  };
  const auto py = [&](double y) {
    return kTop + (y_max - y) / (y_max - y_min) * plot_h;
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
         "height=\"480\" viewBox=\"0 0 640 480\">\n";
  svg += "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" "
         "fill=\"white\"/>\n";
  svg += "  <text x=\"320\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" +
         detail::xml_escape(title) + "</text>\n";

  // axes
  svg += "  <line class=\"axis\" x1=\"" + detail::svg_coord(kLeft) +
         "\" y1=\"" + detail::svg_coord(kTop) + "\" x2=\"" +
         detail::svg_coord(kLeft) + "\" y2=\"" +
         detail::svg_coord(kTop + plot_h) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "  <line class=\"axis\" x1=\"" + detail::svg_coord(kLeft) +
         "\" y1=\"" + detail::svg_coord(kTop + plot_h) + "\" x2=\"" +
         detail::svg_coord(kLeft + plot_w) + "\" y2=\"" +
         detail::svg_coord(kTop + plot_h) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  // axis extents as tick labels
  svg += "  <text x=\"" + detail::svg_coord(kLeft) + "\" y=\"" +
         detail::svg_coord(kHeight - 28.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"11\">" + format_double(x_min) + "</text>\n";
  svg += "  <text x=\"" + detail::svg_coord(kLeft + plot_w) + "\" y=\"" +
         detail::svg_coord(kHeight - 28.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"11\">" + format_double(x_max) + "</text>\n";
  svg += "  <text x=\"" + detail::svg_coord(kLeft - 6.0) + "\" y=\"" +
         detail::svg_coord(kTop + plot_h) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" "
         "font-size=\"11\">" + format_double(y_min) + "</text>\n";
  svg += "  <text x=\"" + detail::svg_coord(kLeft - 6.0) + "\" y=\"" +
         detail::svg_coord(kTop + 4.0) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" "
         "font-size=\"11\">" + format_double(y_max) + "</text>\n";

  svg += "  <text x=\"" + detail::svg_coord(kLeft + plot_w / 2.0) +
         "\" y=\"" + detail::svg_coord(kHeight - 10.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">" + detail::xml_escape(x_label) + "</text>\n";
  svg += "  <text x=\"16\" y=\"" + detail::svg_coord(kTop + plot_h / 2.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 16 " +
         detail::svg_coord(kTop + plot_h / 2.0) + ")\">" +
         detail::xml_escape(y_label) + "</text>\n";

  // regression line across the full x range
  svg += "  <line class=\"fit\" x1=\"" + detail::svg_coord(px(x_min)) +
         "\" y1=\"" +
         detail::svg_coord(py(model.slope * x_min + model.intercept)) +
         "\" x2=\"" + detail::svg_coord(px(x_max)) + "\" y2=\"" +
         detail::svg_coord(py(model.slope * x_max + model.intercept)) +
         "\" stroke=\"#c03030\" stroke-width=\"1.5\"/>\n";

  for (const DataPoint& p : points) {
    svg += "  <circle cx=\"" + detail::svg_coord(px(p.x)) + "\" cy=\"" +
           detail::svg_coord(py(p.y)) +
           "\" r=\"3.5\" fill=\"#2060c0\" fill-opacity=\"0.85\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace zagreb

/**
 * @file plot.hpp
 * @brief Hand-written SVG of guarantee curves and empirical factors over γ.
 *
 * Only <line>, <circle> and <text> elements are emitted. Coordinates are
 * printed with three decimals, so output is byte-identical for equal input.
 */

#ifndef CONEAPPROX_PLOT_HPP
#define CONEAPPROX_PLOT_HPP

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>

#include "common.hpp"
#include "sweep.hpp"

namespace coneapprox {

/// Maps (γ, factor) data coordinates to SVG pixels.
struct PlotFrame {
  double width = 640.0;
  double height = 420.0;
  double left = 70.0;
  double right = 20.0;
  double top = 30.0;
  double bottom = 60.0;
  double x_min = kHalfPi;
  double x_max = kPi;
  double y_min = 0.9;
  double y_max = 2.1;

  double px(double gamma) const {
    return left + (gamma - x_min) / (x_max - x_min) * (width - left - right);
  }
  double py(double factor) const {
    return height - bottom - (factor - y_min) / (y_max - y_min) * (height - top - bottom);
  }
};

/// Default frame widened so every point of `data` is visible.
inline PlotFrame frame_for(const PlotData& data) {
  PlotFrame f;
  for (const auto& c : data.curve) {
    f.x_min = std::min(f.x_min, c.gamma);
    f.x_max = std::max(f.x_max, c.gamma);
    f.y_min = std::min({f.y_min, c.factor, c.rule_of_thumb});
    f.y_max = std::max({f.y_max, c.factor, c.rule_of_thumb});
  }
  for (const auto& e : data.empirical) {
    f.x_min = std::min(f.x_min, e.gamma);
    f.x_max = std::max(f.x_max, e.gamma);
    f.y_min = std::min(f.y_min, e.alpha);
    f.y_max = std::max(f.y_max, e.alpha);
  }
  return f;
}

namespace detail {

inline std::string fmt3(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

inline void svg_line(std::ostream& out, double x1, double y1, double x2, double y2,
                     const std::string& extra) {
  out << "<line x1=\"" << fmt3(x1) << "\" y1=\"" << fmt3(y1) << "\" x2=\"" << fmt3(x2)
      << "\" y2=\"" << fmt3(y2) << "\" " << extra << "/>\n";
}

inline void svg_text(std::ostream& out, double x, double y, const std::string& anchor,
                     const std::string& text) {
  out << "<text x=\"" << fmt3(x) << "\" y=\"" << fmt3(y) << "\" text-anchor=\"" << anchor
      << "\" font-family=\"sans-serif\" font-size=\"12\">" << text << "</text>\n";
}

}  // namespace detail

inline void write_svg(const PlotData& data, std::ostream& out) {
  using detail::fmt3;
  const PlotFrame f = frame_for(data);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt3(f.width) << "\" height=\""
      << fmt3(f.height) << "\" viewBox=\"0 0 " << fmt3(f.width) << " " << fmt3(f.height)
      << "\">\n";
  const double x0 = f.left;
  const double x1 = f.width - f.right;
  const double y0 = f.height - f.bottom;
  const double y1 = f.top;

  out << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  detail::svg_line(out, x0, y0, x1, y0, "");
  detail::svg_line(out, x0, y0, x0, y1, "");
  const std::pair<double, const char*> xticks[] = {
      {kHalfPi, "π/2"}, {5 * kPi / 8, "5π/8"}, {3 * kPi / 4, "3π/4"},
      {7 * kPi / 8, "7π/8"}, {kPi, "π"}};
  for (const auto& [g, label] : xticks) {
    if (g < f.x_min || g > f.x_max) continue;
    detail::svg_line(out, f.px(g), y0, f.px(g), y0 + 5, "");
  }
  for (double v = 1.0; v <= f.y_max + 1e-9; v += 0.25) {
    if (v < f.y_min) continue;
    detail::svg_line(out, x0 - 5, f.py(v), x0, f.py(v), "");
  }
  out << "</g>\n<g id=\"labels\">\n";
  for (const auto& [g, label] : xticks) {
    if (g < f.x_min || g > f.x_max) continue;
    detail::svg_text(out, f.px(g), y0 + 20, "middle", label);
  }
  for (double v = 1.0; v <= f.y_max + 1e-9; v += 0.25) {
    if (v < f.y_min) continue;
    detail::svg_text(out, x0 - 8, f.py(v) + 4, "end", fmt3(v).substr(0, 4));
  }
  detail::svg_text(out, (x0 + x1) / 2, f.height - 15, "middle", "inner angle γ");
  detail::svg_text(out, 15, (y0 + y1) / 2, "middle", "factor");
  out << "</g>\n";

  out << "<g id=\"guarantee\" stroke=\"black\" stroke-width=\"2\">\n";
  for (std::size_t i = 0; i + 1 < data.curve.size(); ++i) {
    const auto& a = data.curve[i];
    const auto& b = data.curve[i + 1];
    detail::svg_line(out, f.px(a.gamma), f.py(a.factor), f.px(b.gamma), f.py(b.factor), "");
  }
  out << "</g>\n<g id=\"rule-of-thumb\" stroke=\"black\" stroke-width=\"1.5\" "
         "stroke-dasharray=\"6,4\">\n";
  for (std::size_t i = 0; i + 1 < data.curve.size(); ++i) {
    const auto& a = data.curve[i];
    const auto& b = data.curve[i + 1];
    detail::svg_line(out, f.px(a.gamma), f.py(a.rule_of_thumb), f.px(b.gamma),
                     f.py(b.rule_of_thumb), "");
  }
  out << "</g>\n<g id=\"empirical\" fill=\"steelblue\">\n";
  for (const auto& e : data.empirical) {
    out << "<circle cx=\"" << fmt3(f.px(e.gamma)) << "\" cy=\"" << fmt3(f.py(e.alpha))
        << "\" r=\"3\"/>\n";
  }
  out << "</g>\n</svg>\n";
}

}  // namespace coneapprox

#endif  // CONEAPPROX_PLOT_HPP

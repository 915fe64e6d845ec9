#pragma once

#include "polychrome/chromatic_points.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace polychrome {

struct SvgOptions {
  std::optional<Coloring> coloring;    // point fill by color class
  std::vector<int> curve_indices;     // when nonempty, split curve/bulk groups
  std::optional<HalfPlane> highlight;  // draw this boundary and ring its cut
  bool draw_hull = true;
};

namespace detail {

inline double to_double(const Rat& v) { return v.convert_to<double>(); }

inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

inline std::string color_for(int label, int k) {
  int hue = k > 0 ? (360 * (label - 1)) / k : 210;
  return "hsl(" + std::to_string(hue) + ",70%,45%)";
}

}  // namespace detail

/// Standalone SVG 1.1 document of the point set; rendering is the only place
/// coordinates leave exact arithmetic.
inline std::string render_svg(const PointSet& P, const SvgOptions& opt = {}) {
  using detail::fmt;
  using detail::to_double;
  const int n = static_cast<int>(P.size());
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  for (int i = 0; i < n; ++i) {
    double x = to_double(P[i].x), y = to_double(P[i].y);
    if (i == 0) {
      xmin = xmax = x;
      ymin = ymax = y;
    } else {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  double spanx = std::max(xmax - xmin, 1e-9), spany = std::max(ymax - ymin, 1e-9);
  double span = std::max(spanx, spany);
  xmin -= 0.1 * span;
  xmax = xmin + 1.2 * span;
  ymin -= 0.1 * span;
  ymax = ymin + 1.2 * span;
  const double W = 640;
  auto sx = [&](double x) { return (x - xmin) / (xmax - xmin) * W; };
  auto sy = [&](double y) { return W - (y - ymin) / (ymax - ymin) * W; };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
                    "viewBox=\"0 0 640 640\">\n";
  out += "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";

  if (opt.draw_hull && n >= 3) {
    auto hull = convex_hull(P);
    if (hull.size() >= 3) {
      out += "<polygon points=\"";
      for (int v : hull)
        out += fmt(sx(to_double(P[v].x))) + "," + fmt(sy(to_double(P[v].y))) + " ";
      out += "\" fill=\"none\" stroke=\"#aaaaaa\" stroke-dasharray=\"4 3\"/>\n";
    }
  }

  if (opt.highlight) {
    const HalfPlane& h = *opt.highlight;
    double a = to_double(h.a()), b = to_double(h.b()), c = to_double(h.c());
    // clip a x + b y = c to the view rectangle
    std::vector<std::pair<double, double>> ends;
    auto try_edge = [&](double x0, double y0, double x1, double y1) {
      double f0 = a * x0 + b * y0 - c, f1 = a * x1 + b * y1 - c;
      if ((f0 < 0) == (f1 < 0)) return;
      double t = f0 / (f0 - f1);
      ends.push_back({x0 + t * (x1 - x0), y0 + t * (y1 - y0)});
    };
    try_edge(xmin, ymin, xmax, ymin);
    try_edge(xmax, ymin, xmax, ymax);
    try_edge(xmax, ymax, xmin, ymax);
    try_edge(xmin, ymax, xmin, ymin);
    if (ends.size() >= 2) {
      out += "<line x1=\"" + fmt(sx(ends[0].first)) + "\" y1=\"" + fmt(sy(ends[0].second)) +
             "\" x2=\"" + fmt(sx(ends[1].first)) + "\" y2=\"" + fmt(sy(ends[1].second)) +
             "\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
    }
    for (int i = 0; i < n; ++i)
      if (h.contains(P[i]))
        out += "<circle cx=\"" + fmt(sx(to_double(P[i].x))) + "\" cy=\"" +
               fmt(sy(to_double(P[i].y))) +
               "\" r=\"9\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n";
  }

  std::vector<char> on_curve(n, 0);
  for (int v : opt.curve_indices)
    if (v >= 0 && v < n) on_curve[v] = 1;
  auto emit_group = [&](const std::string& id, bool curve) {
    out += "<g id=\"" + id + "\">\n";
    for (int i = 0; i < n; ++i) {
      if (static_cast<bool>(on_curve[i]) != curve) continue;
      std::string fill = "hsl(210,70%,45%)";
      if (opt.coloring) fill = detail::color_for(opt.coloring->colors[i], opt.coloring->k);
      out += "<circle cx=\"" + fmt(sx(to_double(P[i].x))) + "\" cy=\"" +
             fmt(sy(to_double(P[i].y))) + "\" r=\"5\" fill=\"" + fill + "\"/>\n";
    }
    out += "</g>\n";
  };
  if (!opt.curve_indices.empty()) {
    emit_group("curve", true);
    emit_group("bulk", false);
  } else {
    emit_group("points", false);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace polychrome

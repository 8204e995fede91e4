#pragma once

// SVG 1.1 rendering of aligned drawings.  Styling is minimal and fixed so
// output is byte-deterministic: unit-stroke lines per edge, circles at
// vertices, the root leaf drawn hollow and labelled.

#include <ctree/tree.hpp>

#include <cstdio>
#include <string>
#include <vector>

namespace ctree {

namespace detail {

struct Xy {
  double x;
  double y;
};

// Lattice basis: alpha = (sqrt(3)/2, 1/2) at 30 degrees, beta = (0, 1).
inline Xy lattice_to_plane(const LatticePoint& p) {
  constexpr double half_sqrt3 = 0.86602540378443865;
  return {p.a * half_sqrt3, p.a * 0.5 + p.b};
}

inline std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace detail

inline std::string svg_render(const Ctree& t) {
  std::vector<LatticePoint> pos = embed(t);
  const double scale = 40.0;
  const double margin = 24.0;

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  std::vector<detail::Xy> pts(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) {
    pts[i] = detail::lattice_to_plane(pos[i]);
    pts[i].x *= scale;
    pts[i].y *= scale;
    min_x = std::min(min_x, pts[i].x);
    max_x = std::max(max_x, pts[i].x);
    min_y = std::min(min_y, pts[i].y);
    max_y = std::max(max_y, pts[i].y);
  }
  // SVG y grows downward.
  auto sx = [&](double x) { return x - min_x + margin; };
  auto sy = [&](double y) { return max_y - y + margin; };
  double width = max_x - min_x + 2 * margin;
  double height = max_y - min_y + 2 * margin;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fixed2(width) +
         "\" height=\"" + detail::fixed2(height) + "\" viewBox=\"0 0 " + detail::fixed2(width) +
         " " + detail::fixed2(height) + "\">\n";
  for (const auto& [a, b] : t.edges()) {
    out += "  <line x1=\"" + detail::fixed2(sx(pts[a].x)) + "\" y1=\"" +
           detail::fixed2(sy(pts[a].y)) + "\" x2=\"" + detail::fixed2(sx(pts[b].x)) +
           "\" y2=\"" + detail::fixed2(sy(pts[b].y)) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (int v = 0; v < t.vertex_count(); ++v) {
    bool is_root = v == t.root;
    out += "  <circle cx=\"" + detail::fixed2(sx(pts[v].x)) + "\" cy=\"" +
           detail::fixed2(sy(pts[v].y)) + "\" r=\"" + (is_root ? "4.00" : "2.50") +
           "\" fill=\"" + (is_root ? "white" : "black") + "\" stroke=\"black\"/>\n";
  }
  if (t.root >= 0) {
    out += "  <text x=\"" + detail::fixed2(sx(pts[t.root].x) + 6) + "\" y=\"" +
           detail::fixed2(sy(pts[t.root].y) - 6) + "\" font-size=\"10\">root</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace ctree

#pragma once

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cut_project.hpp"
#include "errors.hpp"
#include "hull.hpp"
#include "weyl.hpp"

namespace coxcut {

/// Seventeen significant digits, enough to round-trip any double. Negative zero prints as 0.
inline std::string fmt(double x) {
  if (x == 0.0) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Header "label,x1,...,xn", one row per point.
inline void write_orbit_csv(std::ostream& os, const OrbitSet& o) {
  const std::size_t n = o.points.empty() ? o.seed.size() : o.points.front().size();
  os << "label";
  for (std::size_t i = 1; i <= n; ++i) os << ",x" << i;
  os << '\n';
  for (const auto& p : o.points) {
    os << o.label();
    for (std::size_t i = 0; i < p.size(); ++i) os << ',' << fmt(p[i]);
    os << '\n';
  }
}

/// Header "a1..an,par_x,par_y[,par_z],perp_1..perp_k".
inline void write_pattern_csv(std::ostream& os, const Pattern& p) {
  const int n = p.meta.rank;
  static const char* axes[] = {"par_x", "par_y", "par_z"};
  for (int i = 1; i <= n; ++i) os << (i > 1 ? "," : "") << 'a' << i;
  for (int i = 0; i < p.par_dim(); ++i) os << ',' << axes[i];
  const int k = p.points.empty() ? n - p.par_dim() : static_cast<int>(p.points.front().perp.size());
  for (int i = 1; i <= k; ++i) os << ",perp_" << i;
  os << '\n';
  for (const auto& q : p.points) {
    for (std::size_t i = 0; i < q.a.size(); ++i) os << (i ? "," : "") << q.a[i];
    for (double v : q.par) os << ',' << fmt(v);
    for (double v : q.perp) os << ',' << fmt(v);
    os << '\n';
  }
}

/// Points of a pattern CSV written by write_pattern_csv.
inline std::vector<PatternPoint> read_pattern_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error("pattern CSV: missing header");
  int n = 0, par = 0, perp = 0;
  {
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, ',')) {
      if (col.starts_with("par_")) ++par;
      else if (col.starts_with("perp_")) ++perp;
      else if (col.starts_with("a")) ++n;
      else throw Error("pattern CSV: unexpected column '" + col + "'");
    }
  }
  std::vector<PatternPoint> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (static_cast<int>(cells.size()) != n + par + perp) throw Error("pattern CSV: ragged row");
    PatternPoint q;
    for (int i = 0; i < n; ++i) q.a.push_back(std::stoi(cells[static_cast<std::size_t>(i)]));
    q.par.resize(par);
    q.perp.resize(perp);
    for (int i = 0; i < par; ++i) q.par(i) = std::stod(cells[static_cast<std::size_t>(n + i)]);
    for (int i = 0; i < perp; ++i) q.perp(i) = std::stod(cells[static_cast<std::size_t>(n + par + i)]);
    out.push_back(std::move(q));
  }
  return out;
}

/// Planar pattern as SVG: 40 units per edge length, origin at the centre,
/// y pointing up. Edges first so points draw on top.
inline void write_pattern_svg(std::ostream& os, const Pattern& p) {
  if (p.par_dim() != 2) throw Error("SVG output needs a planar pattern");
  double edge = 0.0;
  for (Eigen::Index i = 0; i < p.star.cols(); ++i) edge = std::max(edge, p.star.col(i).norm());
  const double scale = 40.0 / edge;
  const double half = std::ceil(p.meta.par_radius * scale + 20.0);
  auto px = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
    return std::string(buf);
  };
  auto X = [&](const Eigen::VectorXd& v) { return px(v(0) * scale); };
  auto Y = [&](const Eigen::VectorXd& v) { return px(-v(1) * scale); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(-half) << ' ' << fmt(-half) << ' ' << fmt(2 * half)
     << ' ' << fmt(2 * half) << "\" width=\"" << fmt(2 * half) << "\" height=\"" << fmt(2 * half) << "\">\n";
  os << "<rect x=\"" << fmt(-half) << "\" y=\"" << fmt(-half) << "\" width=\"" << fmt(2 * half) << "\" height=\""
     << fmt(2 * half) << "\" fill=\"white\"/>\n";
  os << "<g stroke=\"#345\" stroke-width=\"1.5\">\n";
  for (const auto& e : p.edges) {
    const auto& a = p.points[static_cast<std::size_t>(e.from)].par;
    const auto& b = p.points[static_cast<std::size_t>(e.to)].par;
    os << "<line x1=\"" << X(a) << "\" y1=\"" << Y(a) << "\" x2=\"" << X(b) << "\" y2=\"" << Y(b) << "\"/>\n";
  }
  os << "</g>\n<g fill=\"#c33\">\n";
  for (const auto& q : p.points) os << "<circle cx=\"" << X(q.par) << "\" cy=\"" << Y(q.par) << "\" r=\"3\"/>\n";
  os << "</g>\n</svg>\n";
}

/// Object File Format: header, counts, vertices, faces.
inline void write_off(std::ostream& os, const Polyhedron& p) {
  std::size_t edges = 0;
  for (const auto& f : p.faces) edges += f.size();
  os << "OFF\n" << p.vertices.size() << ' ' << p.faces.size() << ' ' << edges / 2 << '\n';
  for (const auto& v : p.vertices) os << fmt(v.x()) << ' ' << fmt(v.y()) << ' ' << fmt(v.z()) << '\n';
  for (const auto& f : p.faces) {
    os << f.size();
    for (int i : f) os << ' ' << i;
    os << '\n';
  }
}

/// Point cloud as OFF with no faces (3D patches).
inline void write_points_off(std::ostream& os, const Pattern& p) {
  if (p.par_dim() != 3) throw Error("point OFF output needs a 3D pattern");
  os << "OFF\n" << p.points.size() << " 0 0\n";
  for (const auto& q : p.points) os << fmt(q.par(0)) << ' ' << fmt(q.par(1)) << ' ' << fmt(q.par(2)) << '\n';
}

} // namespace coxcut

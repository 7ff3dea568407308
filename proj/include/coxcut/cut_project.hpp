#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "constants.hpp"
#include "errors.hpp"
#include "frame.hpp"
#include "hull.hpp"
#include "voronoi.hpp"
#include "weyl.hpp"

namespace coxcut {

enum class WindowMode { hull, disc };

inline std::string to_string(WindowMode m) { return m == WindowMode::hull ? "hull" : "disc"; }

inline WindowMode window_mode_from(const std::string& s) {
  if (s == "hull") return WindowMode::hull;
  if (s == "disc") return WindowMode::disc;
  throw WindowError("unknown window mode '" + s + "'");
}

/// Translation of the Voronoi cell, in l-basis coordinates.
struct Shift {
  std::string label;  // "omega", "zero" or "custom"
  Eigen::VectorXd vector;

  static Shift zero(int n) { return {"zero", Eigen::VectorXd::Zero(n)}; }
  /// omega_n = (l_1 + ... + l_n) / 2, the centre of the cell spanned by 0 and 1 coordinates.
  static Shift omega(int n) { return {"omega", Eigen::VectorXd::Constant(n, 0.5)}; }
  static Shift custom(Eigen::VectorXd v) { return {"custom", std::move(v)}; }
};

/// Acceptance window in window space (perpendicular rows, then invariant rows
/// of the frame). A hull window is the projection of the shifted Voronoi cell;
/// a disc window is the ball of radius R_0 around the projected shift.
struct Window {
  WindowMode mode = WindowMode::hull;
  Shift shift;
  Eigen::MatrixXd basis;          // window-space rows in l-coordinates
  Eigen::VectorXd centre;         // projected shift
  std::vector<Eigen::VectorXd> vertices;  // hull vertices (both modes), shifted
  std::vector<HalfSpace> facets;  // hull mode only
  double radius = 0.0;            // R_0: largest distance of a projected cell vertex from the centre

  int dim() const { return static_cast<int>(basis.rows()); }

  /// Closed membership with slack `tol`.
  bool contains(const Eigen::VectorXd& w, double tol = tol::numeric) const {
    if (mode == WindowMode::disc) return (w - centre).norm() <= radius + tol;
    for (const auto& f : facets)
      if (f.normal.dot(w) - f.offset > tol) return false;
    return true;
  }

  Eigen::VectorXd project(const Eigen::VectorXd& x) const { return basis * x; }
};

inline Window build_window(const RootDatum& d, const Frame& f, WindowMode mode, Shift shift) {
  if (f.dim() != d.rank) throw RankError("build_window: frame dimension does not match rank");
  if (shift.vector.size() != d.rank) throw WindowError("shift must have one entry per lattice axis");
  const auto idx = f.window_indices();
  if (idx.size() < 2 || idx.size() > 4)
    throw WindowError("window space of dimension " + std::to_string(idx.size()) + " is unsupported (2 to 4)");
  require_orthonormal(f.basis, "build_window");

  Window w;
  w.mode = mode;
  w.shift = std::move(shift);
  w.basis = f.rows(idx);
  w.centre = w.basis * w.shift.vector;

  std::vector<Eigen::VectorXd> projected;
  for (const auto& v : voronoi_cell(d).vertices) {
    projected.push_back(w.centre + w.basis * v.to_real());
    w.radius = std::max(w.radius, (projected.back() - w.centre).norm());
  }
  const auto facets = zonotope_facets(w.basis, projected);
  w.vertices = hull_vertices(projected, facets);
  std::sort(w.vertices.begin(), w.vertices.end(), [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  if (mode == WindowMode::hull) w.facets = facets;
  for (const auto& fc : facets)
    if (fc.normal.dot(w.centre) - fc.offset > -tol::numeric) throw WindowError("window centre is not interior");
  return w;
}

inline std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.begin(), v.end()}; }

/// Whether the l-basis lattice vector `a` projects into the window.
inline bool accept(std::span<const int> a, const Window& w) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) x(static_cast<Eigen::Index>(i)) = a[i];
  return w.contains(w.project(x));
}

struct PatternPoint {
  std::vector<int> a;    // l-basis integer coordinates
  Eigen::VectorXd par;   // parallel-space coordinates
  Eigen::VectorXd perp;  // window-space coordinates
};

/// b - a = +e_axis (1-based axis), so the E_par difference is the projected l_axis.
struct Edge {
  int from = 0;
  int to = 0;
  int axis = 0;
};

struct PatternMeta {
  int rank = 0;
  std::string frame_id;
  WindowMode mode = WindowMode::hull;
  Shift shift;
  double par_radius = 0.0;
  double search_radius = 0.0;  // radius of the l-space ball that was scanned
  double candidates = 0.0;     // estimated lattice points in that ball
};

struct Pattern {
  std::vector<PatternPoint> points;
  std::vector<Edge> edges;
  PatternMeta meta;
  Eigen::MatrixXd star;  // column i: E_par image of l_{i+1}

  int par_dim() const { return static_cast<int>(star.rows()); }
};

inline constexpr double default_budget = 1e8;

namespace detail {

/// Volume of the n-ball, used for the candidate estimate.
inline double ball_volume(int n, double r) {
  return std::pow(pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0) * std::pow(r, n);
}

/// Integer points x with |x - c| <= r, lexicographic order.
inline void for_each_in_ball(const Eigen::VectorXd& c, double r, const std::function<void(const std::vector<int>&)>& fn) {
  const int n = static_cast<int>(c.size());
  std::vector<int> x(static_cast<std::size_t>(n));
  std::function<void(int, double)> rec = [&](int k, double left) {
    if (k == n) {
      fn(x);
      return;
    }
    const double h = std::sqrt(std::max(0.0, left));
    const int lo = static_cast<int>(std::ceil(c(k) - h - tol::numeric));
    const int hi = static_cast<int>(std::floor(c(k) + h + tol::numeric));
    for (int v = lo; v <= hi; ++v) {
      const double dv = v - c(k);
      if (dv * dv > left + tol::numeric) continue;
      x[static_cast<std::size_t>(k)] = v;
      rec(k + 1, left - dv * dv);
    }
  };
  rec(0, r * r);
}

} // namespace detail

/// Accepted lattice points with |par| <= par_radius, sorted by integer coordinates.
///
/// Frames are orthonormal and par + window rows cover R^n, so every candidate
/// lies in the ball |x - c|^2 <= par_radius^2 + R_0^2 around the window-space
/// lift c of the shift. That ball is scanned exactly.
inline Pattern generate_patch(const RootDatum& d, const Frame& f, const Window& w, double par_radius,
                              double budget = default_budget) {
  if (!(par_radius > 0.0)) throw Error("par_radius must be positive");
  if (f.par.size() < 2 || f.par.size() > 3) throw WindowError("parallel space must be 2D or 3D");
  if (f.par.size() + static_cast<std::size_t>(w.dim()) != static_cast<std::size_t>(d.rank))
    throw WindowError("parallel and window spaces must span the lattice space");

  const int n = d.rank;
  const Eigen::MatrixXd par = f.par_basis();
  const Eigen::VectorXd lift = w.basis.transpose() * w.centre;
  const double r = std::sqrt(par_radius * par_radius + w.radius * w.radius);
  const double estimate = detail::ball_volume(n, r + std::sqrt(n) / 2.0);
  if (estimate > budget)
    throw BudgetError("enumeration needs about " + std::to_string(static_cast<long long>(estimate)) +
                          " candidates, budget is " + std::to_string(static_cast<long long>(budget)),
                      estimate, budget);

  Pattern p;
  p.star = par;
  p.meta = {n, f.id, w.mode, w.shift, par_radius, r, estimate};
  Eigen::VectorXd x(n);
  detail::for_each_in_ball(lift, r, [&](const std::vector<int>& a) {
    for (int i = 0; i < n; ++i) x(i) = a[static_cast<std::size_t>(i)];
    const Eigen::VectorXd pp = par * x;
    if (pp.norm() > par_radius + tol::numeric) return;
    const Eigen::VectorXd ww = w.project(x);
    if (!w.contains(ww)) return;
    p.points.push_back({a, pp, ww});
  });
  return p;
}

/// 3D icosahedral patch: B_6 lattice, E_par the unprimed triple, window the
/// hull of the Voronoi cell in the primed triple.
inline Pattern generate_icosahedral_patch(double par_radius, Shift shift = Shift::zero(6), double budget = default_budget) {
  const RootDatum d = build_root_datum(6);
  const Frame f = b6_h3_frame().frame;
  return generate_patch(d, f, build_window(d, f, WindowMode::hull, std::move(shift)), par_radius, budget);
}

/// Pairs of points one unit step apart along an axis whose E_par difference is
/// that axis' projection.
inline std::vector<Edge> extract_edges(const Pattern& p) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < p.points.size(); ++i) index.emplace(p.points[i].a, static_cast<int>(i));
  std::vector<Edge> edges;
  const int n = static_cast<int>(p.star.cols());
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    std::vector<int> b = p.points[i].a;
    for (int k = 0; k < n; ++k) {
      ++b[static_cast<std::size_t>(k)];
      auto it = index.find(b);
      if (it != index.end()) {
        const Eigen::VectorXd diff = p.points[static_cast<std::size_t>(it->second)].par - p.points[i].par;
        if ((diff - p.star.col(k)).norm() <= tol::match) edges.push_back({static_cast<int>(i), it->second, k + 1});
      }
      --b[static_cast<std::size_t>(k)];
    }
  }
  return edges;
}

inline void attach_edges(Pattern& p) { p.edges = extract_edges(p); }

/// Sorted distinct angles in [0, 2 pi) of the edge vectors, both orientations.
inline std::vector<double> edge_directions(const Pattern& p, double tol = tol::numeric) {
  if (p.par_dim() != 2) throw Error("edge_directions needs a planar pattern");
  std::set<int> axes;
  for (const auto& e : p.edges) axes.insert(e.axis);
  std::vector<double> ang;
  for (int k : axes)
    for (double s : {1.0, -1.0}) {
      const Eigen::Vector2d v = s * p.star.col(k - 1);
      double t = std::atan2(v.y(), v.x());
      if (t < 0) t += 2 * pi;
      ang.push_back(t);
    }
  std::sort(ang.begin(), ang.end());
  std::vector<double> out;
  for (double t : ang)
    if (out.empty() || t - out.back() > tol) out.push_back(t);
  if (out.size() > 1 && out.front() + 2 * pi - out.back() <= tol) out.pop_back();
  return out;
}

/// Largest distance from a rotated point to the nearest pattern point, over points
/// at least one edge length inside the patch boundary. Rotation by 2 pi / k about
/// the centroid; k = 1 is the identity.
inline double symmetry_deviation(const Pattern& p, int k) {
  if (k < 1) throw Error("rotation order must be positive");
  if (p.par_dim() != 2) throw Error("symmetry_deviation needs a planar pattern");
  if (k == 1 || p.points.empty()) return 0.0;
  Eigen::Vector2d c = Eigen::Vector2d::Zero();
  for (const auto& q : p.points) c += q.par;
  c /= static_cast<double>(p.points.size());
  double edge = 0.0;
  for (Eigen::Index i = 0; i < p.star.cols(); ++i) edge = std::max(edge, p.star.col(i).norm());
  const double inner = p.meta.par_radius - edge;

  std::vector<Eigen::Vector2d> pts;
  for (const auto& q : p.points) pts.emplace_back(q.par);
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.x() < b.x(); });
  const Eigen::Rotation2Dd rot(2 * pi / k);
  double worst = 0.0;
  for (const auto& q : pts) {
    if ((q - c).norm() > inner) continue;
    const Eigen::Vector2d r = c + rot * (q - c);
    double best = 1e300;
    auto lo = std::lower_bound(pts.begin(), pts.end(), r.x() - edge, [](const auto& a, double x) { return a.x() < x; });
    for (auto it = lo; it != pts.end() && it->x() <= r.x() + edge; ++it) best = std::min(best, (*it - r).norm());
    worst = std::max(worst, best == 1e300 ? edge : best);
  }
  return worst;
}

/// Counts of minimal tiles in the planar edge graph: "triangle", "square" and
/// "rhombus_<acute angle in degrees>".
///
/// The graph joins distinct E_par positions whose difference is a projected
/// +-l_i; it is built geometrically because triangles only close in E_par. A
/// rhombus with a diagonal that is itself an edge splits into two triangles and
/// is not counted.
inline std::map<std::string, long> tile_census(const Pattern& p) {
  if (p.par_dim() != 2) throw Error("tile_census needs a planar pattern");
  // distinct lattice points have distinct images in an irrational plane
  std::vector<Eigen::Vector2d> pos;
  for (const auto& q : p.points) pos.emplace_back(q.par);
  std::vector<Eigen::Vector2d> steps;
  for (Eigen::Index i = 0; i < p.star.cols(); ++i) {
    steps.emplace_back(p.star.col(i));
    steps.emplace_back(-p.star.col(i));
  }
  // Spatial lookup on a grid of cell size one edge length.
  double cell = 0.0;
  for (const auto& s : steps) cell = std::max(cell, s.norm());
  auto key = [&](const Eigen::Vector2d& v) {
    return std::pair<long, long>{std::lround(std::floor(v.x() / cell)), std::lround(std::floor(v.y() / cell))};
  };
  std::map<std::pair<long, long>, std::vector<int>> grid;
  for (std::size_t i = 0; i < pos.size(); ++i) grid[key(pos[i])].push_back(static_cast<int>(i));
  auto find = [&](const Eigen::Vector2d& v) {
    const auto [gx, gy] = key(v);
    for (long dx = -1; dx <= 1; ++dx)
      for (long dy = -1; dy <= 1; ++dy) {
        auto it = grid.find({gx + dx, gy + dy});
        if (it == grid.end()) continue;
        for (int j : it->second)
          if ((pos[static_cast<std::size_t>(j)] - v).norm() <= tol::match) return j;
      }
    return -1;
  };

  std::vector<std::vector<int>> adj(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (const auto& s : steps) {
      const int j = find(pos[i] + s);
      if (j >= 0) adj[i].push_back(j);
    }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  auto adjacent = [&](int i, int j) {
    return std::binary_search(adj[static_cast<std::size_t>(i)].begin(), adj[static_cast<std::size_t>(i)].end(), j);
  };

  std::map<std::string, long> census;
  std::set<std::array<int, 3>> triangles;
  std::set<std::array<int, 4>> rhombi;
  for (int u = 0; u < static_cast<int>(pos.size()); ++u) {
    const auto& nb = adj[static_cast<std::size_t>(u)];
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y) {
        const int v = nb[x], w = nb[y];
        if (adjacent(v, w)) {
          std::array<int, 3> t{u, v, w};
          std::sort(t.begin(), t.end());
          triangles.insert(t);
          continue;
        }
        const Eigen::Vector2d dv = pos[static_cast<std::size_t>(v)] - pos[static_cast<std::size_t>(u)];
        const Eigen::Vector2d dw = pos[static_cast<std::size_t>(w)] - pos[static_cast<std::size_t>(u)];
        if (std::abs(dv.x() * dw.y() - dv.y() * dw.x()) <= tol::match) continue;
        const int z = find(pos[static_cast<std::size_t>(u)] + dv + dw);
        if (z < 0 || adjacent(u, z)) continue;
        std::array<int, 4> r{u, v, w, z};
        std::sort(r.begin(), r.end());
        if (!rhombi.insert(r).second) continue;
        const double cosang = std::clamp(dv.dot(dw) / (dv.norm() * dw.norm()), -1.0, 1.0);
        double deg = std::acos(cosang) * 180.0 / pi;
        deg = std::min(deg, 180.0 - deg);
        const long rounded = std::lround(deg);
        ++census[rounded == 90 ? "square" : "rhombus_" + std::to_string(rounded)];
      }
  }
  if (!triangles.empty()) census["triangle"] = static_cast<long>(triangles.size());
  return census;
}

} // namespace coxcut

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
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
#include "weyl.hpp"

namespace coxcut {

/// Voronoi cell V(0) of Z^n: the cube with vertices 1/2(+-l_1 ... +-l_n).
///
/// Facet normals come from the W(B_n) orbits of omega_k / 2 (k < n) and omega_n;
/// only the omega_1 orbit (+-l_i / 2) gives actual facets of the cube, the other
/// orbits are the lower-dimensional faces' centres.
struct VoronoiCell {
  std::vector<HalfIntVector> vertices;
  std::vector<std::vector<HalfIntVector>> facet_orbits;  // k-th entry: orbit of omega_{k+1}/2, last one omega_n

  /// Closed-cube membership: |x_i| <= 1/2.
  bool contains(const Eigen::VectorXd& x, double tol = tol::numeric) const {
    return x.cwiseAbs().maxCoeff() <= 0.5 + tol;
  }
};

inline VoronoiCell voronoi_cell(const RootDatum& d) {
  VoronoiCell c;
  std::vector<int> a(static_cast<std::size_t>(d.rank), 0);
  a.back() = 1;
  c.vertices = orbit(d, a).points;
  for (int k = 0; k < d.rank; ++k) {
    HalfIntVector seed = d.exact_weights[k];
    if (k + 1 < d.rank) {
      // omega_k is integral for k < n, so halving the doubled entries is exact
      std::vector<int> t(seed.twice());
      for (int& v : t) v /= 2;
      seed = HalfIntVector(std::move(t));
    }
    c.facet_orbits.push_back(orbit_of(seed, d.reflections));
  }
  return c;
}

/// Distinct 3D images of an n-point set with the number of inputs landing on each.
struct Projection3d {
  std::vector<Eigen::Vector3d> points;
  std::vector<int> multiplicity;
  int at_origin = 0;  // inputs projected onto the origin and dropped when requested

  int total() const {
    int s = at_origin;
    for (int m : multiplicity) s += m;
    return s;
  }
};

/// (v.b_1, v.b_2, v.b_3) for each v, merged at `tol`. With `drop_invariant`,
/// images at the origin (vectors along the discarded invariant direction) are
/// counted in `at_origin` rather than listed.
inline Projection3d project_to_3d(std::span<const Eigen::VectorXd> points, const Eigen::MatrixXd& triple,
                                  bool drop_invariant = false, double tol = tol::numeric) {
  if (triple.rows() != 3) throw FrameError("project_to_3d needs three basis vectors");
  require_orthonormal(triple, "project_to_3d");
  Projection3d out;
  for (const auto& v : points) {
    const Eigen::Vector3d p = triple * v;
    if (drop_invariant && p.norm() <= tol) {
      ++out.at_origin;
      continue;
    }
    auto it = std::find_if(out.points.begin(), out.points.end(), [&](const Eigen::Vector3d& q) { return (q - p).norm() <= tol; });
    if (it == out.points.end()) {
      out.points.push_back(p);
      out.multiplicity.push_back(1);
    } else {
      ++out.multiplicity[static_cast<std::size_t>(it - out.points.begin())];
    }
  }
  return out;
}

inline Projection3d project_to_3d(std::span<const HalfIntVector> points, const Eigen::MatrixXd& triple,
                                  bool drop_invariant = false, double tol = tol::numeric) {
  std::vector<Eigen::VectorXd> real;
  real.reserve(points.size());
  for (const auto& p : points) real.push_back(p.to_real());
  return project_to_3d(std::span<const Eigen::VectorXd>(real), triple, drop_invariant, tol);
}

/// Orbits of the group generated by `gens` on a finite invariant set, ordered by
/// size and then by their lexicographically smallest point; each orbit sorted.
inline std::vector<std::vector<HalfIntVector>> decompose_orbits(std::span<const HalfIntVector> points,
                                                                std::span<const GroupElement> gens) {
  const std::set<HalfIntVector> all(points.begin(), points.end());
  for (const auto& g : gens)
    for (const auto& p : all)
      if (!all.contains(g.apply(p)))
        throw ClosureError("decompose_orbits: generator " + g.to_string() + " maps " + p.to_string() + " outside the set");
  std::set<HalfIntVector> left = all;
  std::vector<std::vector<HalfIntVector>> parts;
  while (!left.empty()) {
    auto part = orbit_of(*left.begin(), gens);
    for (const auto& p : part) left.erase(p);
    parts.push_back(std::move(part));
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return parts;
}

struct NormClass {
  double norm;
  int count;
};

struct SolidReport {
  std::string label;
  int vertex_count = 0;
  std::vector<NormClass> norm_classes;  // descending norm
  std::vector<int> suborbits;
};

/// Distinct vertex norms (merged at `tol`), largest first.
inline std::vector<NormClass> norm_classes(std::span<const Eigen::Vector3d> pts, double tol = tol::match) {
  std::vector<double> norms;
  for (const auto& p : pts) norms.push_back(p.norm());
  std::sort(norms.begin(), norms.end(), std::greater<>());
  std::vector<NormClass> out;
  for (double r : norms) {
    if (!out.empty() && std::abs(out.back().norm - r) <= tol) ++out.back().count;
    else out.push_back({r, 1});
  }
  return out;
}

/// Name a solid from its vertex count and norm signature.
inline SolidReport classify_solid(std::span<const Eigen::Vector3d> pts, std::vector<int> suborbits = {}) {
  SolidReport r;
  r.vertex_count = static_cast<int>(pts.size());
  r.norm_classes = norm_classes(pts);
  r.suborbits = std::move(suborbits);
  auto norms_are = [&](double a, double b) {
    return r.norm_classes.size() == 2 && std::abs(r.norm_classes[0].norm - a) <= tol::match &&
           std::abs(r.norm_classes[1].norm - b) <= tol::match;
  };
  const double s2 = std::sqrt(2.0);
  switch (r.vertex_count) {
    case 10: r.label = "pentagonal_antiprism"; break;
    case 12: r.label = "icosahedron"; break;
    case 14: r.label = "rhombic_dodecahedron"; break;
    case 20: r.label = "dodecahedron"; break;
    case 22: r.label = "rhombic_icosahedron"; break;
    case 30: r.label = "icosidodecahedron"; break;
    case 32:
      if (norms_are(tau / s2, std::sqrt(0.3 * (2.0 + tau)))) r.label = "rhombic_triacontahedron";
      else if (norms_are(std::sqrt(0.3 * (2.0 + sigma)), -sigma / s2)) r.label = "dodecahedral_star";
      break;
    default: break;
  }
  if (r.label.empty()) r.label = "unclassified";
  return r;
}

/// The four W(H_3) orbits of the 6-cube vertices: I, II have an even number of
/// minus signs, III, IV an odd number; I, IV have 20 points, II, III have 12.
struct CubeDecomposition {
  std::array<std::vector<HalfIntVector>, 4> orbits;
  static constexpr std::array<const char*, 4> names{"I", "II", "III", "IV"};
};

inline CubeDecomposition b6_cube_decomposition() {
  const RootDatum d = build_root_datum(6);
  const auto cell = voronoi_cell(d);
  const auto parts = decompose_orbits(cell.vertices, h3_generators(d).list());
  if (parts.size() != 4) throw ClosureError("6-cube does not split into four H_3 orbits");
  CubeDecomposition out;
  for (const auto& part : parts) {
    const bool even = part.front().minus_count() % 2 == 0;
    const bool big = part.size() == 20;
    const int slot = even ? (big ? 0 : 1) : (big ? 3 : 2);
    out.orbits[static_cast<std::size_t>(slot)] = part;
  }
  return out;
}

/// E_par images of three l-basis axes spanning a parallelepiped.
struct Rhombohedron {
  std::array<Eigen::Vector3d, 3> edges;
  double volume() const { return std::abs(edges[0].dot(edges[1].cross(edges[2]))); }

  std::vector<Eigen::Vector3d> vertices() const {
    std::vector<Eigen::Vector3d> v;
    for (int m = 0; m < 8; ++m) {
      Eigen::Vector3d p = Eigen::Vector3d::Zero();
      for (int k = 0; k < 3; ++k)
        if (m & (1 << k)) p += edges[static_cast<std::size_t>(k)];
      v.push_back(p);
    }
    return v;
  }
};

/// Cells spanned by the projections of (l_1, l_2, l_3) and (l_4, l_5, l_6).
inline std::pair<Rhombohedron, Rhombohedron> rhombohedra_from_axes(const Frame& f) {
  if (f.id != "h3") throw FrameError("rhombohedra_from_axes needs the icosahedral frame");
  const Eigen::MatrixXd par = f.par_basis();
  Rhombohedron a, b;
  for (int k = 0; k < 3; ++k) {
    a.edges[static_cast<std::size_t>(k)] = par.col(k);
    b.edges[static_cast<std::size_t>(k)] = par.col(k + 3);
  }
  return {a, b};
}

/// A named 3D shadow of a W(B_n) polytope, ready for export.
struct NamedSolid {
  std::string name;
  std::vector<Eigen::Vector3d> points;
  SolidReport report;
  Polyhedron shape;
};

/// Non-convex star over an icosahedron nested in a dodecahedron: every
/// dodecahedron edge is joined to the two icosahedron vertices on the axes of
/// its adjacent pentagons, giving 60 triangles.
inline Polyhedron star_polyhedron(const std::vector<Eigen::Vector3d>& icosa, const std::vector<Eigen::Vector3d>& dodeca) {
  Polyhedron p;
  p.vertices = dodeca;
  p.vertices.insert(p.vertices.end(), icosa.begin(), icosa.end());
  const int nd = static_cast<int>(dodeca.size());
  double edge = 1e300;
  for (int i = 0; i < nd; ++i)
    for (int j = i + 1; j < nd; ++j) edge = std::min(edge, (dodeca[i] - dodeca[j]).norm());
  for (int i = 0; i < nd; ++i)
    for (int j = i + 1; j < nd; ++j) {
      if ((dodeca[i] - dodeca[j]).norm() > edge + tol::match) continue;
      const Eigen::Vector3d mid = (dodeca[i] + dodeca[j]).normalized();
      std::vector<std::pair<double, int>> by_angle;
      for (std::size_t k = 0; k < icosa.size(); ++k) by_angle.push_back({-mid.dot(icosa[k].normalized()), static_cast<int>(k)});
      std::sort(by_angle.begin(), by_angle.end());
      for (int t = 0; t < 2; ++t) {
        std::vector<int> face{i, j, nd + by_angle[static_cast<std::size_t>(t)].second};
        const Eigen::Vector3d &a = p.vertices[face[0]], &b = p.vertices[face[1]], &c = p.vertices[face[2]];
        if ((b - a).cross(c - a).dot(a + b + c) < 0) std::swap(face[1], face[2]);
        p.faces.push_back(face);
      }
    }
  return p;
}

/// The projected solids for rank 4, 5 or 6 as drawn from the cube and root orbits.
inline std::vector<NamedSolid> named_solids(int rank) {
  const RootDatum d = build_root_datum(rank);
  std::vector<NamedSolid> out;
  auto add = [&](std::string name, const Projection3d& proj, std::vector<int> sub, Polyhedron shape) {
    NamedSolid s{std::move(name), proj.points, classify_solid(proj.points, std::move(sub)), std::move(shape)};
    out.push_back(std::move(s));
  };
  auto hull_of = [](const Projection3d& p) { return convex_hull_3d(p.points); };

  if (rank == 4) {
    const Frame t = b4_t_basis();
    const auto proj = project_to_3d(voronoi_cell(d).vertices, t.par_basis(), true);
    add("rhombic_dodecahedron", proj, {proj.at_origin, static_cast<int>(proj.points.size())}, hull_of(proj));
  } else if (rank == 5) {
    const Frame f = b5_fivefold_frame().frame;
    const std::vector<int> idx{0, 3, 4};
    const Eigen::MatrixXd triple = f.rows(idx);
    const auto short_roots = orbit(d, std::vector<int>{1, 0, 0, 0, 0}).points;
    const auto anti = project_to_3d(short_roots, triple);
    add("pentagonal_antiprism", anti, {10}, hull_of(anti));
    // The D_5d orbits of cube vertices that land on the hull of the projected cube.
    const auto cube = voronoi_cell(d).vertices;
    const Polyhedron shadow = hull_of(project_to_3d(cube, triple));
    std::vector<HalfIntVector> outer;
    std::vector<int> sizes;
    for (const auto& part : decompose_orbits(cube, d5d_generators(d).list())) {
      const Eigen::Vector3d p = triple * part.front().to_real();
      if (std::none_of(shadow.vertices.begin(), shadow.vertices.end(),
                       [&](const Eigen::Vector3d& q) { return (q - p).norm() <= tol::numeric; }))
        continue;
      outer.insert(outer.end(), part.begin(), part.end());
      sizes.push_back(static_cast<int>(part.size()));
    }
    const auto proj = project_to_3d(outer, triple);
    add("rhombic_icosahedron", proj, sizes, hull_of(proj));
  } else if (rank == 6) {
    const Frame f = b6_h3_frame().frame;
    const Eigen::MatrixXd par = f.par_basis();
    const auto icosa = project_to_3d(orbit(d, std::vector<int>{1, 0, 0, 0, 0, 0}).points, par);
    add("icosahedron", icosa, {12}, hull_of(icosa));

    const auto long_roots = project_to_3d(orbit(d, std::vector<int>{0, 1, 0, 0, 0, 0}).points, par);
    Projection3d inner, outer;
    for (const auto& p : long_roots.points) (p.norm() < 1.0 ? inner : outer).points.push_back(p);
    inner.multiplicity.assign(inner.points.size(), 1);
    outer.multiplicity.assign(outer.points.size(), 1);
    add("icosidodecahedron_inner", inner, {30}, hull_of(inner));
    add("icosidodecahedron_outer", outer, {30}, hull_of(outer));

    const auto dec = b6_cube_decomposition();
    auto union_of = [&](int i, int j) {
      std::vector<HalfIntVector> u = dec.orbits[static_cast<std::size_t>(i)];
      u.insert(u.end(), dec.orbits[static_cast<std::size_t>(j)].begin(), dec.orbits[static_cast<std::size_t>(j)].end());
      return project_to_3d(u, par);
    };
    const auto tri = union_of(0, 2);
    add("rhombic_triacontahedron", tri, {20, 12}, hull_of(tri));
    const auto ii = project_to_3d(dec.orbits[1], par);
    const auto iv = project_to_3d(dec.orbits[3], par);
    const auto star = union_of(1, 3);
    add("dodecahedral_star", star, {12, 20}, star_polyhedron(ii.points, iv.points));
  } else {
    throw RankError("solids are available for rank 4, 5 and 6");
  }
  return out;
}

} // namespace coxcut

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "constants.hpp"
#include "errors.hpp"

namespace coxcut {

/// normal . y <= offset, unit normal.
struct HalfSpace {
  Eigen::VectorXd normal;
  double offset = 0.0;
};

namespace detail {

inline void for_each_subset(int n, int k, auto&& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline bool parallel(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::abs(a.dot(b)) > 1.0 - tol::exact;
}

} // namespace detail

/// Facets of the convex hull of `points`, where the points are the image of a
/// cube under a linear map with columns `generators` (a zonotope).
///
/// Every facet of a d-dimensional zonotope is orthogonal to some d-1 linearly
/// independent generators, so the candidate normals are their orthogonal
/// complements; offsets are the support function over `points`.
inline std::vector<HalfSpace> zonotope_facets(const Eigen::MatrixXd& generators,
                                              const std::vector<Eigen::VectorXd>& points) {
  const int d = static_cast<int>(generators.rows());
  const int m = static_cast<int>(generators.cols());
  if (d < 1) throw Error("zonotope_facets: empty space");
  std::vector<Eigen::VectorXd> normals;
  if (d == 1) {
    normals.push_back(Eigen::VectorXd::Ones(1));
  } else {
    detail::for_each_subset(m, d - 1, [&](const std::vector<int>& idx) {
      Eigen::MatrixXd sub(d - 1, d);
      for (int k = 0; k < d - 1; ++k) sub.row(k) = generators.col(idx[k]).transpose();
      Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
      lu.setThreshold(1e-10);
      if (lu.rank() != d - 1) return;
      Eigen::VectorXd nrm = lu.kernel().col(0);
      nrm.normalize();
      for (const auto& q : normals)
        if (detail::parallel(q, nrm)) return;
      normals.push_back(nrm);
    });
  }
  std::vector<HalfSpace> out;
  for (const auto& nrm : normals) {
    for (double sgn : {1.0, -1.0}) {
      Eigen::VectorXd u = sgn * nrm;
      double off = -1e300;
      for (const auto& p : points) off = std::max(off, u.dot(p));
      out.push_back({u, off});
    }
  }
  return out;
}

/// Points of `points` that are vertices of their hull described by `facets`:
/// boundary points whose active facet normals span the whole space.
inline std::vector<Eigen::VectorXd> hull_vertices(const std::vector<Eigen::VectorXd>& points,
                                                  const std::vector<HalfSpace>& facets, double tol = tol::numeric) {
  std::vector<Eigen::VectorXd> out;
  if (points.empty()) return out;
  const auto d = points.front().size();
  for (const auto& p : points) {
    std::vector<Eigen::VectorXd> active;
    for (const auto& f : facets)
      if (std::abs(f.normal.dot(p) - f.offset) <= tol) active.push_back(f.normal);
    if (static_cast<Eigen::Index>(active.size()) < d) continue;
    Eigen::MatrixXd a(static_cast<Eigen::Index>(active.size()), d);
    for (std::size_t k = 0; k < active.size(); ++k) a.row(static_cast<Eigen::Index>(k)) = active[k].transpose();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    lu.setThreshold(1e-10);
    if (lu.rank() == d) {
      bool dup = false;
      for (const auto& q : out) dup = dup || (q - p).norm() <= tol;
      if (!dup) out.push_back(p);
    }
  }
  return out;
}

/// Convex polyhedron with polygonal faces, vertices indexed into `vertices`.
struct Polyhedron {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::vector<int>> faces;  // counter-clockwise seen from outside
};

/// Convex hull of a small 3D point set (a few hundred points at most).
///
/// Every supporting plane through three input points is collected once;
/// coplanar points end up in a single polygonal face, so rhombic faces stay
/// quadrilaterals. Points interior to faces or edges are not vertices.
inline Polyhedron convex_hull_3d(const std::vector<Eigen::Vector3d>& input, double tol = tol::numeric,
                                 double plane_tol = tol::match) {
  std::vector<Eigen::Vector3d> pts;
  for (const auto& p : input) {
    bool dup = false;
    for (const auto& q : pts) dup = dup || (p - q).norm() <= tol;
    if (!dup) pts.push_back(p);
  }
  const int n = static_cast<int>(pts.size());
  if (n < 4) throw Error("convex_hull_3d: need at least four distinct points");

  struct Plane {
    Eigen::Vector3d normal;
    double offset;
  };
  std::vector<Plane> planes;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Eigen::Vector3d nrm = (pts[j] - pts[i]).cross(pts[k] - pts[i]);
        if (nrm.norm() <= tol) continue;
        nrm.normalize();
        double off = nrm.dot(pts[i]);
        bool above = false, below = false;
        for (const auto& p : pts) {
          const double s = nrm.dot(p) - off;
          above = above || s > tol;
          below = below || s < -tol;
        }
        if (above && below) continue;
        if (above) {
          nrm = -nrm;
          off = -off;
        }
        bool known = false;
        for (const auto& q : planes)
          known = known || ((q.normal - nrm).norm() <= plane_tol && std::abs(q.offset - off) <= plane_tol);
        if (!known) planes.push_back({nrm, off});
      }
  if (planes.size() < 4) throw Error("convex_hull_3d: points are coplanar");

  // A point is a hull vertex when it lies on at least three faces with independent normals.
  std::vector<int> vertex_id(n, -1);
  Polyhedron out;
  for (int i = 0; i < n; ++i) {
    Eigen::Matrix3d sum = Eigen::Matrix3d::Zero();
    for (const auto& pl : planes)
      if (std::abs(pl.normal.dot(pts[i]) - pl.offset) <= tol) sum += pl.normal * pl.normal.transpose();
    if (Eigen::FullPivLU<Eigen::Matrix3d>(sum).setThreshold(1e-10).rank() == 3) {
      vertex_id[i] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(pts[i]);
    }
  }

  for (const auto& pl : planes) {
    std::vector<int> on;
    for (int i = 0; i < n; ++i)
      if (vertex_id[i] >= 0 && std::abs(pl.normal.dot(pts[i]) - pl.offset) <= tol) on.push_back(vertex_id[i]);
    Eigen::Vector3d c = Eigen::Vector3d::Zero();
    for (int v : on) c += out.vertices[v];
    c /= static_cast<double>(on.size());
    const Eigen::Vector3d e1 = (out.vertices[on.front()] - c).normalized();
    const Eigen::Vector3d e2 = pl.normal.cross(e1);
    std::sort(on.begin(), on.end(), [&](int a, int b) {
      const Eigen::Vector3d da = out.vertices[a] - c, db = out.vertices[b] - c;
      return std::atan2(da.dot(e2), da.dot(e1)) < std::atan2(db.dot(e2), db.dot(e1));
    });
    out.faces.push_back(std::move(on));
  }
  return out;
}

} // namespace coxcut

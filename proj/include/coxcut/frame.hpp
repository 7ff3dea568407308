#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "constants.hpp"
#include "errors.hpp"
#include "weyl.hpp"

namespace coxcut {

/// Ordered orthonormal basis of R^n split into parallel, perpendicular and
/// invariant directions. Row i of `basis` is the (i+1)-th unit vector in
/// l-basis coordinates. Index sets are 0-based.
struct Frame {
  std::string id;
  Eigen::MatrixXd basis;
  std::vector<int> par;
  std::vector<int> perp;
  std::vector<int> invariant;
  std::vector<int> exponents;  // Coxeter exponent of each row, when the frame comes from the Cartan matrix

  // Cartan eigen-data behind a Coxeter-plane frame; empty otherwise.
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;  // column i = X_i, last component 1

  int dim() const { return static_cast<int>(basis.cols()); }

  Eigen::MatrixXd rows(std::span<const int> idx) const {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(idx.size()), basis.cols());
    for (std::size_t k = 0; k < idx.size(); ++k) m.row(static_cast<Eigen::Index>(k)) = basis.row(idx[k]);
    return m;
  }
  Eigen::MatrixXd par_basis() const { return rows(par); }
  Eigen::MatrixXd perp_basis() const { return rows(perp); }

  /// Directions the acceptance window lives in: perpendicular, then invariant.
  std::vector<int> window_indices() const {
    std::vector<int> w = perp;
    w.insert(w.end(), invariant.begin(), invariant.end());
    return w;
  }
  Eigen::MatrixXd window_basis() const { return rows(window_indices()); }

  /// Components of an l-basis vector along every basis vector.
  Eigen::VectorXd components(const Eigen::VectorXd& v) const { return basis * v; }
};

/// max |<x_i, x_j> - delta_ij|
inline double orthonormality_error(const Eigen::MatrixXd& rows) {
  const Eigen::MatrixXd g = rows * rows.transpose();
  return (g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

inline void require_orthonormal(const Eigen::MatrixXd& rows, const char* what, double tol = tol::numeric) {
  if (orthonormality_error(rows) > tol) throw FrameError(std::string(what) + ": basis vectors are not orthonormal");
}

struct EigenPair {
  int exponent;
  double value;
  Eigen::VectorXd vector;  // last component 1
};

/// Eigen-decomposition of the Cartan matrix, ordered by Coxeter exponent
/// m = 1, 3, ..., 2n-1 (increasing eigenvalue 2[1 - cos(m pi / h)]).
///
/// A = K E with K the root Gram matrix and E = diag(2 / (alpha_j, alpha_j)), so
/// A is similar to the symmetric E^1/2 K E^1/2 and X = E^-1/2 y.
inline std::vector<EigenPair> cartan_eigensystem(const RootDatum& d) {
  const int n = d.rank;
  Eigen::VectorXd half_norm(n);
  for (int j = 0; j < n; ++j) half_norm(j) = d.simple_roots.row(j).squaredNorm() / 2.0;
  const Eigen::VectorXd s = half_norm.cwiseSqrt();
  const Eigen::MatrixXd sym = s.cwiseInverse().asDiagonal() * d.cartan * s.asDiagonal();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (sym + sym.transpose()));
  if (solver.info() != Eigen::Success) throw NumericError("Cartan eigen-solver did not converge");

  std::vector<EigenPair> out;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd x = s.asDiagonal() * solver.eigenvectors().col(i);
    if (std::abs(x(n - 1)) < tol::exact) throw NumericError("Cartan eigenvector with vanishing last component");
    x /= x(n - 1);
    const double lambda = solver.eigenvalues()(i);
    const double residual = (d.cartan * x - lambda * x).norm();
    if (residual > tol::numeric) throw NumericError("Cartan eigenvector residual " + std::to_string(residual));
    out.push_back({2 * i + 1, lambda, std::move(x)});
  }
  return out;
}

/// x_i = (h lambda_i)^-1/2 sum_j X_ji 2 alpha_j / (alpha_j, alpha_j).
///
/// Pairs (x_i, x_{n+1-i}) span the Coxeter planes; (x_1, x_n) is parallel space,
/// the remaining pairs perpendicular space, and for odd n the unpaired middle
/// vector is an invariant direction.
inline Frame coxeter_plane_frame(const RootDatum& d) {
  const int n = d.rank;
  const double h = d.coxeter_number();
  const auto eig = cartan_eigensystem(d);

  Frame f;
  f.id = "coxeter";
  f.basis.resize(n, n);
  f.eigenvalues.resize(n);
  f.eigenvectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (int j = 0; j < n; ++j) x += eig[i].vector(j) * d.coroot(j + 1);
    f.basis.row(i) = x.transpose() / std::sqrt(h * eig[i].value);
    f.exponents.push_back(eig[i].exponent);
    f.eigenvalues(i) = eig[i].value;
    f.eigenvectors.col(i) = eig[i].vector;
  }
  f.par = {0, n - 1};
  for (int i = 1; i < n / 2; ++i) {
    f.perp.push_back(i);
    f.perp.push_back(n - 1 - i);
  }
  std::sort(f.perp.begin(), f.perp.end());
  if (n % 2) f.invariant = {n / 2};
  return f;
}

/// Simple roots of the dihedral diagram I_2(h / m_i) in the plane (x_i, x_{n+1-i}).
struct PlaneRoots {
  int index = 0;  // 1-based i
  Eigen::VectorXd beta_i;
  Eigen::VectorXd beta_partner;  // beta_{n+1-i}
};

inline PlaneRoots plane_roots(const Frame& f, int i) {
  const int n = f.dim();
  if (f.exponents.empty()) throw FrameError("plane_roots needs a Coxeter-plane frame");
  if (i < 1 || 2 * i > n || i == n + 1 - i) throw IndexError("plane index " + std::to_string(i) + " is not a paired index");
  const double h = 2.0 * n;
  const double angle = f.exponents[i - 1] * pi / (2.0 * h);
  const Eigen::VectorXd xi = f.basis.row(i - 1).transpose();
  const Eigen::VectorXd xj = f.basis.row(n - i).transpose();
  PlaneRoots p;
  p.index = i;
  p.beta_i = std::sqrt(2.0) * (std::sin(angle) * xi + std::cos(angle) * xj);
  p.beta_partner = std::sqrt(2.0) * (std::sin(angle) * xi - std::cos(angle) * xj);
  return p;
}

/// Lattice vector sum_{j<n} a_j omega_j + 2 a_n omega_n in l-coordinates.
inline std::vector<int> weight_to_lattice(std::span<const int> a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> x(n, 0);
  int running = 0;
  for (int j = n - 1; j >= 0; --j) {
    running += a[j];
    x[j] = running;
  }
  return x;
}

/// Inverse of weight_to_lattice.
inline std::vector<int> lattice_to_weight(std::span<const int> x) {
  const int n = static_cast<int>(x.size());
  std::vector<int> a(n);
  for (int j = 0; j < n; ++j) a[j] = x[j] - (j + 1 < n ? x[j + 1] : 0);
  return a;
}

/// p_i = (h lambda_i)^-1/2 (sum_{j<n} a_j X_ji + 2 a_n) for weight coefficients a.
inline Eigen::VectorXd lattice_components(const RootDatum& d, const Frame& f, std::span<const int> a) {
  const int n = d.rank;
  if (static_cast<int>(a.size()) != n) throw RankError("lattice_components: tuple length does not match rank");
  if (f.eigenvectors.size() == 0) throw FrameError("lattice_components needs a Coxeter-plane frame");
  const double h = d.coxeter_number();
  Eigen::VectorXd p(n);
  for (int i = 0; i < n; ++i) {
    double s = 2.0 * a[n - 1];
    for (int j = 0; j + 1 < n; ++j) s += a[j] * f.eigenvectors(j, i);
    p(i) = s / std::sqrt(h * f.eigenvalues(i));
  }
  return p;
}

/// t_0..t_3 of the 4D cube: t_0 = (l_1+l_2+l_3+l_4)/2 is the invariant row,
/// t_1..t_3 carry the octahedral 3D space.
inline Frame b4_t_basis() {
  Frame f;
  f.id = "tbasis";
  f.basis.resize(4, 4);
  f.basis << 1, 1, 1, 1,   //
      1, -1, 1, -1,        //
      -1, 1, 1, -1,        //
      1, 1, -1, -1;
  f.basis *= 0.5;
  f.par = {1, 2, 3};
  f.invariant = {0};
  return f;
}

struct FiveFoldFrame {
  Frame frame;
  Eigen::MatrixXd b;  // l_i = sum_j b_ij x_j
};

/// Five-fold frame of B_5: x_1..x_4 from the A_4 Cartan eigenvectors, x_5 along
/// (1,1,1,1,1). Parallel plane (x_1, x_4), perpendicular space (x_2, x_3, x_5).
inline FiveFoldFrame b5_fivefold_frame() {
  const RootDatum d = build_root_datum(5);
  auto alpha = [&](int i) -> Eigen::VectorXd { return d.simple_roots.row(i - 1).transpose(); };
  const double s2 = std::sqrt(2.0);

  FiveFoldFrame out;
  Frame& f = out.frame;
  f.id = "fivefold";
  f.basis.resize(5, 5);
  f.basis.row(0) = (alpha(1) + tau * alpha(2) + tau * alpha(3) + alpha(4)) / std::sqrt(2.0 * (2.0 + sigma));
  f.basis.row(1) = (alpha(1) - sigma * alpha(2) + sigma * alpha(3) - alpha(4)) / ((2.0 + sigma) * s2);
  f.basis.row(2) = (alpha(1) + sigma * alpha(2) + sigma * alpha(3) + alpha(4)) / std::sqrt(2.0 * (2.0 + tau));
  f.basis.row(3) = (alpha(1) - tau * alpha(2) + tau * alpha(3) - alpha(4)) / ((2.0 + tau) * s2);
  f.basis.row(4) = (alpha(1) + 2 * alpha(2) + 3 * alpha(3) + 4 * alpha(4) + 5 * alpha(5)) / sqrt5;
  f.par = {0, 3};
  f.perp = {1, 2, 4};

  const double a = std::sqrt(2.0 + tau);
  const double b = std::sqrt(2.0 + sigma);
  out.b.resize(5, 5);
  out.b << a, tau, b, -sigma, s2,   //
      b, sigma, -a, -tau, s2,       //
      0, -2, 0, 2, s2,              //
      -b, sigma, a, -tau, s2,       //
      -a, tau, -b, -sigma, s2;
  out.b /= std::sqrt(10.0);
  return out;
}

struct IcosahedralFrame {
  Frame frame;
  Eigen::MatrixXd m;  // l_i = sum_j m_ij y_j, y = (x_1, x_2, x_3, x'_1, x'_2, x'_3)
};

/// Orthogonal frame that block-diagonalizes the W(H_3) generators inside W(B_6).
/// Parallel space is the unprimed triple, perpendicular space the primed one.
inline IcosahedralFrame b6_h3_frame() {
  IcosahedralFrame out;
  out.m.resize(6, 6);
  out.m << -1, -tau, 0, -tau, 1, 0,  //
      1, -tau, 0, tau, 1, 0,         //
      0, -1, -tau, 0, -tau, 1,       //
      0, -1, tau, 0, -tau, -1,       //
      -tau, 0, -1, 1, 0, -tau,       //
      tau, 0, -1, -1, 0, -tau;
  out.m /= std::sqrt(2.0 * (2.0 + tau));

  Frame& f = out.frame;
  f.id = "h3";
  f.basis = out.m.transpose();
  f.par = {0, 1, 2};
  f.perp = {3, 4, 5};
  return out;
}

struct IcosahedralIntegers {
  std::array<long, 6> n{};
  Eigen::VectorXd components;  // (x_1, x_2, x_3, x'_1, x'_2, x'_3) components
};

/// Integers n_1..n_6 writing the lattice vector of weight coefficients a as
/// ((n_1 + n_2 tau) x_1 + (n_3 + n_4 tau) x_2 + (n_5 + n_6 tau) x_3
///  + tau (n_1 + n_2 sigma) x'_1 + tau (n_3 + n_4 sigma) x'_2 + tau (n_5 + n_6 sigma) x'_3) / sqrt(2(2+tau)).
inline IcosahedralIntegers b6_integer_coords(std::span<const int> a) {
  if (a.size() != 6) throw RankError("b6_integer_coords expects 6 coefficients");
  const long a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a5 = a[4], a6 = a[5];
  IcosahedralIntegers r;
  r.n = {-a1, -a5, -(a3 + 2 * a4 + 2 * a5 + 2 * a6), -(a1 + 2 * a2 + 2 * a3 + 2 * a4 + 2 * a5 + 2 * a6),
         -(a5 + 2 * a6), -a3};
  const auto& n = r.n;
  const double k = 1.0 / std::sqrt(2.0 * (2.0 + tau));
  r.components.resize(6);
  r.components << n[0] + n[1] * tau, n[2] + n[3] * tau, n[4] + n[5] * tau,  //
      tau * (n[0] + n[1] * sigma), tau * (n[2] + n[3] * sigma), tau * (n[4] + n[5] * sigma);
  r.components *= k;
  return r;
}

/// Orthonormal bases of the 2-, 3- and 5-fold planes, in (x_1, x_2, x_3) coordinates
/// of the icosahedral parallel space.
struct SymmetryPlanes {
  std::array<Eigen::Vector3d, 2> twofold;
  std::array<Eigen::Vector3d, 2> threefold;
  std::array<Eigen::Vector3d, 2> fivefold;
  std::array<Eigen::Vector3d, 3> beta;  // H_3 simple roots

  const std::array<Eigen::Vector3d, 2>& plane(int fold) const {
    switch (fold) {
      case 2: return twofold;
      case 3: return threefold;
      case 5: return fivefold;
      default: throw IndexError("symmetry plane fold must be 2, 3 or 5");
    }
  }
};

inline SymmetryPlanes h3_symmetry_planes(const Frame& f) {
  if (f.id != "h3") throw FrameError("h3_symmetry_planes needs the icosahedral frame");
  const double s2 = std::sqrt(2.0);
  SymmetryPlanes p;
  p.beta = {Eigen::Vector3d(-s2, 0, 0), Eigen::Vector3d(1, sigma, tau) / s2, Eigen::Vector3d(0, 0, -s2)};
  p.twofold = {Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 0, 1)};
  p.threefold = {Eigen::Vector3d(-1, sigma, tau) / 2.0, Eigen::Vector3d(3, sigma, tau) / (-2.0 * std::sqrt(3.0))};
  p.fivefold = {Eigen::Vector3d(tau, -1, sigma) / 2.0, Eigen::Vector3d(1, sigma, 2 + tau) / (2.0 * std::sqrt(2.0 + tau))};
  return p;
}

/// Frame by CLI name for a given rank.
inline Frame frame_by_name(const std::string& name, int rank) {
  if (name == "coxeter") return coxeter_plane_frame(build_root_datum(rank));
  if (name == "fivefold") {
    if (rank != 5) throw RankError("fivefold frame requires rank 5");
    return b5_fivefold_frame().frame;
  }
  if (name == "h3") {
    if (rank != 6) throw RankError("h3 frame requires rank 6");
    return b6_h3_frame().frame;
  }
  if (name == "tbasis") {
    if (rank != 4) throw RankError("tbasis frame requires rank 4");
    return b4_t_basis();
  }
  throw FrameError("unknown frame '" + name + "'");
}

} // namespace coxcut

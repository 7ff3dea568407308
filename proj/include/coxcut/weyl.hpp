#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"
#include "half_int_vector.hpp"
#include "signed_permutation.hpp"

namespace coxcut {

inline constexpr int min_rank = 2;
inline constexpr int max_rank = 8;

/// Root datum of B_n in the orthonormal l-basis.
///
/// Row i of `simple_roots` / `weights` is alpha_{i+1} / omega_{i+1}. The Cartan
/// matrix uses A_ij = 2(alpha_i, alpha_j) / (alpha_j, alpha_j), so for B_2 it is
/// [[2,-2],[-1,2]], and the metric is G_ij = (A^-1)_ij (alpha_j, alpha_j) / 2.
struct RootDatum {
  int rank = 0;
  Eigen::MatrixXd simple_roots;
  Eigen::MatrixXd cartan;
  Eigen::MatrixXd metric;
  Eigen::MatrixXd weights;
  std::vector<HalfIntVector> exact_roots;
  std::vector<HalfIntVector> exact_weights;
  std::vector<GroupElement> reflections;  // r_1..r_n

  int coxeter_number() const { return 2 * rank; }

  /// 2 alpha_i / (alpha_i, alpha_i), 1-based.
  Eigen::VectorXd coroot(int i) const {
    const Eigen::VectorXd a = simple_roots.row(i - 1).transpose();
    return 2.0 * a / a.squaredNorm();
  }

  /// r_i, 1-based.
  const GroupElement& reflection(int i) const {
    if (i < 1 || i > rank) throw IndexError("reflection index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
    return reflections[static_cast<std::size_t>(i - 1)];
  }
};

inline RootDatum build_root_datum(int n) {
  if (n < min_rank || n > max_rank)
    throw RankError("rank " + std::to_string(n) + " outside supported range " + std::to_string(min_rank) + ".." +
                    std::to_string(max_rank));
  RootDatum d;
  d.rank = n;

  // alpha_i = l_i - l_{i+1}, alpha_n = l_n
  for (int i = 0; i < n; ++i) {
    std::vector<int> t(n, 0);
    t[i] = 2;
    if (i + 1 < n) t[i + 1] = -2;
    d.exact_roots.emplace_back(std::move(t));
  }
  // omega_i = l_1 + ... + l_i, omega_n = (l_1 + ... + l_n) / 2
  for (int i = 0; i < n; ++i) {
    std::vector<int> t(n, 0);
    for (int j = 0; j <= i; ++j) t[j] = (i + 1 < n) ? 2 : 1;
    d.exact_weights.emplace_back(std::move(t));
  }

  d.simple_roots.resize(n, n);
  for (int i = 0; i < n; ++i) d.simple_roots.row(i) = d.exact_roots[i].to_real().transpose();

  d.cartan.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double aj = d.simple_roots.row(j).squaredNorm();
      d.cartan(i, j) = 2.0 * d.simple_roots.row(i).dot(d.simple_roots.row(j)) / aj;
    }

  const Eigen::MatrixXd inv = d.cartan.inverse();
  d.weights = inv * d.simple_roots;
  d.metric.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.metric(i, j) = inv(i, j) * d.simple_roots.row(j).squaredNorm() / 2.0;

  for (int i = 1; i < n; ++i) d.reflections.push_back(GroupElement::transposition(n, i, i + 1));
  d.reflections.push_back(GroupElement::sign_flip(n, n));
  return d;
}

/// Reflection of `v` in the hyperplane orthogonal to alpha_i (1-based).
inline Eigen::VectorXd apply_generator(const RootDatum& d, int i, const Eigen::VectorXd& v) {
  if (i < 1 || i > d.rank) throw IndexError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(d.rank));
  if (v.size() != d.rank) throw RankError("apply_generator: vector length does not match rank");
  const Eigen::VectorXd a = d.simple_roots.row(i - 1).transpose();
  return v - 2.0 * v.dot(a) / a.squaredNorm() * a;
}

/// Deduplicated, lexicographically sorted orbit of a (1/2)Z^n point.
struct OrbitSet {
  std::vector<HalfIntVector> points;
  std::vector<int> seed;  // highest-weight label a_1..a_n; empty for arbitrary seeds

  std::size_t size() const { return points.size(); }
  bool contains(const HalfIntVector& v) const { return std::binary_search(points.begin(), points.end(), v); }

  /// "(0001)" style label; comma separated once any entry exceeds 9.
  std::string label() const {
    bool wide = std::any_of(seed.begin(), seed.end(), [](int a) { return a > 9; });
    std::string s = "(";
    for (std::size_t i = 0; i < seed.size(); ++i) {
      if (wide && i) s += ',';
      s += std::to_string(seed[i]);
    }
    return s + ")";
  }
};

/// Breadth-first orbit of `seed` under the group generated by `gens`.
inline std::vector<HalfIntVector> orbit_of(const HalfIntVector& seed, std::span<const GroupElement> gens) {
  std::set<HalfIntVector> seen{seed};
  std::deque<HalfIntVector> queue{seed};
  while (!queue.empty()) {
    HalfIntVector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      HalfIntVector w = g.apply(v);
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  return {seen.begin(), seen.end()};
}

/// Lambda = sum a_i omega_i, exact.
inline HalfIntVector highest_weight(const RootDatum& d, std::span<const int> a) {
  if (static_cast<int>(a.size()) != d.rank) throw RankError("highest weight must have rank entries");
  HalfIntVector lambda = HalfIntVector::zero(static_cast<std::size_t>(d.rank));
  for (int i = 0; i < d.rank; ++i) {
    if (a[i] < 0) throw Error("highest weight coefficients must be non-negative");
    lambda += a[i] * d.exact_weights[i];
  }
  return lambda;
}

/// W(B_n) orbit (a_1 ... a_n)_{B_n}.
inline OrbitSet orbit(const RootDatum& d, std::span<const int> a) {
  OrbitSet o;
  o.points = orbit_of(highest_weight(d, a), d.reflections);
  o.seed.assign(a.begin(), a.end());
  return o;
}

/// R_1 = r_1 r_3 ..., R_2 = r_2 r_4 ... (odd / even indexed reflections).
///
/// Each factor set is pairwise commuting, so R_1 and R_2 are involutions and
/// R_1 R_2 is a Coxeter element of order 2n for every n.
inline std::pair<GroupElement, GroupElement> dihedral_generators(const RootDatum& d) {
  GroupElement r1 = GroupElement::identity(d.rank);
  GroupElement r2 = GroupElement::identity(d.rank);
  for (int i = 1; i <= d.rank; ++i) {
    if (i % 2) r1 = r1 * d.reflection(i);
    else r2 = r2 * d.reflection(i);
  }
  return {r1, r2};
}

/// Coxeter element r_1 r_2 ... r_n.
inline GroupElement coxeter_element(const RootDatum& d) {
  return product(d.reflections, d.rank);
}

/// Generators r'_1..r'_n of W(D_n): r'_i = r_i for i < n, r'_n = r_n r_{n-1} r_n.
inline std::vector<GroupElement> dn_generators(const RootDatum& d) {
  if (d.rank < 3) throw RankError("W(D_n) generators need n >= 3");
  std::vector<GroupElement> g(d.reflections.begin(), d.reflections.end() - 1);
  g.push_back(d.reflection(d.rank) * d.reflection(d.rank - 1) * d.reflection(d.rank));
  return g;
}

struct TripleGenerators {
  GroupElement r1, r2, r3;
  std::vector<GroupElement> list() const { return {r1, r2, r3}; }
};

/// W(H_3) inside W(D_6): R_1 = r_1 r_5, R_2 = r_2 r_4, R_3 = r_3 r_6 r_5 r_6.
inline TripleGenerators h3_generators(const RootDatum& d) {
  if (d.rank != 6) throw RankError("H_3 generators are defined for rank 6 only");
  return {d.reflection(1) * d.reflection(5), d.reflection(2) * d.reflection(4),
          d.reflection(3) * d.reflection(6) * d.reflection(5) * d.reflection(6)};
}

/// The conjugate embedding obtained from the D_6 diagram symmetry:
/// R_1 = r_1 r_6 r_5 r_6, R_2 = r_2 r_4, R_3 = r_3 r_5.
inline TripleGenerators h3_generators_alternate(const RootDatum& d) {
  if (d.rank != 6) throw RankError("H_3 generators are defined for rank 6 only");
  return {d.reflection(1) * d.reflection(6) * d.reflection(5) * d.reflection(6), d.reflection(2) * d.reflection(4),
          d.reflection(3) * d.reflection(5)};
}

/// D_5d = W(H_2) x C_2 inside W(B_5): R_1 = r_1 r_3, R_2 = r_2 r_4, R_3 = (r_1 r_2 r_3 r_4 r_5)^5 = -1.
inline TripleGenerators d5d_generators(const RootDatum& d) {
  if (d.rank != 5) throw RankError("D_5d generators are defined for rank 5 only");
  return {d.reflection(1) * d.reflection(3), d.reflection(2) * d.reflection(4), coxeter_element(d).pow(5)};
}

} // namespace coxcut

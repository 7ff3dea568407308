#pragma once

#include <cstdlib>
#include <deque>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "errors.hpp"
#include "half_int_vector.hpp"

namespace coxcut {

/// An element of W(B_n) as a signed permutation of the orthonormal axes l_1..l_n.
///
/// `images()[j]` is a signed 1-based axis index: the element sends l_{j+1} to
/// sign(images[j]) * l_{|images[j]|}. Products follow operator notation,
/// `(g * h)(v) == g(h(v))`, so `r1 * r3` applies r3 first.
class GroupElement {
public:
  GroupElement() = default;

  explicit GroupElement(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int s : images_) {
      const int k = std::abs(s);
      if (k < 1 || k > static_cast<int>(images_.size()) || seen[k - 1])
        throw Error("GroupElement: images are not a signed permutation");
      seen[k - 1] = true;
    }
  }

  static GroupElement identity(int n) {
    std::vector<int> im(n);
    for (int j = 0; j < n; ++j) im[j] = j + 1;
    return GroupElement(std::move(im));
  }
  static GroupElement minus_identity(int n) {
    std::vector<int> im(n);
    for (int j = 0; j < n; ++j) im[j] = -(j + 1);
    return GroupElement(std::move(im));
  }
  /// l_i <-> l_j (1-based).
  static GroupElement transposition(int n, int i, int j) {
    auto g = identity(n);
    std::swap(g.images_[i - 1], g.images_[j - 1]);
    return g;
  }
  /// l_i <-> -l_j (1-based).
  static GroupElement negated_transposition(int n, int i, int j) {
    auto g = identity(n);
    g.images_[i - 1] = -j;
    g.images_[j - 1] = -i;
    return g;
  }
  /// l_i -> -l_i (1-based).
  static GroupElement sign_flip(int n, int i) {
    auto g = identity(n);
    g.images_[i - 1] = -i;
    return g;
  }

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    if (g.rank() != h.rank()) throw RankError("GroupElement: rank mismatch in product");
    std::vector<int> im(h.images_.size());
    for (std::size_t j = 0; j < im.size(); ++j) {
      const int s = h.images_[j];
      const int t = g.images_[std::abs(s) - 1];
      im[j] = s > 0 ? t : -t;
    }
    GroupElement r;
    r.images_ = std::move(im);
    return r;
  }

  GroupElement inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t j = 0; j < im.size(); ++j) {
      const int s = images_[j];
      im[std::abs(s) - 1] = s > 0 ? static_cast<int>(j + 1) : -static_cast<int>(j + 1);
    }
    GroupElement r;
    r.images_ = std::move(im);
    return r;
  }

  GroupElement pow(int k) const {
    GroupElement r = identity(rank());
    GroupElement b = k >= 0 ? *this : inverse();
    for (int e = std::abs(k); e > 0; e >>= 1) {
      if (e & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

  bool is_identity() const {
    for (std::size_t j = 0; j < images_.size(); ++j)
      if (images_[j] != static_cast<int>(j + 1)) return false;
    return true;
  }

  /// Smallest k >= 1 with g^k = 1.
  int order() const {
    GroupElement p = *this;
    for (int k = 1;; ++k) {
      if (p.is_identity()) return k;
      p = p * *this;
    }
  }

  HalfIntVector apply(const HalfIntVector& v) const {
    std::vector<int> out(v.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
      const int s = images_[j];
      out[std::abs(s) - 1] = s > 0 ? v.twice(j) : -v.twice(j);
    }
    return HalfIntVector(std::move(out));
  }

  std::vector<int> apply(std::span<const int> v) const {
    std::vector<int> out(v.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
      const int s = images_[j];
      out[std::abs(s) - 1] = s > 0 ? v[j] : -v[j];
    }
    return out;
  }

  Eigen::VectorXd apply(const Eigen::VectorXd& v) const {
    Eigen::VectorXd out(v.size());
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      const int s = images_[j];
      out(std::abs(s) - 1) = s > 0 ? v(j) : -v(j);
    }
    return out;
  }

  /// Orthogonal matrix in the l-basis; column j is the image of l_{j+1}.
  Eigen::MatrixXd matrix() const {
    const int n = rank();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
      const int s = images_[j];
      m(std::abs(s) - 1, j) = s > 0 ? 1.0 : -1.0;
    }
    return m;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t j = 0; j < images_.size(); ++j) os << (j ? " " : "") << images_[j];
    os << ']';
    return os.str();
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

private:
  std::vector<int> images_;
};

/// Product g_1 g_2 ... g_k in operator notation.
inline GroupElement product(std::span<const GroupElement> factors, int rank) {
  GroupElement r = GroupElement::identity(rank);
  for (const auto& f : factors) r = r * f;
  return r;
}

/// Breadth-first closure of the group generated by `gens`.
///
/// Throws once more than `limit` elements are reached; W(B_8) has 10321920
/// elements, so callers exploring full Weyl groups should size the limit.
inline std::vector<GroupElement> generate_group(std::span<const GroupElement> gens,
                                                std::size_t limit = 1u << 20) {
  if (gens.empty()) throw Error("generate_group: no generators");
  const int n = gens.front().rank();
  std::set<GroupElement> seen{GroupElement::identity(n)};
  std::deque<GroupElement> queue{GroupElement::identity(n)};
  while (!queue.empty()) {
    GroupElement g = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      GroupElement h = s * g;
      if (seen.insert(h).second) {
        if (seen.size() > limit) throw Error("generate_group: element limit exceeded");
        queue.push_back(std::move(h));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

} // namespace coxcut

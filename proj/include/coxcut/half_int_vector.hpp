#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace coxcut {

/// A vector with coordinates in (1/2)Z, stored as doubled integers.
///
/// Roots, weights, orbit points and Voronoi vertices of B_n all live in
/// (1/2)Z^n, so every comparison and group action on them is exact.
class HalfIntVector {
public:
  HalfIntVector() = default;

  /// Build from doubled coordinates: `twice[i] == 2 * x_i`.
  explicit HalfIntVector(std::vector<int> twice) : twice_(std::move(twice)) {}

  static HalfIntVector zero(std::size_t n) { return HalfIntVector(std::vector<int>(n, 0)); }

  static HalfIntVector from_integers(std::span<const int> x) {
    std::vector<int> t(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) t[i] = 2 * x[i];
    return HalfIntVector(std::move(t));
  }

  std::size_t size() const { return twice_.size(); }
  int twice(std::size_t i) const { return twice_[i]; }
  const std::vector<int>& twice() const { return twice_; }
  double operator[](std::size_t i) const { return 0.5 * twice_[i]; }

  Eigen::VectorXd to_real() const {
    Eigen::VectorXd v(static_cast<Eigen::Index>(twice_.size()));
    for (std::size_t i = 0; i < twice_.size(); ++i) v(static_cast<Eigen::Index>(i)) = 0.5 * twice_[i];
    return v;
  }

  /// 4 * |v|^2, an integer.
  long norm2_times4() const {
    long s = 0;
    for (int t : twice_) s += static_cast<long>(t) * t;
    return s;
  }

  /// Number of strictly negative coordinates.
  int minus_count() const {
    int c = 0;
    for (int t : twice_) c += t < 0 ? 1 : 0;
    return c;
  }

  HalfIntVector operator-() const {
    HalfIntVector r = *this;
    for (int& t : r.twice_) t = -t;
    return r;
  }
  HalfIntVector& operator+=(const HalfIntVector& o) {
    for (std::size_t i = 0; i < twice_.size(); ++i) twice_[i] += o.twice_[i];
    return *this;
  }
  HalfIntVector& operator*=(int k) {
    for (int& t : twice_) t *= k;
    return *this;
  }
  friend HalfIntVector operator+(HalfIntVector a, const HalfIntVector& b) { return a += b; }
  friend HalfIntVector operator-(HalfIntVector a, const HalfIntVector& b) { return a += -b; }
  friend HalfIntVector operator*(int k, HalfIntVector a) { return a *= k; }

  friend bool operator==(const HalfIntVector&, const HalfIntVector&) = default;
  friend auto operator<=>(const HalfIntVector&, const HalfIntVector&) = default;

  /// "(1,-1,0)" for integral vectors, "1/2(1,-1,1)" otherwise.
  std::string to_string() const {
    bool integral = true;
    for (int t : twice_) integral = integral && (t % 2 == 0);
    std::ostringstream os;
    if (!integral) os << "1/2";
    os << '(';
    for (std::size_t i = 0; i < twice_.size(); ++i) {
      if (i) os << ',';
      os << (integral ? twice_[i] / 2 : twice_[i]);
    }
    os << ')';
    return os.str();
  }

private:
  std::vector<int> twice_;
};

} // namespace coxcut

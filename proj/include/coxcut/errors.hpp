#pragma once

#include <stdexcept>
#include <string>

namespace coxcut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Rank outside the supported range, or an operation called for the wrong rank.
class RankError : public Error {
public:
  using Error::Error;
};

/// Generator or plane index out of range.
class IndexError : public Error {
public:
  using Error::Error;
};

/// Eigen-solver failure or a numeric post-condition that does not hold.
class NumericError : public Error {
public:
  using Error::Error;
};

/// A generator does not map a point set onto itself.
class ClosureError : public Error {
public:
  using Error::Error;
};

/// Basis vectors that were required to be orthonormal are not.
class FrameError : public Error {
public:
  using Error::Error;
};

/// Unsupported window configuration (perpendicular dimension, shift length...).
class WindowError : public Error {
public:
  using Error::Error;
};

/// Enumeration would scan more candidate tuples than the configured budget.
class BudgetError : public Error {
public:
  BudgetError(const std::string& what, double estimate, double budget)
      : Error(what), estimate_(estimate), budget_(budget) {}
  double estimate() const { return estimate_; }
  double budget() const { return budget_; }

private:
  double estimate_;
  double budget_;
};

} // namespace coxcut

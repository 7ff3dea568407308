#pragma once

#include <cmath>
#include <numbers>

namespace coxcut {

inline constexpr double pi = std::numbers::pi;
inline const double sqrt5 = std::sqrt(5.0);
/// Golden ratio (1+sqrt5)/2.
inline const double tau = (1.0 + sqrt5) / 2.0;
/// Algebraic conjugate of tau, (1-sqrt5)/2.
inline const double sigma = (1.0 - sqrt5) / 2.0;

namespace tol {
inline constexpr double exact = 1e-12;   // orthonormality, closed-form constants
inline constexpr double numeric = 1e-9;  // eigen residuals, projections, window slack
inline constexpr double match = 1e-6;    // point matching after rotations, edge directions
} // namespace tol

} // namespace coxcut

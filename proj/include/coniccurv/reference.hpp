#pragma once

#include <array>
#include <cstddef>

#include "coniccurv/projective.hpp"

namespace coniccurv {

/// Dense row-major matrix of order <= 6.
struct SmallMatrix {
  std::size_t n = 0;
  std::array<double, 36> entry{};

  double& at(std::size_t r, std::size_t c) { return entry[r * n + c]; }
  double at(std::size_t r, std::size_t c) const { return entry[r * n + c]; }
};

/// Implicit conic a x^2 + b xy + c y^2 + d x + e y + f = 0 (scale-free).
struct ImplicitConic {
  double a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  double evaluate(PlanePoint p) const {
    return a * p.x * p.x + b * p.x * p.y + c * p.y * p.y + d * p.x + e * p.y + f;
  }
};

struct ConicFit {
  ImplicitConic conic;
  double condition = 0.0;  // spectral condition of the 5x5 system matrix
};

/// 1/R of the circle through three non-collinear points; collinear input
/// yields 0 (the straight-line convention), flagged via *collinear.
double circle_curvature(PlanePoint p1, PlanePoint p2, PlanePoint p3, bool* collinear = nullptr);

/// Curvature at the middle node of the parametric quartic interpolating the
/// five points at Chebyshev nodes cos((5-2j)pi/10), j = -2..2 (ascending).
double poly4_curvature(const std::array<PlanePoint, 5>& pts);

/// Implicit conic through five points, normalized with f = 1 (recentering
/// fallback when the conic passes through the origin).
ConicFit conic5_fit(const std::array<PlanePoint, 5>& pts);

/// Curvature of the implicit conic at a point on it.
double conic5_curvature(const ImplicitConic& conic, PlanePoint at);

/// Spectral condition number sigma_max/sigma_min by one-sided Jacobi;
/// +infinity for an exactly singular matrix.
double spectral_condition(const SmallMatrix& m);

/// Singular values in descending order (one-sided Jacobi, 1e-12 relative).
std::array<double, 6> singular_values(const SmallMatrix& m);

/// Gaussian elimination with partial pivoting; throws SingularSystem.
void solve_linear(SmallMatrix m, std::array<double, 6>& rhs);

}  // namespace coniccurv

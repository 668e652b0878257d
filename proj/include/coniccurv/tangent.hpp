#pragma once

#include <array>
#include <vector>

#include "coniccurv/polyline.hpp"
#include "coniccurv/projective.hpp"

namespace coniccurv {

enum class TangentStatus { Ok, Degenerate, NotEstimated };

/// Per-point tangent lines with status flags. `reduced[i]` marks tangents
/// estimated across a convex-piece boundary (small-piece fallback).
struct TangentField {
  std::vector<HomogeneousTriple> lines;
  std::vector<TangentStatus> status;
  std::vector<bool> reduced;

  std::size_t size() const { return lines.size(); }
};

/// Tangent at p3 of the unique conic through five points in general
/// position, by the Pascal-limit construction: intermediate parallel-line
/// meets propagate as improper points; only an ill-defined final line is an
/// error.
HomogeneousTriple pascal_tangent(PlanePoint p1, PlanePoint p2, PlanePoint p3, PlanePoint p4,
                                 PlanePoint p5);

HomogeneousTriple pascal_tangent(const std::array<PlanePoint, 5>& stencil);

/// Tangents at all points of a convex polyline (>= 5 points). Closed
/// polylines use cyclic stencils; open ones the canonical boundary
/// reorderings (documented in the implementation). Failures are recorded
/// per point, never thrown.
TangentField tangent_field(const Polyline& pl);

/// Unit direction vector of a line (perpendicular to its normal part).
PlanePoint line_direction(const HomogeneousTriple& line);

/// True when `line` passes through p within a relative residual tolerance.
bool line_through(const HomogeneousTriple& line, PlanePoint p, double tol = 1e-10);

}  // namespace coniccurv

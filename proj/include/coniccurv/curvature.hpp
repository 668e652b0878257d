#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "coniccurv/convexity.hpp"
#include "coniccurv/polyline.hpp"
#include "coniccurv/projective.hpp"
#include "coniccurv/tangent.hpp"

namespace coniccurv {

/// Rational conic in Bernstein-Bezier form: control polygon Pi, Q, Pk with
/// squared middle weight omega_sq; Pj is the interpolated interior point.
struct ConicSpec {
  PlanePoint Pi, Pj, Pk, Q;
  double omega_sq = 0.0;
};

/// Squared middle weight of the rational Bezier conic through Pi, Pj, Pk
/// with tangent-triangle apex Q. Throws DegenerateTriangle when the apex
/// triangle collapses and NonConvexConfiguration when Pj lies outside the
/// tangent triangle (no real Bezier arc).
double conic_weight_sq(PlanePoint Pi, PlanePoint Pj, PlanePoint Pk, PlanePoint Q);

/// Signed curvature at Pi of the conic through Pi, Pj, Pk whose tangents at
/// Pi and Pk meet in Q:
///   4 A[Pi Pk Q] A[Pj Pk Q] A[Pj Q Pi] / (A[Pj Pi Pk]^2 |Q - Pi|^3).
double conic_curvature_at(PlanePoint Pi, PlanePoint Pj, PlanePoint Pk, PlanePoint Q);

/// Implicit-equation residual of x against the conic; zero iff x lies on it.
double implicit_residual(PlanePoint x, const ConicSpec& spec);

/// Point of the rational Bezier conic at parameter t in [0,1].
PlanePoint rational_conic_point(const ConicSpec& spec, double t);

enum class RecordStatus { Ok, ForcedZero, OneSided, Degenerate, NotEstimated };

std::string to_string(RecordStatus s);

/// Per-point curvature estimate. Magnitudes are reported positive; `sign`
/// carries the turn orientation (+1 left, -1 right, 0 undefined). Missing
/// sides are NaN.
struct CurvatureRecord {
  std::size_t index = 0;
  double kappa_left = 0.0;
  double kappa_right = 0.0;
  double kappa_avg = 0.0;
  int sign = 0;
  RecordStatus status = RecordStatus::NotEstimated;
};

/// Curvature at the center of 7 consecutive points: tangents at the middle
/// three by ABFH, then the average of the two interpolating-conic
/// curvatures. Per-side failures degrade to OneSided, never throw.
CurvatureRecord coniccurv_at(const std::array<PlanePoint, 7>& window);

enum class PiecePolicy { Reduced, Strict };

struct ProfileOptions {
  bool assume_convex = false;
  PiecePolicy piece_policy = PiecePolicy::Reduced;
  bool insert_inflections = false;
};

/// Full per-polyline pipeline: collinear marking, convex splitting, tangent
/// estimation per piece, and per-point conic curvature averaging. O(n).
std::vector<CurvatureRecord> curvature_profile(const Polyline& pl,
                                               const ProfileOptions& options = {});

namespace detail {
/// Two-conic average at Pc given neighbor points and the three tangents.
/// Shared by coniccurv_at and curvature_profile.
CurvatureRecord average_from_tangents(PlanePoint Pm, PlanePoint Pc, PlanePoint Pp,
                                      const HomogeneousTriple& rm, const HomogeneousTriple& rc,
                                      const HomogeneousTriple& rp);
/// One-sided estimate at endpoint P0 from the conic through (P0, P1, P2)
/// with tangents at P0 and P1; kappa evaluated at P0.
double endpoint_curvature(PlanePoint P0, PlanePoint P1, PlanePoint P2,
                          const HomogeneousTriple& r0, const HomogeneousTriple& r1, bool* ok);
}  // namespace detail

}  // namespace coniccurv

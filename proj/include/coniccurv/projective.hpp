#pragma once

#include <cmath>
#include <optional>

#include "coniccurv/errors.hpp"

namespace coniccurv {

// Relative threshold below which a homogeneous point counts as improper
// (at infinity). Cross products of unit triples carry ~1e-15 noise.
inline constexpr double kEpsInfinity = 1e-12;

// Scale-invariant collinearity threshold: a triple (A,B,C) is collinear when
// |<A-B, rot90(C-B)>| <= kEpsCollinear * |A-B| * |C-B|.
inline constexpr double kEpsCollinear = 1e-12;

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;

  friend PlanePoint operator+(PlanePoint a, PlanePoint b) { return {a.x + b.x, a.y + b.y}; }
  friend PlanePoint operator-(PlanePoint a, PlanePoint b) { return {a.x - b.x, a.y - b.y}; }
  friend PlanePoint operator*(double s, PlanePoint p) { return {s * p.x, s * p.y}; }
  friend bool operator==(PlanePoint a, PlanePoint b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(PlanePoint a, PlanePoint b) { return a.x * b.x + a.y * b.y; }
inline double cross(PlanePoint a, PlanePoint b) { return a.x * b.y - a.y * b.x; }
inline double norm(PlanePoint a) { return std::hypot(a.x, a.y); }
inline double distance(PlanePoint a, PlanePoint b) { return norm(a - b); }

/// Quarter-turn rotation, (x,y) -> (-y,x).
inline PlanePoint rotate90(PlanePoint v) { return {-v.y, v.x}; }

/// Projective point or line as a homogeneous triple. Points and lines share
/// the representation; join and meet are both cross products (duality).
struct HomogeneousTriple {
  enum class Kind { Point, Line };

  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  Kind kind = Kind::Point;

  double norm3() const { return std::sqrt(a * a + b * b + c * c); }
};

inline HomogeneousTriple embed(PlanePoint p) {
  return {p.x, p.y, 1.0, HomogeneousTriple::Kind::Point};
}

// Cross product renormalized to unit length; chained joins/meets would
// otherwise under/overflow.
inline HomogeneousTriple cross3(const HomogeneousTriple& u, const HomogeneousTriple& v,
                                HomogeneousTriple::Kind kind) {
  HomogeneousTriple w{u.b * v.c - u.c * v.b, u.c * v.a - u.a * v.c, u.a * v.b - u.b * v.a, kind};
  const double n = w.norm3();
  if (n > 0.0) {
    w.a /= n;
    w.b /= n;
    w.c /= n;
  }
  return w;
}

/// Line through two distinct affine points.
inline HomogeneousTriple join(PlanePoint p, PlanePoint q) {
  if (distance(p, q) == 0.0) throw Error(ErrorCode::CoincidentPoints, "join: coincident points");
  return cross3(embed(p), embed(q), HomogeneousTriple::Kind::Line);
}

/// Intersection point of two lines; improper (c ~ 0) when they are parallel.
inline HomogeneousTriple meet(const HomogeneousTriple& l1, const HomogeneousTriple& l2) {
  HomogeneousTriple p = cross3(l1, l2, HomogeneousTriple::Kind::Point);
  if (p.norm3() <= 1e-13)
    throw Error(ErrorCode::IdenticalLines, "meet: lines are scalar multiples");
  return p;
}

/// Affine coordinates of a homogeneous point, or nullopt for a point at
/// infinity (|c| below kEpsInfinity relative to the xy part).
inline std::optional<PlanePoint> normalize(const HomogeneousTriple& t) {
  if (std::abs(t.c) <= kEpsInfinity * std::hypot(t.a, t.b)) return std::nullopt;
  return PlanePoint{t.a / t.c, t.b / t.c};
}

/// Signed area of the triangle P1 P2 P3, counterclockwise positive.
inline double signed_area(PlanePoint p1, PlanePoint p2, PlanePoint p3) {
  return cross(p2 - p1, p3 - p1) / 2.0;
}

/// Sign of <A-B, rot90(C-B)>: +1 left turn, -1 right turn, 0 collinear
/// within the scale-invariant tolerance.
inline int turn_sign(PlanePoint a, PlanePoint b, PlanePoint c) {
  const PlanePoint v1 = a - b;
  const PlanePoint v2 = c - b;
  const double d = dot(v1, rotate90(v2));
  if (std::abs(d) <= kEpsCollinear * norm(v1) * norm(v2)) return 0;
  return d > 0.0 ? 1 : -1;
}

}  // namespace coniccurv

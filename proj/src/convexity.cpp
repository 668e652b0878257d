#include "coniccurv/convexity.hpp"

#include <cmath>

#include "coniccurv/tangent.hpp"

namespace coniccurv {

std::vector<ConvexPiece> split_convex(const Polyline& pl) {
  const std::size_t n = pl.size();
  if (n < 3) throw Error(ErrorCode::TooFewPoints, "split_convex: need at least 3 points");
  const auto& P = pl.points;

  std::vector<ConvexPiece> pieces;
  std::size_t base = 0;
  for (;;) {
    int s = 0;
    std::size_t fail = 0;
    bool found_fail = false;
    for (std::size_t v = base + 1; v + 1 < n; ++v) {
      const int t = turn_sign(P[v - 1], P[v], P[v + 1]);
      if (t == 0) continue;
      if (s == 0) {
        s = t;
      } else if (t != s) {
        fail = v;
        found_fail = true;
        break;
      }
    }
    if (!found_fail) {
      pieces.push_back({base, n - 1, s});
      break;
    }
    // Sign change at vertex `fail`: the piece keeps the vertex, and the
    // inflection edge (fail-1, fail) belongs to both pieces.
    pieces.push_back({base, fail, s});
    base = fail - 1;
  }
  return pieces;
}

std::vector<std::size_t> mark_collinear(const Polyline& pl) {
  const std::size_t n = pl.size();
  std::vector<std::size_t> out;
  if (n < 3) return out;
  const auto& P = pl.points;
  if (pl.closed) {
    for (std::size_t i = 0; i < n; ++i) {
      if (turn_sign(P[(i + n - 1) % n], P[i], P[(i + 1) % n]) == 0) out.push_back(i);
    }
  } else {
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (turn_sign(P[i - 1], P[i], P[i + 1]) == 0) out.push_back(i);
    }
  }
  return out;
}

InflectionInsertion insert_inflection_midpoint(const Polyline& pl, std::size_t edge_index,
                                               const HomogeneousTriple& left_tangent,
                                               const HomogeneousTriple& right_tangent) {
  if (edge_index + 1 >= pl.size())
    throw Error(ErrorCode::TooFewPoints, "insert_inflection_midpoint: edge index out of range");
  const PlanePoint mid = 0.5 * (pl.points[edge_index] + pl.points[edge_index + 1]);

  // A line with vanishing normal part has no direction; lines are
  // unoriented, so after flipping into a common half-plane the bisector sum
  // cannot itself vanish.
  if (std::hypot(left_tangent.a, left_tangent.b) <= 1e-12 * left_tangent.norm3() ||
      std::hypot(right_tangent.a, right_tangent.b) <= 1e-12 * right_tangent.norm3())
    throw Error(ErrorCode::DegenerateBisector,
                "insert_inflection_midpoint: tangent line direction undefined");
  PlanePoint dl = line_direction(left_tangent);
  PlanePoint dr = line_direction(right_tangent);
  if (dot(dl, dr) < 0.0) dr = {-dr.x, -dr.y};
  PlanePoint bis = dl + dr;
  const double n = norm(bis);
  bis = {bis.x / n, bis.y / n};

  // Line through mid with direction bis: normal is rot90(bis).
  const PlanePoint nrm = rotate90(bis);
  HomogeneousTriple line{nrm.x, nrm.y, -(nrm.x * mid.x + nrm.y * mid.y),
                         HomogeneousTriple::Kind::Line};
  const double ln = line.norm3();
  line.a /= ln;
  line.b /= ln;
  line.c /= ln;
  return {mid, line};
}

}  // namespace coniccurv

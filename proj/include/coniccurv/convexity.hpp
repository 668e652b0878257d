#pragma once

#include <vector>

#include "coniccurv/polyline.hpp"
#include "coniccurv/projective.hpp"

namespace coniccurv {

/// A maximal convex run of polyline indices [start_index, end_index]
/// (inclusive). Adjacent pieces overlap in the two vertices of the shared
/// inflection edge. turn_sign is 0 only for an all-collinear piece.
struct ConvexPiece {
  std::size_t start_index = 0;
  std::size_t end_index = 0;
  int turn_sign = 0;

  std::size_t size() const { return end_index - start_index + 1; }
};

/// Midpoint of an inflection edge together with its assigned tangent line
/// (acute-angle bisector of the two side tangents).
struct InflectionInsertion {
  PlanePoint position;
  HomogeneousTriple tangent;
};

/// Greedy left-to-right split of the polyline into maximal convex pieces.
/// Collinear triples never break a piece; the final piece absorbs the tail.
std::vector<ConvexPiece> split_convex(const Polyline& pl);

/// Indices i whose triple (P[i-1], P[i], P[i+1]) is collinear; curvature at
/// these indices is forced to zero downstream. Cyclic for closed polylines.
std::vector<std::size_t> mark_collinear(const Polyline& pl);

/// Insertion record for the inflection edge starting at edge_index: position
/// is the edge midpoint, tangent the acute-angle bisector of the two given
/// tangent lines.
InflectionInsertion insert_inflection_midpoint(const Polyline& pl, std::size_t edge_index,
                                               const HomogeneousTriple& left_tangent,
                                               const HomogeneousTriple& right_tangent);

}  // namespace coniccurv

#pragma once

#include <utility>
#include <vector>

#include "coniccurv/projective.hpp"

namespace coniccurv {

/// Ordered planar point sequence. For closed polylines the first point is
/// not repeated at the end; neighbors wrap around.
struct Polyline {
  std::vector<PlanePoint> points;
  bool closed = false;

  Polyline() = default;
  Polyline(std::vector<PlanePoint> pts, bool is_closed = false)
      : points(std::move(pts)), closed(is_closed) {
    validate();
  }

  std::size_t size() const { return points.size(); }

  // Consecutive points must be distinct (including the wrap pair when closed).
  void validate() const {
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
      if (points[i] == points[i + 1])
        throw Error(ErrorCode::CoincidentPoints, "polyline: consecutive duplicate point");
    }
    if (closed && points.size() > 1 && points.front() == points.back())
      throw Error(ErrorCode::CoincidentPoints, "polyline: closed polyline repeats first point");
  }
};

}  // namespace coniccurv

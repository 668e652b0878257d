#include "coniccurv/tangent.hpp"

#include <cmath>

namespace coniccurv {

namespace {

// Meet that tolerates parallel lines (improper point) but rejects identical
// ones; degenerate chains surface as a near-zero cross product.
HomogeneousTriple meet_or_throw(const HomogeneousTriple& l1, const HomogeneousTriple& l2) {
  HomogeneousTriple p = cross3(l1, l2, HomogeneousTriple::Kind::Point);
  if (p.norm3() <= 1e-13)
    throw Error(ErrorCode::DegenerateConfiguration, "pascal_tangent: identical lines in meet");
  return p;
}

}  // namespace

HomogeneousTriple pascal_tangent(PlanePoint p1, PlanePoint p2, PlanePoint p3, PlanePoint p4,
                                 PlanePoint p5) {
  const HomogeneousTriple a = meet_or_throw(join(p1, p2), join(p3, p4));
  const HomogeneousTriple b = meet_or_throw(join(p2, p3), join(p4, p5));
  const HomogeneousTriple ab = cross3(a, b, HomogeneousTriple::Kind::Line);
  if (ab.norm3() <= 1e-13)
    throw Error(ErrorCode::DegenerateConfiguration, "pascal_tangent: a and b coincide");
  const HomogeneousTriple c = meet_or_throw(join(p1, p5), ab);
  const HomogeneousTriple r = cross3(c, embed(p3), HomogeneousTriple::Kind::Line);
  if (r.norm3() <= 1e-13 || std::hypot(r.a, r.b) <= 1e-13)
    throw Error(ErrorCode::DegenerateConfiguration, "pascal_tangent: tangent line ill-defined");
  return r;
}

HomogeneousTriple pascal_tangent(const std::array<PlanePoint, 5>& s) {
  return pascal_tangent(s[0], s[1], s[2], s[3], s[4]);
}

PlanePoint line_direction(const HomogeneousTriple& line) {
  PlanePoint d{line.b, -line.a};
  const double n = norm(d);
  return {d.x / n, d.y / n};
}

bool line_through(const HomogeneousTriple& line, PlanePoint p, double tol) {
  const double r = line.a * p.x + line.b * p.y + line.c;
  const double scale = line.norm3() * std::max(1.0, norm(p));
  return std::abs(r) <= tol * scale;
}

TangentField tangent_field(const Polyline& pl) {
  const std::size_t n = pl.size();
  TangentField out;
  out.lines.resize(n);
  out.status.assign(n, TangentStatus::NotEstimated);
  out.reduced.assign(n, false);
  if (n < 5) return out;

  const auto& P = pl.points;
  auto assign = [&](std::size_t i, const std::array<PlanePoint, 5>& stencil) {
    try {
      out.lines[i] = pascal_tangent(stencil);
      out.status[i] = TangentStatus::Ok;
    } catch (const Error&) {
      out.status[i] = TangentStatus::Degenerate;
    }
  };

  if (pl.closed) {
    for (std::size_t i = 0; i < n; ++i) {
      auto at = [&](std::ptrdiff_t k) { return P[(i + n + static_cast<std::size_t>(k)) % n]; };
      assign(i, {at(-2), at(-1), at(0), at(1), at(2)});
    }
    return out;
  }

  for (std::size_t i = 2; i + 2 < n; ++i)
    assign(i, {P[i - 2], P[i - 1], P[i], P[i + 1], P[i + 2]});

  // Canonical boundary reorderings: the target point takes the middle slot,
  // remaining stencil points keep their polyline order. Any reordering
  // yields the same tangent on conic data; this one is fixed for
  // reproducibility. The tail mirrors the head.
  assign(0, {P[1], P[2], P[0], P[3], P[4]});
  assign(1, {P[0], P[2], P[1], P[3], P[4]});
  assign(n - 1, {P[n - 2], P[n - 3], P[n - 1], P[n - 4], P[n - 5]});
  assign(n - 2, {P[n - 1], P[n - 3], P[n - 2], P[n - 4], P[n - 5]});
  return out;
}

}  // namespace coniccurv

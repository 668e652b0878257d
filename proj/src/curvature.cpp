#include "coniccurv/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace coniccurv {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool triangle_degenerate(PlanePoint a, PlanePoint b, PlanePoint c) {
  return turn_sign(a, b, c) == 0;
}

// |curvature| at Pc of the conic through (Pc, Pother, Pfree) with tangents
// r_c at Pc and r_other at Pother. Returns NaN when the side is degenerate
// (improper apex, collapsed triangle, non-finite value). Non-convex
// configurations still contribute their formula magnitude; rejecting them
// breaks the L-curve tables, where the corner sides are routinely
// non-convex.
double side_magnitude(PlanePoint Pc, PlanePoint Pother, PlanePoint Pfree,
                      const HomogeneousTriple& r_c, const HomogeneousTriple& r_other) {
  const HomogeneousTriple q3 = cross3(r_c, r_other, HomogeneousTriple::Kind::Point);
  if (q3.norm3() <= 1e-13) return kNaN;
  const auto q = normalize(q3);
  if (!q) return kNaN;  // improper apex: parallel tangents
  if (triangle_degenerate(Pc, Pother, *q)) return kNaN;
  if (triangle_degenerate(Pfree, Pc, Pother)) return kNaN;
  const double k = conic_curvature_at(Pc, Pfree, Pother, *q);
  if (!std::isfinite(k)) return kNaN;
  return std::abs(k);
}

}  // namespace

double conic_weight_sq(PlanePoint Pi, PlanePoint Pj, PlanePoint Pk, PlanePoint Q) {
  if (triangle_degenerate(Pi, Pk, Q))
    throw Error(ErrorCode::DegenerateTriangle, "conic_weight_sq: triangle Pi Pk Q degenerate");
  const double At = signed_area(Pi, Pk, Q);
  const double u = signed_area(Pj, Pk, Q) / At;
  const double v = signed_area(Pj, Pi, Pk) / At;
  const double w = signed_area(Pj, Q, Pi) / At;
  if (u <= 0.0 || w <= 0.0)
    throw Error(ErrorCode::NonConvexConfiguration,
                "conic_weight_sq: Pj outside the tangent triangle");
  return v * v / (4.0 * u * w);
}

double conic_curvature_at(PlanePoint Pi, PlanePoint Pj, PlanePoint Pk, PlanePoint Q) {
  if (triangle_degenerate(Pi, Pk, Q))
    throw Error(ErrorCode::DegenerateTriangle, "conic_curvature_at: triangle Pi Pk Q degenerate");
  const double chord = signed_area(Pj, Pi, Pk);
  if (turn_sign(Pj, Pi, Pk) == 0)
    throw Error(ErrorCode::ZeroChordArea, "conic_curvature_at: Pi, Pj, Pk collinear");
  const double d = distance(Q, Pi);
  return 4.0 * signed_area(Pi, Pk, Q) * signed_area(Pj, Pk, Q) * signed_area(Pj, Q, Pi) /
         (chord * chord * d * d * d);
}

double implicit_residual(PlanePoint x, const ConicSpec& s) {
  const double axik = signed_area(x, s.Pi, s.Pk);
  const double axkq = signed_area(x, s.Pk, s.Q);
  const double axqi = signed_area(x, s.Q, s.Pi);
  return axik * axik * signed_area(s.Pj, s.Q, s.Pi) * signed_area(s.Pj, s.Pk, s.Q) -
         signed_area(s.Pj, s.Pi, s.Pk) * signed_area(s.Pj, s.Pi, s.Pk) * axkq * axqi;
}

PlanePoint rational_conic_point(const ConicSpec& s, double t) {
  const double omega = std::sqrt(s.omega_sq);
  const double b0 = (1.0 - t) * (1.0 - t);
  const double b1 = 2.0 * t * (1.0 - t) * omega;
  const double b2 = t * t;
  const double den = b0 + b1 + b2;
  return {(b0 * s.Pi.x + b1 * s.Q.x + b2 * s.Pk.x) / den,
          (b0 * s.Pi.y + b1 * s.Q.y + b2 * s.Pk.y) / den};
}

std::string to_string(RecordStatus s) {
  switch (s) {
    case RecordStatus::Ok: return "Ok";
    case RecordStatus::ForcedZero: return "ForcedZero";
    case RecordStatus::OneSided: return "OneSided";
    case RecordStatus::Degenerate: return "Degenerate";
    case RecordStatus::NotEstimated: return "NotEstimated";
  }
  return "NotEstimated";
}

namespace detail {

CurvatureRecord average_from_tangents(PlanePoint Pm, PlanePoint Pc, PlanePoint Pp,
                                      const HomogeneousTriple& rm, const HomogeneousTriple& rc,
                                      const HomogeneousTriple& rp) {
  CurvatureRecord rec;
  rec.sign = turn_sign(Pm, Pc, Pp);
  if (rec.sign == 0) {
    rec.status = RecordStatus::ForcedZero;
    rec.kappa_left = rec.kappa_right = rec.kappa_avg = 0.0;
    return rec;
  }
  const double kl = side_magnitude(Pc, Pm, Pp, rc, rm);
  const double kr = side_magnitude(Pc, Pp, Pm, rc, rp);
  rec.kappa_left = kl;
  rec.kappa_right = kr;
  const bool has_l = std::isfinite(kl);
  const bool has_r = std::isfinite(kr);
  if (has_l && has_r) {
    rec.kappa_avg = 0.5 * (kl + kr);
    rec.status = RecordStatus::Ok;
  } else if (has_l || has_r) {
    rec.kappa_avg = has_l ? kl : kr;
    rec.status = RecordStatus::OneSided;
  } else {
    rec.kappa_avg = kNaN;
    rec.status = RecordStatus::Degenerate;
  }
  return rec;
}

double endpoint_curvature(PlanePoint P0, PlanePoint P1, PlanePoint P2,
                          const HomogeneousTriple& r0, const HomogeneousTriple& r1, bool* ok) {
  *ok = false;
  const double k = side_magnitude(P0, P1, P2, r0, r1);
  if (!std::isfinite(k)) return kNaN;
  *ok = true;
  return k;
}

}  // namespace detail

CurvatureRecord coniccurv_at(const std::array<PlanePoint, 7>& w) {
  CurvatureRecord rec;
  rec.index = 3;
  rec.kappa_left = rec.kappa_right = rec.kappa_avg = kNaN;
  rec.sign = turn_sign(w[2], w[3], w[4]);
  if (rec.sign == 0) {
    rec.status = RecordStatus::ForcedZero;
    rec.kappa_left = rec.kappa_right = rec.kappa_avg = 0.0;
    return rec;
  }
  HomogeneousTriple r[3];
  bool tangent_ok[3] = {false, false, false};
  for (int i = 0; i < 3; ++i) {
    try {
      r[i] = pascal_tangent(w[i], w[i + 1], w[i + 2], w[i + 3], w[i + 4]);
      tangent_ok[i] = true;
    } catch (const Error&) {
    }
  }
  if (!tangent_ok[1]) {
    rec.status = RecordStatus::Degenerate;
    return rec;
  }
  if (tangent_ok[0] && tangent_ok[2])
    return detail::average_from_tangents(w[2], w[3], w[4], r[0], r[1], r[2]);

  // A missing neighbor tangent removes that side only.
  const double kl = tangent_ok[0] ? side_magnitude(w[3], w[2], w[4], r[1], r[0]) : kNaN;
  const double kr = tangent_ok[2] ? side_magnitude(w[3], w[4], w[2], r[1], r[2]) : kNaN;
  rec.kappa_left = kl;
  rec.kappa_right = kr;
  if (std::isfinite(kl) || std::isfinite(kr)) {
    rec.kappa_avg = std::isfinite(kl) ? kl : kr;
    rec.status = RecordStatus::OneSided;
  } else {
    rec.status = RecordStatus::Degenerate;
  }
  return rec;
}

namespace {

int better(RecordStatus a, RecordStatus b) {
  auto rank = [](RecordStatus s) {
    switch (s) {
      case RecordStatus::Ok: return 4;
      case RecordStatus::OneSided: return 3;
      case RecordStatus::ForcedZero: return 2;
      case RecordStatus::Degenerate: return 1;
      case RecordStatus::NotEstimated: return 0;
    }
    return 0;
  };
  return rank(a) - rank(b);
}

// Stencil with the target point moved to the middle slot, the rest keeping
// their polyline order.
std::array<PlanePoint, 5> reorder_window(const std::array<PlanePoint, 5>& w, std::size_t target) {
  std::array<PlanePoint, 5> s;
  s[2] = w[target];
  std::size_t slot = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    if (i == target) continue;
    s[slot < 2 ? slot : slot + 1] = w[i];
    ++slot;
  }
  return s;
}

struct PieceWork {
  std::size_t start = 0;
  std::size_t size = 0;
  bool cyclic = false;
  int turn = 0;
};

}  // namespace

std::vector<CurvatureRecord> curvature_profile(const Polyline& pl, const ProfileOptions& options) {
  Polyline work = pl;
  if (options.insert_inflections && !pl.closed && !options.assume_convex && pl.size() >= 3) {
    const auto pieces = split_convex(pl);
    if (pieces.size() > 1) {
      std::vector<PlanePoint> aug;
      std::size_t next_edge = 0;
      std::vector<std::size_t> edge_starts;
      for (std::size_t k = 0; k + 1 < pieces.size(); ++k) edge_starts.push_back(pieces[k].end_index - 1);
      for (std::size_t i = 0; i < pl.size(); ++i) {
        aug.push_back(pl.points[i]);
        if (next_edge < edge_starts.size() && i == edge_starts[next_edge]) {
          aug.push_back(0.5 * (pl.points[i] + pl.points[i + 1]));
          ++next_edge;
        }
      }
      work = Polyline(std::move(aug), false);
    }
  }

  const std::size_t n = work.size();
  std::vector<CurvatureRecord> records(n);
  for (std::size_t i = 0; i < n; ++i) {
    records[i].index = i;
    records[i].kappa_left = records[i].kappa_right = records[i].kappa_avg = kNaN;
    records[i].status = RecordStatus::NotEstimated;
  }
  if (n < 3) return records;
  const auto& P = work.points;

  const auto collinear = mark_collinear(work);

  // Piece decomposition. A closed polyline is processed cyclically when it
  // is convex (or assumed so); a closed non-convex one falls back to the
  // open scan.
  // TODO: split closed non-convex inputs cyclically (seam at an inflection
  // edge) so the first and last points do not get boundary statuses.
  std::vector<PieceWork> pieces;
  bool closed_single = false;
  if (work.closed) {
    bool uniform = true;
    int s = 0;
    for (std::size_t i = 0; i < n && uniform; ++i) {
      const int t = turn_sign(P[(i + n - 1) % n], P[i], P[(i + 1) % n]);
      if (t == 0) continue;
      if (s == 0)
        s = t;
      else if (t != s)
        uniform = false;
    }
    if (options.assume_convex || uniform) {
      pieces.push_back({0, n, true, s});
      closed_single = true;
    }
  }
  if (!closed_single) {
    if (options.assume_convex) {
      int s = 0;
      for (std::size_t i = 1; i + 1 < n && s == 0; ++i) s = turn_sign(P[i - 1], P[i], P[i + 1]);
      pieces.push_back({0, n, false, s});
    } else {
      for (const auto& pc : split_convex(work))
        pieces.push_back({pc.start_index, pc.size(), false, pc.turn_sign});
    }
  }

  for (const auto& piece : pieces) {
    const std::size_t m = piece.size;
    auto pt = [&](std::size_t local) { return P[(piece.start + local) % n]; };

    TangentField tf;
    if (m >= 5) {
      std::vector<PlanePoint> sub(m);
      for (std::size_t j = 0; j < m; ++j) sub[j] = pt(j);
      tf = tangent_field(Polyline(std::move(sub), piece.cyclic));
    } else {
      tf.lines.resize(m);
      tf.status.assign(m, TangentStatus::NotEstimated);
      tf.reduced.assign(m, false);
      if (options.piece_policy == PiecePolicy::Reduced && n >= 5) {
        // Small piece: estimate tangents from the smallest enclosing window
        // of the parent polyline, ignoring the piece boundary.
        for (std::size_t j = 0; j < m; ++j) {
          const std::size_t g = piece.start + j;
          std::size_t lo = g >= 2 ? g - 2 : 0;
          lo = std::min(lo, n - 5);
          std::array<PlanePoint, 5> w;
          for (std::size_t k = 0; k < 5; ++k) w[k] = P[lo + k];
          try {
            tf.lines[j] = pascal_tangent(reorder_window(w, g - lo));
            tf.status[j] = TangentStatus::Ok;
            tf.reduced[j] = true;
          } catch (const Error&) {
            tf.status[j] = TangentStatus::Degenerate;
          }
        }
      }
    }

    auto merge = [&](std::size_t global, CurvatureRecord rec) {
      rec.index = global;
      if (better(rec.status, records[global].status) > 0) records[global] = rec;
    };

    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t g = (piece.start + j) % n;
      const bool interior = piece.cyclic || (j > 0 && j + 1 < m);
      CurvatureRecord rec;
      rec.kappa_left = rec.kappa_right = rec.kappa_avg = kNaN;
      if (interior) {
        const std::size_t jm = piece.cyclic ? (j + m - 1) % m : j - 1;
        const std::size_t jp = piece.cyclic ? (j + 1) % m : j + 1;
        if (tf.status[j] != TangentStatus::Ok) {
          rec.status = tf.status[j] == TangentStatus::Degenerate ? RecordStatus::Degenerate
                                                                 : RecordStatus::NotEstimated;
          rec.sign = turn_sign(pt(jm), pt(j), pt(jp));
        } else if (tf.status[jm] == TangentStatus::Ok && tf.status[jp] == TangentStatus::Ok) {
          rec = detail::average_from_tangents(pt(jm), pt(j), pt(jp), tf.lines[jm], tf.lines[j],
                                              tf.lines[jp]);
        } else {
          // One neighbor tangent missing: single-conic estimate.
          rec.sign = turn_sign(pt(jm), pt(j), pt(jp));
          bool ok = false;
          if (tf.status[jm] == TangentStatus::Ok) {
            rec.kappa_left =
                detail::endpoint_curvature(pt(j), pt(jm), pt(jp), tf.lines[j], tf.lines[jm], &ok);
            rec.kappa_avg = rec.kappa_left;
          } else if (tf.status[jp] == TangentStatus::Ok) {
            rec.kappa_right =
                detail::endpoint_curvature(pt(j), pt(jp), pt(jm), tf.lines[j], tf.lines[jp], &ok);
            rec.kappa_avg = rec.kappa_right;
          }
          rec.status = ok ? RecordStatus::OneSided : RecordStatus::Degenerate;
        }
      } else if (m >= 3) {
        // Open-piece endpoint: conic through the three outermost points with
        // the two outermost tangents, curvature at the endpoint itself.
        rec.sign = piece.turn;
        bool ok = false;
        if (j == 0 && tf.status[0] == TangentStatus::Ok && tf.status[1] == TangentStatus::Ok) {
          rec.kappa_right = detail::endpoint_curvature(pt(0), pt(1), pt(2), tf.lines[0], tf.lines[1], &ok);
          rec.kappa_avg = rec.kappa_right;
        } else if (j + 1 == m && tf.status[m - 1] == TangentStatus::Ok &&
                   tf.status[m - 2] == TangentStatus::Ok) {
          rec.kappa_left = detail::endpoint_curvature(pt(m - 1), pt(m - 2), pt(m - 3), tf.lines[m - 1],
                                                      tf.lines[m - 2], &ok);
          rec.kappa_avg = rec.kappa_left;
        }
        rec.status = ok ? RecordStatus::OneSided
                        : (tf.status[j] == TangentStatus::NotEstimated ? RecordStatus::NotEstimated
                                                                       : RecordStatus::Degenerate);
      }
      merge(g, rec);
    }
  }

  for (std::size_t i : collinear) {
    records[i].kappa_left = records[i].kappa_right = records[i].kappa_avg = 0.0;
    records[i].sign = 0;
    records[i].status = RecordStatus::ForcedZero;
  }
  return records;
}

}  // namespace coniccurv

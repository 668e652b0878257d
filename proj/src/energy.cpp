#include "coniccurv/energy.hpp"

#include <cmath>

#include "coniccurv/curvature.hpp"
#include "coniccurv/errors.hpp"

namespace coniccurv {

ExactParametricScheme::ExactParametricScheme(std::function<PlanePoint(double)> position,
                                             std::vector<double> t_values)
    : position_(std::move(position)), ts_(std::move(t_values)) {
  if (ts_.size() < 2)
    throw Error(ErrorCode::TooFewPoints, "ExactParametricScheme: need at least 2 parameters");
}

std::vector<PlanePoint> ExactParametricScheme::refine(std::span<const PlanePoint> points) {
  if (points.size() != ts_.size())
    throw Error(ErrorCode::MalformedInput,
                "ExactParametricScheme: points out of step with the parameter grid");
  std::vector<double> ts2;
  std::vector<PlanePoint> out;
  ts2.reserve(2 * ts_.size() - 1);
  out.reserve(2 * points.size() - 1);
  for (std::size_t i = 0; i + 1 < ts_.size(); ++i) {
    const double tm = 0.5 * (ts_[i] + ts_[i + 1]);
    ts2.push_back(ts_[i]);
    ts2.push_back(tm);
    out.push_back(points[i]);
    out.push_back(position_(tm));
  }
  ts2.push_back(ts_.back());
  out.push_back(points.back());
  ts_ = std::move(ts2);
  return out;
}

std::vector<PlanePoint> FourPointScheme::refine(std::span<const PlanePoint> points) {
  const std::size_t m = points.size();
  if (m < 3) throw Error(ErrorCode::TooFewPoints, "FourPointScheme: need at least 3 points");
  // Boundary ghosts by polynomial extrapolation of the end points: cubic
  // (zero fourth difference) when four points exist, quadratic for the
  // initial 3-point polygon.
  auto ghost = [&](std::size_t i0, std::size_t i1, std::size_t i2, std::size_t i3) {
    if (m == 3) return 3.0 * points[i0] - 3.0 * points[i1] + points[i2];
    return 4.0 * points[i0] - 6.0 * points[i1] + (4.0 * points[i2] - points[i3]);
  };
  auto at = [&](std::ptrdiff_t i) -> PlanePoint {
    if (i < 0) return ghost(0, 1, 2, 3);
    if (i >= static_cast<std::ptrdiff_t>(m)) return ghost(m - 1, m - 2, m - 3, m - 4);
    return points[static_cast<std::size_t>(i)];
  };
  std::vector<PlanePoint> out;
  out.reserve(2 * m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    out.push_back(points[i]);
    const PlanePoint mid =
        (1.0 / 16.0) * (9.0 * (points[i] + points[i + 1]) -
                        (at(static_cast<std::ptrdiff_t>(i) - 1) + at(static_cast<std::ptrdiff_t>(i) + 2)));
    out.push_back(mid);
  }
  out.push_back(points.back());
  return out;
}

double stretch_energy(std::span<const PlanePoint> pts, int jstar, std::size_t base) {
  const std::size_t chords = std::size_t{1} << jstar;
  if (base + 2 * chords + 1 > pts.size())
    throw Error(ErrorCode::TooFewPoints, "stretch_energy: level too short");
  double s = 0.0;
  for (std::size_t r = 0; r < chords; ++r) s += distance(pts[base + 2 * r + 2], pts[base + 2 * r]);
  return s;
}

double bending_energy(std::span<const PlanePoint> pts, int jstar, std::size_t base,
                      int* degraded_cells) {
  if (jstar < 2) throw Error(ErrorCode::TooFewPoints, "bending_energy: jstar must be >= 2");
  const std::size_t cells = std::size_t{1} << (jstar - 2);
  if (base + 8 * cells + 1 > pts.size())
    throw Error(ErrorCode::TooFewPoints, "bending_energy: level too short");
  if (degraded_cells) *degraded_cells = 0;
  double e = 0.0;
  for (std::size_t g = 0; g < cells; ++g) {
    double delta = 0.0;
    for (std::size_t r = 4 * g; r < 4 * g + 4; ++r)
      delta += distance(pts[base + 2 * r + 2], pts[base + 2 * r]);
    const std::size_t center = base + 8 * g + 4;
    std::array<PlanePoint, 7> w;
    for (std::size_t k = 0; k < 7; ++k) w[k] = pts[center - 3 + k];
    const CurvatureRecord rec = coniccurv_at(w);
    if (rec.status == RecordStatus::Degenerate || rec.status == RecordStatus::NotEstimated) {
      if (degraded_cells) ++*degraded_cells;
      continue;  // degenerate cell contributes nothing
    }
    if (degraded_cells && rec.status == RecordStatus::OneSided) ++*degraded_cells;
    e += rec.kappa_avg * rec.kappa_avg * delta;
  }
  return e;
}

EnergyReport energy(const std::array<PlanePoint, 3>& control, SubdivisionScheme& scheme, int jstar) {
  if (jstar < 2 || jstar > 12)
    throw Error(ErrorCode::MalformedInput, "energy: jstar must lie in [2, 12]");
  std::vector<PlanePoint> level(control.begin(), control.end());
  for (int j = 0; j < jstar; ++j) level = scheme.refine(level);
  EnergyReport report;
  report.levels_used = jstar;
  report.stretch = stretch_energy(level, jstar);
  report.bending = bending_energy(level, jstar, 0, &report.degraded_cells);
  return report;
}

}  // namespace coniccurv

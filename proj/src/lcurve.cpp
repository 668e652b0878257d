#include "coniccurv/lcurve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace coniccurv {

Polyline to_loglog(const std::vector<LCurveSample>& samples) {
  std::vector<PlanePoint> pts;
  pts.reserve(samples.size());
  for (const auto& s : samples) {
    if (!(s.residual_norm > 0.0) || !(s.solution_norm > 0.0))
      throw Error(ErrorCode::NonPositiveNorm, "to_loglog: norms must be positive");
    pts.push_back({std::log(s.residual_norm), std::log(s.solution_norm)});
  }
  return Polyline(std::move(pts), false);
}

CornerReport find_corner(const std::vector<LCurveSample>& samples, const CornerOptions& options) {
  if (samples.size() < 5)
    throw Error(ErrorCode::TooFewSamples, "find_corner: need at least 5 samples");

  const Polyline pl = to_loglog(samples);
  ProfileOptions popt;
  popt.assume_convex = options.assume_convex;
  CornerReport report;
  report.records = curvature_profile(pl, popt);

  double best = -1.0;
  bool found = false;
  for (const auto& rec : report.records) {
    if (!std::isfinite(rec.kappa_avg)) continue;
    const double mag = std::abs(rec.kappa_avg);
    report.curvatures.emplace_back(rec.index, mag);
    if (mag > best) {
      best = mag;
      report.corner_index = rec.index;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::AllDegenerate, "find_corner: no curvature estimate survived");
  report.corner_alpha = samples[report.corner_index].alpha;

  // Strict interior local maxima of the estimated magnitudes; the corner is
  // always a member so the report is self-consistent even when the argmax
  // sits at a boundary sample.
  const auto& ks = report.curvatures;
  for (std::size_t i = 1; i + 1 < ks.size(); ++i) {
    if (ks[i].second > ks[i - 1].second && ks[i].second > ks[i + 1].second)
      report.local_maxima.push_back(ks[i].first);
  }
  bool has_corner = false;
  for (std::size_t idx : report.local_maxima) has_corner |= (idx == report.corner_index);
  if (!has_corner) {
    report.local_maxima.push_back(report.corner_index);
    std::sort(report.local_maxima.begin(), report.local_maxima.end());
  }
  return report;
}

}  // namespace coniccurv

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "coniccurv/curvature.hpp"
#include "coniccurv/polyline.hpp"

namespace coniccurv {

/// One Tikhonov sample: regularization parameter plus the two norms. alpha
/// may be NaN when the source does not record it (fixture sentinel).
struct LCurveSample {
  double alpha = 0.0;
  double residual_norm = 0.0;
  double solution_norm = 0.0;
};

struct CornerReport {
  std::size_t corner_index = 0;  // 0-based sample index
  double corner_alpha = 0.0;     // NaN when the sample carries no alpha
  std::vector<std::pair<std::size_t, double>> curvatures;
  std::vector<std::size_t> local_maxima;
  std::vector<CurvatureRecord> records;
};

struct CornerOptions {
  bool assume_convex = true;
  bool all_maxima = false;  // report every strict local maximum, not just the corner
};

/// Open polyline of (ln residual, ln solution); throws NonPositiveNorm.
Polyline to_loglog(const std::vector<LCurveSample>& samples);

/// Corner (maximum-curvature sample) of the L-curve in log-log scale.
CornerReport find_corner(const std::vector<LCurveSample>& samples, const CornerOptions& options = {});

}  // namespace coniccurv

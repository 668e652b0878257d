#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "coniccurv/io.hpp"
#include "coniccurv/lcurve.hpp"

using namespace coniccurv;

namespace {

std::vector<LCurveSample> shaw_fixture() {
  return read_lcurve_csv(std::string(FIXTURES_DIR) + "/shaw32_lcurve.csv");
}

std::vector<LCurveSample> heat_fixture() {
  return read_lcurve_csv(std::string(FIXTURES_DIR) + "/heat64_lcurve.csv");
}

}  // namespace

TEST_CASE("log-log mapping uses natural logarithms") {
  const double e = std::exp(1.0);
  const auto pl = to_loglog({{0.5, e, e}, {1.0, e * e, 1.0}});
  CHECK(pl.points[0].x == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pl.points[0].y == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pl.points[1].x == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(pl.points[1].y == doctest::Approx(0.0));
  CHECK_THROWS_AS(to_loglog({{0.5, -1.0, 2.0}}), Error);

  const auto shaw = to_loglog(shaw_fixture());
  CHECK(shaw.points[5].x == doctest::Approx(-5.2621).epsilon(2e-5));
  CHECK(shaw.points[5].y == doctest::Approx(1.7596).epsilon(2e-5));
  const auto heat = to_loglog(heat_fixture());
  CHECK(heat.points[7].x == doctest::Approx(-4.9590).epsilon(2e-5));
  CHECK(heat.points[7].y == doctest::Approx(0.7627).epsilon(2e-4));
}

TEST_CASE("easy problem: corner and interior curvatures match the reference") {
  const auto report = find_corner(shaw_fixture());
  CHECK(report.corner_index == 5);  // sample 6 in 1-based numbering
  CHECK(report.corner_alpha == doctest::Approx(1.5565e-4).epsilon(1e-6));

  // reference interior values (1-based samples 4..7)
  const double expected[4] = {3.487e-4, 3.9532e-3, 39.773, 8.2219};
  for (int i = 0; i < 4; ++i) {
    const auto& rec = report.records[static_cast<std::size_t>(i + 3)];
    CHECK(std::abs(std::abs(rec.kappa_avg) - expected[i]) <= 0.02 * expected[i]);
  }
}

TEST_CASE("hard problem: global corner plus a secondary maximum") {
  const auto report = find_corner(heat_fixture());
  CHECK(report.corner_index == 7);  // sample 8
  CHECK(std::abs(report.records[7].kappa_avg - 153.4) <= 0.05 * 153.4);
  bool has_3 = false;
  for (std::size_t idx : report.local_maxima) has_3 |= (idx == 2);  // sample 3
  CHECK(has_3);
  CHECK(std::isnan(report.corner_alpha));  // fixture carries no alpha there
}

TEST_CASE("synthetic right angle: the corner falls on the fillet") {
  // In log-log space: a horizontal ray, a radius-0.1 quarter fillet, then a
  // vertical ray. The maximum-curvature sample must be a fillet sample.
  const double r = 0.1;
  const double cx = -r, cy = -r;  // fillet center; arc joins (-r,0) to (0,-r)
  std::vector<LCurveSample> samples;
  auto push = [&](double x, double y) {
    samples.push_back({static_cast<double>(samples.size() + 1), std::exp(x), std::exp(y)});
  };
  for (double t : {5.0, 4.0, 3.0, 2.0, 1.0}) push(-t, 0.0);
  for (double deg : {20.0, 45.0, 70.0}) {
    const double phi = deg * 3.14159265358979323846 / 180.0;
    push(cx + r * std::sin(phi), cy + r * std::cos(phi));
  }
  for (double t : {1.0, 2.0, 3.0, 4.0}) push(0.0, -t);
  const std::size_t fillet_lo = 5, fillet_hi = 7;
  const auto report = find_corner(samples);
  CHECK(report.corner_index >= fillet_lo);
  CHECK(report.corner_index <= fillet_hi);
  // brute-force check: every non-fillet estimate is smaller than the corner
  const double corner_kappa = std::abs(report.records[report.corner_index].kappa_avg);
  for (const auto& [idx, kappa] : report.curvatures) {
    if (idx < fillet_lo || idx > fillet_hi) CHECK(kappa < corner_kappa);
  }
}

TEST_CASE("invariances of the corner report") {
  const auto base = find_corner(shaw_fixture());

  auto scaled_alpha = shaw_fixture();
  for (auto& s : scaled_alpha) s.alpha *= 1000.0;
  CHECK(find_corner(scaled_alpha).corner_index == base.corner_index);

  auto scaled_residual = shaw_fixture();
  for (auto& s : scaled_residual) s.residual_norm *= 7.5;
  const auto rep2 = find_corner(scaled_residual);
  CHECK(rep2.corner_index == base.corner_index);
  for (std::size_t i = 0; i < rep2.records.size(); ++i) {
    if (base.records[i].status != RecordStatus::Ok) continue;
    CHECK(rep2.records[i].kappa_avg ==
          doctest::Approx(base.records[i].kappa_avg).epsilon(1e-9));
  }

  auto reversed = shaw_fixture();
  std::reverse(reversed.begin(), reversed.end());
  const auto rep3 = find_corner(reversed);
  CHECK(rep3.corner_index == reversed.size() - 1 - base.corner_index);
}

TEST_CASE("too few samples is an error") {
  std::vector<LCurveSample> s(4, LCurveSample{1.0, 1.0, 1.0});
  CHECK_THROWS_AS(find_corner(s), Error);
}

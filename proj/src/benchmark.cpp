#include "coniccurv/benchmark.hpp"

#include <cmath>

#include "coniccurv/curvature.hpp"
#include "coniccurv/reference.hpp"
#include "coniccurv/tangent.hpp"

namespace coniccurv {

const std::vector<BenchCurve>& bench_curves() {
  static const std::vector<BenchCurve> curves = [] {
    std::vector<BenchCurve> c;
    c.push_back({"Polynomial",
                 [](double t) { return PlanePoint{t, 0.2 - 0.2 * std::pow(1 - t, 5)}; },
                 [](double t) { return PlanePoint{1.0, std::pow(t - 1, 4)}; },
                 [](double t) { return PlanePoint{0.0, 4.0 * std::pow(t - 1, 3)}; },
                 {0.0, 0.1, 0.2, 0.3, 0.4}});
    c.push_back({"Witch of Agnesi",
                 [](double t) { return PlanePoint{t, 1.0 / (1 + t * t)}; },
                 [](double t) {
                   const double d = 1 + t * t;
                   return PlanePoint{1.0, -2.0 * t / (d * d)};
                 },
                 [](double t) {
                   const double d = 1 + t * t;
                   return PlanePoint{0.0, 2.0 * (3 * t * t - 1) / (d * d * d)};
                 },
                 {-2.25, -2.0, -1.5, -1.0, -0.75}});
    c.push_back({"Folium of Descartes",
                 [](double t) {
                   const double d = t * t * t + 1;
                   return PlanePoint{3 * t / d, 3 * t * t / d};
                 },
                 [](double t) {
                   const double t3 = t * t * t;
                   const double d = t3 + 1;
                   return PlanePoint{3 * (1 - 2 * t3) / (d * d), 3 * t * (2 - t3) / (d * d)};
                 },
                 [](double t) {
                   const double t3 = t * t * t;
                   const double d = t3 + 1;
                   const double d3 = d * d * d;
                   return PlanePoint{18 * t * t * (t3 - 2) / d3,
                                     6 * (t3 * t3 - 7 * t3 + 1) / d3};
                 },
                 {-0.1, 0.1, 0.3, 0.5, 0.7}});
    c.push_back({"Bicorn",
                 [](double t) {
                   const double co = std::cos(t);
                   return PlanePoint{std::sin(t), co * co / (2 - co)};
                 },
                 [](double t) {
                   const double co = std::cos(t), si = std::sin(t);
                   const double d = co - 2;
                   return PlanePoint{co, (co - 4) * si * co / (d * d)};
                 },
                 [](double t) {
                   const double co = std::cos(t), si = std::sin(t);
                   const double d = co - 2;
                   const double c2 = co * co;
                   return PlanePoint{-si,
                                     (-8 * si * si + c2 * c2 - 6 * c2 * co + 8 * c2) / (d * d * d)};
                 },
                 {0.139, 0.278, 0.417, 0.556, 0.626}});
    c.push_back({"Tear Drop",
                 [](double t) {
                   const double sh = std::sin(t / 2);
                   return PlanePoint{std::cos(t), std::sin(t) * sh * sh};
                 },
                 [](double t) {
                   return PlanePoint{-std::sin(t), std::sin(t / 2) * std::sin(1.5 * t)};
                 },
                 [](double t) {
                   return PlanePoint{-std::cos(t), -0.5 * std::sin(t) + std::sin(2 * t)};
                 },
                 {1.867, 1.934, 2.0, 2.034, 2.067}});
    c.push_back({"Exponential",
                 [](double t) { return PlanePoint{t, std::exp(-2 * (t - 0.5) * (t - 0.5))}; },
                 [](double t) {
                   const double e = std::exp(-2 * (t - 0.5) * (t - 0.5));
                   return PlanePoint{1.0, -4 * (t - 0.5) * e};
                 },
                 [](double t) {
                   const double e = std::exp(-2 * (t - 0.5) * (t - 0.5));
                   const double u = 2 * t - 1;
                   return PlanePoint{0.0, 4 * (u * u - 1) * e};
                 },
                 {0.2, 0.4, 0.5, 0.8, 0.9}});
    c.push_back({"Ellipse",
                 [](double t) { return PlanePoint{5 * std::cos(t), 2 * std::sin(t)}; },
                 [](double t) { return PlanePoint{-5 * std::sin(t), 2 * std::cos(t)}; },
                 [](double t) { return PlanePoint{-5 * std::cos(t), -2 * std::sin(t)}; },
                 {0.539, 0.843, 1.222, 1.6, 1.904}});
    return c;
  }();
  return curves;
}

namespace {

// Seven points for the conic-average column: the five benchmark values plus
// mirrored extremes, so the three tangent stencils are all centered.
std::array<double, 7> extended_params(const std::array<double, 5>& t) {
  return {2 * t[0] - t[1], t[0], t[1], t[2], t[3], t[4], 2 * t[4] - t[3]};
}

double coniccurv_error(const BenchCurve& cv) {
  const auto t7 = extended_params(cv.t_values);
  std::array<PlanePoint, 7> w;
  for (std::size_t i = 0; i < 7; ++i) w[i] = cv.position(t7[i]);
  const CurvatureRecord rec = coniccurv_at(w);
  const double kex = cv.exact_curvature(t7[3]);
  return std::abs(rec.kappa_avg - kex) / std::abs(kex);
}

}  // namespace

std::vector<AccuracyRow> run_table2() {
  std::vector<AccuracyRow> rows;
  for (const auto& cv : bench_curves()) {
    std::array<PlanePoint, 5> p;
    for (std::size_t i = 0; i < 5; ++i) p[i] = cv.position(cv.t_values[i]);
    const double kex = cv.exact_curvature(cv.t_values[2]);
    AccuracyRow row;
    row.curve = cv.name;
    row.circle = std::abs(circle_curvature(p[1], p[2], p[3]) - kex) / kex;
    row.poly4 = std::abs(poly4_curvature(p) - kex) / kex;
    const ConicFit fit = conic5_fit(p);
    row.conic = std::abs(conic5_curvature(fit.conic, p[2]) - kex) / kex;
    row.coniccurv = coniccurv_error(cv);
    rows.push_back(row);
  }
  return rows;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double nn = static_cast<double>(n);
  return (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
}

namespace {

double f52(double t) { return std::pow(1.0 - std::pow(t, 4), 0.25); }

double f52_kappa(double t) {
  const double g = 1.0 - std::pow(t, 4);
  const double y1 = -std::pow(t, 3) * std::pow(g, -0.75);
  const double y2 = -3.0 * t * t * std::pow(g, -0.75) - 3.0 * std::pow(t, 6) * std::pow(g, -1.75);
  return std::abs(y2) / std::pow(1.0 + y1 * y1, 1.5);
}

// Condition number of the 2x2 intersection system of two (unit-normalized)
// lines.
double meet_condition(const HomogeneousTriple& l1, const HomogeneousTriple& l2) {
  SmallMatrix m;
  m.n = 2;
  m.at(0, 0) = l1.a;
  m.at(0, 1) = l1.b;
  m.at(1, 0) = l2.a;
  m.at(1, 1) = l2.b;
  return spectral_condition(m);
}

}  // namespace

std::pair<OrderExperimentResult, OrderExperimentResult> run_order_experiment() {
  constexpr double t3 = 0.7093;
  const double kex = f52_kappa(t3);

  OrderExperimentResult conic, coniccurv;
  for (int k = 0; k <= 7; ++k) {
    const double h = 0.4 / std::sqrt(k + 2.0);

    // Conic: 5 uniform parameters spanning [t3-h, t3+h].
    std::array<PlanePoint, 5> p5;
    for (int j = 0; j < 5; ++j) {
      const double t = t3 + h * (j - 2) / 2.0;
      p5[static_cast<std::size_t>(j)] = {t, f52(t)};
    }
    const ConicFit fit = conic5_fit(p5);
    conic.samples.push_back(
        {h, fit.condition, std::abs(conic5_curvature(fit.conic, p5[2]) - kex) / kex});

    // ConicCurv: 7 uniform parameters; condition is the maximum over the
    // nine 2x2 intersection systems (seven unique tangent-construction
    // meets plus the two apex meets).
    std::array<PlanePoint, 7> p7;
    for (int j = 0; j < 7; ++j) {
      const double t = t3 + h * (j - 3) / 3.0;
      p7[static_cast<std::size_t>(j)] = {t, f52(t)};
    }
    double cond = 0.0;
    HomogeneousTriple tangents[3];
    for (std::size_t c = 2; c <= 4; ++c) {
      const HomogeneousTriple l01 = join(p7[c - 2], p7[c - 1]);
      const HomogeneousTriple l23 = join(p7[c], p7[c + 1]);
      const HomogeneousTriple l12 = join(p7[c - 1], p7[c]);
      const HomogeneousTriple l34 = join(p7[c + 1], p7[c + 2]);
      if (c == 2) cond = std::max(cond, meet_condition(l01, l23));  // a-meet (b of c-1 otherwise)
      cond = std::max(cond, meet_condition(l12, l34));              // b-meet
      const HomogeneousTriple a = meet(l01, l23);
      const HomogeneousTriple b = meet(l12, l34);
      const HomogeneousTriple lab = cross3(a, b, HomogeneousTriple::Kind::Line);
      const HomogeneousTriple l04 = join(p7[c - 2], p7[c + 2]);
      cond = std::max(cond, meet_condition(l04, lab));  // c-meet
      tangents[c - 2] = pascal_tangent(p7[c - 2], p7[c - 1], p7[c], p7[c + 1], p7[c + 2]);
    }
    cond = std::max(cond, meet_condition(tangents[0], tangents[1]));
    cond = std::max(cond, meet_condition(tangents[1], tangents[2]));

    const CurvatureRecord rec = coniccurv_at(p7);
    coniccurv.samples.push_back({h, cond, std::abs(rec.kappa_avg - kex) / kex});
  }

  auto fit_result = [](OrderExperimentResult& r) {
    std::vector<double> lx, lc, le;
    for (std::size_t k = 2; k < r.samples.size(); ++k) {
      lx.push_back(std::log(r.samples[k].h));
      lc.push_back(std::log(r.samples[k].cond));
      le.push_back(std::log(r.samples[k].rel_error));
    }
    r.cond_slope = fit_slope(lx, lc);
    r.re_slope = fit_slope(lx, le);
  };
  fit_result(conic);
  fit_result(coniccurv);
  return {conic, coniccurv};
}

}  // namespace coniccurv

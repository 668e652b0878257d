#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "coniccurv/tangent.hpp"

using namespace coniccurv;

namespace {

constexpr double kPi = 3.14159265358979323846;

double angle_between(PlanePoint a, PlanePoint b) {
  const double s = std::abs(cross(a, b)) / (norm(a) * norm(b));
  return std::asin(std::min(1.0, s));
}

std::array<PlanePoint, 5> on_circle(std::initializer_list<double> degrees, double r = 1.0) {
  std::array<PlanePoint, 5> p;
  std::size_t i = 0;
  for (double d : degrees) {
    const double t = d * kPi / 180.0;
    p[i++] = {r * std::cos(t), r * std::sin(t)};
  }
  return p;
}

}  // namespace

TEST_CASE("pascal tangent on a parabola is horizontal at the vertex") {
  std::array<PlanePoint, 5> p;
  int i = 0;
  for (double x : {-2.0, -1.0, 0.0, 1.0, 2.0}) p[i++] = {x, x * x};
  const auto r = pascal_tangent(p);
  CHECK(std::abs(r.a) <= 1e-12);   // line y = 0 has normal (0,1)
  CHECK(std::abs(r.c) <= 1e-12);
  CHECK(std::abs(r.b) == doctest::Approx(1.0));
}

TEST_CASE("pascal tangent on a circle is perpendicular to the radius") {
  const auto p = on_circle({10, 40, 60, 100, 140});
  const auto r = pascal_tangent(p);
  const PlanePoint radius = p[2];  // unit circle: point == radius direction
  const PlanePoint n{r.a, r.b};
  CHECK(std::abs(std::abs(dot(n, radius)) / (norm(n) * norm(radius)) - 1.0) <= 1e-10);
}

TEST_CASE("tangent accuracy on a non-conic curve") {
  // y = 1/(1+t^2) sampled at the benchmark parameters; compare the tangent
  // at the middle point with the analytic direction.
  const double ts[5] = {-2.25, -2.0, -1.5, -1.0, -0.75};
  std::array<PlanePoint, 5> p;
  for (int i = 0; i < 5; ++i) p[i] = {ts[i], 1.0 / (1.0 + ts[i] * ts[i])};
  const auto r = pascal_tangent(p);
  const double t = -1.5;
  const double d = 1.0 + t * t;
  const PlanePoint exact{1.0, -2.0 * t / (d * d)};
  CHECK(angle_between(line_direction(r), exact) <= 1e-3);
  // frozen from an independent reference run of the same construction
  CHECK(angle_between(line_direction(r), exact) == doctest::Approx(5.5689e-4).epsilon(1e-3));
}

TEST_CASE("tangent field on a closed circle sample") {
  std::vector<PlanePoint> pts;
  for (int i = 0; i < 8; ++i) {
    const double t = 2 * kPi * i / 8;
    pts.push_back({std::cos(t), std::sin(t)});
  }
  const auto tf = tangent_field(Polyline(pts, true));
  for (std::size_t i = 0; i < 8; ++i) {
    REQUIRE(tf.status[i] == TangentStatus::Ok);
    const PlanePoint n{tf.lines[i].a, tf.lines[i].b};
    CHECK(std::abs(std::abs(dot(n, pts[i])) / (norm(n) * norm(pts[i])) - 1.0) <= 1e-10);
    CHECK(line_through(tf.lines[i], pts[i]));
  }
}

TEST_CASE("tangent field on a minimal open convex arc") {
  std::vector<PlanePoint> pts;
  for (double d : {10.0, 30.0, 55.0, 80.0, 100.0})
    pts.push_back({std::cos(d * kPi / 180), std::sin(d * kPi / 180)});
  const auto tf = tangent_field(Polyline(pts, false));
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(tf.status[i] == TangentStatus::Ok);
    CHECK(line_through(tf.lines[i], pts[i]));
  }
}

TEST_CASE("open ellipse field reproduces the analytic tangent at the center") {
  const double ts[5] = {0.539, 0.843, 1.222, 1.6, 1.904};
  std::vector<PlanePoint> pts;
  for (double t : ts) pts.push_back({5 * std::cos(t), 2 * std::sin(t)});
  const auto tf = tangent_field(Polyline(pts, false));
  REQUIRE(tf.status[2] == TangentStatus::Ok);
  const PlanePoint exact{-5 * std::sin(1.222), 2 * std::cos(1.222)};
  CHECK(angle_between(line_direction(tf.lines[2]), exact) <= 1e-10);
}

TEST_CASE("conic precision and permutation invariance of the stencil") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  std::uniform_real_distribution<double> th(0.0, 0.5);
  for (int it = 0; it < 25; ++it) {
    const double a = u(rng), b = u(rng);
    double angs[5];
    double t0 = th(rng);
    for (int i = 0; i < 5; ++i) angs[i] = t0 + 0.35 * (i + 1) + 0.1 * th(rng);
    std::array<PlanePoint, 5> p;
    for (int i = 0; i < 5; ++i) p[i] = {a * std::cos(angs[i]), b * std::sin(angs[i])};
    const PlanePoint exact{-a * std::sin(angs[2]), b * std::cos(angs[2])};
    const auto r = pascal_tangent(p);
    CHECK(angle_between(line_direction(r), exact) <= 1e-9);

    // swapping the non-target points leaves the tangent unchanged
    const auto r2 = pascal_tangent(p[4], p[1], p[2], p[3], p[0]);
    const auto r3 = pascal_tangent(p[1], p[0], p[2], p[4], p[3]);
    CHECK(angle_between(line_direction(r), line_direction(r2)) <= 1e-8);
    CHECK(angle_between(line_direction(r), line_direction(r3)) <= 1e-8);
  }
}

TEST_CASE("affine equivariance: transformed stencils give the image line") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int it = 0; it < 25; ++it) {
    // invertible affine map
    double m[4];
    do {
      for (double& v : m) v = u(rng) * 2;
    } while (std::abs(m[0] * m[3] - m[1] * m[2]) < 0.2);
    const PlanePoint shift{u(rng) * 3, u(rng) * 3};
    auto T = [&](PlanePoint p) {
      return PlanePoint{m[0] * p.x + m[1] * p.y + shift.x, m[2] * p.x + m[3] * p.y + shift.y};
    };
    const auto p = on_circle({-30, 0, 25, 60, 95}, 2.0);
    std::array<PlanePoint, 5> q;
    for (int i = 0; i < 5; ++i) q[i] = T(p[i]);
    const auto r = pascal_tangent(p);
    const auto rT = pascal_tangent(q);
    // two points on the original tangent must map onto the transformed one
    const PlanePoint dir = line_direction(r);
    for (double s : {-1.0, 1.0}) {
      const PlanePoint on_line = p[2] + s * dir;
      CHECK(line_through(rT, T(on_line), 1e-9));
    }
  }
}

TEST_CASE("opposite sides of a conic hexagon meet on one line") {
  const double angs[6] = {5, 30, 60, 85, 120, 150};
  PlanePoint p[6];
  for (int i = 0; i < 6; ++i)
    p[i] = {2 * std::cos(angs[i] * kPi / 180), 1.5 * std::sin(angs[i] * kPi / 180)};
  const auto a = normalize(meet(join(p[0], p[1]), join(p[3], p[4])));
  const auto b = normalize(meet(join(p[1], p[2]), join(p[4], p[5])));
  const auto c = normalize(meet(join(p[2], p[3]), join(p[5], p[0])));
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  REQUIRE(c.has_value());
  const double rel = std::abs(2 * signed_area(*a, *b, *c)) / (distance(*a, *b) * distance(*c, *b));
  CHECK(rel <= 1e-10);
}

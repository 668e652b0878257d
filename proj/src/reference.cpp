#include "coniccurv/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coniccurv/errors.hpp"

namespace coniccurv {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::array<double, 5> chebyshev_nodes() {
  // cos((5-2j)pi/10) for j = -2..2, ascending in j.
  std::array<double, 5> u;
  for (int j = -2; j <= 2; ++j) u[static_cast<std::size_t>(j + 2)] = std::cos((5 - 2 * j) * kPi / 10.0);
  return u;
}

}  // namespace

void solve_linear(SmallMatrix m, std::array<double, 6>& rhs) {
  const std::size_t n = m.n;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m.at(r, col)) > std::abs(m.at(piv, col))) piv = r;
    if (std::abs(m.at(piv, col)) < 1e-300)
      throw Error(ErrorCode::SingularSystem, "solve_linear: singular matrix");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(piv, c), m.at(col, c));
      std::swap(rhs[piv], rhs[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = m.at(r, col) / m.at(col, col);
      for (std::size_t c = col; c < n; ++c) m.at(r, c) -= factor * m.at(col, c);
      rhs[r] -= factor * rhs[col];
    }
  }
  for (std::size_t r = n; r-- > 0;) {
    double s = rhs[r];
    for (std::size_t c = r + 1; c < n; ++c) s -= m.at(r, c) * rhs[c];
    rhs[r] = s / m.at(r, r);
  }
}

std::array<double, 6> singular_values(const SmallMatrix& m) {
  const std::size_t n = m.n;
  // One-sided Jacobi: orthogonalize column pairs of a working copy until the
  // off-diagonal mass of M^T M is negligible.
  std::array<std::array<double, 6>, 6> col{};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) col[c][r] = m.at(r, c);

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      double app = 0.0;
      for (std::size_t r = 0; r < n; ++r) app += col[p][r] * col[p][r];
      diag += app;
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = 0.0;
        for (std::size_t r = 0; r < n; ++r) apq += col[p][r] * col[q][r];
        off += apq * apq;
      }
    }
    if (off <= 1e-24 * diag * diag) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          app += col[p][r] * col[p][r];
          aqq += col[q][r] * col[q][r];
          apq += col[p][r] * col[q][r];
        }
        if (std::abs(apq) <= 1e-15 * std::sqrt(app * aqq)) continue;
        const double zeta = (aqq - app) / (2.0 * apq);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t r = 0; r < n; ++r) {
          const double vp = col[p][r];
          const double vq = col[q][r];
          col[p][r] = c * vp - s * vq;
          col[q][r] = s * vp + c * vq;
        }
      }
    }
  }
  std::array<double, 6> sv{};
  for (std::size_t c = 0; c < n; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) s += col[c][r] * col[c][r];
    sv[c] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.begin() + static_cast<std::ptrdiff_t>(n), std::greater<>());
  return sv;
}

double spectral_condition(const SmallMatrix& m) {
  if (m.n == 2) {
    // closed form for 2x2
    const double a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0), d = m.at(1, 1);
    const double fro = a * a + b * b + c * c + d * d;
    const double det = a * d - b * c;
    const double disc = std::sqrt(std::max(0.0, fro * fro - 4.0 * det * det));
    const double smax = std::sqrt((fro + disc) / 2.0);
    const double smin2 = (fro - disc) / 2.0;
    if (smin2 <= 0.0) return std::numeric_limits<double>::infinity();
    return smax / std::sqrt(smin2);
  }
  const auto sv = singular_values(m);
  const double smin = sv[m.n - 1];
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return sv[0] / smin;
}

double circle_curvature(PlanePoint p1, PlanePoint p2, PlanePoint p3, bool* collinear) {
  if (collinear) *collinear = false;
  const double area = std::abs(signed_area(p1, p2, p3));
  if (turn_sign(p1, p2, p3) == 0) {
    if (collinear) *collinear = true;
    return 0.0;
  }
  return 4.0 * area / (distance(p1, p2) * distance(p2, p3) * distance(p1, p3));
}

double poly4_curvature(const std::array<PlanePoint, 5>& pts) {
  const auto u = chebyshev_nodes();
  SmallMatrix v;
  v.n = 5;
  for (std::size_t r = 0; r < 5; ++r) {
    double p = 1.0;
    for (std::size_t c = 0; c < 5; ++c) {
      v.at(r, c) = p;
      p *= u[r];
    }
  }
  std::array<double, 6> xs{}, ys{};
  for (std::size_t r = 0; r < 5; ++r) {
    xs[r] = pts[r].x;
    ys[r] = pts[r].y;
  }
  SmallMatrix v2 = v;
  solve_linear(v, xs);
  solve_linear(v2, ys);
  // middle node is u = 0: q'(0) = c1, q''(0) = 2 c2
  const double x1 = xs[1], y1 = ys[1];
  const double x2 = 2.0 * xs[2], y2 = 2.0 * ys[2];
  const double speed2 = x1 * x1 + y1 * y1;
  if (speed2 == 0.0) throw Error(ErrorCode::ZeroSpeed, "poly4_curvature: zero speed at middle node");
  return std::abs(x1 * y2 - y1 * x2) / (speed2 * std::sqrt(speed2));
}

namespace {

ImplicitConic fit_centered(const std::array<PlanePoint, 5>& pts, PlanePoint center) {
  SmallMatrix m;
  m.n = 5;
  std::array<double, 6> rhs{};
  for (std::size_t r = 0; r < 5; ++r) {
    const double x = pts[r].x - center.x;
    const double y = pts[r].y - center.y;
    m.at(r, 0) = x * x;
    m.at(r, 1) = x * y;
    m.at(r, 2) = y * y;
    m.at(r, 3) = x;
    m.at(r, 4) = y;
    rhs[r] = -1.0;
  }
  solve_linear(m, rhs);
  ImplicitConic q{rhs[0], rhs[1], rhs[2], rhs[3], rhs[4], 1.0};
  // translate coefficients back to the original frame
  const double cx = center.x, cy = center.y;
  ImplicitConic out;
  out.a = q.a;
  out.b = q.b;
  out.c = q.c;
  out.d = q.d - 2.0 * q.a * cx - q.b * cy;
  out.e = q.e - q.b * cx - 2.0 * q.c * cy;
  out.f = q.f + q.a * cx * cx + q.b * cx * cy + q.c * cy * cy - q.d * cx - q.e * cy;
  return out;
}

}  // namespace

ConicFit conic5_fit(const std::array<PlanePoint, 5>& pts) {
  SmallMatrix m;
  m.n = 5;
  std::array<double, 6> rhs{};
  for (std::size_t r = 0; r < 5; ++r) {
    m.at(r, 0) = pts[r].x * pts[r].x;
    m.at(r, 1) = pts[r].x * pts[r].y;
    m.at(r, 2) = pts[r].y * pts[r].y;
    m.at(r, 3) = pts[r].x;
    m.at(r, 4) = pts[r].y;
    rhs[r] = -1.0;
  }
  ConicFit fit;
  fit.condition = spectral_condition(m);
  if (std::isfinite(fit.condition) && fit.condition < 1e14) {
    try {
      std::array<double, 6> sol = rhs;
      solve_linear(m, sol);
      fit.conic = {sol[0], sol[1], sol[2], sol[3], sol[4], 1.0};
      return fit;
    } catch (const Error&) {
      // fall through: f = 1 unreachable, conic passes through the origin
    }
  }
  // Recenter at the centroid and translate the coefficients back.
  PlanePoint c{0, 0};
  for (const auto& p : pts) c = c + 0.2 * p;
  fit.conic = fit_centered(pts, c);
  return fit;
}

double conic5_curvature(const ImplicitConic& q, PlanePoint p) {
  const double fx = 2.0 * q.a * p.x + q.b * p.y + q.d;
  const double fy = q.b * p.x + 2.0 * q.c * p.y + q.e;
  const double fxx = 2.0 * q.a;
  const double fxy = q.b;
  const double fyy = 2.0 * q.c;
  const double g2 = fx * fx + fy * fy;
  const double scale = std::abs(q.a) + std::abs(q.b) + std::abs(q.c) + std::abs(q.d) + std::abs(q.e);
  if (std::sqrt(g2) <= 1e-12 * scale * std::max(1.0, norm(p)))
    throw Error(ErrorCode::SingularPoint, "conic5_curvature: vanishing gradient");
  return std::abs(fx * fx * fyy - 2.0 * fx * fy * fxy + fy * fy * fxx) / (g2 * std::sqrt(g2));
}

}  // namespace coniccurv

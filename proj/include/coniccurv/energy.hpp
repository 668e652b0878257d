#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "coniccurv/projective.hpp"

namespace coniccurv {

/// Binary interpolatory refinement: maps m points to 2m-1, keeping the
/// input values untouched at even output positions.
class SubdivisionScheme {
 public:
  virtual ~SubdivisionScheme() = default;
  virtual std::vector<PlanePoint> refine(std::span<const PlanePoint> points) = 0;
};

/// Inserts exact curve evaluations at parameter midpoints; the limit curve
/// is the sampled curve itself. Stateful: tracks its parameter grid across
/// calls, so feed each refine() the points returned by the previous one.
class ExactParametricScheme final : public SubdivisionScheme {
 public:
  ExactParametricScheme(std::function<PlanePoint(double)> position, std::vector<double> t_values);
  std::vector<PlanePoint> refine(std::span<const PlanePoint> points) override;

  const std::vector<double>& parameters() const { return ts_; }

 private:
  std::function<PlanePoint(double)> position_;
  std::vector<double> ts_;
};

/// Classic interpolatory 4-point rule, new midpoint
/// (9(P_i+P_{i+1}) - (P_{i-1}+P_{i+2}))/16, with cubic extrapolation ghosts
/// at the boundary. Reproduces cubics.
class FourPointScheme final : public SubdivisionScheme {
 public:
  std::vector<PlanePoint> refine(std::span<const PlanePoint> points) override;
};

struct EnergyReport {
  double stretch = 0.0;       // approximates arc length S
  double bending = 0.0;       // approximates int kappa^2 ds
  int levels_used = 0;
  int degraded_cells = 0;  // bending cells that fell back to one side or failed
};

/// Arc length at level jstar: chords skipping one fine point.
double stretch_energy(std::span<const PlanePoint> level_points, int jstar, std::size_t base = 0);

/// Midpoint-rule bending energy at level jstar (>= 2): one quadrature cell
/// per coarse (jstar-2) segment, curvature from the 7 fine points centered
/// on the cell, cell weight the inscribed chord length.
double bending_energy(std::span<const PlanePoint> level_points, int jstar, std::size_t base = 0,
                      int* degraded_cells = nullptr);

/// Refines the 3-point control polygon jstar times and evaluates both
/// energies. jstar must lie in [2, 12].
EnergyReport energy(const std::array<PlanePoint, 3>& control, SubdivisionScheme& scheme, int jstar);

}  // namespace coniccurv

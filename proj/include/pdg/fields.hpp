#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "pdg/geometry.hpp"

namespace pdg {

/// Rectangular space grid (uniform per axis) crossed with a uniform time axis.
struct AnisotropicGrid {
  int N = 0;
  std::vector<std::size_t> extents;  // samples per spatial axis
  std::vector<double> spacing;       // h_i
  std::size_t t_steps = 0;           // time samples
  double tau = 0.0;                  // time step
  std::vector<double> origin;        // spatial offset
  double origin_t = 0.0;

  void validate() const;
  std::size_t space_points() const;
  std::size_t total_points() const;
  double x(int axis, std::size_t j) const { return origin[axis] + spacing[axis] * j; }
  double t(std::size_t k) const { return origin_t + tau * k; }
  double x_max(int axis) const { return origin[axis] + spacing[axis] * (extents[axis] - 1); }
  double t_max() const { return origin_t + tau * (t_steps - 1); }

  bool operator==(const AnisotropicGrid&) const = default;
};

/// One spatial slice: same layout as the space part of AnisotropicGrid.
struct SpaceField {
  int N = 0;
  std::vector<std::size_t> extents;
  std::vector<double> spacing;
  std::vector<double> origin;
  std::vector<double> samples;  // row-major, last axis fastest

  std::size_t size() const { return samples.size(); }
  double x(int axis, std::size_t j) const { return origin[axis] + spacing[axis] * j; }
  double x_max(int axis) const { return origin[axis] + spacing[axis] * (extents[axis] - 1); }
};

/// Nonnegative scalar samples on a space-time grid; time-outermost layout.
struct SpaceTimeField {
  AnisotropicGrid grid;
  std::vector<double> samples;

  void validate(bool require_nonnegative = true) const;
  double& at(std::size_t t, std::size_t flat) { return samples[t * grid.space_points() + flat]; }
  double at(std::size_t t, std::size_t flat) const { return samples[t * grid.space_points() + flat]; }
  const double* slice_data(std::size_t t) const { return samples.data() + t * grid.space_points(); }
  double* slice_data(std::size_t t) { return samples.data() + t * grid.space_points(); }
  SpaceField slice(std::size_t t) const;
  double max_value() const;
  double min_value() const;
};

SpaceTimeField make_field(const AnisotropicGrid& grid, double fill = 0.0);

/// Samples f(x..., t) on the grid.
SpaceTimeField sample_function(
    const AnisotropicGrid& grid,
    const std::function<double(const std::vector<double>&, double)>& f);

/// Cutoff with its declared discrete derivative bounds and the power it is
/// raised to inside energy integrands. Analytic derivative samples are kept
/// when the cutoff was produced by build_cutoff.
struct CutoffField {
  SpaceTimeField zeta;
  SpaceTimeField zeta_t;
  std::vector<SpaceTimeField> zeta_grad;
  std::vector<double> grad_bound;  // G_i
  double time_bound = 0.0;         // G_t
  double q_exp = 0.0;
  bool analytic_derivatives = false;
};

// Discrete derivatives: centered in the interior, second-order one-sided at
// the boundary.
SpaceTimeField partial_i(const SpaceTimeField& f, int axis);
SpaceTimeField partial_t(const SpaceTimeField& f);
SpaceField partial_i(const SpaceField& f, int axis);

// Trapezoidal weights for integrating the piecewise-linear interpolant over
// [a, b] along an axis with nodes origin + j*spacing. Off-node interval ends
// receive partial-cell weights. Empty intersection gives all-zero weights.
std::vector<double> axis_weights(std::size_t count, double spacing, double origin,
                                 double a, double b);

double integrate_cylinder(const SpaceTimeField& f, const CylinderGeometry& geom);
double sup_sub_cylinder(const SpaceTimeField& f, const CylinderGeometry& geom);
double level_set_measure(const SpaceTimeField& f, double level, const CylinderGeometry& geom);

/// Integral of fn(t_index, spatial_flat_index) over the cylinder with the
/// same quadrature as integrate_cylinder.
double integrate_cylinder_fn(
    const AnisotropicGrid& grid, const CylinderGeometry& geom,
    const std::function<double(std::size_t, std::size_t)>& fn);

double integrate_box(const SpaceField& f);
double integrate_box_fn(const SpaceField& ref,
                        const std::function<double(std::size_t)>& fn);

/// Piecewise-linear cutoff equal to 1 on the inner cylinder, 0 outside the
/// outer one, with a time ramp from the outer to the inner start time.
CutoffField build_cutoff(const CylinderGeometry& outer, const CylinderGeometry& inner,
                         double q_exp, const AnisotropicGrid& grid);

/// Cutoff between the j-th and (j+1)-th shrinking cylinders of the base
/// geometry.
CutoffField build_cutoff_step(const CylinderGeometry& base, int j, double q_exp,
                              const AnisotropicGrid& grid);

/// True if the dilated cylinder Q_{8 rho, 8 theta} lies inside the grid box.
bool fits_dilated(const CylinderGeometry& geom, const AnisotropicGrid& grid,
                  double dilation = 8.0);

}  // namespace pdg

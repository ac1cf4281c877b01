#include "pdg/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pdg/errors.hpp"
#include "pdg/threading.hpp"

namespace pdg {

namespace {

constexpr double kEdgeSlack = 1e-9;

std::vector<std::size_t> space_strides(const std::vector<std::size_t>& extents) {
  std::vector<std::size_t> s(extents.size(), 1);
  for (int i = static_cast<int>(extents.size()) - 2; i >= 0; --i)
    s[i] = s[i + 1] * extents[i + 1];
  return s;
}

// Contiguous nonzero range of a weight vector; empty -> {1, 0}.
std::pair<std::size_t, std::size_t> nonzero_range(const std::vector<double>& w) {
  std::size_t lo = 0, hi = w.size();
  while (lo < hi && w[lo] == 0.0) ++lo;
  while (hi > lo && w[hi - 1] == 0.0) --hi;
  return {lo, hi};
}

// Derivative along one stride direction with given extent; centered interior,
// second-order one-sided ends.
inline double line_derivative(const double* f, std::size_t pos, std::size_t extent,
                              std::size_t stride, double h) {
  if (pos == 0)
    return (-3.0 * f[0] + 4.0 * f[stride] - f[2 * stride]) / (2.0 * h);
  if (pos == extent - 1)
    return (3.0 * f[0] - 4.0 * f[-static_cast<std::ptrdiff_t>(stride)] +
            f[-2 * static_cast<std::ptrdiff_t>(stride)]) /
           (2.0 * h);
  return (f[stride] - f[-static_cast<std::ptrdiff_t>(stride)]) / (2.0 * h);
}

}  // namespace

void AnisotropicGrid::validate() const {
  if (N < 1) throw ValidationError("grid dimension must be positive");
  if (extents.size() != static_cast<std::size_t>(N) ||
      spacing.size() != static_cast<std::size_t>(N) ||
      origin.size() != static_cast<std::size_t>(N))
    throw ValidationError("grid arrays must have length N");
  for (int i = 0; i < N; ++i) {
    if (extents[i] < 2) throw ValidationError("grid needs at least 2 samples per axis");
    if (!(spacing[i] > 0.0)) throw ValidationError("grid spacing must be positive");
  }
  if (t_steps < 1) throw ValidationError("grid needs at least one time sample");
  if (!(tau > 0.0)) throw ValidationError("time step must be positive");
}

std::size_t AnisotropicGrid::space_points() const {
  std::size_t n = 1;
  for (auto e : extents) n *= e;
  return n;
}

std::size_t AnisotropicGrid::total_points() const { return space_points() * t_steps; }

void SpaceTimeField::validate(bool require_nonnegative) const {
  grid.validate();
  if (samples.size() != grid.total_points())
    throw ValidationError("sample count does not match grid");
  for (double v : samples) {
    if (!std::isfinite(v)) throw ValidationError("field contains non-finite samples");
    if (require_nonnegative && v < 0.0)
      throw ValidationError("field samples must be nonnegative");
  }
}

SpaceField SpaceTimeField::slice(std::size_t t) const {
  SpaceField s;
  s.N = grid.N;
  s.extents = grid.extents;
  s.spacing = grid.spacing;
  s.origin = grid.origin;
  s.samples.assign(slice_data(t), slice_data(t) + grid.space_points());
  return s;
}

double SpaceTimeField::max_value() const {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : samples) m = std::max(m, v);
  return m;
}

double SpaceTimeField::min_value() const {
  double m = std::numeric_limits<double>::infinity();
  for (double v : samples) m = std::min(m, v);
  return m;
}

SpaceTimeField make_field(const AnisotropicGrid& grid, double fill) {
  grid.validate();
  SpaceTimeField f;
  f.grid = grid;
  f.samples.assign(grid.total_points(), fill);
  return f;
}

SpaceTimeField sample_function(
    const AnisotropicGrid& grid,
    const std::function<double(const std::vector<double>&, double)>& f) {
  SpaceTimeField out = make_field(grid);
  const auto strides = space_strides(grid.extents);
  const std::size_t sp = grid.space_points();
  std::vector<double> x(grid.N);
  for (std::size_t k = 0; k < grid.t_steps; ++k) {
    const double t = grid.t(k);
    for (std::size_t flat = 0; flat < sp; ++flat) {
      for (int i = 0; i < grid.N; ++i)
        x[i] = grid.x(i, (flat / strides[i]) % grid.extents[i]);
      out.at(k, flat) = f(x, t);
    }
  }
  return out;
}

SpaceTimeField partial_i(const SpaceTimeField& f, int axis) {
  if (axis < 0 || axis >= f.grid.N) throw ValidationError("derivative axis out of range");
  if (f.grid.extents[axis] < 3)
    throw ValidationError("derivative needs at least 3 samples along the axis");
  const auto strides = space_strides(f.grid.extents);
  const std::size_t stride = strides[axis];
  const std::size_t extent = f.grid.extents[axis];
  const double h = f.grid.spacing[axis];
  const std::size_t sp = f.grid.space_points();

  SpaceTimeField out;
  out.grid = f.grid;
  out.samples.resize(f.samples.size());
  parallel_for(f.grid.t_steps, [&](std::size_t kb, std::size_t ke) {
    for (std::size_t k = kb; k < ke; ++k) {
      const double* src = f.slice_data(k);
      double* dst = out.slice_data(k);
      for (std::size_t flat = 0; flat < sp; ++flat) {
        const std::size_t pos = (flat / stride) % extent;
        dst[flat] = line_derivative(src + flat, pos, extent, stride, h);
      }
    }
  });
  return out;
}

SpaceTimeField partial_t(const SpaceTimeField& f) {
  if (f.grid.t_steps < 3)
    throw ValidationError("time derivative needs at least 3 time samples");
  const std::size_t sp = f.grid.space_points();
  SpaceTimeField out;
  out.grid = f.grid;
  out.samples.resize(f.samples.size());
  for (std::size_t k = 0; k < f.grid.t_steps; ++k) {
    const double* base = f.samples.data() + k * sp;
    double* dst = out.slice_data(k);
    for (std::size_t flat = 0; flat < sp; ++flat)
      dst[flat] = line_derivative(base + flat, k, f.grid.t_steps, sp, f.grid.tau);
  }
  return out;
}

SpaceField partial_i(const SpaceField& f, int axis) {
  if (axis < 0 || axis >= f.N) throw ValidationError("derivative axis out of range");
  if (f.extents[axis] < 3)
    throw ValidationError("derivative needs at least 3 samples along the axis");
  const auto strides = space_strides(f.extents);
  const std::size_t stride = strides[axis];
  const std::size_t extent = f.extents[axis];
  const double h = f.spacing[axis];
  SpaceField out = f;
  for (std::size_t flat = 0; flat < f.samples.size(); ++flat) {
    const std::size_t pos = (flat / stride) % extent;
    out.samples[flat] = line_derivative(f.samples.data() + flat, pos, extent, stride, h);
  }
  return out;
}

std::vector<double> axis_weights(std::size_t count, double spacing, double origin,
                                 double a, double b) {
  std::vector<double> w(count, 0.0);
  const double x0 = origin;
  const double x1 = origin + spacing * (count - 1);
  const double tol = kEdgeSlack * spacing;
  if (b < x0 - tol || a > x1 + tol) return w;  // empty intersection
  if (a < x0 - tol || b > x1 + tol)
    throw GeometryError("integration interval escapes the grid domain");
  a = std::clamp(a, x0, x1);
  b = std::clamp(b, x0, x1);
  if (!(b > a)) return w;

  const auto first_cell = static_cast<std::size_t>(
      std::clamp(std::floor((a - origin) / spacing), 0.0, double(count - 2)));
  for (std::size_t c = first_cell; c + 1 < count; ++c) {
    const double xl = origin + spacing * c;
    const double xr = xl + spacing;
    const double lo = std::max(a, xl);
    const double hi = std::min(b, xr);
    if (hi <= lo) {
      if (xl > b) break;
      continue;
    }
    const double xi_lo = (lo - xl) / spacing;
    const double xi_hi = (hi - xl) / spacing;
    const double len = hi - lo;
    const double mean_xi = 0.5 * (xi_lo + xi_hi);
    w[c] += len * (1.0 - mean_xi);
    w[c + 1] += len * mean_xi;
  }
  return w;
}

namespace {

struct CylinderQuadrature {
  std::vector<std::vector<double>> wx;               // per-axis weights
  std::vector<std::pair<std::size_t, std::size_t>> xr;  // per-axis nonzero ranges
  std::vector<double> wt;
  std::pair<std::size_t, std::size_t> tr;
  std::vector<std::size_t> strides;
  bool empty = false;
};

CylinderQuadrature make_quadrature(const AnisotropicGrid& grid,
                                   const CylinderGeometry& geom) {
  geom.validate();
  grid.validate();
  if (geom.dim() != grid.N)
    throw GeometryError("cylinder dimension does not match grid");
  CylinderQuadrature q;
  q.strides = space_strides(grid.extents);
  q.wx.resize(grid.N);
  q.xr.resize(grid.N);
  for (int i = 0; i < grid.N; ++i) {
    q.wx[i] = axis_weights(grid.extents[i], grid.spacing[i], grid.origin[i],
                           geom.lo(i), geom.hi(i));
    q.xr[i] = nonzero_range(q.wx[i]);
    if (q.xr[i].first >= q.xr[i].second) q.empty = true;
  }
  q.wt = axis_weights(grid.t_steps, grid.tau, grid.origin_t, geom.t_lo(), geom.t_hi());
  q.tr = nonzero_range(q.wt);
  if (q.tr.first >= q.tr.second) q.empty = true;
  return q;
}

// Deterministic weighted sum of fn over one time slice of the sub-box.
double slice_weighted_sum(const CylinderQuadrature& q, std::size_t t,
                          const std::function<double(std::size_t, std::size_t)>& fn,
                          std::vector<double>& buffer) {
  const int N = static_cast<int>(q.wx.size());
  buffer.clear();
  std::vector<std::size_t> idx(N);
  for (int i = 0; i < N; ++i) idx[i] = q.xr[i].first;
  while (true) {
    double wprod = 1.0;
    std::size_t flat = 0;
    for (int i = 0; i < N; ++i) {
      wprod *= q.wx[i][idx[i]];
      flat += idx[i] * q.strides[i];
    }
    buffer.push_back(wprod * fn(t, flat));
    int axis = N - 1;
    while (axis >= 0) {
      if (++idx[axis] < q.xr[axis].second) break;
      idx[axis] = q.xr[axis].first;
      --axis;
    }
    if (axis < 0) break;
  }
  return pairwise_sum(buffer);
}

double integrate_with(const CylinderQuadrature& q,
                      const std::function<double(std::size_t, std::size_t)>& fn) {
  if (q.empty) return 0.0;
  const std::size_t nt = q.tr.second - q.tr.first;
  std::vector<double> slice_vals(nt, 0.0);
  parallel_for(nt, [&](std::size_t kb, std::size_t ke) {
    std::vector<double> buffer;
    for (std::size_t k = kb; k < ke; ++k) {
      const std::size_t t = q.tr.first + k;
      slice_vals[k] = q.wt[t] * slice_weighted_sum(q, t, fn, buffer);
    }
  });
  return pairwise_sum(slice_vals);
}

}  // namespace

double integrate_cylinder_fn(
    const AnisotropicGrid& grid, const CylinderGeometry& geom,
    const std::function<double(std::size_t, std::size_t)>& fn) {
  return integrate_with(make_quadrature(grid, geom), fn);
}

double integrate_cylinder(const SpaceTimeField& f, const CylinderGeometry& geom) {
  const std::size_t sp = f.grid.space_points();
  return integrate_cylinder_fn(
      f.grid, geom,
      [&f, sp](std::size_t t, std::size_t flat) { return f.samples[t * sp + flat]; });
}

double level_set_measure(const SpaceTimeField& f, double level,
                         const CylinderGeometry& geom) {
  const std::size_t sp = f.grid.space_points();
  return integrate_cylinder_fn(f.grid, geom,
                               [&f, sp, level](std::size_t t, std::size_t flat) {
                                 return f.samples[t * sp + flat] >= level ? 1.0 : 0.0;
                               });
}

double sup_sub_cylinder(const SpaceTimeField& f, const CylinderGeometry& geom) {
  geom.validate();
  const auto& grid = f.grid;
  if (geom.dim() != grid.N)
    throw GeometryError("cylinder dimension does not match grid");
  const auto strides = space_strides(grid.extents);

  std::vector<std::pair<std::size_t, std::size_t>> ranges(grid.N);
  for (int i = 0; i < grid.N; ++i) {
    const double h = grid.spacing[i];
    if (geom.lo(i) < grid.origin[i] - kEdgeSlack * h ||
        geom.hi(i) > grid.x_max(i) + kEdgeSlack * h)
      throw GeometryError("cylinder escapes the grid domain");
    const auto j0 = static_cast<std::size_t>(
        std::max(0.0, std::ceil((geom.lo(i) - grid.origin[i]) / h - kEdgeSlack)));
    const auto j1 = static_cast<std::size_t>(
        std::min(double(grid.extents[i] - 1),
                 std::floor((geom.hi(i) - grid.origin[i]) / h + kEdgeSlack)));
    if (j0 > j1) throw GeometryError("cylinder contains no grid nodes");
    ranges[i] = {j0, j1 + 1};
  }
  const double tau = grid.tau;
  if (geom.t_lo() < grid.origin_t - kEdgeSlack * tau ||
      geom.t_hi() > grid.t_max() + kEdgeSlack * tau)
    throw GeometryError("cylinder escapes the grid time range");
  const auto k0 = static_cast<std::size_t>(
      std::max(0.0, std::ceil((geom.t_lo() - grid.origin_t) / tau - kEdgeSlack)));
  const auto k1 = static_cast<std::size_t>(
      std::min(double(grid.t_steps - 1),
               std::floor((geom.t_hi() - grid.origin_t) / tau + kEdgeSlack)));
  if (k0 > k1) throw GeometryError("cylinder contains no grid nodes in time");

  double best = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx(grid.N);
  for (std::size_t k = k0; k <= k1; ++k) {
    const double* src = f.slice_data(k);
    for (int i = 0; i < grid.N; ++i) idx[i] = ranges[i].first;
    while (true) {
      std::size_t flat = 0;
      for (int i = 0; i < grid.N; ++i) flat += idx[i] * strides[i];
      best = std::max(best, src[flat]);
      int axis = grid.N - 1;
      while (axis >= 0) {
        if (++idx[axis] < ranges[axis].second) break;
        idx[axis] = ranges[axis].first;
        --axis;
      }
      if (axis < 0) break;
    }
  }
  return best;
}

double integrate_box(const SpaceField& f) {
  return integrate_box_fn(f, [&f](std::size_t flat) { return f.samples[flat]; });
}

double integrate_box_fn(const SpaceField& ref,
                        const std::function<double(std::size_t)>& fn) {
  const auto strides = space_strides(ref.extents);
  std::vector<std::vector<double>> wx(ref.N);
  for (int i = 0; i < ref.N; ++i) {
    wx[i].assign(ref.extents[i], ref.spacing[i]);
    wx[i].front() = 0.5 * ref.spacing[i];
    wx[i].back() = 0.5 * ref.spacing[i];
  }
  std::vector<double> buffer;
  buffer.reserve(ref.samples.size());
  for (std::size_t flat = 0; flat < ref.samples.size(); ++flat) {
    double w = 1.0;
    for (int i = 0; i < ref.N; ++i) w *= wx[i][(flat / strides[i]) % ref.extents[i]];
    buffer.push_back(w * fn(flat));
  }
  return pairwise_sum(buffer);
}

namespace {

struct AxisRamp {
  double lo_out, lo_in, hi_in, hi_out;
  double value(double x) const {
    if (x <= lo_out || x >= hi_out) return 0.0;
    if (x < lo_in) return (x - lo_out) / (lo_in - lo_out);
    if (x > hi_in) return (hi_out - x) / (hi_out - hi_in);
    return 1.0;
  }
  double slope(double x) const {
    if (x > lo_out && x < lo_in) return 1.0 / (lo_in - lo_out);
    if (x > hi_in && x < hi_out) return -1.0 / (hi_out - hi_in);
    return 0.0;
  }
  double max_slope() const {
    return std::max(1.0 / (lo_in - lo_out), 1.0 / (hi_out - hi_in));
  }
};

}  // namespace

CutoffField build_cutoff(const CylinderGeometry& outer, const CylinderGeometry& inner,
                         double q_exp, const AnisotropicGrid& grid) {
  outer.validate();
  inner.validate();
  grid.validate();
  if (outer.dim() != grid.N || inner.dim() != grid.N)
    throw GeometryError("cutoff geometry dimension does not match grid");
  if (std::abs(outer.t_hi() - inner.t_hi()) >
      kEdgeSlack * std::max(1.0, std::abs(outer.t_hi())))
    throw GeometryError("cutoff cylinders must share the terminal time");
  if (!(q_exp > 0.0)) throw ValidationError("cutoff exponent must be positive");

  std::vector<AxisRamp> ramps(grid.N);
  for (int i = 0; i < grid.N; ++i) {
    ramps[i] = {outer.lo(i), inner.lo(i), inner.hi(i), outer.hi(i)};
    if (!(ramps[i].lo_out < ramps[i].lo_in && ramps[i].hi_in < ramps[i].hi_out))
      throw GeometryError("inner cylinder must be strictly inside the outer one (axis " +
                          std::to_string(i) + ")");
  }
  if (!(outer.t_lo() < inner.t_lo()))
    throw GeometryError("inner cylinder must start strictly after the outer one");
  const double t_on = outer.t_lo();
  const double t_full = inner.t_lo();
  const double t_slope = 1.0 / (t_full - t_on);
  auto time_value = [&](double t) {
    if (t <= t_on) return 0.0;
    if (t >= t_full) return 1.0;
    return (t - t_on) * t_slope;
  };
  auto time_slope = [&](double t) { return (t > t_on && t < t_full) ? t_slope : 0.0; };

  CutoffField c;
  c.q_exp = q_exp;
  c.analytic_derivatives = true;
  c.zeta = make_field(grid);
  c.zeta_t = make_field(grid);
  c.zeta_grad.assign(grid.N, make_field(grid));
  c.grad_bound.resize(grid.N);
  // Factor 2 covers the worst one-sided stencil response at profile kinks.
  constexpr double kStencilFactor = 2.0 * (1.0 + 1e-9);
  for (int i = 0; i < grid.N; ++i) c.grad_bound[i] = kStencilFactor * ramps[i].max_slope();
  c.time_bound = kStencilFactor * t_slope;

  const auto strides = space_strides(grid.extents);
  const std::size_t sp = grid.space_points();
  std::vector<double> axis_vals;   // flattened per-axis ramp values
  std::vector<double> axis_slopes;
  std::vector<std::size_t> offsets(grid.N + 1, 0);
  for (int i = 0; i < grid.N; ++i) offsets[i + 1] = offsets[i] + grid.extents[i];
  axis_vals.resize(offsets.back());
  axis_slopes.resize(offsets.back());
  for (int i = 0; i < grid.N; ++i)
    for (std::size_t j = 0; j < grid.extents[i]; ++j) {
      axis_vals[offsets[i] + j] = ramps[i].value(grid.x(i, j));
      axis_slopes[offsets[i] + j] = ramps[i].slope(grid.x(i, j));
    }

  for (std::size_t k = 0; k < grid.t_steps; ++k) {
    const double tv = time_value(grid.t(k));
    const double ts = time_slope(grid.t(k));
    for (std::size_t flat = 0; flat < sp; ++flat) {
      double prod = 1.0;
      for (int i = 0; i < grid.N; ++i)
        prod *= axis_vals[offsets[i] + (flat / strides[i]) % grid.extents[i]];
      c.zeta.at(k, flat) = tv * prod;
      c.zeta_t.at(k, flat) = ts * prod;
      for (int i = 0; i < grid.N; ++i) {
        const std::size_t j = (flat / strides[i]) % grid.extents[i];
        double others = 1.0;
        for (int l = 0; l < grid.N; ++l) {
          if (l == i) continue;
          others *= axis_vals[offsets[l] + (flat / strides[l]) % grid.extents[l]];
        }
        c.zeta_grad[i].at(k, flat) = tv * axis_slopes[offsets[i] + j] * others;
      }
    }
  }

  // Declared bounds are part of the contract: verify the discrete gradients.
  for (int i = 0; i < grid.N; ++i) {
    const SpaceTimeField measured = partial_i(c.zeta, i);
    for (double v : measured.samples)
      if (std::abs(v) > c.grad_bound[i])
        throw NumericsError("constructed cutoff violates its declared gradient bound");
  }
  if (grid.t_steps >= 3) {
    const SpaceTimeField measured = partial_t(c.zeta);
    for (double v : measured.samples)
      if (std::abs(v) > c.time_bound)
        throw NumericsError("constructed cutoff violates its declared time bound");
  }
  return c;
}

CutoffField build_cutoff_step(const CylinderGeometry& base, int j, double q_exp,
                              const AnisotropicGrid& grid) {
  if (j < 0) throw ValidationError("cutoff step index must be nonnegative");
  auto shrink = [&base](int level) {
    const double f = 0.5 * (1.0 + std::pow(2.0, -(level + 1)));
    CylinderGeometry g = base;
    for (auto& r : g.rho) r *= f;
    g.theta *= f;
    return g;
  };
  return build_cutoff(shrink(j), shrink(j + 1), q_exp, grid);
}

bool fits_dilated(const CylinderGeometry& geom, const AnisotropicGrid& grid,
                  double dilation) {
  geom.validate();
  if (geom.dim() != grid.N) return false;
  for (int i = 0; i < grid.N; ++i) {
    const double tol = kEdgeSlack * grid.spacing[i];
    if (geom.center_x[i] - dilation * geom.rho[i] < grid.origin[i] - tol) return false;
    if (geom.center_x[i] + dilation * geom.rho[i] > grid.x_max(i) + tol) return false;
  }
  const double tol = kEdgeSlack * grid.tau;
  return geom.center_t - dilation * geom.theta >= grid.origin_t - tol &&
         geom.center_t <= grid.t_max() + tol;
}

}  // namespace pdg

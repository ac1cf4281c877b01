#pragma once

#include "pdg/fields.hpp"

namespace pdg {

// Truncation energy (1/m) \int_b^a z^{1/m-1} (z-b)_+ dz in closed form.
// Arguments are the already-powered quantities (a = u^m, b = k^m).
double g_plus(double a, double b, double m);

// Mirror truncation below the level; kept for symmetry tests.
double g_minus(double a, double b, double m);

struct Sandwich {
  double lower;
  double value;
  double upper;
  double gamma;
};

/// Two-sided comparison of g_plus(u, k, m) against (k+u)^{1/m-1}(u-k)_+^2
/// with a per-m calibrated constant.
Sandwich lemma21_sandwich(double u, double k, double m);

/// Calibrated constant for the sandwich: max ratio over a fixed sweep of
/// u/k, times a 1.05 safety factor. Cached per m.
double lemma21_gamma(double m);

/// Pointwise (u^m - k^m)_+^theta_exp.
SpaceTimeField truncation_power_field(const SpaceTimeField& field, double level,
                                      double m, double theta_exp);

}  // namespace pdg

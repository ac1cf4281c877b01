#pragma once

#include <optional>

#include "pdg/exponents.hpp"
#include "pdg/geometry.hpp"

namespace pdg {

struct BoundInputs {
  ExponentConfig config;
  CylinderGeometry geom;
  double mass = 0.0;              // integral of u^{m+L} or of u^s over the cylinder
  std::optional<double> s;        // extra integrability exponent
  double gamma = 1.0;             // calibration constant

  void validate() const;
};

/// Additive radius term: the floor the level k must exceed so that the
/// bracketed geometric factors collapse.
double radius_term(const ExponentConfig& cfg, const CylinderGeometry& geom);

/// Multiplicative geometric factor of the recursion estimates.
double h_factor(const ExponentConfig& cfg, const CylinderGeometry& geom);

enum class BoundForm { Theorem, Proof };

/// gamma (H^{(N+p)/p} mass)^{p/((M-L)N)} + R; requires L < M.
double sup_bound_supercritical(const BoundInputs& in);

/// Theorem form: gamma (H mass)^{p/kappa_s} + R.
/// Proof form:   gamma H^{(N+p)/kappa_s} mass^{p/kappa_s} + R.
/// Requires L >= M, s > m+1 and kappa_s > 0.
double sup_bound_subcritical(const BoundInputs& in, BoundForm form = BoundForm::Proof);

struct EpsilonReport {
  double epsilon;       // (s - m - L) / (s - m p_star), in (0, 1)
  double identity_lhs;  // epsilon (N + p) - N
  double identity_rhs;  // kappa_s / (s - m p_star)
};

/// Interpolation exponent of the strictly subcritical recursion.
EpsilonReport iteration_epsilon(const ExponentConfig& cfg, double s);

/// Level above which the iteration energies collapse. Supercritical regime
/// consumes y0; critical/subcritical regimes consume in.mass (= integral of
/// u^s) through d = mass^{1/s}.
double level_threshold_k(const BoundInputs& in, double y0);

}  // namespace pdg

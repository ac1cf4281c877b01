#include "pdg/bounds.hpp"

#include <cmath>

#include "pdg/errors.hpp"

namespace pdg {

namespace {

bool close(double a, double b) { return std::abs(a - b) <= kRegimeTol; }

double checked_kappa(const ExponentConfig& cfg, const DerivedIndices& d, double s) {
  if (!(s > d.m + 1.0))
    throw DomainError("subcritical estimate requires s > m + 1 = " +
                      std::to_string(d.m + 1.0));
  const double kappa = d.p * (s + 1.0 - d.L) + cfg.N * (d.p * d.lambda_over_p - d.L);
  if (!(kappa > 0.0))
    throw DomainError("non-degeneracy number is not positive; s must exceed " +
                      std::to_string(integrability_threshold(cfg)));
  return kappa;
}

}  // namespace

void BoundInputs::validate() const {
  config.validate();
  geom.validate();
  if (!(mass >= 0.0)) throw ValidationError("mass must be nonnegative");
  if (!(gamma > 0.0)) throw ValidationError("gamma must be positive");
}

double radius_term(const ExponentConfig& cfg, const CylinderGeometry& geom) {
  const DerivedIndices d = derive_indices(cfg);
  geom.validate();
  if (geom.dim() != cfg.N) throw GeometryError("geometry dimension does not match config");
  const double theta = geom.theta;
  const int N = cfg.N;
  double R = 0.0;

  if (d.Lambda < 1.0 - kRegimeTol) {
    for (int i = 0; i < N; ++i) {
      // lambda_i <= Lambda_i <= Lambda < 1 keeps both exponents positive.
      if (!(1.0 - d.lambda_i[i] > kRegimeTol) || !(1.0 - d.Lambda_i[i] > kRegimeTol))
        throw NumericsError("singular-branch exponent degenerated");
      R += std::pow(theta / std::pow(geom.rho[i], cfg.p[i]), 1.0 / (1.0 - d.lambda_i[i]));
      R += std::pow(theta / std::pow(geom.rho[i], cfg.q[i]), 1.0 / (1.0 - d.Lambda_i[i]));
    }
    return R;
  }

  if (close(d.Lambda, 1.0)) {
    for (int i = 0; i < N; ++i) {
      if (d.lambda_i[i] < 1.0 - kRegimeTol)
        R += std::pow(theta / std::pow(geom.rho[i], cfg.p[i]), 1.0 / (1.0 - d.lambda_i[i]));
      if (d.Lambda_i[i] < 1.0 - kRegimeTol)
        R += std::pow(theta / std::pow(geom.rho[i], cfg.q[i]), 1.0 / (1.0 - d.Lambda_i[i]));
    }
    return R;
  }

  // Degenerate branch. Empty inner sums annihilate their enclosing terms.
  double sum_rho_p = 0.0, sum_rho_q = 0.0;
  for (int i = 0; i < N; ++i) {
    if (close(d.lambda_i[i], d.Lambda)) sum_rho_p += std::pow(geom.rho[i], cfg.p[i]);
    if (close(d.Lambda_i[i], d.Lambda)) sum_rho_q += std::pow(geom.rho[i], cfg.q[i]);
  }
  const double inv = 1.0 / (d.Lambda - 1.0);
  for (int i = 0; i < N; ++i) {
    if (close(d.lambda_i[i], d.Lambda))
      R += std::pow(std::pow(geom.rho[i], cfg.p[i]) / theta, inv);
    if (close(d.Lambda_i[i], d.Lambda))
      R += std::pow(std::pow(geom.rho[i], cfg.q[i]) / theta, inv);
    if (d.lambda_i[i] < d.Lambda - kRegimeTol && sum_rho_p > 0.0)
      R += std::pow(sum_rho_p / std::pow(geom.rho[i], cfg.p[i]),
                    1.0 / (d.Lambda - d.lambda_i[i]));
    if (d.Lambda_i[i] < d.Lambda - kRegimeTol && sum_rho_q > 0.0)
      R += std::pow(sum_rho_q / std::pow(geom.rho[i], cfg.q[i]),
                    1.0 / (d.Lambda - d.Lambda_i[i]));
  }
  return R;
}

double h_factor(const ExponentConfig& cfg, const CylinderGeometry& geom) {
  const DerivedIndices d = derive_indices(cfg);
  geom.validate();
  if (geom.dim() != cfg.N) throw GeometryError("geometry dimension does not match config");
  if (d.Lambda < 1.0 - kRegimeTol) return 1.0 / geom.theta;

  double H = 0.0;
  if (close(d.Lambda, 1.0)) {
    H = 1.0 / geom.theta;
    for (int i = 0; i < cfg.N; ++i) {
      if (close(d.lambda_i[i], 1.0)) H += std::pow(geom.rho[i], -cfg.p[i]);
      if (close(d.Lambda_i[i], 1.0)) H += std::pow(geom.rho[i], -cfg.q[i]);
    }
    return H;
  }
  for (int i = 0; i < cfg.N; ++i) {
    if (close(d.lambda_i[i], d.Lambda)) H += std::pow(geom.rho[i], -cfg.p[i]);
    if (close(d.Lambda_i[i], d.Lambda)) H += std::pow(geom.rho[i], -cfg.q[i]);
  }
  return H;
}

double sup_bound_supercritical(const BoundInputs& in) {
  in.validate();
  const DerivedIndices d = derive_indices(in.config);
  if (classify(in.config).criticality != Criticality::Supercritical)
    throw RegimeError("supercritical estimate requires L < M");
  const double H = h_factor(in.config, in.geom);
  const double R = radius_term(in.config, in.geom);
  const int N = in.config.N;
  const double denom = (d.M - d.L) * N;
  // Same quantity written through the raw exponents; guards the formula.
  const double denom_raw = (d.m + 1.0) * d.p + N * (d.p * d.lambda_over_p - d.L);
  if (std::abs(denom - denom_raw) > 1e-9 * std::max(1.0, std::abs(denom)))
    throw NumericsError("supercritical exponent identity violated");
  return in.gamma * std::pow(std::pow(H, (N + d.p) / d.p) * in.mass, d.p / denom) + R;
}

double sup_bound_subcritical(const BoundInputs& in, BoundForm form) {
  in.validate();
  const DerivedIndices d = derive_indices(in.config);
  if (classify(in.config).criticality == Criticality::Supercritical)
    throw RegimeError("subcritical estimate requires L >= M");
  if (!in.s) throw ValidationError("subcritical estimate requires the exponent s");
  const double kappa = checked_kappa(in.config, d, *in.s);
  const double H = h_factor(in.config, in.geom);
  const double R = radius_term(in.config, in.geom);
  const int N = in.config.N;
  if (form == BoundForm::Theorem)
    return in.gamma * std::pow(H * in.mass, d.p / kappa) + R;
  return in.gamma * std::pow(H, (N + d.p) / kappa) * std::pow(in.mass, d.p / kappa) + R;
}

EpsilonReport iteration_epsilon(const ExponentConfig& cfg, double s) {
  const DerivedIndices d = derive_indices(cfg);
  if (!(d.L > d.M + kRegimeTol))
    throw RegimeError("interpolation exponent is defined for L > M only");
  const double denom = s - d.m * d.p_star;
  if (!(denom > 0.0))
    throw DomainError("interpolation exponent requires s > m p_* = " +
                      std::to_string(d.m * d.p_star));
  const double eps = (s - d.m - d.L) / denom;
  if (!(eps > 0.0))
    throw DomainError("interpolation exponent requires s > m + L = " +
                      std::to_string(d.m + d.L));
  if (!(eps < 1.0)) throw NumericsError("interpolation exponent left (0,1)");
  const double kappa = d.p * (s + 1.0 - d.L) + cfg.N * (d.p * d.lambda_over_p - d.L);
  return {eps, eps * (cfg.N + d.p) - cfg.N, kappa / denom};
}

double level_threshold_k(const BoundInputs& in, double y0) {
  in.validate();
  if (!(y0 >= 0.0)) throw ValidationError("y0 must be nonnegative");
  const DerivedIndices d = derive_indices(in.config);
  const double H = h_factor(in.config, in.geom);
  const int N = in.config.N;
  const auto regime = classify(in.config).criticality;
  if (regime == Criticality::Supercritical) {
    const double denom = (d.m + 1.0) * d.p + N * (d.p * d.lambda_over_p - d.L);
    if (!(denom > 0.0)) throw RegimeError("level threshold exponent must be positive");
    return std::pow(in.gamma * std::pow(H, (N + d.p) / d.p) * y0, d.p / denom);
  }
  if (!in.s) throw ValidationError("critical/subcritical threshold requires the exponent s");
  const double kappa = checked_kappa(in.config, d, *in.s);
  return in.gamma * std::pow(in.mass, d.p / kappa) * std::pow(H, (N + d.p) / kappa);
}

}  // namespace pdg

#include "pdg/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pdg/errors.hpp"

namespace pdg {

namespace {

void require_axis(bool ok, const std::string& what, int axis) {
  if (!ok) throw ValidationError(what + " (axis " + std::to_string(axis) + ")");
}

std::vector<double> as_vector(const nlohmann::json& j, const char* key, int N) {
  if (!j.contains(key) || !j[key].is_array())
    throw ValidationError(std::string("config key '") + key + "' must be an array");
  auto v = j[key].get<std::vector<double>>();
  if (static_cast<int>(v.size()) != N)
    throw ValidationError(std::string("config key '") + key + "' must have length N");
  return v;
}

}  // namespace

void ExponentConfig::validate() const {
  if (N < 1) throw ValidationError("N must be a positive integer");
  const auto sz = static_cast<std::size_t>(N);
  if (m.size() != sz || n.size() != sz || p.size() != sz || q.size() != sz)
    throw ValidationError("exponent arrays m, n, p, q must all have length N");
  for (int i = 0; i < N; ++i) {
    require_axis(std::isfinite(m[i]) && m[i] > 0.0, "m_i must be positive", i);
    require_axis(std::isfinite(n[i]) && n[i] > 0.0, "n_i must be positive", i);
    require_axis(std::isfinite(p[i]) && p[i] > 1.0, "p_i must exceed 1", i);
    require_axis(std::isfinite(q[i]) && q[i] >= p[i], "q_i must be >= p_i", i);
    const double lam = m[i] * (p[i] - 1.0);
    const double Lam = n[i] * (q[i] - 1.0);
    const double tol = kRegimeTol * std::max({1.0, lam, Lam});
    require_axis(lam <= Lam + tol, "m_i(p_i-1) must not exceed n_i(q_i-1)", i);
  }
}

ExponentConfig ExponentConfig::from_json(const nlohmann::json& j) {
  ExponentConfig cfg;
  if (!j.contains("N")) throw ValidationError("config requires key 'N'");
  cfg.N = j.at("N").get<int>();
  cfg.m = as_vector(j, "m", cfg.N);
  cfg.n = as_vector(j, "n", cfg.N);
  cfg.p = as_vector(j, "p", cfg.N);
  cfg.q = as_vector(j, "q", cfg.N);
  cfg.validate();
  return cfg;
}

nlohmann::json ExponentConfig::to_json() const {
  return {{"N", N}, {"m", m}, {"n", n}, {"p", p}, {"q", q}};
}

DerivedIndices derive_indices(const ExponentConfig& cfg) {
  cfg.validate();
  DerivedIndices d{};
  const int N = cfg.N;
  d.lambda_i.resize(N);
  d.Lambda_i.resize(N);
  d.alpha_i.resize(N);

  d.m = std::numeric_limits<double>::infinity();
  d.q = 0.0;
  double inv_p_sum = 0.0;
  double lam_over_p_sum = 0.0;
  d.Lambda = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < N; ++i) {
    d.lambda_i[i] = cfg.m[i] * (cfg.p[i] - 1.0);
    d.Lambda_i[i] = cfg.n[i] * (cfg.q[i] - 1.0);
    d.Lambda = std::max(d.Lambda, d.Lambda_i[i]);
    d.m = std::min({d.m, cfg.m[i], cfg.n[i]});
    d.q = std::max(d.q, cfg.q[i]);
    inv_p_sum += 1.0 / cfg.p[i];
    lam_over_p_sum += d.lambda_i[i] / cfg.p[i];
  }
  d.p = N / inv_p_sum;
  d.lambda_over_p = lam_over_p_sum / N;

  double alpha_sum = 0.0;
  for (int i = 0; i < N; ++i) {
    d.alpha_i[i] = (d.lambda_i[i] + d.m) / (d.m * cfg.p[i]);
    alpha_sum += d.alpha_i[i];
  }
  d.alpha = alpha_sum / N;
  d.p_star = d.alpha * d.p + (1.0 + 1.0 / d.m) * d.p / N;
  d.L = std::max(1.0, d.Lambda);
  d.M = d.p * d.lambda_over_p + (d.m + 1.0) * d.p / N;
  return d;
}

RegimeReport classify(const ExponentConfig& cfg) {
  const DerivedIndices d = derive_indices(cfg);
  RegimeReport r{};
  if (std::abs(d.Lambda - 1.0) <= kRegimeTol)
    r.diffusion = Diffusion::Limiting;
  else if (d.Lambda < 1.0)
    r.diffusion = Diffusion::Singular;
  else
    r.diffusion = Diffusion::Degenerate;

  if (std::abs(d.L - d.M) <= kRegimeTol)
    r.criticality = Criticality::Critical;
  else if (d.L < d.M)
    r.criticality = Criticality::Supercritical;
  else
    r.criticality = Criticality::Subcritical;

  if (r.criticality != Criticality::Supercritical)
    r.s_min = integrability_threshold(cfg);
  return r;
}

double kappa_s(const ExponentConfig& cfg, double s) {
  const DerivedIndices d = derive_indices(cfg);
  if (!(s > d.m + 1.0))
    throw DomainError("kappa_s requires s > m + 1 = " + std::to_string(d.m + 1.0));
  return d.p * (s + 1.0 - d.L) + cfg.N * (d.p * d.lambda_over_p - d.L);
}

double integrability_threshold(const ExponentConfig& cfg) {
  const DerivedIndices d = derive_indices(cfg);
  return d.L - 1.0 + (cfg.N / d.p) * (d.L - d.p * d.lambda_over_p);
}

ExponentConfig dnl_standard_config(double m, double p, int N) {
  if (N < 1) throw ValidationError("N must be a positive integer");
  ExponentConfig cfg;
  cfg.N = N;
  cfg.m.assign(N, m);
  cfg.n.assign(N, m);
  cfg.p.assign(N, p);
  cfg.q.assign(N, p);
  cfg.validate();
  return cfg;
}

ExponentConfig orlicz_power_config(double m, double n, double p, double q, int N) {
  if (N < 1) throw ValidationError("N must be a positive integer");
  ExponentConfig cfg;
  cfg.N = N;
  cfg.m.assign(N, m);
  cfg.n.assign(N, n);
  cfg.p.assign(N, p);
  cfg.q.assign(N, q);
  cfg.validate();
  return cfg;
}

ExponentConfig anisotropic_dnl_config(std::vector<double> m_i, std::vector<double> p_i) {
  if (m_i.empty() || m_i.size() != p_i.size())
    throw ValidationError("m_i and p_i must be nonempty and of equal length");
  ExponentConfig cfg;
  cfg.N = static_cast<int>(m_i.size());
  cfg.m = m_i;
  cfg.n = std::move(m_i);
  cfg.p = p_i;
  cfg.q = std::move(p_i);
  cfg.validate();
  return cfg;
}

std::string to_string(Diffusion d) {
  switch (d) {
    case Diffusion::Singular: return "singular";
    case Diffusion::Limiting: return "limiting";
    case Diffusion::Degenerate: return "degenerate";
  }
  return "?";
}

std::string to_string(Criticality c) {
  switch (c) {
    case Criticality::Supercritical: return "supercritical";
    case Criticality::Critical: return "critical";
    case Criticality::Subcritical: return "subcritical";
  }
  return "?";
}

nlohmann::json to_json(const DerivedIndices& d) {
  return {{"lambda_i", d.lambda_i}, {"Lambda_i", d.Lambda_i}, {"alpha_i", d.alpha_i},
          {"Lambda", d.Lambda},     {"m", d.m},               {"q", d.q},
          {"p", d.p},               {"lambda_over_p", d.lambda_over_p},
          {"alpha", d.alpha},       {"p_star", d.p_star},     {"L", d.L},
          {"M", d.M}};
}

nlohmann::json to_json(const RegimeReport& r) {
  nlohmann::json j{{"diffusion", to_string(r.diffusion)},
                   {"criticality", to_string(r.criticality)}};
  if (r.s_min)
    j["s_min"] = *r.s_min;
  else
    j["s_min"] = nullptr;
  return j;
}

}  // namespace pdg

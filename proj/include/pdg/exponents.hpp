#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace pdg {

// Comparison tolerance for regime boundaries. Configurations within this
// distance of a boundary classify as the equality case.
inline constexpr double kRegimeTol = 1e-12;

/// Per-axis growth exponents of a member class. The p/q pair describes the
/// gradient growth, the m/n pair the time-derivative unbalance.
struct ExponentConfig {
  int N = 0;
  std::vector<double> m, n, p, q;

  void validate() const;

  static ExponentConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// Everything derived from an ExponentConfig that the estimates consume.
struct DerivedIndices {
  std::vector<double> lambda_i;  // m_i (p_i - 1)
  std::vector<double> Lambda_i;  // n_i (q_i - 1)
  std::vector<double> alpha_i;   // (lambda_i + m) / (m p_i)
  double Lambda;                 // max Lambda_i
  double m;                      // min over all m_i, n_i
  double q;                      // max q_i
  double p;                      // harmonic mean of the p_i
  double lambda_over_p;          // (1/N) sum lambda_i / p_i
  double alpha;                  // (1/N) sum alpha_i
  double p_star;                 // alpha p + (1 + 1/m) p / N  ==  1 + M/m
  double L;                      // max(1, Lambda)
  double M;                      // p lambda_over_p + (m + 1) p / N
};

enum class Diffusion { Singular, Limiting, Degenerate };
enum class Criticality { Supercritical, Critical, Subcritical };

std::string to_string(Diffusion d);
std::string to_string(Criticality c);

struct RegimeReport {
  Diffusion diffusion;
  Criticality criticality;
  // Open lower bound on the extra integrability exponent; present when L >= M.
  std::optional<double> s_min;
};

DerivedIndices derive_indices(const ExponentConfig& cfg);
RegimeReport classify(const ExponentConfig& cfg);

/// Non-degeneracy number p(s+1-L) + N(p|lambda/p| - L). Requires s > m+1.
double kappa_s(const ExponentConfig& cfg, double s);

/// Root of s -> kappa_s, i.e. L - 1 + (N/p)(L - p|lambda/p|).
double integrability_threshold(const ExponentConfig& cfg);

// Translations of the model equations into exponent configurations.
ExponentConfig dnl_standard_config(double m, double p, int N);
ExponentConfig orlicz_power_config(double m, double n, double p, double q, int N);
ExponentConfig anisotropic_dnl_config(std::vector<double> m_i, std::vector<double> p_i);

nlohmann::json to_json(const DerivedIndices& d);
nlohmann::json to_json(const RegimeReport& r);

}  // namespace pdg

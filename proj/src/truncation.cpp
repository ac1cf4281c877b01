#include "pdg/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "pdg/errors.hpp"
#include "pdg/threading.hpp"

namespace pdg {

namespace {

void check_args(double a, double b, double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("truncation exponent m must be positive");
  if (a < 0.0 || b < 0.0 || !std::isfinite(a) || !std::isfinite(b))
    throw DomainError("truncation arguments must be nonnegative");
}

}  // namespace

double g_plus(double a, double b, double m) {
  check_args(a, b, m);
  if (a <= b) return 0.0;
  const double e = 1.0 + 1.0 / m;
  return (std::pow(a, e) - std::pow(b, e)) / (1.0 + m) -
         b * (std::pow(a, 1.0 / m) - std::pow(b, 1.0 / m));
}

double g_minus(double a, double b, double m) {
  check_args(a, b, m);
  if (a >= b) return 0.0;
  const double e = 1.0 + 1.0 / m;
  return b * (std::pow(b, 1.0 / m) - std::pow(a, 1.0 / m)) -
         (std::pow(b, e) - std::pow(a, e)) / (1.0 + m);
}

double lemma21_gamma(double m) {
  if (!(m > 0.0)) throw DomainError("truncation exponent m must be positive");
  static std::map<double, double> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // Ratio g_plus(u,k,m) / [(k+u)^{1/m-1}(u-k)^2] depends only on t = u/k;
  // sweep t over a wide log range plus the k = 0 end point (ratio 1/(1+m)).
  double worst = std::max(1.0 + m, 1.0 / (1.0 + m));
  const int steps = 400;
  for (int i = 0; i <= steps; ++i) {
    const double t = std::pow(10.0, -6.0 + 12.0 * i / steps);  // u/k - 1
    const double u = 1.0 + t;
    const double val = g_plus(u, 1.0, m);
    const double bracket = std::pow(1.0 + u, 1.0 / m - 1.0) * (u - 1.0) * (u - 1.0);
    const double r = val / bracket;
    worst = std::max({worst, r, 1.0 / r});
  }
  const double gamma = 1.05 * worst;
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(m, gamma);
  return gamma;
}

Sandwich lemma21_sandwich(double u, double k, double m) {
  check_args(u, k, m);
  const double gamma = lemma21_gamma(m);
  if (u <= k) return {0.0, 0.0, 0.0, gamma};
  const double bracket = std::pow(k + u, 1.0 / m - 1.0) * (u - k) * (u - k);
  return {bracket / gamma, g_plus(u, k, m), gamma * bracket, gamma};
}

SpaceTimeField truncation_power_field(const SpaceTimeField& field, double level,
                                      double m, double theta_exp) {
  if (level < 0.0) throw DomainError("truncation level must be nonnegative");
  if (!(m > 0.0)) throw DomainError("truncation exponent m must be positive");
  const double km = std::pow(level, m);
  SpaceTimeField out;
  out.grid = field.grid;
  out.samples.resize(field.samples.size());
  parallel_for(field.samples.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const double w = std::pow(field.samples[i], m) - km;
      out.samples[i] = w > 0.0 ? std::pow(w, theta_exp) : 0.0;
    }
  });
  return out;
}

}  // namespace pdg

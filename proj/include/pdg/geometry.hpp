#pragma once

#include <vector>

#include "json.hpp"

namespace pdg {

/// Space-time cylinder K_rho(center_x) x (center_t - theta, center_t].
struct CylinderGeometry {
  std::vector<double> center_x;
  double center_t = 0.0;
  std::vector<double> rho;
  double theta = 0.0;

  void validate() const;
  int dim() const { return static_cast<int>(rho.size()); }
  double lo(int axis) const { return center_x[axis] - rho[axis]; }
  double hi(int axis) const { return center_x[axis] + rho[axis]; }
  double t_lo() const { return center_t - theta; }
  double t_hi() const { return center_t; }

  CylinderGeometry scaled(double space_factor, double time_factor) const;
  bool contains(const CylinderGeometry& other) const;

  static CylinderGeometry from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

}  // namespace pdg

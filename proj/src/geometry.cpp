#include "pdg/geometry.hpp"

#include <cmath>

#include "pdg/errors.hpp"

namespace pdg {

void CylinderGeometry::validate() const {
  if (rho.empty() || center_x.size() != rho.size())
    throw GeometryError("cylinder needs matching center_x and rho arrays");
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (!(rho[i] > 0.0) || !std::isfinite(rho[i]))
      throw GeometryError("cylinder radius must be positive (axis " + std::to_string(i) + ")");
  if (!(theta > 0.0) || !std::isfinite(theta))
    throw GeometryError("cylinder temporal radius must be positive");
}

CylinderGeometry CylinderGeometry::scaled(double space_factor, double time_factor) const {
  CylinderGeometry g = *this;
  for (auto& r : g.rho) r *= space_factor;
  g.theta *= time_factor;
  return g;
}

bool CylinderGeometry::contains(const CylinderGeometry& other) const {
  if (rho.size() != other.rho.size()) return false;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (other.lo(static_cast<int>(i)) < lo(static_cast<int>(i))) return false;
    if (other.hi(static_cast<int>(i)) > hi(static_cast<int>(i))) return false;
  }
  return other.t_lo() >= t_lo() && other.t_hi() <= t_hi();
}

CylinderGeometry CylinderGeometry::from_json(const nlohmann::json& j) {
  CylinderGeometry g;
  g.center_x = j.at("center_x").get<std::vector<double>>();
  g.center_t = j.at("center_t").get<double>();
  g.rho = j.at("rho").get<std::vector<double>>();
  g.theta = j.at("theta").get<double>();
  g.validate();
  return g;
}

nlohmann::json CylinderGeometry::to_json() const {
  return {{"center_x", center_x}, {"center_t", center_t}, {"rho", rho}, {"theta", theta}};
}

}  // namespace pdg

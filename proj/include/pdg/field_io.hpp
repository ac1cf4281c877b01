#pragma once

#include <iosfwd>
#include <string>

#include "pdg/fields.hpp"

namespace pdg {

// Self-describing binary field layout:
//   magic "PDGF", version u32, N u32, extents u64[N], spacings f64[N],
//   t_steps u64, tau f64, origin f64[N], origin_t f64,
// followed by row-major f64 samples, time-outermost. Little-endian.
inline constexpr std::uint32_t kFieldFormatVersion = 1;

void write_field(const SpaceTimeField& f, const std::string& path);
SpaceTimeField read_field(const std::string& path);

void write_field(const SpaceTimeField& f, std::ostream& os);
SpaceTimeField read_field(std::istream& is);

/// One row per (t, x...): t, x_1..x_N, value.
void write_field_csv(const SpaceTimeField& f, const std::string& path);

}  // namespace pdg

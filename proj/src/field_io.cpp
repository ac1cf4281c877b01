#include "pdg/field_io.hpp"

#include <cstring>
#include <fstream>
#include <iomanip>
#include <vector>

#include "pdg/errors.hpp"

namespace pdg {

namespace {

template <typename T>
void put(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
  T v;
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw ValidationError("truncated field file");
  return v;
}

}  // namespace

void write_field(const SpaceTimeField& f, std::ostream& os) {
  f.grid.validate();
  os.write("PDGF", 4);
  put<std::uint32_t>(os, kFieldFormatVersion);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid.N));
  for (auto e : f.grid.extents) put<std::uint64_t>(os, e);
  for (auto h : f.grid.spacing) put<double>(os, h);
  put<std::uint64_t>(os, f.grid.t_steps);
  put<double>(os, f.grid.tau);
  for (auto o : f.grid.origin) put<double>(os, o);
  put<double>(os, f.grid.origin_t);
  os.write(reinterpret_cast<const char*>(f.samples.data()),
           static_cast<std::streamsize>(f.samples.size() * sizeof(double)));
  if (!os) throw NumericsError("field write failed");
}

SpaceTimeField read_field(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "PDGF", 4) != 0)
    throw ValidationError("not a PDGF field file");
  const auto version = get<std::uint32_t>(is);
  if (version != kFieldFormatVersion)
    throw ValidationError("unsupported PDGF version " + std::to_string(version));
  SpaceTimeField f;
  f.grid.N = static_cast<int>(get<std::uint32_t>(is));
  if (f.grid.N < 1 || f.grid.N > 16) throw ValidationError("implausible field dimension");
  f.grid.extents.resize(f.grid.N);
  f.grid.spacing.resize(f.grid.N);
  f.grid.origin.resize(f.grid.N);
  for (auto& e : f.grid.extents) e = get<std::uint64_t>(is);
  for (auto& h : f.grid.spacing) h = get<double>(is);
  f.grid.t_steps = get<std::uint64_t>(is);
  f.grid.tau = get<double>(is);
  for (auto& o : f.grid.origin) o = get<double>(is);
  f.grid.origin_t = get<double>(is);
  f.grid.validate();
  f.samples.resize(f.grid.total_points());
  is.read(reinterpret_cast<char*>(f.samples.data()),
          static_cast<std::streamsize>(f.samples.size() * sizeof(double)));
  if (!is) throw ValidationError("truncated field file");
  return f;
}

void write_field(const SpaceTimeField& f, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ValidationError("cannot open for writing: " + path);
  write_field(f, os);
}

SpaceTimeField read_field(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ValidationError("cannot open field file: " + path);
  return read_field(is);
}

void write_field_csv(const SpaceTimeField& f, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ValidationError("cannot open for writing: " + path);
  os << "t";
  for (int i = 0; i < f.grid.N; ++i) os << ",x" << (i + 1);
  os << ",value\n";
  os << std::setprecision(17);
  std::vector<std::size_t> strides(f.grid.N, 1);
  for (int i = f.grid.N - 2; i >= 0; --i) strides[i] = strides[i + 1] * f.grid.extents[i + 1];
  const std::size_t sp = f.grid.space_points();
  for (std::size_t k = 0; k < f.grid.t_steps; ++k)
    for (std::size_t flat = 0; flat < sp; ++flat) {
      os << f.grid.t(k);
      for (int i = 0; i < f.grid.N; ++i)
        os << ',' << f.grid.x(i, (flat / strides[i]) % f.grid.extents[i]);
      os << ',' << f.samples[k * sp + flat] << '\n';
    }
}

}  // namespace pdg

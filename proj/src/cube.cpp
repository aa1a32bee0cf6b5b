#include "kato/cube.hpp"

#include "kato/errors.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace kato {
namespace {

void put(std::ostream& out, const char* fmt, auto... args) {
  char buf[128];
  std::snprintf(buf, sizeof buf, fmt, args...);
  out << buf;
}

}  // namespace

CubeGrid sample_density(const DensityModel& model, const Vec3& origin,
                        const std::array<Vec3, 3>& steps, const std::array<int, 3>& counts) {
  for (int c : counts) {
    if (c < 2) throw Error("cube grid needs at least 2 points per axis");
  }
  CubeGrid grid;
  grid.origin = origin;
  grid.steps = steps;
  grid.counts = counts;
  if (model.frame()) grid.atoms = model.frame()->centers();
  grid.values.reserve(static_cast<std::size_t>(counts[0]) * counts[1] * counts[2]);
  for (int i = 0; i < counts[0]; ++i) {
    for (int j = 0; j < counts[1]; ++j) {
      for (int k = 0; k < counts[2]; ++k) {
        const Vec3 p = origin + i * steps[0] + j * steps[1] + k * steps[2];
        grid.values.push_back(evaluate(model, p));
      }
    }
  }
  return grid;
}

void write_cube(std::ostream& out, const CubeGrid& grid) {
  out << grid.title << '\n' << grid.comment << '\n';
  put(out, "%5d%12.6f%12.6f%12.6f\n", static_cast<int>(grid.atoms.size()), grid.origin.x(),
      grid.origin.y(), grid.origin.z());
  for (int a = 0; a < 3; ++a) {
    put(out, "%5d%12.6f%12.6f%12.6f\n", grid.counts[a], grid.steps[a].x(), grid.steps[a].y(),
        grid.steps[a].z());
  }
  for (const auto& atom : grid.atoms) {
    put(out, "%5d%12.6f%12.6f%12.6f%12.6f\n", static_cast<int>(std::lround(atom.charge)),
        atom.charge, atom.position.x(), atom.position.y(), atom.position.z());
  }
  std::size_t idx = 0;
  for (int i = 0; i < grid.counts[0]; ++i) {
    for (int j = 0; j < grid.counts[1]; ++j) {
      for (int k = 0; k < grid.counts[2]; ++k) {
        put(out, "%13.5E", grid.values[idx++]);
        if (k % 6 == 5 && k + 1 < grid.counts[2]) out << '\n';
      }
      out << '\n';
    }
  }
}

CubeGrid read_cube(std::istream& in) {
  CubeGrid grid;
  if (!std::getline(in, grid.title) || !std::getline(in, grid.comment)) {
    throw Error("cube: missing header lines");
  }
  int natoms = 0;
  if (!(in >> natoms >> grid.origin.x() >> grid.origin.y() >> grid.origin.z())) {
    throw Error("cube: malformed origin line");
  }
  natoms = std::abs(natoms);
  for (int a = 0; a < 3; ++a) {
    if (!(in >> grid.counts[a] >> grid.steps[a].x() >> grid.steps[a].y() >> grid.steps[a].z())) {
      throw Error("cube: malformed axis line");
    }
    if (grid.counts[a] <= 0) throw Error("cube: axis count must be positive");
  }
  for (int n = 0; n < natoms; ++n) {
    int z = 0;
    Nucleus atom;
    if (!(in >> z >> atom.charge >> atom.position.x() >> atom.position.y() >> atom.position.z())) {
      throw Error("cube: malformed atom line");
    }
    grid.atoms.push_back(atom);
  }
  const auto total = static_cast<std::size_t>(grid.counts[0]) * grid.counts[1] * grid.counts[2];
  grid.values.resize(total);
  for (auto& v : grid.values) {
    if (!(in >> v)) throw Error("cube: truncated value block");
  }
  return grid;
}

}  // namespace kato

#pragma once

#include "kato/density_model.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace kato {

/// Volumetric grid in Gaussian cube layout. Values are stored with z fastest.
struct CubeGrid {
  std::string title = "kato density";
  std::string comment = "rho(r) in bohr^-3, z fastest";
  Vec3 origin = Vec3::Zero();
  std::array<int, 3> counts = {0, 0, 0};
  std::array<Vec3, 3> steps = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
  std::vector<Nucleus> atoms;
  std::vector<double> values;

  double at(int i, int j, int k) const {
    return values[(static_cast<std::size_t>(i) * counts[1] + j) * counts[2] + k];
  }
};

/// Samples rho on origin + i*steps[0] + j*steps[1] + k*steps[2]. Counts must be >= 2.
CubeGrid sample_density(const DensityModel& model, const Vec3& origin,
                        const std::array<Vec3, 3>& steps, const std::array<int, 3>& counts);

void write_cube(std::ostream& out, const CubeGrid& grid);
CubeGrid read_cube(std::istream& in);

}  // namespace kato

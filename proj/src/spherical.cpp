#include "kato/spherical.hpp"

#include "kato/errors.hpp"
#include "kato/lebedev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kato {

double spherical_average(const DensityModel& model, const Vec3& center, double radius,
                         int lebedev_order) {
  if (!(radius > 0.0)) throw Error("spherical_average: radius must be positive");
  const auto& grid = lebedev_grid(lebedev_order);
  double sum = 0.0;
  for (const auto& p : grid) sum += p.weight * evaluate(model, center + radius * p.direction);
  return sum;
}

SphericalAverageProfile spherical_profile(const DensityModel& model, const Vec3& center,
                                          const RadialDerivativeOptions& options) {
  if (!(options.initial_radius > 0.0)) throw Error("initial radius must be positive");
  if (!(options.shrink_factor > 0.0 && options.shrink_factor < 1.0)) {
    throw Error("shrink factor must lie in (0, 1)");
  }
  if (options.max_levels < 2) throw Error("at least two radius levels are required");
  lebedev_grid(options.lebedev_order);

  SphericalAverageProfile profile;
  profile.center = center;
  profile.value_at_center = evaluate(model, center);
  double r = options.initial_radius;
  for (int k = 0; k < options.max_levels; ++k) {
    profile.radii.push_back(r);
    profile.values.push_back(spherical_average(model, center, r, options.lebedev_order));
    r *= options.shrink_factor;
  }
  return profile;
}

RadialDerivativeEstimate radial_derivative_at_center(const DensityModel& model,
                                                     const Vec3& center,
                                                     const RadialDerivativeOptions& options) {
  const double rho0 = evaluate(model, center);
  if (rho0 <= kZeroCenterThreshold) {
    throw ZeroCenterValue("density at the requested center is numerically zero");
  }
  if (!(options.initial_radius > 0.0)) throw Error("initial radius must be positive");
  if (!(options.shrink_factor > 0.0 && options.shrink_factor < 1.0)) {
    throw Error("shrink factor must lie in (0, 1)");
  }
  const double s = options.shrink_factor;
  const auto levels = static_cast<std::size_t>(std::max(options.max_levels, 2));
  double radius = options.initial_radius;

  // Neville tableau on the scale-free quantity (rho^av - rho0) / (r rho0).
  std::vector<double> prev;
  std::vector<double> row;
  RadialDerivativeEstimate best;
  best.value_at_center = rho0;
  double best_err = std::numeric_limits<double>::infinity();
  double best_value = 0.0;
  int best_level = 0;
  int rising = 0;

  for (std::size_t k = 0; k < levels; ++k) {
    row.assign(k + 1, 0.0);
    const double average = spherical_average(model, center, radius, options.lebedev_order);
    row[0] = (average - rho0) / (radius * rho0);
    radius *= s;
    double sj = 1.0;
    for (std::size_t j = 1; j <= k; ++j) {
      sj *= s;
      row[j] = row[j - 1] + sj * (row[j - 1] - prev[j - 1]) / (1.0 - sj);
    }
    if (k > 0) {
      const double err = std::abs(row[k] - prev[k - 1]);
      if (err < best_err) {
        best_err = err;
        best_value = row[k];
        best_level = static_cast<int>(k) + 1;
        rising = 0;
      } else {
        ++rising;
      }
      if (best_err <= options.tolerance || rising >= 3) break;
    }
    prev = row;
  }

  best.log_derivative = best_value;
  best.derivative = best_value * rho0;
  best.log_uncertainty = best_err;
  best.uncertainty = best_err * rho0;
  best.levels_used = best_level;
  best.converged = best_err <= options.tolerance;
  return best;
}

}  // namespace kato

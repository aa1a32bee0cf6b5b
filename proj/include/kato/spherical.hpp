#pragma once

#include "kato/density_model.hpp"

#include <vector>

namespace kato {

/// Spherical averages of rho about `center` on a decreasing geometric ladder of radii.
struct SphericalAverageProfile {
  Vec3 center = Vec3::Zero();
  std::vector<double> radii;   // strictly decreasing, > 0
  std::vector<double> values;  // rho^av at each radius
  double value_at_center = 0.0;
};

struct RadialDerivativeOptions {
  double initial_radius = 1e-2;
  double shrink_factor = 0.5;
  int max_levels = 20;
  /// Applied to successive extrapolants of the logarithmic derivative (1/bohr).
  double tolerance = 1e-8;
  int lebedev_order = 110;
};

/// One-sided slope of rho^av(center; r) at r -> 0+.
struct RadialDerivativeEstimate {
  double derivative = 0.0;        // 1/bohr^4
  double log_derivative = 0.0;    // derivative / rho(center), 1/bohr
  double uncertainty = 0.0;       // on `derivative`
  double log_uncertainty = 0.0;   // on `log_derivative`; <= tolerance when converged
  double value_at_center = 0.0;
  int levels_used = 0;
  bool converged = false;
};

constexpr double kZeroCenterThreshold = 1e-30;

/// (1/4pi) * surface integral of rho(center + radius * u) by Lebedev quadrature.
double spherical_average(const DensityModel& model, const Vec3& center, double radius,
                         int lebedev_order);

SphericalAverageProfile spherical_profile(const DensityModel& model, const Vec3& center,
                                          const RadialDerivativeOptions& options = {});

/// Divided differences (rho^av(r_k) - rho(center)) / r_k on r_k = r0 s^k,
/// Richardson-extrapolated in integer powers of r. Throws ZeroCenterValue when
/// rho(center) <= 1e-30. An unconverged ladder returns its best estimate with
/// converged = false.
RadialDerivativeEstimate radial_derivative_at_center(const DensityModel& model,
                                                     const Vec3& center,
                                                     const RadialDerivativeOptions& options = {});

}  // namespace kato

#pragma once

#include "kato/density_model.hpp"

#include <functional>
#include <vector>

namespace kato {

/// Spherically symmetric density about a single center, with closed-form
/// cumulative charge Q(r) = 4 pi int_0^r s^2 rho(s) ds.
class RadialDensity {
 public:
  RadialDensity() = default;
  explicit RadialDensity(std::vector<RadialPrimitive> terms);
  /// Requires all terms of `model` to share one center.
  static RadialDensity from_model(const DensityModel& model);

  double value(double r) const;
  double cumulative(double r) const;
  /// N - Q(r), computed directly so that the far tail keeps its precision.
  double complement(double r) const;
  double electron_count() const { return total_; }
  const std::vector<RadialPrimitive>& terms() const { return terms_; }

 private:
  std::vector<RadialPrimitive> terms_;
  double total_ = 0.0;
};

/// Monotone radial map r -> f(r) with Q_target(f(r)) = Q_source(r).
class LocalScalingMap {
 public:
  LocalScalingMap(RadialDensity source, RadialDensity target);

  /// f(r), solved on demand.
  double operator()(double r) const;
  /// f'(r) from the Jacobian identity f' = r^2 rho_s(r) / (f^2 rho_t(f)).
  double derivative(double r) const;

  const RadialDensity& source() const { return source_; }
  const RadialDensity& target() const { return target_; }

  std::vector<double> radii;
  std::vector<double> values;       // f(r)
  std::vector<double> derivatives;  // f'(r)
  std::vector<double> q_residuals;  // |Q_t(f(r)) - Q_s(r)|
  /// max_r |rho_t(f) f^2 f' - r^2 rho_s(r)| / (r^2 rho_s(r)), with f' from
  /// central differences of the solved map.
  double jacobian_residual = 0.0;

 private:
  RadialDensity source_;
  RadialDensity target_;
};

struct ScalingGrid {
  double r_min = 1e-3;
  double r_max = 20.0;
  int points = 256;
  std::vector<double> radii() const;
};

/// Throws MassMismatch when the electron counts differ by more than 1e-10, and
/// NonMonotoneCumulative when the target cumulative is flat at a matched radius.
LocalScalingMap solve_scaling_map(const RadialDensity& source, const RadialDensity& target,
                                  const std::vector<double>& radii);
LocalScalingMap solve_scaling_map(const RadialDensity& source, const RadialDensity& target,
                                  const ScalingGrid& grid = {});

struct TransformedWavefunction {
  std::vector<double> radii;
  std::vector<double> values;
};

/// Pull-back psi_f(r) = sqrt(f(r)^2 f'(r) / r^2) psi(f(r)); |psi_f|^2 carries
/// the map's source density when |psi|^2 carries its target density.
TransformedWavefunction transform_wavefunction(const std::function<double(double)>& psi,
                                               const LocalScalingMap& map);

}  // namespace kato

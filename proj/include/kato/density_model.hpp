#pragma once

#include "kato/frame.hpp"

#include <optional>
#include <vector>

namespace kato {

enum class PrimitiveKind { SlaterS, Gaussian };

/// c * r^n * exp(-2 zeta r)   (SlaterS, exponent = zeta)
/// c * r^n * exp(-alpha r^2)  (Gaussian, exponent = alpha)
///
/// The SlaterS convention makes a normalized term with zeta = Z equal to the
/// hydrogenic 1s density Z^3/pi exp(-2Zr).
struct RadialPrimitive {
  PrimitiveKind kind = PrimitiveKind::SlaterS;
  double coefficient = 0.0;
  double exponent = 1.0;
  int power = 0;

  double value(double r) const;
  /// First and second radial derivatives, f'(r) and f''(r).
  double first_derivative(double r) const;
  double second_derivative(double r) const;
  /// f'(r)/r, evaluated without cancellation for small r.
  double first_derivative_over_r(double r) const;

  /// Whether the radial profile has a nonzero linear term at r = 0, which
  /// makes the 3D field non-differentiable at the center.
  bool non_smooth_at_center() const;
  /// Whether the term carries a Kato-type cusp (nonzero value and slope at center).
  bool has_cusp() const { return kind == PrimitiveKind::SlaterS && power == 0; }

  /// Closed form of 4 pi int_0^inf r^2 f(r) dr.
  double integral() const;
  /// 4 pi int_0^r s^2 f(s) ds and its complement 4 pi int_r^inf s^2 f(s) ds.
  double cumulative(double r) const;
  double cumulative_complement(double r) const;
  /// Decay length used to size search boxes.
  double length_scale() const;
};

struct DensityTerm {
  Vec3 center = Vec3::Zero();
  RadialPrimitive primitive;
};

/// Analytic one-electron density as a nonnegative mixture of centered radial
/// primitives. Construction validates coefficients, exponents, powers, and
/// coordinates; every accessor is then a total function.
class DensityModel {
 public:
  DensityModel() = default;
  DensityModel(std::vector<DensityTerm> terms, int electron_count,
               std::optional<NuclearFrame> frame = std::nullopt);

  const std::vector<DensityTerm>& terms() const { return terms_; }
  int electron_count() const { return electron_count_; }
  const std::optional<NuclearFrame>& frame() const { return frame_; }

  DensityModel translated(const Vec3& shift) const;
  DensityModel scaled(double factor) const;
  DensityModel without_frame() const;

  /// Centers carrying a power-0 SlaterS term.
  std::vector<Vec3> cusp_centers() const;
  /// True when every term shares one center (returned through `center`).
  bool is_concentric(Vec3* center = nullptr) const;
  bool has_cusps() const;

 private:
  std::vector<DensityTerm> terms_;
  int electron_count_ = 0;
  std::optional<NuclearFrame> frame_;
};

double evaluate(const DensityModel& model, const Vec3& point);
/// Throws AtCuspSingularity within 1e-12 bohr of a non-smooth center.
Vec3 gradient(const DensityModel& model, const Vec3& point);
Mat3 hessian(const DensityModel& model, const Vec3& point);
double total_integral(const DensityModel& model);
/// Rescales all coefficients so that the integral equals `electron_count`.
DensityModel normalize(const DensityModel& model, int electron_count);

/// Normalized hydrogenic 1s density of charge Z centered at `center`.
DensityModel hydrogenic_density(double charge, const Vec3& center = Vec3::Zero(),
                                bool with_frame = true);
/// Sum of normalized hydrogenic densities, one per nucleus (zeta = Z).
DensityModel superposed_hydrogenic_density(const NuclearFrame& frame);

}  // namespace kato

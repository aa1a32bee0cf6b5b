#pragma once

#include "kato/density_model.hpp"
#include "kato/frame.hpp"
#include "kato/kato_inversion.hpp"
#include "kato/radial_quadrature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kato {

/// Normalized, nodeless single-center orbital:
///   Slater:   psi = (zeta^3/pi)^{1/2} exp(-zeta r)
///   Gaussian: psi = (2 alpha/pi)^{3/4} exp(-alpha r^2)
class RadialOrbital {
 public:
  enum class Kind { Slater, Gaussian };

  RadialOrbital(Kind kind, double exponent, const Vec3& center = Vec3::Zero());
  static RadialOrbital hydrogenic(double charge, const Vec3& center = Vec3::Zero()) {
    return RadialOrbital(Kind::Slater, charge, center);
  }

  Kind kind() const { return kind_; }
  double exponent() const { return exponent_; }
  const Vec3& center() const { return center_; }

  double value(double r) const;
  double derivative(double r) const;
  /// Radial part of the 3D Laplacian: psi'' + 2 psi' / r.
  double laplacian(double r) const;
  /// Decay rate of |psi|^2 used to scale radial quadrature.
  double density_decay_rate() const;

  double value_at(const Vec3& p) const { return value((p - center_).norm()); }
  /// |psi|^2 as a one-electron density model.
  DensityModel density() const;

 private:
  Kind kind_;
  double exponent_;
  Vec3 center_;
  double norm_;
};

/// One electron in a Coulombic potential (plus a tagged constant offset),
/// described by an analytic orbital.
struct OneElectronSystem {
  CoulombPotential potential;
  RadialOrbital orbital;

  /// Hydrogenic ground state of charge Z, optionally with the potential shifted by `offset`.
  static OneElectronSystem hydrogenic(double charge, double offset = 0.0,
                                      const Vec3& center = Vec3::Zero());
  /// True when the orbital is the exact ground state of a single-center potential.
  bool is_exact_hydrogenic() const;
};

/// Exact -Z^2/2 + offset for hydrogenic systems; otherwise <T> + <v> by quadrature.
double ground_energy(const OneElectronSystem& system, const RadialQuadratureOptions& options = {});

/// <psi|T + v|psi> always by quadrature.
double expectation_energy(const RadialOrbital& orbital, const CoulombPotential& potential,
                          const RadialQuadratureOptions& options = {});

/// <psi_A | T + v_B | psi_A>.
double cross_energy(const RadialOrbital& wavefunction, const CoulombPotential& potential,
                    const RadialQuadratureOptions& options = {});

double kinetic_energy(const RadialOrbital& orbital, const RadialQuadratureOptions& options = {});

/// int rho(r) / |r - position| d^3r for every term of `rho` (shell theorem, split at the nucleus).
double nuclear_attraction_integral(const DensityModel& rho, const Vec3& position,
                                   const RadialQuadratureOptions& options = {});

/// int [v1(r) - v2(r)] rho(r) d^3r, constant offsets included.
double difference_integral(const CoulombPotential& v1, const CoulombPotential& v2,
                           const DensityModel& rho, const RadialQuadratureOptions& options = {});

struct HKAuditReport {
  double e1 = 0.0;
  double e2 = 0.0;
  double cross12 = 0.0;  // <psi2|H1|psi2>
  double cross21 = 0.0;  // <psi1|H2|psi1>
  double diff_integral_rho2 = 0.0;  // int (v1 - v2) rho2
  double diff_integral_rho1 = 0.0;  // int (v1 - v2) rho1
  double identity_residual_12 = 0.0;  // cross12 - e2 - diff_integral_rho2
  double identity_residual_21 = 0.0;  // cross21 - e1 + diff_integral_rho1
  /// Adding the two variational inequalities gives e1 + e2 < e1 + e2 + gap.
  /// A common density would force gap = 0, which is the absurdity.
  double inequality_sum_gap = 0.0;
  double ground_energy_gap = 0.0;  // e2 - e1
  bool strict1 = false;  // e1 < cross12
  bool strict2 = false;  // e2 < cross21
  bool wavefunctions_equal = false;
  bool densities_equal = false;
  bool potentials_differ_beyond_constant = false;
  double wavefunction_difference = 0.0;
  double density_difference = 0.0;
  HkCase case_label = HkCase::II;
  std::string case_note;
  std::optional<IncompatibilityVerdict> kato_check;
};

HKAuditReport audit_pair(const OneElectronSystem& first, const OneElectronSystem& second,
                         double tolerance, const RadialQuadratureOptions& options = {});

struct SampledPotential {
  RadialOrbital orbital;
  double energy;
  std::vector<double> radii;
  std::vector<double> values;

  /// v(r) = E - (T psi)(r) / psi(r)
  double operator()(double r) const;
};

struct RadialGrid {
  double r_min = 1e-2;
  double r_max = 10.0;
  int points = 64;
  std::vector<double> radii() const;  // log-spaced, inclusive
};

/// Inverts the Schrodinger equation for a nodeless orbital at energy E.
/// Throws NodeEncountered if psi <= 0 at a sample.
SampledPotential potential_from_wavefunction(const RadialOrbital& orbital, double energy,
                                             const RadialGrid& grid = {});

}  // namespace kato

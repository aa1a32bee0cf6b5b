#include "kato/hk_audit.hpp"

#include "kato/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace kato {
namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;
// Gaussian tails are cut where exp(-alpha r^2) < exp(-144).
constexpr double kGaussianCutoff = 12.0;

struct Decay {
  bool gaussian;
  double rate;  // 2 zeta for Slater densities, alpha for Gaussian densities
};

Decay decay_of(const RadialPrimitive& p) {
  return p.kind == PrimitiveKind::SlaterS ? Decay{false, 2.0 * p.exponent}
                                          : Decay{true, p.exponent};
}

// int_shift^inf f(r) dr: Gauss-Laguerre for exponential tails, truncated
// Gauss-Legendre for Gaussian ones.
double tail_integral(const std::function<double(double)>& f, Decay decay, double shift,
                     const RadialQuadratureOptions& options) {
  if (decay.gaussian) {
    return finite_integral(f, shift, shift + kGaussianCutoff / std::sqrt(decay.rate), options);
  }
  return semi_infinite_integral(f, decay.rate, shift, options);
}

double term_attraction(const RadialPrimitive& p, double distance,
                       const RadialQuadratureOptions& options) {
  const Decay decay = decay_of(p);
  auto outer = [&p](double s) { return kFourPi * s * p.value(s); };
  if (distance < 1e-14) return tail_integral(outer, decay, 0.0, options);
  auto inner = [&p, distance](double s) { return kFourPi * s * s * p.value(s) / distance; };
  return finite_integral(inner, 0.0, distance, options) +
         tail_integral(outer, decay, distance, options);
}

double max_abs_difference(const std::vector<Vec3>& probes,
                          const std::function<double(const Vec3&)>& a,
                          const std::function<double(const Vec3&)>& b) {
  double m = 0.0;
  for (const auto& p : probes) m = std::max(m, std::abs(a(p) - b(p)));
  return m;
}

std::vector<Vec3> audit_probes(const RadialOrbital& a, const RadialOrbital& b) {
  const auto radii = RadialGrid{1e-3, 20.0, 64}.radii();
  std::vector<Vec3> out;
  for (const Vec3& c : {a.center(), b.center()}) {
    out.push_back(c);
    for (double r : radii) {
      for (int axis = 0; axis < 3; ++axis) {
        for (double sign : {1.0, -1.0}) {
          Vec3 p = c;
          p[axis] += sign * r;
          out.push_back(p);
        }
      }
    }
  }
  return out;
}

}  // namespace

RadialOrbital::RadialOrbital(Kind kind, double exponent, const Vec3& center)
    : kind_(kind), exponent_(exponent), center_(center) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) {
    throw InvalidModel("orbital exponent must be positive and finite");
  }
  if (!center.allFinite()) throw InvalidModel("orbital center must be finite");
  norm_ = kind == Kind::Slater ? std::sqrt(exponent * exponent * exponent / std::numbers::pi)
                               : std::pow(2.0 * exponent / std::numbers::pi, 0.75);
}

double RadialOrbital::value(double r) const {
  return kind_ == Kind::Slater ? norm_ * std::exp(-exponent_ * r)
                               : norm_ * std::exp(-exponent_ * r * r);
}

double RadialOrbital::derivative(double r) const {
  return kind_ == Kind::Slater ? -exponent_ * value(r) : -2.0 * exponent_ * r * value(r);
}

double RadialOrbital::laplacian(double r) const {
  const double a = exponent_;
  if (kind_ == Kind::Slater) return (a * a - 2.0 * a / r) * value(r);
  return (4.0 * a * a * r * r - 6.0 * a) * value(r);
}

double RadialOrbital::density_decay_rate() const { return 2.0 * exponent_; }

DensityModel RadialOrbital::density() const {
  RadialPrimitive p = kind_ == Kind::Slater
                          ? RadialPrimitive{PrimitiveKind::SlaterS, norm_ * norm_, exponent_, 0}
                          : RadialPrimitive{PrimitiveKind::Gaussian, norm_ * norm_,
                                            2.0 * exponent_, 0};
  return DensityModel({DensityTerm{center_, p}}, 1);
}

OneElectronSystem OneElectronSystem::hydrogenic(double charge, double offset, const Vec3& center) {
  return {CoulombPotential(NuclearFrame({Nucleus{center, charge}}), offset),
          RadialOrbital::hydrogenic(charge, center)};
}

bool OneElectronSystem::is_exact_hydrogenic() const {
  const auto& frame = potential.frame();
  if (frame.size() != 1 || orbital.kind() != RadialOrbital::Kind::Slater) return false;
  const auto& n = frame[0];
  return (n.position - orbital.center()).norm() < 1e-12 &&
         std::abs(n.charge - orbital.exponent()) <= 1e-14 * n.charge;
}

double kinetic_energy(const RadialOrbital& orbital, const RadialQuadratureOptions& options) {
  auto integrand = [&orbital](double r) {
    const double d = orbital.derivative(r);
    return 0.5 * kFourPi * r * r * d * d;
  };
  const Decay decay{orbital.kind() == RadialOrbital::Kind::Gaussian,
                    orbital.density_decay_rate()};
  return tail_integral(integrand, decay, 0.0, options);
}

double nuclear_attraction_integral(const DensityModel& rho, const Vec3& position,
                                   const RadialQuadratureOptions& options) {
  double sum = 0.0;
  for (const auto& t : rho.terms()) {
    sum += term_attraction(t.primitive, (position - t.center).norm(), options);
  }
  return sum;
}

double expectation_energy(const RadialOrbital& orbital, const CoulombPotential& potential,
                          const RadialQuadratureOptions& options) {
  const auto rho = orbital.density();
  double e = kinetic_energy(orbital, options) + potential.offset();
  for (const auto& n : potential.frame().centers()) {
    e -= n.charge * nuclear_attraction_integral(rho, n.position, options);
  }
  return e;
}

double cross_energy(const RadialOrbital& wavefunction, const CoulombPotential& potential,
                    const RadialQuadratureOptions& options) {
  return expectation_energy(wavefunction, potential, options);
}

double ground_energy(const OneElectronSystem& system, const RadialQuadratureOptions& options) {
  if (system.is_exact_hydrogenic()) {
    const double z = system.potential.frame()[0].charge;
    return -0.5 * z * z + system.potential.offset();
  }
  return expectation_energy(system.orbital, system.potential, options);
}

double difference_integral(const CoulombPotential& v1, const CoulombPotential& v2,
                           const DensityModel& rho, const RadialQuadratureOptions& options) {
  double sum = (v1.offset() - v2.offset()) * total_integral(rho);
  for (const auto& n : v1.frame().centers()) {
    sum -= n.charge * nuclear_attraction_integral(rho, n.position, options);
  }
  for (const auto& n : v2.frame().centers()) {
    sum += n.charge * nuclear_attraction_integral(rho, n.position, options);
  }
  return sum;
}

HKAuditReport audit_pair(const OneElectronSystem& first, const OneElectronSystem& second,
                         double tolerance, const RadialQuadratureOptions& options) {
  HKAuditReport r;
  r.e1 = ground_energy(first, options);
  r.e2 = ground_energy(second, options);
  r.cross12 = cross_energy(second.orbital, first.potential, options);
  r.cross21 = cross_energy(first.orbital, second.potential, options);
  const auto rho1 = first.orbital.density();
  const auto rho2 = second.orbital.density();
  r.diff_integral_rho2 = difference_integral(first.potential, second.potential, rho2, options);
  r.diff_integral_rho1 = difference_integral(first.potential, second.potential, rho1, options);
  r.identity_residual_12 = r.cross12 - r.e2 - r.diff_integral_rho2;
  r.identity_residual_21 = r.cross21 - r.e1 + r.diff_integral_rho1;
  r.inequality_sum_gap = r.diff_integral_rho2 - r.diff_integral_rho1;
  r.ground_energy_gap = r.e2 - r.e1;
  r.strict1 = r.cross12 - r.e1 > tolerance;
  r.strict2 = r.cross21 - r.e2 > tolerance;

  const auto probes = audit_probes(first.orbital, second.orbital);
  r.wavefunction_difference = max_abs_difference(
      probes, [&](const Vec3& p) { return first.orbital.value_at(p); },
      [&](const Vec3& p) { return second.orbital.value_at(p); });
  r.density_difference = max_abs_difference(
      probes, [&](const Vec3& p) { return evaluate(rho1, p); },
      [&](const Vec3& p) { return evaluate(rho2, p); });
  r.wavefunctions_equal = r.wavefunction_difference <= tolerance;
  r.densities_equal = r.density_difference <= tolerance;
  r.potentials_differ_beyond_constant = !first.potential.equal_up_to_constant(second.potential);

  std::ostringstream note;
  if (r.densities_equal && r.potentials_differ_beyond_constant) {
    // For N = 1 a common density also forces a common nodeless orbital, so this
    // pair satisfies the hypotheses of case I too; the Kato test is the sharper one.
    r.case_label = HkCase::IV;
    SearchBox box = SearchBox::around(rho1);
    const SearchBox box2 = SearchBox::around(rho2);
    box.lower = box.lower.cwiseMin(box2.lower);
    box.upper = box.upper.cwiseMax(box2.upper);
    r.kato_check = incompatibility_check(rho1, rho2, box, tolerance);
    note << "equal densities under potentials that differ beyond a constant: "
         << r.kato_check->statement;
    if (r.wavefunctions_equal) {
      note << "; the common orbital cannot be an eigenstate of both Hamiltonians either, since "
              "v1 - v2 would then be constant";
    }
  } else if (r.wavefunctions_equal && !r.densities_equal) {
    r.case_label = HkCase::III;
    note << "impossible: equal wavefunctions with different densities contradict the "
            "definition of the density as the marginal of |psi|^2";
  } else if (r.densities_equal) {
    r.case_label = HkCase::I;
    note << "same ground state: the cross energies reduce to ground energies shifted by the "
            "constant potential gap "
         << r.ground_energy_gap << "; no inconsistency arises";
  } else {
    r.case_label = HkCase::II;
    note << "distinct ground states with distinct densities: both variational inequalities hold "
            "strictly and their sum leaves the positive gap "
         << r.inequality_sum_gap
         << "; the absurd inequality needs a common density, which does not exist here";
  }
  r.case_note = note.str();
  return r;
}

std::vector<double> RadialGrid::radii() const {
  if (!(r_min > 0.0) || !(r_max >= r_min) || points < 1) throw Error("invalid radial grid");
  std::vector<double> out(static_cast<std::size_t>(points));
  if (points == 1) {
    out[0] = r_min;
    return out;
  }
  const double ratio = std::log(r_max / r_min);
  for (int i = 0; i < points; ++i) {
    out[static_cast<std::size_t>(i)] = r_min * std::exp(ratio * i / (points - 1));
  }
  out.back() = r_max;
  return out;
}

double SampledPotential::operator()(double r) const {
  const double psi = orbital.value(r);
  if (!(psi > 0.0)) {
    std::ostringstream os;
    os << "wavefunction is not positive at r = " << r;
    throw NodeEncountered(os.str());
  }
  const double t_over_psi = -0.5 * orbital.laplacian(r) / psi;
  return energy - t_over_psi;
}

SampledPotential potential_from_wavefunction(const RadialOrbital& orbital, double energy,
                                             const RadialGrid& grid) {
  SampledPotential out{orbital, energy, grid.radii(), {}};
  out.values.reserve(out.radii.size());
  for (double r : out.radii) out.values.push_back(out(r));
  return out;
}

}  // namespace kato

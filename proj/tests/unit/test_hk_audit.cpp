#include "doctest.h"
#include "oracles.hpp"

#include "kato/errors.hpp"
#include "kato/hk_audit.hpp"
#include "kato/radial_quadrature.hpp"

using namespace kato;

namespace {

CoulombPotential coulomb(double z, double offset = 0.0, const Vec3& at = Vec3::Zero()) {
  return CoulombPotential(NuclearFrame({{at, z}}), offset);
}

}  // namespace

TEST_CASE("gauss-legendre and gauss-laguerre rules") {
  const auto& gl = gauss_legendre(20);
  double s = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) s += gl.weights[i] * std::pow(gl.nodes[i], 38);
  CHECK(s == doctest::Approx(2.0 / 39.0).epsilon(1e-13));

  // int_0^inf x^k e^-x dx = k!
  const auto& lag = gauss_laguerre(30);
  double m = 0.0;
  for (std::size_t i = 0; i < lag.nodes.size(); ++i) {
    m += lag.weights[i] * std::pow(lag.nodes[i], 10) * std::exp(-lag.nodes[i]);
  }
  CHECK(m == doctest::Approx(3628800.0).epsilon(1e-12));
}

TEST_CASE("semi-infinite and finite integrals") {
  const RadialQuadratureOptions opt;
  const double v = semi_infinite_integral([](double r) { return r * r * std::exp(-3.0 * r); }, 3.0,
                                          0.0, opt);
  CHECK(v == doctest::Approx(2.0 / 27.0).epsilon(1e-13));
  const double f = finite_integral([](double r) { return std::sin(r); }, 0.0, oracle::kPi, opt);
  CHECK(f == doctest::Approx(2.0).epsilon(1e-13));

  RadialQuadratureOptions coarse;
  coarse.laguerre_nodes = 4;
  coarse.convergence_tol = 1e-14;
  CHECK_THROWS_AS(semi_infinite_integral([](double r) { return std::exp(-r) / (1.0 + r * r); }, 1.0,
                                         0.0, coarse),
                  QuadratureNotConverged);
}

TEST_CASE("orbitals are normalized") {
  for (auto kind : {RadialOrbital::Kind::Slater, RadialOrbital::Kind::Gaussian}) {
    const RadialOrbital o(kind, 1.7);
    const double n = oracle::radial_moment([&](double r) { return o.value(r) * o.value(r); });
    CHECK(n == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(total_integral(o.density()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(evaluate(o.density(), Vec3(0, 0, 0.4)) ==
          doctest::Approx(o.value(0.4) * o.value(0.4)).epsilon(1e-13));
  }
}

TEST_CASE("ground energies") {
  CHECK(ground_energy(OneElectronSystem::hydrogenic(1.0)) == -0.5);
  CHECK(ground_energy(OneElectronSystem::hydrogenic(2.0)) == -2.0);
  CHECK(ground_energy(OneElectronSystem::hydrogenic(2.0, 0.25)) == -1.75);
  const auto h = OneElectronSystem::hydrogenic(1.0);
  CHECK(std::abs(expectation_energy(h.orbital, h.potential) + 0.5) <= 1e-8);
}

TEST_CASE("cross energies: Z_A^2/2 - Z_B Z_A") {
  const auto psi1 = RadialOrbital::hydrogenic(1.0);
  const auto psi2 = RadialOrbital::hydrogenic(2.0);
  CHECK(std::abs(cross_energy(psi2, coulomb(1.0)) - 0.0) <= 1e-10);
  CHECK(std::abs(cross_energy(psi1, coulomb(2.0)) + 1.5) <= 1e-10);
  for (double z : {1.0, 2.0, 3.0}) {
    CHECK(std::abs(cross_energy(RadialOrbital::hydrogenic(z), coulomb(z)) + 0.5 * z * z) <= 1e-10);
  }
  CHECK(kinetic_energy(psi2) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("off-center nuclear attraction") {
  // int rho_Z(r) / |r - R| = (1 - (1 + Z R) e^{-2ZR}) / R
  const auto rho = hydrogenic_density(1.0);
  for (double d : {0.5, 2.0}) {
    const double expect = (1.0 - (1.0 + d) * std::exp(-2.0 * d)) / d;
    CHECK(nuclear_attraction_integral(rho, Vec3(0, 0, d)) == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("difference integrals") {
  const auto rho2 = hydrogenic_density(2.0);
  CHECK(difference_integral(coulomb(1.0), coulomb(2.0), rho2) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(difference_integral(coulomb(1.5), coulomb(1.5), rho2) == 0.0);
  const auto two = normalize(rho2, 2);
  CHECK(difference_integral(coulomb(1.0, 0.3), coulomb(1.0), two) ==
        doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("audit (1, 2) is case II") {
  const auto r = audit_pair(OneElectronSystem::hydrogenic(1.0), OneElectronSystem::hydrogenic(2.0),
                            1e-10);
  CHECK(std::abs(r.e1 + 0.5) <= 1e-8);
  CHECK(std::abs(r.e2 + 2.0) <= 1e-8);
  CHECK(std::abs(r.cross12 - 0.0) <= 1e-8);
  CHECK(std::abs(r.cross21 + 1.5) <= 1e-8);
  CHECK(std::abs(r.diff_integral_rho2 - 2.0) <= 1e-8);
  CHECK(std::abs(r.diff_integral_rho1 - 1.0) <= 1e-8);
  CHECK(r.strict1);
  CHECK(r.strict2);
  CHECK(r.case_label == HkCase::II);
  CHECK(std::abs(r.identity_residual_12) <= 1e-8);
  CHECK(std::abs(r.identity_residual_21) <= 1e-8);
  CHECK(r.inequality_sum_gap == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("identical and gauge-shifted systems are case I") {
  const auto s = OneElectronSystem::hydrogenic(1.0);
  const auto r = audit_pair(s, s, 1e-10);
  CHECK(r.case_label == HkCase::I);
  CHECK(r.cross12 == doctest::Approx(r.e2).epsilon(1e-10));
  CHECK(r.cross21 == doctest::Approx(r.e1).epsilon(1e-10));
  CHECK(r.diff_integral_rho1 == 0.0);
  CHECK(r.diff_integral_rho2 == 0.0);

  const auto shifted = audit_pair(s, OneElectronSystem::hydrogenic(1.0, 0.25), 1e-10);
  CHECK(shifted.case_label == HkCase::I);
  CHECK(shifted.ground_energy_gap == doctest::Approx(0.25).epsilon(1e-12));
  CHECK_FALSE(shifted.potentials_differ_beyond_constant);
}

TEST_CASE("equal densities under different potentials are flagged case IV") {
  // The same orbital declared in a Z=1 and a Z=2 potential: only the first is a
  // ground state, but the audit must still recognise rho1 = rho2 with v1 != v2.
  const OneElectronSystem a{coulomb(1.0), RadialOrbital::hydrogenic(1.0)};
  const OneElectronSystem b{coulomb(2.0), RadialOrbital::hydrogenic(1.0)};
  const auto r = audit_pair(a, b, 1e-10);
  CHECK(r.densities_equal);
  CHECK(r.potentials_differ_beyond_constant);
  CHECK(r.case_label == HkCase::IV);
  REQUIRE(r.kato_check.has_value());
  CHECK(r.kato_check->case_label == HkCase::IV);
}

TEST_CASE("potential from wavefunction") {
  const RadialGrid grid;
  for (double z : {1.0, 2.0, 3.0}) {
    const auto v = potential_from_wavefunction(RadialOrbital::hydrogenic(z), -0.5 * z * z, grid);
    REQUIRE(v.radii.size() == 64);
    for (std::size_t i = 0; i < v.radii.size(); ++i) {
      CHECK(std::abs(v.values[i] + z / v.radii[i]) <= 1e-10);
    }
  }
  const auto h = potential_from_wavefunction(RadialOrbital::hydrogenic(1.0), -0.5);
  CHECK(h(1.0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(h.radii.front() == doctest::Approx(1e-2));
  CHECK(h.radii.back() == doctest::Approx(10.0));

  // psi = exp(-r^2/2) is the Gaussian orbital with alpha = 1/2
  const auto harm = potential_from_wavefunction(RadialOrbital(RadialOrbital::Kind::Gaussian, 0.5), 1.5);
  for (std::size_t i = 0; i < harm.radii.size(); ++i) {
    const double r = harm.radii[i];
    CHECK(std::abs(harm.values[i] - 0.5 * r * r) <= 1e-10 * std::max(1.0, 0.5 * r * r));
  }
}

TEST_CASE("node detection") {
  const RadialGrid far{1.0, 200.0, 16};
  CHECK_THROWS_AS(potential_from_wavefunction(RadialOrbital(RadialOrbital::Kind::Gaussian, 5.0), 1.0, far),
                  NodeEncountered);
}

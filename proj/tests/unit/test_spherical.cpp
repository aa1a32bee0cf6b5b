#include "doctest.h"
#include "oracles.hpp"

#include "kato/errors.hpp"
#include "kato/lebedev.hpp"
#include "kato/spherical.hpp"

#include <Eigen/Geometry>

using namespace kato;
using oracle::kPi;

namespace {

double double_factorial(int n) {
  double r = 1.0;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

// Mean of x^a y^b z^c over the unit sphere.
double monomial_mean(int a, int b, int c) {
  if (a % 2 || b % 2 || c % 2) return 0.0;
  return double_factorial(a - 1) * double_factorial(b - 1) * double_factorial(c - 1) /
         double_factorial(a + b + c + 1);
}

double max_monomial_error(int order, int degree) {
  double worst = 0.0;
  const auto& grid = lebedev_grid(order);
  for (int a = 0; a <= degree; ++a) {
    for (int b = 0; a + b <= degree; ++b) {
      for (int c = 0; a + b + c <= degree; ++c) {
        double sum = 0.0;
        for (const auto& p : grid) {
          sum += p.weight * std::pow(p.direction.x(), a) * std::pow(p.direction.y(), b) *
                 std::pow(p.direction.z(), c);
        }
        worst = std::max(worst, std::abs(sum - monomial_mean(a, b, c)));
      }
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("lebedev rules are exact to their degree") {
  for (int order : lebedev_orders()) {
    CAPTURE(order);
    const auto& grid = lebedev_grid(order);
    CHECK(grid.size() == static_cast<std::size_t>(order));
    double wsum = 0.0;
    for (const auto& p : grid) {
      wsum += p.weight;
      CHECK(std::abs(p.direction.norm() - 1.0) <= 1e-15);
    }
    CHECK(std::abs(wsum - 1.0) <= 1e-14);
    CHECK(max_monomial_error(order, lebedev_degree(order)) <= 1e-14);
    // the next even degree is not integrated exactly
    CHECK(max_monomial_error(order, lebedev_degree(order) + 1) > 1e-10);
  }
  CHECK_THROWS_AS(lebedev_grid(7), UnsupportedOrder);
  CHECK_THROWS_AS(spherical_average(hydrogenic_density(1.0), Vec3::Zero(), 0.1, 12),
                  UnsupportedOrder);
}

TEST_CASE("spherical average of an isotropic model") {
  const auto m = hydrogenic_density(1.0);
  for (int order : lebedev_orders()) {
    CHECK(spherical_average(m, Vec3::Zero(), 0.1, order) ==
          doctest::Approx(std::exp(-0.2) / kPi).epsilon(1e-15));
  }
  CHECK(spherical_average(m, Vec3::Zero(), 0.1, 110) == doctest::Approx(0.2606101).epsilon(1e-7));
}

TEST_CASE("off-center average matches a dense angular oracle") {
  const auto m = hydrogenic_density(1.0, Vec3(0, 0, 0.3));
  auto rho = [&](const Vec3& p) { return evaluate(m, p); };
  for (double r : {0.05, 0.1}) {
    const double ref = oracle::sphere_average(rho, Vec3::Zero(), r);
    CHECK(std::abs(spherical_average(m, Vec3::Zero(), r, 194) - ref) <= 1e-10 * ref);
  }
}

TEST_CASE("radial derivative at a hydrogenic center") {
  for (double z : {1.0, 3.0}) {
    CAPTURE(z);
    const auto est = radial_derivative_at_center(hydrogenic_density(z), Vec3::Zero());
    CHECK(est.converged);
    CHECK(std::abs(est.log_derivative + 2.0 * z) <= 1e-6);
    CHECK(est.log_uncertainty <= 1e-8);
    CHECK(est.derivative ==
          doctest::Approx(-2.0 * z * z * z * z / kPi).epsilon(1e-8));
  }
}

TEST_CASE("radial derivative of a smooth maximum vanishes") {
  const DensityModel g({{Vec3::Zero(), {PrimitiveKind::Gaussian, 1.0, 1.0, 0}}}, 1);
  const auto est = radial_derivative_at_center(g, Vec3::Zero());
  CHECK(std::abs(est.derivative) <= 1e-8);
  CHECK(std::abs(est.log_derivative) <= 1e-8);
}

TEST_CASE("zero density at the center") {
  const DensityModel m({{Vec3(0, 0, 50), {PrimitiveKind::Gaussian, 1.0, 1.0, 0}}}, 1);
  CHECK_THROWS_AS(radial_derivative_at_center(m, Vec3::Zero()), ZeroCenterValue);
}

TEST_CASE("profile radii are a decreasing ladder") {
  RadialDerivativeOptions opt;
  opt.max_levels = 6;
  const auto prof = spherical_profile(hydrogenic_density(2.0), Vec3::Zero(), opt);
  REQUIRE(prof.radii.size() == 6);
  for (std::size_t k = 1; k < prof.radii.size(); ++k) {
    CHECK(prof.radii[k] == doctest::Approx(0.5 * prof.radii[k - 1]).epsilon(1e-15));
    CHECK(prof.values[k] >= 0.0);
  }
  CHECK(prof.value_at_center == doctest::Approx(8.0 / kPi).epsilon(1e-15));
}

TEST_CASE("estimate is invariant under rotation of the model") {
  oracle::Generator gen(17);
  for (int trial = 0; trial < 5; ++trial) {
    const Vec3 off = gen.point(0.8);
    const DensityModel m({{Vec3::Zero(), {PrimitiveKind::SlaterS, 1.0, 1.5, 0}},
                          {off, {PrimitiveKind::Gaussian, 0.5, 0.8, 0}}},
                         1);
    const Eigen::Matrix3d rot = Eigen::AngleAxisd(gen.uniform(0, kPi), gen.unit()).toRotationMatrix();
    const DensityModel r({{Vec3::Zero(), {PrimitiveKind::SlaterS, 1.0, 1.5, 0}},
                          {rot * off, {PrimitiveKind::Gaussian, 0.5, 0.8, 0}}},
                         1);
    const auto a = radial_derivative_at_center(m, Vec3::Zero());
    const auto b = radial_derivative_at_center(r, Vec3::Zero());
    CHECK(std::abs(a.log_derivative - b.log_derivative) <= 1e-10);
  }
}

#include "doctest.h"
#include "oracles.hpp"

#include "kato/density_model.hpp"
#include "kato/errors.hpp"

#include <Eigen/Geometry>

using namespace kato;
using oracle::kPi;

namespace {

DensityModel single(PrimitiveKind kind, double c, double e, int n, const Vec3& at = Vec3::Zero()) {
  return DensityModel({{at, {kind, c, e, n}}}, 1);
}

}  // namespace

TEST_CASE("frame rejects bad nuclei") {
  CHECK_THROWS_AS(NuclearFrame({{Vec3::Zero(), 0.0}}), InvalidModel);
  CHECK_THROWS_AS(NuclearFrame({{Vec3::Zero(), -1.0}}), InvalidModel);
  CHECK_THROWS_AS(NuclearFrame({{Vec3::Zero(), 1.0}, {Vec3(0, 0, 5e-7), 1.0}}), InvalidModel);
  CHECK_THROWS_AS(NuclearFrame({{Vec3(std::nan(""), 0, 0), 1.0}}), InvalidModel);
  CHECK_NOTHROW(NuclearFrame({{Vec3::Zero(), 1.0}, {Vec3(0, 0, 2e-6), 1.0}}));
}

TEST_CASE("frame comparison ignores ordering") {
  const NuclearFrame a({{Vec3::Zero(), 3.0}, {Vec3(0, 0, 3), 1.0}});
  const NuclearFrame b({{Vec3(0, 0, 3), 1.0}, {Vec3::Zero(), 3.0}});
  CHECK(a.same_as(b));
  CHECK_FALSE(a.same_as(NuclearFrame({{Vec3::Zero(), 3.0}})));
  CHECK_FALSE(a.same_as(NuclearFrame({{Vec3::Zero(), 3.0}, {Vec3(0, 0, 3), 1.1}})));
}

TEST_CASE("coulomb potential with offset") {
  const CoulombPotential v(NuclearFrame({{Vec3::Zero(), 2.0}}), 0.25);
  CHECK(v(Vec3(0, 0, 1)) == doctest::Approx(-1.75).epsilon(1e-15));
  const CoulombPotential w(NuclearFrame({{Vec3::Zero(), 2.0}}), -3.0);
  CHECK(v.equal_up_to_constant(w));
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(single(PrimitiveKind::SlaterS, -1.0, 1.0, 0), InvalidModel);
  CHECK_THROWS_AS(single(PrimitiveKind::SlaterS, 1.0, 0.0, 0), InvalidModel);
  CHECK_THROWS_AS(single(PrimitiveKind::Gaussian, 1.0, -2.0, 0), InvalidModel);
  CHECK_THROWS_AS(single(PrimitiveKind::SlaterS, 1.0, 1.0, -1), InvalidModel);
  CHECK_THROWS_AS(single(PrimitiveKind::SlaterS, 1.0, 1.0, 0, Vec3(0, std::nan(""), 0)),
                  InvalidModel);
}

TEST_CASE("evaluate hydrogenic Z=1") {
  const auto m = single(PrimitiveKind::SlaterS, 1.0 / kPi, 1.0, 0);
  CHECK(evaluate(m, Vec3::Zero()) == doctest::Approx(0.3183098862).epsilon(1e-10));
  // e^-2 / pi
  CHECK(evaluate(m, Vec3(0, 0, 1)) == doctest::Approx(0.0430785586).epsilon(1e-9));
  CHECK(evaluate(m, Vec3(0.3, -0.2, 0.7)) ==
        doctest::Approx(oracle::hydrogenic_rho(1.0, Vec3(0.3, -0.2, 0.7).norm())).epsilon(1e-14));
  CHECK(evaluate(DensityModel({}, 0), Vec3(1, 2, 3)) == 0.0);
}

TEST_CASE("gradient") {
  const auto m = single(PrimitiveKind::SlaterS, 1.0 / kPi, 1.0, 0);
  const Vec3 g = gradient(m, Vec3(0, 0, 1));
  CHECK(g[0] == 0.0);
  CHECK(g[1] == 0.0);
  CHECK(g[2] == doctest::Approx(-0.0861571172).epsilon(1e-9));
  const Vec3 fd = oracle::fd_gradient([&](const Vec3& p) { return evaluate(m, p); }, Vec3(0, 0, 1),
                                      1e-5);
  CHECK((g - fd).norm() <= 1e-8 * g.norm());

  CHECK_THROWS_AS(gradient(m, Vec3(0, 0, 1e-13)), AtCuspSingularity);
  CHECK_NOTHROW(gradient(m, Vec3(0, 0, 1e-11)));

  const auto gauss = single(PrimitiveKind::Gaussian, 1.0, 0.7, 0);
  CHECK(gradient(gauss, Vec3::Zero()).norm() == 0.0);

  const Vec3 p(0.4, -0.8, 0.3);
  const Vec3 gp = gradient(single(PrimitiveKind::Gaussian, 1.0, 0.7, 2), p);
  CHECK(gp.cross(p).norm() <= 1e-15 * gp.norm() * p.norm());
}

TEST_CASE("hessian") {
  const double c = 1.3, a = 0.7;
  const Mat3 h = hessian(single(PrimitiveKind::Gaussian, c, a, 0), Vec3::Zero());
  CHECK((h - Mat3::Identity() * (-2.0 * c * a)).norm() <= 1e-15);

  const auto m = single(PrimitiveKind::SlaterS, 1.0, 0.9, 1, Vec3(0.1, 0.2, 0.3));
  const Vec3 p(1.0, -0.5, 0.8);
  const Mat3 hp = hessian(m, p);
  const Mat3 fd = oracle::fd_jacobian([&](const Vec3& x) { return gradient(m, x); }, p);
  CHECK((hp - fd).norm() <= 1e-6 * hp.norm());
  // radial direction is an eigenvector
  const Vec3 u = (p - Vec3(0.1, 0.2, 0.3)).normalized();
  const Vec3 hu = hp * u;
  CHECK((hu - hu.dot(u) * u).norm() <= 1e-12 * hp.norm());
  CHECK((hp - hp.transpose()).norm() == 0.0);
}

TEST_CASE("total integral closed forms") {
  CHECK(total_integral(single(PrimitiveKind::SlaterS, 1.0 / kPi, 1.0, 0)) ==
        doctest::Approx(1.0).epsilon(1e-15));
  const DensityModel two({{Vec3::Zero(), {PrimitiveKind::SlaterS, 1.0 / kPi, 1.0, 0}},
                          {Vec3(0, 0, 2), {PrimitiveKind::SlaterS, 1.0 / kPi, 1.0, 0}}},
                         2);
  CHECK(total_integral(two) == doctest::Approx(2.0).epsilon(1e-15));

  const auto m = single(PrimitiveKind::SlaterS, 1.0, 1.0, 0);
  CHECK(total_integral(m) == doctest::Approx(kPi).epsilon(1e-15));
  const double quad = oracle::radial_moment([](double r) { return std::exp(-2.0 * r); });
  CHECK(total_integral(m) == doctest::Approx(quad).epsilon(1e-12));
}

TEST_CASE("normalize") {
  const auto m = normalize(single(PrimitiveKind::SlaterS, 1.0, 1.0, 0), 1);
  CHECK(m.terms()[0].primitive.coefficient == doctest::Approx(1.0 / kPi).epsilon(1e-15));
  const auto again = normalize(m, 1);
  CHECK(again.terms()[0].primitive.coefficient ==
        doctest::Approx(m.terms()[0].primitive.coefficient).epsilon(1e-15));
  const auto doubled = normalize(m, 2);
  CHECK(doubled.terms()[0].primitive.coefficient ==
        doctest::Approx(2.0 * m.terms()[0].primitive.coefficient).epsilon(1e-15));
  CHECK(doubled.electron_count() == 2);
  CHECK_THROWS_AS(normalize(single(PrimitiveKind::SlaterS, 0.0, 1.0, 0), 1), ZeroDensity);
}

TEST_CASE("hydrogenic helpers") {
  const auto h = hydrogenic_density(3.0, Vec3(1, 0, 0));
  CHECK(total_integral(h) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(evaluate(h, Vec3(1, 0, 0)) == doctest::Approx(27.0 / kPi).epsilon(1e-14));
  REQUIRE(h.frame());
  CHECK(h.frame()->centers()[0].charge == 3.0);
  CHECK(h.cusp_centers().size() == 1);

  const NuclearFrame f({{Vec3::Zero(), 3.0}, {Vec3(0, 0, 3), 1.0}});
  const auto s = superposed_hydrogenic_density(f);
  CHECK(s.electron_count() == 2);
  CHECK(total_integral(s) == doctest::Approx(2.0).epsilon(1e-14));
  Vec3 c;
  CHECK_FALSE(s.is_concentric(&c));
  CHECK(h.is_concentric(&c));
  CHECK(c == Vec3(1, 0, 0));
}

TEST_CASE("primitive cumulative matches quadrature") {
  for (auto kind : {PrimitiveKind::SlaterS, PrimitiveKind::Gaussian}) {
    for (int n : {0, 1, 3}) {
      const RadialPrimitive p{kind, 0.8, 1.3, n};
      for (double r : {0.05, 0.7, 2.5}) {
        const double q = 4.0 * kPi * oracle::interval([&](double s) { return s * s * p.value(s); },
                                                      0.0, r);
        CHECK(p.cumulative(r) == doctest::Approx(q).epsilon(1e-12));
        CHECK(p.cumulative(r) + p.cumulative_complement(r) ==
              doctest::Approx(p.integral()).epsilon(1e-14));
      }
    }
  }
}

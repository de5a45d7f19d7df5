#include <cmath>
#include <random>

#include <doctest.h>

#include "plepair/couplings.hpp"
#include "plepair/errors.hpp"
#include "plepair/geometry.hpp"

using namespace plepair;

namespace {

const PairParams kUnit{};  // gamma1 = gamma2 = 1

double omega12_root_theta(double x) {
  // bisection on (0.3, 1.2) rad, where omega_12 changes sign in the near field
  double lo = 0.3, hi = 1.2;
  REQUIRE(omega_12(kUnit, x, lo) * omega_12(kUnit, x, hi) < 0.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (omega_12(kUnit, x, lo) * omega_12(kUnit, x, mid) <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("contact limit of the collective damping rate") {
  CHECK(std::abs(gamma_12(kUnit, 1e-3, 0.7) - 1.0) < 1e-5);
  // deviation shrinks quadratically with separation
  const double d3 = std::abs(gamma_12(kUnit, 1e-3, 0.7) - 1.0);
  const double d4 = std::abs(gamma_12(kUnit, 1e-4, 0.7) - 1.0);
  CHECK(d3 / d4 == doctest::Approx(100.0).epsilon(0.05));
}

TEST_CASE("half-wavelength separation closed-form values") {
  CHECK(gamma_12(kUnit, pi, pi / 2) ==
        doctest::Approx(-3.0 / (2.0 * pi * pi)).epsilon(1e-12));
  CHECK(omega_12(kUnit, pi, pi / 2) ==
        doctest::Approx(-(3.0 / (2.0 * pi)) * (1.0 - 1.0 / (pi * pi))).epsilon(1e-12));
}

TEST_CASE("near-field sign structure and magic-angle root") {
  CHECK(omega_12(kUnit, 0.01, 0.0) > 0.0);
  CHECK(omega_12(kUnit, 0.01, pi / 2) < 0.0);
  const double root = omega12_root_theta(0.01);
  CHECK(std::abs(root - std::acos(1.0 / std::sqrt(3.0))) < 0.5 * pi / 180.0);
}

TEST_CASE("far-field decay") {
  CHECK(std::abs(gamma_12(kUnit, 1e3, pi / 2)) < 2e-3);
  CHECK(std::abs(omega_12(kUnit, 1e3, 0.0)) < 5e-3);
}

TEST_CASE("closed forms equal Green's-tensor contractions") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  PairParams p;
  p.mu = 1.3;
  for (int i = 0; i < 100; ++i) {
    const double x = std::pow(10.0, -2.0 + 4.0 * u01(rng));
    const double theta = pi * u01(rng);
    const Vec3 r(0.0, 0.0, x / k0_lambda);
    const Vec3 nd(std::sin(theta), 0.0, std::cos(theta));
    const complexd d12 = pair_coupling_from_green(p, r, nd);
    const double g = gamma_12(p, x, theta);
    const double o = omega_12(p, x, theta);
    const double scale = std::max({1.0, std::abs(g), std::abs(o)});
    CHECK(std::abs(d12.imag() - g) <= 1e-12 * scale);
    CHECK(std::abs(d12.real() - o) <= 1e-12 * scale);
  }
}

TEST_CASE("series branch joins the closed forms smoothly") {
  for (double theta : {0.0, 0.4, 1.0, pi / 2}) {
    const double below_g = gamma_12(kUnit, 0.99e-4, theta);
    const double above_g = gamma_12(kUnit, 1.01e-4, theta);
    CHECK(std::abs(below_g - above_g) < 1e-9);
    const double below_o = omega_12(kUnit, 0.99e-4, theta);
    const double above_o = omega_12(kUnit, 1.01e-4, theta);
    CHECK(std::abs(below_o - above_o) <= 1e-9 * std::abs(above_o));
  }
}

TEST_CASE("couplings are symmetric under theta -> pi - theta") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double x = std::pow(10.0, -2.0 + 3.0 * u01(rng));
    const double theta = 0.5 * pi * u01(rng);
    CHECK(gamma_12(kUnit, x, theta) ==
          doctest::Approx(gamma_12(kUnit, x, pi - theta)).epsilon(1e-12));
    CHECK(omega_12(kUnit, x, theta) ==
          doctest::Approx(omega_12(kUnit, x, pi - theta)).epsilon(1e-12));
  }
}

TEST_CASE("coupling matrix stays positive semidefinite") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  PairParams p;
  p.mu = 0.8;
  const double bound = p.gamma1 * p.gamma2();
  for (int i = 0; i < 10000; ++i) {
    const double x = std::pow(10.0, -3.0 + 5.0 * u01(rng));
    const double theta = pi * u01(rng);
    const double g12 = gamma_12(p, x, theta);
    CHECK(g12 * g12 <= bound + 1e-12);
  }
}

TEST_CASE("near-field divergence of the dipole-dipole shift") {
  CHECK(std::abs(omega_12(kUnit, 1e-2, 0.0)) > 1e5);
  CHECK(std::abs(omega_12(kUnit, 1e-3, 0.0)) > 1e8);
}

TEST_CASE("green tensor rejects the pole and suppresses longitudinal far field") {
  CHECK_THROWS_AS(green_tensor(Vec3(0, 0, 0)), DomainError);
  const Vec3 r(0, 0, 50.0);
  const Matrix3cd g = green_tensor(r);
  // along n: P + Q = O(1/z) relative suppression vs the transverse part
  const complexd along = g(2, 2);
  const complexd transverse = g(0, 0);
  CHECK(std::abs(along) < 1e-2 * std::abs(transverse));
}

TEST_CASE("drive amplitudes carry the plane-wave phases") {
  PairParams p;
  p.rabi1 = 2.0;

  GeometryConfig cfg;
  cfg.xi = pi / 2;
  cfg.theta = pi / 2;
  cfg.phi = 0.0;
  cfg.r12_lambda = 0.25;

  auto [d1, d2] = drive_amplitudes(p, derive_geometry(cfg));
  CHECK(std::abs(std::arg(d1)) < 1e-12);
  CHECK(std::abs(std::arg(d2)) < 1e-12);

  cfg.xi = pi;
  std::tie(d1, d2) = drive_amplitudes(p, derive_geometry(cfg));
  CHECK(std::arg(d1) - std::arg(d2) == doctest::Approx(2 * pi * 0.25).epsilon(1e-12));

  p.mu = 1.5;
  std::tie(d1, d2) = drive_amplitudes(p, derive_geometry(cfg));
  CHECK(std::abs(d2) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(std::abs(d1) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(gamma_12(kUnit, 0.0, 0.3), DomainError);
  CHECK_THROWS_AS(omega_12(kUnit, -1.0, 0.3), DomainError);
  PairParams bad;
  bad.mu = -1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = PairParams{};
  bad.gamma2_override = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

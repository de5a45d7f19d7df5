#include "plepair/couplings.hpp"

#include <cmath>
#include <string>

#include "plepair/errors.hpp"

namespace plepair {

namespace {

// Below this separation the closed forms lose digits to cancellation in the
// 1/x^2 terms; switch to the series expansions.
constexpr double kSeriesCrossover = 1e-4;

void check_separation(double x) {
  if (!(x > 0.0)) {
    throw DomainError("k0*r12 must be positive, got " + std::to_string(x));
  }
}

}  // namespace

void PairParams::validate() const {
  if (!(gamma1 > 0.0)) throw DomainError("gamma1 must be positive");
  if (!(mu > 0.0)) throw DomainError("mu must be positive");
  if (!(gamma2() > 0.0)) throw DomainError("gamma2 must be positive");
  if (!(rabi1 >= 0.0)) throw DomainError("rabi1 must be non-negative");
  if (!(rabi2() >= 0.0)) throw DomainError("rabi2 must be non-negative");
  if (!std::isfinite(delta_omega) || !std::isfinite(detuning)) {
    throw DomainError("delta_omega and detuning must be finite");
  }
}

double gamma_12(const PairParams& params, double x, double theta) {
  params.validate();
  check_separation(x);
  const double pref = std::sqrt(params.gamma1 * params.gamma2());
  const double c2 = std::cos(theta) * std::cos(theta);
  if (x < kSeriesCrossover) {
    const double x2 = x * x;
    return pref * (1.0 + (c2 - 2.0) * x2 / 10.0 + (3.0 - 2.0 * c2) * x2 * x2 / 280.0);
  }
  return 1.5 * pref / x *
         (std::cos(x) * (1.0 - 3.0 * c2) / x +
          std::sin(x) * (1.0 - c2 + (3.0 * c2 - 1.0) / (x * x)));
}

double omega_12(const PairParams& params, double x, double theta) {
  params.validate();
  check_separation(x);
  const double pref = std::sqrt(params.gamma1 * params.gamma2());
  const double c2 = std::cos(theta) * std::cos(theta);
  if (x < kSeriesCrossover) {
    return 1.5 * pref *
           ((3.0 * c2 - 1.0) / (x * x * x) + (c2 + 1.0) / (2.0 * x) -
            (3.0 - c2) * x / 8.0 + (5.0 - 3.0 * c2) * x * x * x / 144.0);
  }
  return 1.5 * pref / x *
         (std::sin(x) * (3.0 * c2 - 1.0) / x +
          std::cos(x) * (1.0 - c2 + (3.0 * c2 - 1.0) / (x * x)));
}

Matrix3cd green_tensor(const Vec3& r_lambda, double k) {
  const double r = r_lambda.norm();
  if (!(r > 0.0)) {
    throw DomainError("green_tensor evaluated at the r = 0 pole; "
                      "self-terms come from the closed forms");
  }
  const Vec3 n = r_lambda / r;
  const complexd z(0.0, k * r);
  const complexd p = 1.0 - 1.0 / z + 1.0 / (z * z);
  const complexd q = -1.0 + 3.0 / z - 3.0 / (z * z);
  const complexd pref = k * k * std::exp(complexd(0.0, k * r)) / r;
  Matrix3cd out = p * Matrix3cd::Identity();
  out += q * (n * n.transpose()).cast<complexd>();
  return pref * out;
}

complexd pair_coupling_from_green(const PairParams& params, const Vec3& r_lambda,
                                  const Vec3& dipole_dir) {
  params.validate();
  const Vec3 nd = dipole_dir.normalized();
  const Matrix3cd g = green_tensor(r_lambda);
  const complexd contraction = nd.cast<complexd>().dot(g * nd.cast<complexd>());
  const double pref = 1.5 * std::sqrt(params.gamma1 * params.gamma2());
  return pref / (k0_lambda * k0_lambda * k0_lambda) * contraction;
}

std::pair<complexd, complexd> drive_amplitudes(const PairParams& params,
                                               const GeometryDerived& g) {
  params.validate();
  // k_L . r1 = +delta/2, k_L . r2 = -delta/2 for emitters at +-(r12/2) z_hat.
  const double half = 0.5 * g.laser_phase_delta;
  return {params.rabi1 * std::exp(complexd(0.0, -half)),
          params.rabi2() * std::exp(complexd(0.0, +half))};
}

Couplings make_couplings(const PairParams& params, const GeometryConfig& cfg,
                         const GeometryDerived& g) {
  const double x = k0_lambda * cfg.r12_lambda;
  Couplings c;
  c.gamma12 = gamma_12(params, x, cfg.theta);
  c.omega12 = omega_12(params, x, cfg.theta);
  std::tie(c.drive1, c.drive2) = drive_amplitudes(params, g);
  return c;
}

Couplings make_couplings(const PairParams& params, const GeometryConfig& cfg) {
  return make_couplings(params, cfg, derive_geometry(cfg));
}

}  // namespace plepair

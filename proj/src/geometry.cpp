#include "plepair/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "plepair/errors.hpp"

namespace plepair {

namespace {

constexpr double kDegenerate = 1e-12;  // sin(angle) treated as exactly zero
constexpr double kAngleSlack = 1e-9;   // slack for range checks on inputs

void check_polar(double value, const char* name) {
  if (!std::isfinite(value) || value < -kAngleSlack || value > pi + kAngleSlack) {
    throw GeometryError(std::string(name) + " must lie in [0, pi], got " +
                        std::to_string(value));
  }
}

}  // namespace

void GeometryConfig::validate() const {
  check_polar(xi, "xi");
  check_polar(theta, "theta");
  check_polar(phi, "phi");
  if (!std::isfinite(psi)) throw GeometryError("psi must be finite");
  if (!(r12_lambda > 0.0)) {
    throw GeometryError("r12_lambda must be positive, got " + std::to_string(r12_lambda));
  }
  if (r_detector_lambda && !(*r_detector_lambda > 0.0)) {
    throw GeometryError("r_detector_lambda must be positive when given");
  }
  // The dipole inclination is slaved to the polarization: it only exists for
  // |pi/2 - xi| <= theta <= pi - |pi/2 - xi|.
  const double bound = std::abs(pi / 2.0 - xi);
  if (theta < bound - kAngleSlack || theta > pi - bound + kAngleSlack) {
    throw GeometryError("theta = " + std::to_string(theta) +
                        " outside the admissible range [" + std::to_string(bound) +
                        ", " + std::to_string(pi - bound) + "] for xi = " +
                        std::to_string(xi));
  }
}

GeometryDerived derive_geometry(const GeometryConfig& cfg) {
  cfg.validate();

  GeometryDerived g;
  g.n_k = Vec3(0.0, std::sin(cfg.xi), std::cos(cfg.xi));

  const double st = std::sin(cfg.theta);
  const double ct = std::cos(cfg.theta);
  if (std::abs(std::sin(cfg.xi)) < kDegenerate) {
    // Propagation along the pair axis: E_L is confined to the XY plane,
    // theta = pi/2 enforced by validate(); the azimuth is fixed to zero.
    g.n_d = Vec3(1.0, 0.0, 0.0);
  } else if (std::abs(st) < kDegenerate) {
    g.n_d = Vec3(0.0, 0.0, ct >= 0.0 ? 1.0 : -1.0);
  } else {
    // Azimuth from n_d . n_k = 0:  sin(theta) sin(phi_d) sin(xi) = -cos(theta) cos(xi);
    // the sign ambiguity of cos(phi_d) is resolved to the non-negative root.
    const double sp = std::clamp(-(ct * std::cos(cfg.xi)) / (st * std::sin(cfg.xi)), -1.0, 1.0);
    const double cp = std::sqrt(std::max(0.0, 1.0 - sp * sp));
    g.n_d = Vec3(st * cp, st * sp, ct);
  }

  const double psi = cfg.psi - 2.0 * pi * std::floor(cfg.psi / (2.0 * pi));
  g.n_obs = Vec3(std::sin(cfg.phi) * std::cos(psi), std::sin(cfg.phi) * std::sin(psi),
                 std::cos(cfg.phi));

  g.beta = std::acos(std::clamp(g.n_obs.dot(g.n_d), -1.0, 1.0));
  g.laser_phase_delta = k0_lambda * cfg.r12_lambda * std::cos(cfg.xi);
  g.phi_12 = k0_lambda * cfg.r12_lambda * std::cos(cfg.phi);
  return g;
}

double sin2_beta(const GeometryDerived& g) {
  const double s = std::sin(g.beta);
  return s * s;
}

}  // namespace plepair

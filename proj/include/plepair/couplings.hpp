#pragma once

#include <optional>
#include <utility>

#include "plepair/geometry.hpp"
#include "plepair/types.hpp"

namespace plepair {

/// Physical parameters of the two emitters and the drive.
///
/// All rates are in units of gamma1 (scaled so gamma1 = 1 by default);
/// detunings are Delta = omega0 - omega_L with per-emitter values
/// Delta_i = Delta +- delta_omega.
struct PairParams {
  double gamma1 = 1.0;  ///< radiative decay rate of emitter 1
  double mu = 1.0;      ///< dipole-moment ratio d2/d1
  /// Decay rate of emitter 2; defaults to mu^2 * gamma1.
  std::optional<double> gamma2_override{};
  double delta_omega = 0.0;  ///< (omega1 - omega2) / 2
  double rabi1 = 0.0;        ///< Rabi amplitude of emitter 1
  /// Rabi amplitude of emitter 2; defaults to mu * rabi1.
  std::optional<double> rabi2_override{};
  double detuning = 0.0;  ///< Delta = omega0 - omega_L

  double gamma2() const { return gamma2_override ? *gamma2_override : mu * mu * gamma1; }
  double rabi2() const { return rabi2_override ? *rabi2_override : mu * rabi1; }
  double delta1() const { return detuning + delta_omega; }
  double delta2() const { return detuning - delta_omega; }

  /// Throws DomainError unless gamma1 > 0, gamma2 > 0 and mu > 0.
  void validate() const;
};

/// Collective coupling constants and position-resolved drive amplitudes.
struct Couplings {
  double gamma12 = 0.0;  ///< collective damping rate
  double omega12 = 0.0;  ///< dipole-dipole interaction parameter
  complexd drive1{};     ///< Omega_1 exp(-i k_L . r1)
  complexd drive2{};     ///< Omega_2 exp(-i k_L . r2)
};

/// Collective damping rate gamma_12(x = k0 r12, theta); tends to
/// sqrt(gamma1 gamma2) as x -> 0 and decays as 1/x in the far field.
double gamma_12(const PairParams& params, double x, double theta);

/// Dipole-dipole interaction parameter Omega_12(x, theta); diverges as
/// (3 cos^2 theta - 1)/x^3 in the near field and changes sign near the
/// magic angle.
double omega_12(const PairParams& params, double x, double theta);

/// Free-space dyadic Green's tensor k^2 e^{ikr}/r (P(ikr) I + Q(ikr) n x n)
/// with P(z) = 1 - 1/z + 1/z^2, Q(z) = -1 + 3/z - 3/z^2. Lengths in lambda,
/// k defaults to k0 = 2 pi. Throws DomainError at the r = 0 pole.
Matrix3cd green_tensor(const Vec3& r_lambda, double k = k0_lambda);

/// Tensor-contraction cross-check: D12 such that gamma12 = Im D12 and
/// omega12 = Re D12 in the same scaled units as the closed forms.
complexd pair_coupling_from_green(const PairParams& params, const Vec3& r_lambda,
                                  const Vec3& dipole_dir);

/// Position-resolved complex drive amplitudes (Omega_i e^{-i k_L . r_i}).
std::pair<complexd, complexd> drive_amplitudes(const PairParams& params,
                                               const GeometryDerived& g);

Couplings make_couplings(const PairParams& params, const GeometryConfig& cfg,
                         const GeometryDerived& g);
Couplings make_couplings(const PairParams& params, const GeometryConfig& cfg);

}  // namespace plepair

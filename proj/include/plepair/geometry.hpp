#pragma once

#include <optional>

#include "plepair/types.hpp"

namespace plepair {

/// Excitation/detection arrangement of the emitter pair.
///
/// The emitters sit on the Z axis at +-(r12/2) z_hat. The laser wave vector
/// k_L lies in the ZY plane at polar angle xi; the field polarization (and
/// with it the common dipole direction) has polar angle theta; the detector
/// direction is given by polar angle phi and azimuth psi. All lengths are in
/// units of the resonance wavelength lambda of emitter 1.
struct GeometryConfig {
  double xi = 0.0;     ///< polar angle of k_L, radians
  double theta = 0.0;  ///< polar angle of E_L and of the dipole moments
  double phi = 0.0;    ///< polar angle of the detector direction
  double psi = pi / 2.0;  ///< azimuthal angle of the detector direction
  double r12_lambda = 0.0;  ///< emitter separation, in lambda
  /// Detector distance in lambda; only used for the (k1-k2)*r phase.
  std::optional<double> r_detector_lambda{};

  /// Throws GeometryError on invalid angles/separation. The polarization
  /// angle must satisfy |pi/2 - xi| <= theta <= pi - |pi/2 - xi|.
  void validate() const;
};

/// Unit vectors and phases derived from a GeometryConfig.
struct GeometryDerived {
  Vec3 n_k;    ///< laser propagation direction (0, sin xi, cos xi)
  Vec3 n_d;    ///< common dipole direction; n_d . n_k = 0
  Vec3 n_obs;  ///< detector direction
  double beta = 0.0;  ///< angle between n_obs and n_d ("observation parameter")
  double laser_phase_delta = 0.0;  ///< k_L . (r1 - r2) = k0 r12 cos xi
  double phi_12 = 0.0;             ///< observation phase r12 k0 cos phi
};

/// Resolves the dipole azimuth from n_d . n_k = 0 (non-negative cos branch)
/// and assembles all unit vectors and inter-emitter phases.
GeometryDerived derive_geometry(const GeometryConfig& cfg);

/// sin^2 of the observation angle; zero means no detectable dipole
/// radiation in that direction.
double sin2_beta(const GeometryDerived& g);

}  // namespace plepair

#pragma once

#include <optional>
#include <vector>

#include "plepair/couplings.hpp"
#include "plepair/geometry.hpp"
#include "plepair/types.hpp"

namespace plepair {

/// Scalar intensity tensor contractions, normalized so I11 = sin^2(beta)
/// for mu = 1 (the overall radiated-power constant and 1/r^2 are dropped).
struct IntensityFactors {
  double i11 = 0.0;
  double i22 = 0.0;    ///< mu^2 * i11
  double i12 = 0.0;    ///< mu * i11
  double alpha = 0.0;  ///< phi_12 + (k1 - k2) r_detector
};

/// The (k1-k2)*r term contributes only when the geometry carries a detector
/// distance; it then requires the physical omega0/gamma1 ratio.
IntensityFactors make_intensity_factors(const PairParams& params,
                                        const GeometryConfig& cfg,
                                        const GeometryDerived& g,
                                        std::optional<double> omega0_over_gamma1 = {});

/// Direction-resolved total emission intensity from the collective-basis
/// density matrix:
///   (I11+I22)/2 (2 rho_UU + rho_SS + rho_AA) - 2 I12 sin(alpha) Im rho_SA
///   + I12 cos(alpha) (rho_SS - rho_AA) + (I11 - I22) Re rho_SA.
double total_intensity(const Matrix4cd& rho_collective, const IntensityFactors& f);

enum class PeakKind { maximum, minimum };

struct Peak {
  double position = 0.0;
  double height = 0.0;
  PeakKind kind = PeakKind::maximum;
};

struct PleSpectrum {
  std::vector<double> detuning;
  std::vector<double> intensity;
  std::vector<Peak> peaks;
};

/// Local extrema by 3-point comparison, refined by quadratic interpolation
/// through the bracketing points. Extrema with |height| below
/// threshold_frac * max|y| are dropped. Needs at least 3 grid points.
std::vector<Peak> find_peaks(const std::vector<double>& x, const std::vector<double>& y,
                             double threshold_frac = 1e-6);
std::vector<Peak> find_peaks(const PleSpectrum& spectrum, double threshold_frac = 1e-6);

/// Steady-state emission intensity versus drive detuning. Solver failures
/// are rethrown annotated with the offending detuning.
PleSpectrum ple_scan(const PairParams& base, const GeometryConfig& geom,
                     const std::vector<double>& detuning_grid,
                     std::optional<double> omega0_over_gamma1 = {});

struct PolarizationScan {
  std::vector<double> theta;
  std::vector<double> detuning;
  std::vector<std::vector<double>> intensity;  ///< [i_theta][i_detuning]
  std::vector<std::vector<Peak>> peaks;        ///< per theta
  /// Position of the brightest non-central side peak per theta
  /// (NaN where no side peak exists).
  std::vector<double> trail;
};

/// Intensity surface I(theta, detuning) with the side-peak migration trail.
PolarizationScan polarization_scan(const PairParams& base, const GeometryConfig& geom,
                                   const std::vector<double>& theta_grid,
                                   const std::vector<double>& detuning_grid,
                                   std::optional<double> omega0_over_gamma1 = {});

/// Brightest maximum with |position| > exclusion, if any.
std::optional<double> brightest_side_peak(const std::vector<Peak>& peaks,
                                          double exclusion = 0.5);

/// n evenly spaced samples covering [a, b] inclusive.
std::vector<double> linspace(double a, double b, int n);

}  // namespace plepair

#include "plepair/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "plepair/errors.hpp"
#include "plepair/io.hpp"
#include "plepair/master_equation.hpp"
#include "plepair/steady_state.hpp"
#include "parallel_for.hpp"

namespace plepair {

namespace {

void check_grid(const std::vector<double>& grid, const char* what) {
  if (grid.empty()) throw DomainError(std::string(what) + " grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw DomainError(std::string(what) + " grid must be strictly increasing");
    }
  }
}

/// Rethrows the current solver exception with a grid-point annotation,
/// preserving the concrete type where it matters for callers.
[[noreturn]] void rethrow_annotated(const std::string& where) {
  try {
    throw;
  } catch (const DegenerateSteadyState& e) {
    throw DegenerateSteadyState(where + ": " + e.what());
  } catch (const SingularSolve& e) {
    throw SingularSolve(where + ": " + e.what());
  } catch (const NotConverged& e) {
    throw NotConverged(where + ": " + e.what());
  } catch (const std::exception& e) {
    throw SolverError(where + ": " + e.what());
  }
}

}  // namespace

IntensityFactors make_intensity_factors(const PairParams& params,
                                        const GeometryConfig& cfg,
                                        const GeometryDerived& g,
                                        std::optional<double> omega0_over_gamma1) {
  params.validate();
  const double s2 = sin2_beta(g);
  double alpha = g.phi_12;
  if (cfg.r_detector_lambda) {
    if (!omega0_over_gamma1) {
      throw DomainError("omega0_over_gamma1 is required when r_detector_lambda is set");
    }
    // (k1 - k2) r = 2 k0 r (delta_omega / omega0) with k0 r = 2 pi r_lambda.
    alpha += 2.0 * k0_lambda * (*cfg.r_detector_lambda) * params.delta_omega /
             *omega0_over_gamma1;
  }
  return IntensityFactors{s2, params.mu * params.mu * s2, params.mu * s2, alpha};
}

double total_intensity(const Matrix4cd& rho_collective, const IntensityFactors& f) {
  const double rho_ss = rho_collective(1, 1).real();
  const double rho_aa = rho_collective(2, 2).real();
  const double rho_uu = rho_collective(3, 3).real();
  const complexd rho_sa = rho_collective(1, 2);
  return 0.5 * (f.i11 + f.i22) * (2.0 * rho_uu + rho_ss + rho_aa) -
         2.0 * f.i12 * std::sin(f.alpha) * rho_sa.imag() +
         f.i12 * std::cos(f.alpha) * (rho_ss - rho_aa) +
         (f.i11 - f.i22) * rho_sa.real();
}

std::vector<Peak> find_peaks(const std::vector<double>& x, const std::vector<double>& y,
                             double threshold_frac) {
  if (x.size() != y.size()) throw DomainError("find_peaks: size mismatch");
  if (x.size() < 3) throw DomainError("find_peaks needs at least 3 grid points");

  double y_scale = 0.0;
  for (double v : y) y_scale = std::max(y_scale, std::abs(v));
  const double threshold = threshold_frac * y_scale;

  std::vector<Peak> peaks;
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    const bool is_max = y[i] > y[i - 1] && y[i] > y[i + 1];
    const bool is_min = y[i] < y[i - 1] && y[i] < y[i + 1];
    if (!is_max && !is_min) continue;

    // Parabola through the three bracketing points.
    const double dl = x[i - 1] - x[i];
    const double dr = x[i + 1] - x[i];
    const double yl = y[i - 1] - y[i];
    const double yr = y[i + 1] - y[i];
    const double denom = dl * yr - dr * yl;
    double pos = x[i];
    double height = y[i];
    if (std::abs(denom) > 0.0) {
      pos = x[i] + 0.5 * (dl * dl * yr - dr * dr * yl) / denom;
      const double a = (dr * yl - dl * yr) / (dl * dr * (dl - dr));
      const double b = (dl * dl * yr - dr * dr * yl) / (dl * dr * (dl - dr));
      const double u = pos - x[i];
      height = y[i] + a * u * u + b * u;
    }
    if (std::abs(height) < threshold) continue;
    peaks.push_back(Peak{pos, height, is_max ? PeakKind::maximum : PeakKind::minimum});
  }
  return peaks;
}

std::vector<Peak> find_peaks(const PleSpectrum& spectrum, double threshold_frac) {
  return find_peaks(spectrum.detuning, spectrum.intensity, threshold_frac);
}

PleSpectrum ple_scan(const PairParams& base, const GeometryConfig& geom,
                     const std::vector<double>& detuning_grid,
                     std::optional<double> omega0_over_gamma1) {
  check_grid(detuning_grid, "detuning");
  base.validate();

  const GeometryDerived g = derive_geometry(geom);
  const Couplings coup = make_couplings(base, geom, g);
  const IntensityFactors factors = make_intensity_factors(base, geom, g, omega0_over_gamma1);

  PleSpectrum out;
  out.detuning = detuning_grid;
  out.intensity.assign(detuning_grid.size(), 0.0);
  detail::parallel_for(detuning_grid.size(), [&](std::size_t i) {
    PairParams p = base;
    p.detuning = detuning_grid[i];
    try {
      const Liouvillian liou = build_liouvillian(p, coup);
      out.intensity[i] = total_intensity(to_collective(solve_steady(liou)), factors);
    } catch (...) {
      rethrow_annotated("ple_scan at detuning " + format_double(p.detuning));
    }
  });

  if (out.detuning.size() >= 3) out.peaks = find_peaks(out.detuning, out.intensity);
  return out;
}

std::optional<double> brightest_side_peak(const std::vector<Peak>& peaks, double exclusion) {
  std::optional<double> best;
  double best_height = -std::numeric_limits<double>::infinity();
  for (const Peak& p : peaks) {
    if (p.kind != PeakKind::maximum || std::abs(p.position) <= exclusion) continue;
    if (p.height > best_height) {
      best_height = p.height;
      best = p.position;
    }
  }
  return best;
}

PolarizationScan polarization_scan(const PairParams& base, const GeometryConfig& geom,
                                   const std::vector<double>& theta_grid,
                                   const std::vector<double>& detuning_grid,
                                   std::optional<double> omega0_over_gamma1) {
  check_grid(theta_grid, "theta");
  check_grid(detuning_grid, "detuning");
  for (double theta : theta_grid) {
    GeometryConfig cfg = geom;
    cfg.theta = theta;
    cfg.validate();  // every theta must be admissible for the configured xi
  }

  PolarizationScan out;
  out.theta = theta_grid;
  out.detuning = detuning_grid;
  out.intensity.resize(theta_grid.size());
  out.peaks.resize(theta_grid.size());
  out.trail.assign(theta_grid.size(), std::numeric_limits<double>::quiet_NaN());

  for (std::size_t t = 0; t < theta_grid.size(); ++t) {
    GeometryConfig cfg = geom;
    cfg.theta = theta_grid[t];
    PleSpectrum row;
    try {
      row = ple_scan(base, cfg, detuning_grid, omega0_over_gamma1);
    } catch (...) {
      rethrow_annotated("polarization_scan at theta " + format_double(theta_grid[t]));
    }
    out.intensity[t] = std::move(row.intensity);
    out.peaks[t] = std::move(row.peaks);
    if (auto side = brightest_side_peak(out.peaks[t])) out.trail[t] = *side;
  }
  return out;
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw DomainError("linspace needs at least one point");
  if (n == 1) return {a};
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  out.back() = b;
  return out;
}

}  // namespace plepair

#pragma once

#include "plepair/master_equation.hpp"

namespace plepair {

/// Solves L vec(rho) = 0 with Tr rho = 1 by replacing one row of L with the
/// vectorized trace row. The result is Hermitized and trace-normalized.
/// Throws DegenerateSteadyState if the kernel of L has dimension > 1 and
/// SingularSolve if the constrained system is rank-deficient.
Matrix4cd solve_steady(const Liouvillian& liou);

/// Fixed-step classical RK4 integration of d vec(rho)/dt = L vec(rho) from
/// rho0 up to t_max. The convergence metric max|rho(t_max) - rho(t_max/2)|
/// is written to *convergence when given; if it exceeds 1e-8 the run throws
/// NotConverged (subradiant configurations converge slowly; raise t_max).
Matrix4cd evolve_to_steady(const Liouvillian& liou, const Matrix4cd& rho0,
                           double t_max, double dt, double* convergence = nullptr);

struct EvolveOptions {
  double t_max = 200.0;
  double dt = 1e-3;
  bool retry_double = true;  ///< double t_max once on NotConverged
};

/// Convenience oracle entry point: integrates from |G><G| with defaults.
Matrix4cd evolve_to_steady(const Liouvillian& liou, const EvolveOptions& opts = {});

/// max-norm of L vec(rho): zero for an exact steady state.
double steady_residual(const Liouvillian& liou, const Matrix4cd& rho);

}  // namespace plepair

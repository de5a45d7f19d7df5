#include "plepair/steady_state.hpp"

#include <cmath>
#include <iostream>
#include <string>

#include "plepair/errors.hpp"

namespace plepair {

namespace {

constexpr double kConvergenceTol = 1e-8;
constexpr double kHermitianWarn = 1e-10;

double max_abs(const Matrix4cd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

Matrix4cd solve_steady(const Liouvillian& liou) {
  // Uniqueness: L always has the trace functional as a left null vector, so
  // rank 15 is the regular case. Anything lower means a dark decoupled
  // sector and no unique steady state.
  Eigen::FullPivLU<Matrix16cd> kernel_check(liou.matrix);
  kernel_check.setThreshold(1e-10);
  const int kernel_dim = 16 - static_cast<int>(kernel_check.rank());
  if (kernel_dim > 1) {
    throw DegenerateSteadyState("steady state is not unique: Liouvillian kernel has dimension " +
                                std::to_string(kernel_dim));
  }

  // Replace the first row with the vectorized trace row; the steady state is
  // then the unique solution of the inhomogeneous system A v = e_0.
  Matrix16cd a = liou.matrix;
  a.row(0).setZero();
  a(0, 0) = a(0, 5) = a(0, 10) = a(0, 15) = 1.0;
  Vector16cd b = Vector16cd::Zero();
  b(0) = 1.0;

  Eigen::FullPivLU<Matrix16cd> lu(a);
  if (!lu.isInvertible()) {
    throw SingularSolve("trace-constrained steady-state system is rank-deficient");
  }
  Vector16cd v = lu.solve(b);
  for (int pass = 0; pass < 2; ++pass) {
    v -= lu.solve((a * v - b).eval());
  }

  Matrix4cd rho = unvectorize(v);
  const double herm_dev = max_abs(rho - rho.adjoint());
  if (herm_dev > kHermitianWarn) {
    std::cerr << "solve_steady: Hermiticity deviation " << herm_dev
              << " before correction\n";
  }
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace().real();
  return rho;
}

Matrix4cd evolve_to_steady(const Liouvillian& liou, const Matrix4cd& rho0,
                           double t_max, double dt, double* convergence) {
  if (!(dt > 0.0) || !(t_max > 0.0)) throw DomainError("t_max and dt must be positive");

  const Matrix16cd& m = liou.matrix;
  const auto half_steps = static_cast<long>(std::ceil(t_max / (2.0 * dt)));

  Vector16cd v = vectorize(rho0);
  Matrix4cd rho_half;
  for (long step = 0; step < 2 * half_steps; ++step) {
    const Vector16cd k1 = m * v;
    const Vector16cd k2 = m * (v + 0.5 * dt * k1);
    const Vector16cd k3 = m * (v + 0.5 * dt * k2);
    const Vector16cd k4 = m * (v + dt * k3);
    v += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (step == half_steps - 1) rho_half = unvectorize(v);
  }

  const Matrix4cd rho = unvectorize(v);
  const double metric = max_abs(rho - rho_half);
  if (convergence) *convergence = metric;
  if (!(metric <= kConvergenceTol)) {
    throw NotConverged("time evolution not settled: |rho(t_max) - rho(t_max/2)| = " +
                       std::to_string(metric) + " after t_max = " + std::to_string(t_max));
  }
  return rho;
}

Matrix4cd evolve_to_steady(const Liouvillian& liou, const EvolveOptions& opts) {
  try {
    return evolve_to_steady(liou, ground_state(), opts.t_max, opts.dt);
  } catch (const NotConverged&) {
    if (!opts.retry_double) throw;
    return evolve_to_steady(liou, ground_state(), 2.0 * opts.t_max, opts.dt);
  }
}

double steady_residual(const Liouvillian& liou, const Matrix4cd& rho) {
  return (liou.matrix * vectorize(rho)).cwiseAbs().maxCoeff();
}

}  // namespace plepair

#pragma once

#include "plepair/couplings.hpp"
#include "plepair/types.hpp"

namespace plepair {

// Product basis ordering throughout: {|g1 g2>, |g1 e2>, |e1 g2>, |e1 e2>}
// (atom 1 is the left factor of the Kronecker product). The collective
// basis ordering is {|G>, |S>, |A>, |U>}.

/// Generator of the cooperative master equation acting on the
/// column-vectorized density matrix.
struct Liouvillian {
  Matrix16cd matrix;
  PairParams params;
  Couplings couplings;
};

/// Builds the rotating-frame generator
///   d rho/dt = -i sum_i Delta_i [s+_i s-_i, rho]
///              + i sum_i [drive_i s-_i + conj(drive_i) s+_i, rho]
///              + i sum_{i != j} Omega_12 [s+_i s-_j, rho]
///              - sum_{i,j} gamma_ij ([s+_i, s-_j rho] + [rho s+_i, s-_j]).
/// A single decoupled atom loses excited population at rate 2 gamma_i
/// under this convention.
Liouvillian build_liouvillian(const PairParams& params, const Couplings& coup);

/// Column-major vectorization and its inverse.
Vector16cd vectorize(const Matrix4cd& rho);
Matrix4cd unvectorize(const Vector16cd& v);

/// unvec(L . vec(rho)), i.e. d rho/dt.
Matrix4cd apply_liouvillian(const Liouvillian& liou, const Matrix4cd& rho);

/// Lowering/raising operators of atom 1 or 2 on the product space.
Matrix4cd sigma_minus(int atom);
Matrix4cd sigma_plus(int atom);

/// Unitary mapping product basis -> {|G>, |S>, |A>, |U>} with
/// |S> = (|e1 g2> + |g1 e2>)/sqrt(2), |A> = (|e1 g2> - |g1 e2>)/sqrt(2).
const Matrix4cd& collective_transform();

/// U rho U^dagger; supplies rho_GG, rho_SS, rho_AA, rho_UU, rho_SA.
Matrix4cd to_collective(const Matrix4cd& rho);

/// |g1 g2><g1 g2|.
Matrix4cd ground_state();

}  // namespace plepair

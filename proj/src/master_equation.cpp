#include "plepair/master_equation.hpp"

#include "plepair/errors.hpp"

namespace plepair {

namespace {

Matrix4cd kron2(const Matrix2cd& a, const Matrix2cd& b) {
  Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Matrix16cd kron4(const Matrix4cd& a, const Matrix4cd& b) {
  Matrix16cd out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
  return out;
}

const Matrix2cd kSigmaMinus2 = [] {
  Matrix2cd s = Matrix2cd::Zero();
  s(0, 1) = 1.0;  // |g><e|
  return s;
}();

}  // namespace

Matrix4cd sigma_minus(int atom) {
  if (atom != 1 && atom != 2) throw DomainError("atom index must be 1 or 2");
  const Matrix2cd id = Matrix2cd::Identity();
  return atom == 1 ? kron2(kSigmaMinus2, id) : kron2(id, kSigmaMinus2);
}

Matrix4cd sigma_plus(int atom) { return sigma_minus(atom).adjoint(); }

Vector16cd vectorize(const Matrix4cd& rho) {
  return Eigen::Map<const Vector16cd>(rho.data());
}

Matrix4cd unvectorize(const Vector16cd& v) {
  return Eigen::Map<const Matrix4cd>(v.data());
}

Liouvillian build_liouvillian(const PairParams& params, const Couplings& coup) {
  params.validate();

  const Matrix4cd sm[2] = {sigma_minus(1), sigma_minus(2)};
  const Matrix4cd sp[2] = {sigma_plus(1), sigma_plus(2)};
  const Matrix4cd id = Matrix4cd::Identity();

  // Hermitian part: detunings, drives, dipole-dipole exchange. The signs
  // follow the generator stated in build_liouvillian's contract.
  Matrix4cd h = params.delta1() * sp[0] * sm[0] + params.delta2() * sp[1] * sm[1];
  h -= coup.drive1 * sm[0] + std::conj(coup.drive1) * sp[0];
  h -= coup.drive2 * sm[1] + std::conj(coup.drive2) * sp[1];
  h -= coup.omega12 * (sp[0] * sm[1] + sp[1] * sm[0]);

  const complexd iu(0.0, 1.0);
  Matrix16cd l = -iu * (kron4(id, h) - kron4(h.transpose(), id));

  // Dissipator: -gamma_ij ([s+_i, s-_j rho] + [rho s+_i, s-_j])
  //           = gamma_ij (2 s-_j rho s+_i - s+_i s-_j rho - rho s+_i s-_j).
  const double gm[2][2] = {{params.gamma1, coup.gamma12},
                           {coup.gamma12, params.gamma2()}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Matrix4cd pm = sp[i] * sm[j];
      l += gm[i][j] * (2.0 * kron4(sp[i].transpose(), sm[j]) - kron4(id, pm) -
                       kron4(pm.transpose(), id));
    }
  }

  return Liouvillian{l, params, coup};
}

Matrix4cd apply_liouvillian(const Liouvillian& liou, const Matrix4cd& rho) {
  return unvectorize(liou.matrix * vectorize(rho));
}

const Matrix4cd& collective_transform() {
  static const Matrix4cd u = [] {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix4cd m = Matrix4cd::Zero();
    m(0, 0) = 1.0;              // |G> = |g1 g2>
    m(1, 1) = s; m(1, 2) = s;   // |S>
    m(2, 1) = -s; m(2, 2) = s;  // |A>
    m(3, 3) = 1.0;              // |U> = |e1 e2>
    return m;
  }();
  return u;
}

Matrix4cd to_collective(const Matrix4cd& rho) {
  const Matrix4cd& u = collective_transform();
  return u * rho * u.adjoint();
}

Matrix4cd ground_state() {
  Matrix4cd rho = Matrix4cd::Zero();
  rho(0, 0) = 1.0;
  return rho;
}

}  // namespace plepair

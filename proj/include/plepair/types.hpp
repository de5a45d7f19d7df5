#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace plepair {

using complexd = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Matrix2cd = Eigen::Matrix2cd;
using Matrix3cd = Eigen::Matrix3cd;
using Matrix4cd = Eigen::Matrix4cd;
using Matrix16cd = Eigen::Matrix<complexd, 16, 16>;
using Vector16cd = Eigen::Matrix<complexd, 16, 1>;

inline constexpr double pi = std::numbers::pi;

/// Wavenumber of the reference transition in scaled units (lengths in
/// units of the resonance wavelength lambda_1).
inline constexpr double k0_lambda = 2.0 * pi;

}  // namespace plepair

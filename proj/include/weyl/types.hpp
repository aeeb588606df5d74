#pragma once

#include <Eigen/Dense>
#include <complex>

namespace weyl {

using Real = double;
using Complex = std::complex<Real>;

using Vector3 = Eigen::Vector3d;
using Vector4 = Eigen::Vector4d;
using Matrix2c = Eigen::Matrix2cd;
using Matrix3 = Eigen::Matrix3d;
using Matrix4 = Eigen::Matrix4d;
using Spinor = Eigen::Vector2cd;

inline constexpr Real kPi = 3.14159265358979323846;

inline Matrix2c pauli_x() {
  Matrix2c m;
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix2c pauli_y() {
  Matrix2c m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

inline Matrix2c pauli_z() {
  Matrix2c m;
  m << 1, 0, 0, -1;
  return m;
}

/// v . (sigma_x, sigma_y, sigma_z)
inline Matrix2c pauli_dot(const Vector3& v) {
  Matrix2c m;
  m << v.z(), Complex(v.x(), -v.y()), Complex(v.x(), v.y()), -v.z();
  return m;
}

/// Covariant contraction p_mu sigma^mu = p0 I - p.sigma with sigma^mu = (I, sigma).
inline Matrix2c sigma_contract(Real p0, const Vector3& p) {
  return p0 * Matrix2c::Identity() - pauli_dot(p);
}

/// Wrap an angle to (-pi, pi].
inline Real wrap_angle(Real a) {
  a = std::fmod(a, 2 * kPi);
  if (a <= -kPi) a += 2 * kPi;
  if (a > kPi) a -= 2 * kPi;
  return a;
}

}  // namespace weyl

#pragma once

#include <array>
#include <vector>

#include "weyl/types.hpp"

namespace weyl {

/// BCC lattice site in the generator basis h1, h2, h3.
/// Cartesian components always have equal parity.
struct LatticeVector {
  Eigen::Vector3i coefficients;  // (m1, m2, m3)

  Vector3 cartesian() const;
};

/// The four positive generators h1..h4 in rescaled units, h4 = -(h1+h2+h3).
std::array<Vector3, 4> positive_generators();

/// All eight hopping vectors +-h1..+-h4.
std::array<Vector3, 8> generators();

/// Coefficient triples of the eight generators in the h1,h2,h3 basis,
/// same order as generators().
std::array<Eigen::Vector3i, 8> generator_coefficients();

/// Dual basis: hhat_j . h_l = delta_jl (entries are exact multiples of 1/2).
std::array<Vector3, 3> dual_basis();

/// Rhombic-dodecahedral Brillouin zone: |k_i +- k_j| <= pi for all pairs.
bool in_brillouin(const Vector3& k);

/// Translate k by the reciprocal lattice into the Brillouin zone
/// (nearest-point reduction; ties on the boundary are kept in-zone).
Vector3 wrap_to_zone(const Vector3& k);

/// Finite periodic grid over (Z_N)^3 in generator-coefficient space,
/// spinor amplitudes attached to each site.
///
/// Site (m1,m2,m3) maps to flat index (m1*N + m2)*N + m3; momenta are
/// kappa_j = -pi + 2*pi*m_j/N in coefficient coordinates.
class PeriodicGrid {
 public:
  explicit PeriodicGrid(int n);

  int n() const { return n_; }
  Eigen::Index sites() const { return static_cast<Eigen::Index>(n_) * n_ * n_; }

  Eigen::Index site_index(int m1, int m2, int m3) const;
  Eigen::Vector3i site_coefficients(Eigen::Index idx) const;

  /// Momentum at a grid index, in coefficient coordinates.
  Vector3 momentum_coefficients(Eigen::Index idx) const;
  /// The same momentum converted to Cartesian via the dual basis.
  Vector3 momentum_cartesian(Eigen::Index idx) const;
  /// Cartesian position of a site.
  Vector3 site_cartesian(Eigen::Index idx) const;

  /// Forward transform, characters e^{-i kappa . m}: psi_hat(kappa) =
  /// N^{-3/2} sum_m e^{-i kappa.m} psi(m).  `state` has shape (N^3, 2).
  Eigen::MatrixXcd fourier_forward(const Eigen::MatrixXcd& state) const;
  Eigen::MatrixXcd fourier_inverse(const Eigen::MatrixXcd& state) const;

 private:
  Eigen::MatrixXcd axis_transform(const Eigen::MatrixXcd& state, bool forward) const;

  int n_;
  Eigen::MatrixXcd dft_;  // N x N unitary, dft_(a, m) = e^{-i kappa_a m} / sqrt(N)
};

}  // namespace weyl

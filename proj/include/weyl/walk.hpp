#pragma once

#include <array>
#include <string>

#include "weyl/lattice.hpp"
#include "weyl/types.hpp"

namespace weyl {

/// The four admissible Weyl walks.  A+/B+ are right-handed near k=0.
enum class WalkKind { APlus, AMinus, BPlus, BMinus };

constexpr bool is_a_family(WalkKind kind) {
  return kind == WalkKind::APlus || kind == WalkKind::AMinus;
}
constexpr int family_sign(WalkKind kind) {
  return (kind == WalkKind::APlus || kind == WalkKind::BPlus) ? +1 : -1;
}
std::string to_string(WalkKind kind);
WalkKind walk_kind_from_string(const std::string& name);

/// One 2x2 coin per hopping vector, ordered as generators().
struct CoinSet {
  std::array<Matrix2c, 8> coins;
  Complex zeta;
};

/// Coin table for a walk kind.  The zeta assignment is the reconciled one:
/// A(+-) uses zeta = (1 -+ i)/4, the unique choice for which the coin sum
/// sum_h e^{-ik.h} C_h equals the product-form walk matrix.  B coins are
/// entrywise transposes of the A coins.
CoinSet coin_set(WalkKind kind);

/// Normative momentum-space walk matrix:
///   A(+-)_k = exp(-i k_x sx) exp(-+ i k_y sy) exp(-i k_z sz),
///   B(+-)_k = transpose(A(+-)_k).
/// k is wrapped to the zone internally (periodicity makes this a no-op
/// up to 1e-12).
Matrix2c walk_matrix(WalkKind kind, const Vector3& k);

/// Coin-sum construction sum_h e^{-i k.h} C_h; equal to walk_matrix.
Matrix2c walk_matrix_coin_sum(WalkKind kind, const Vector3& k);

/// Closed form lambda I - i n_eff.sigma for the same kind.
Matrix2c walk_matrix_closed_form(WalkKind kind, const Vector3& k);

struct Dispersion {
  Real lambda;
  Vector3 n;       // n^(+)(k)
  Real omega_plus; // arccos(lambda) in [0, pi]
};

/// lambda^(+), n^(+) and the positive dispersion branch at k.
Dispersion dispersion(const Vector3& k);

/// lambda and n for an arbitrary kind (n is the family-(+/-) closed form;
/// the effective Pauli vector of the walk matrix is (n_x, +-n_y, n_z)).
Real lambda_of_kind(WalkKind kind, const Vector3& k);
Vector3 n_of_kind(WalkKind kind, const Vector3& k);

/// Effective Pauli vector n_eff with walk_matrix = lambda I - i n_eff.sigma
/// (for B kinds the transpose flips the sign of the sigma_y component).
Vector3 pauli_vector(WalkKind kind, const Vector3& k);

struct EigenSolution {
  Real omega;
  Spinor psi;
};

/// Eigen-structure of the walk at k.  psi is the branch-helicity eigenvector
/// of the walk's Pauli vector, so it satisfies
///   [sin(omega) I - n_eff.sigma] psi = 0   and   W_k psi = e^{-i omega} psi,
/// with omega = branch * arccos(lambda).  At n_eff = 0 returns psi = (1,0).
EigenSolution eigen_spinor(WalkKind kind, const Vector3& k, int branch);

/// State on a finite periodic lattice.
struct LatticeState {
  const PeriodicGrid* grid;
  Eigen::MatrixXcd amplitudes;  // (N^3, 2)
};

/// One step of the walk: (W psi)(m) = sum_h C_h psi(m - delta_h), periodic
/// shifts in coefficient space.  Fourier-conjugates to multiplication by
/// walk_matrix at each grid momentum.
LatticeState step(WalkKind kind, const LatticeState& state);

/// Max norm of (T_h (x) I) W psi - W (T_h (x) I) psi over the four positive
/// generators, for a deterministic pseudo-random state.
Real translation_covariance_check(WalkKind kind, const PeriodicGrid& grid,
                                  unsigned seed = 12345);

}  // namespace weyl

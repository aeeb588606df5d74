#include "weyl/walk.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace weyl {

std::string to_string(WalkKind kind) {
  switch (kind) {
    case WalkKind::APlus: return "A+";
    case WalkKind::AMinus: return "A-";
    case WalkKind::BPlus: return "B+";
    case WalkKind::BMinus: return "B-";
  }
  return "?";
}

WalkKind walk_kind_from_string(const std::string& name) {
  if (name == "A+") return WalkKind::APlus;
  if (name == "A-") return WalkKind::AMinus;
  if (name == "B+") return WalkKind::BPlus;
  if (name == "B-") return WalkKind::BMinus;
  throw std::invalid_argument("unknown walk kind: " + name);
}

CoinSet coin_set(WalkKind kind) {
  // Reconciled zeta assignment, see walk.hpp.
  const Complex zeta =
      family_sign(kind) > 0 ? Complex(0.25, -0.25) : Complex(0.25, 0.25);
  const Complex zc = std::conj(zeta);
  CoinSet set;
  set.zeta = zeta;
  auto m = [](Complex a, Complex b, Complex c, Complex d) {
    Matrix2c out;
    out << a, b, c, d;
    return out;
  };
  // Order matches generators(): +h1..+h4, -h1..-h4.
  set.coins = {m(zc, 0, zc, 0),  m(0, zc, 0, zc),   m(0, -zc, 0, zc),
               m(zc, 0, -zc, 0), m(0, -zeta, 0, zeta), m(zeta, 0, -zeta, 0),
               m(zeta, 0, zeta, 0), m(0, zeta, 0, zeta)};
  if (!is_a_family(kind))
    for (auto& c : set.coins) c.transposeInPlace();
  return set;
}

namespace {

Matrix2c axis_exponential(const Matrix2c& sigma, Real angle) {
  return std::cos(angle) * Matrix2c::Identity() -
         Complex(0, std::sin(angle)) * sigma;
}

}  // namespace

Matrix2c walk_matrix(WalkKind kind, const Vector3& k_in) {
  const Vector3 k = wrap_to_zone(k_in);
  const int s = family_sign(kind);
  Matrix2c a = axis_exponential(pauli_x(), k.x()) *
               axis_exponential(pauli_y(), s * k.y()) *
               axis_exponential(pauli_z(), k.z());
  if (!is_a_family(kind)) a.transposeInPlace();
  return a;
}

Matrix2c walk_matrix_coin_sum(WalkKind kind, const Vector3& k) {
  const CoinSet set = coin_set(kind);
  const auto hops = generators();
  Matrix2c out = Matrix2c::Zero();
  for (int i = 0; i < 8; ++i)
    out += std::exp(Complex(0, -k.dot(hops[i]))) * set.coins[i];
  return out;
}

Real lambda_of_kind(WalkKind kind, const Vector3& k) {
  const int s = family_sign(kind);
  const Real cx = std::cos(k.x()), cy = std::cos(k.y()), cz = std::cos(k.z());
  const Real sx = std::sin(k.x()), sy = std::sin(k.y()), sz = std::sin(k.z());
  return cx * cy * cz - s * sx * sy * sz;
}

Vector3 n_of_kind(WalkKind kind, const Vector3& k) {
  const int s = family_sign(kind);
  const Real cx = std::cos(k.x()), cy = std::cos(k.y()), cz = std::cos(k.z());
  const Real sx = std::sin(k.x()), sy = std::sin(k.y()), sz = std::sin(k.z());
  return {sx * cy * cz + s * cx * sy * sz, cx * sy * cz - s * sx * cy * sz,
          cx * cy * sz + s * sx * sy * cz};
}

Vector3 pauli_vector(WalkKind kind, const Vector3& k) {
  const int s = family_sign(kind);
  Vector3 n = n_of_kind(kind, k);
  n.y() *= s;                       // sigma pairing (sx, +-sy, sz)
  if (!is_a_family(kind)) n.y() = -n.y();  // transpose flips sigma_y
  return n;
}

Matrix2c walk_matrix_closed_form(WalkKind kind, const Vector3& k) {
  return lambda_of_kind(kind, k) * Matrix2c::Identity() -
         Complex(0, 1) * pauli_dot(pauli_vector(kind, k));
}

Dispersion dispersion(const Vector3& k) {
  Dispersion d;
  d.lambda = lambda_of_kind(WalkKind::APlus, k);
  d.n = n_of_kind(WalkKind::APlus, k);
  d.omega_plus = std::acos(std::clamp(d.lambda, -1.0, 1.0));
  return d;
}

EigenSolution eigen_spinor(WalkKind kind, const Vector3& k, int branch) {
  if (branch != 1 && branch != -1)
    throw std::invalid_argument("eigen_spinor: branch must be +-1");
  const Real lambda = lambda_of_kind(kind, k);
  const Vector3 n = pauli_vector(kind, k);
  const Real nn = n.norm();
  EigenSolution sol;
  sol.omega = branch * std::acos(std::clamp(lambda, -1.0, 1.0));
  if (nn < 1e-14) {
    sol.psi = Spinor(1, 0);
    return sol;
  }
  // branch-helicity eigenvector of nhat.sigma
  const Vector3 u = branch * n / nn;
  if (1 + u.z() > 1e-12) {
    sol.psi = Spinor(Complex(1 + u.z(), 0), Complex(u.x(), u.y()));
  } else {
    sol.psi = Spinor(Complex(u.x(), -u.y()), Complex(1 - u.z(), 0));
  }
  sol.psi.normalize();
  return sol;
}

LatticeState step(WalkKind kind, const LatticeState& state) {
  const PeriodicGrid& grid = *state.grid;
  if (state.amplitudes.rows() != grid.sites() || state.amplitudes.cols() != 2)
    throw std::invalid_argument("step: state size mismatch");
  const CoinSet set = coin_set(kind);
  const auto deltas = generator_coefficients();
  LatticeState out{&grid, Eigen::MatrixXcd::Zero(grid.sites(), 2)};
  for (Eigen::Index idx = 0; idx < grid.sites(); ++idx) {
    const Eigen::Vector3i m = grid.site_coefficients(idx);
    Eigen::Vector2cd acc = Eigen::Vector2cd::Zero();
    for (int i = 0; i < 8; ++i) {
      const Eigen::Index src = grid.site_index(
          m.x() - deltas[i].x(), m.y() - deltas[i].y(), m.z() - deltas[i].z());
      acc += set.coins[i] * state.amplitudes.row(src).transpose();
    }
    out.amplitudes.row(idx) = acc.transpose();
  }
  return out;
}

Real translation_covariance_check(WalkKind kind, const PeriodicGrid& grid,
                                  unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<Real> gauss;
  LatticeState psi{&grid, Eigen::MatrixXcd(grid.sites(), 2)};
  for (Eigen::Index i = 0; i < grid.sites(); ++i)
    for (int s = 0; s < 2; ++s)
      psi.amplitudes(i, s) = Complex(gauss(rng), gauss(rng));
  psi.amplitudes /= std::sqrt(psi.amplitudes.squaredNorm());

  auto translate = [&grid](const LatticeState& st, const Eigen::Vector3i& d) {
    LatticeState out{&grid, Eigen::MatrixXcd(grid.sites(), 2)};
    for (Eigen::Index idx = 0; idx < grid.sites(); ++idx) {
      const Eigen::Vector3i m = grid.site_coefficients(idx);
      out.amplitudes.row(idx) = st.amplitudes.row(
          grid.site_index(m.x() - d.x(), m.y() - d.y(), m.z() - d.z()));
    }
    return out;
  };

  const auto deltas = generator_coefficients();
  Real worst = 0;
  const LatticeState wpsi = step(kind, psi);
  for (int i = 0; i < 4; ++i) {
    const LatticeState tw = translate(wpsi, deltas[i]);
    const LatticeState wt = step(kind, translate(psi, deltas[i]));
    worst = std::max(worst, (tw.amplitudes - wt.amplitudes).norm());
  }
  return worst;
}

}  // namespace weyl

#include "weyl/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace weyl {

namespace {

const std::array<Vector3, 4> kGenerators = {
    Vector3(1, 1, 1), Vector3(1, -1, -1), Vector3(-1, 1, -1), Vector3(-1, -1, 1)};

}  // namespace

Vector3 LatticeVector::cartesian() const {
  return coefficients.x() * kGenerators[0] + coefficients.y() * kGenerators[1] +
         coefficients.z() * kGenerators[2];
}

std::array<Vector3, 4> positive_generators() { return kGenerators; }

std::array<Vector3, 8> generators() {
  std::array<Vector3, 8> out;
  for (int i = 0; i < 4; ++i) {
    out[i] = kGenerators[i];
    out[i + 4] = -kGenerators[i];
  }
  return out;
}

std::array<Eigen::Vector3i, 8> generator_coefficients() {
  std::array<Eigen::Vector3i, 8> out;
  const std::array<Eigen::Vector3i, 4> pos = {
      Eigen::Vector3i(1, 0, 0), Eigen::Vector3i(0, 1, 0), Eigen::Vector3i(0, 0, 1),
      Eigen::Vector3i(-1, -1, -1)};
  for (int i = 0; i < 4; ++i) {
    out[i] = pos[i];
    out[i + 4] = -pos[i];
  }
  return out;
}

std::array<Vector3, 3> dual_basis() {
  return {Vector3(0.5, 0.5, 0.0), Vector3(0.5, 0.0, -0.5), Vector3(0.0, 0.5, -0.5)};
}

bool in_brillouin(const Vector3& k) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      if (std::abs(k[i] + k[j]) > kPi) return false;
      if (std::abs(k[i] - k[j]) > kPi) return false;
    }
  return true;
}

Vector3 wrap_to_zone(const Vector3& k) {
  // The zone is the Voronoi cell of the reciprocal lattice generated by
  // 2*pi*hhat_j (an FCC lattice); subtract the nearest lattice point.
  const auto dual = dual_basis();
  std::array<Real, 3> c;
  for (int j = 0; j < 3; ++j) c[j] = kGenerators[j].dot(k) / (2 * kPi);
  Vector3 best = k;
  Real best_norm2 = -1;
  for (int d1 = -1; d1 <= 1; ++d1)
    for (int d2 = -1; d2 <= 1; ++d2)
      for (int d3 = -1; d3 <= 1; ++d3) {
        const Vector3 g = 2 * kPi *
                          ((std::round(c[0]) + d1) * dual[0] +
                           (std::round(c[1]) + d2) * dual[1] +
                           (std::round(c[2]) + d3) * dual[2]);
        const Vector3 cand = k - g;
        const Real n2 = cand.squaredNorm();
        if (best_norm2 < 0 || n2 < best_norm2 - 1e-12 ||
            (n2 < best_norm2 + 1e-12 && !in_brillouin(best) && in_brillouin(cand))) {
          best = cand;
          best_norm2 = n2;
        }
      }
  return best;
}

PeriodicGrid::PeriodicGrid(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("PeriodicGrid: N must be positive");
  dft_.resize(n, n);
  const Real scale = 1.0 / std::sqrt(static_cast<Real>(n));
  for (int a = 0; a < n; ++a) {
    const Real kappa = -kPi + 2 * kPi * a / n;
    for (int m = 0; m < n; ++m)
      dft_(a, m) = scale * std::exp(Complex(0, -kappa * m));
  }
}

Eigen::Index PeriodicGrid::site_index(int m1, int m2, int m3) const {
  auto mod = [this](int m) { return ((m % n_) + n_) % n_; };
  return (static_cast<Eigen::Index>(mod(m1)) * n_ + mod(m2)) * n_ + mod(m3);
}

Eigen::Vector3i PeriodicGrid::site_coefficients(Eigen::Index idx) const {
  const int m3 = static_cast<int>(idx % n_);
  const int m2 = static_cast<int>((idx / n_) % n_);
  const int m1 = static_cast<int>(idx / (static_cast<Eigen::Index>(n_) * n_));
  return {m1, m2, m3};
}

Vector3 PeriodicGrid::momentum_coefficients(Eigen::Index idx) const {
  const Eigen::Vector3i m = site_coefficients(idx);
  return {-kPi + 2 * kPi * m.x() / n_, -kPi + 2 * kPi * m.y() / n_,
          -kPi + 2 * kPi * m.z() / n_};
}

Vector3 PeriodicGrid::momentum_cartesian(Eigen::Index idx) const {
  const Vector3 kappa = momentum_coefficients(idx);
  const auto dual = dual_basis();
  return kappa.x() * dual[0] + kappa.y() * dual[1] + kappa.z() * dual[2];
}

Vector3 PeriodicGrid::site_cartesian(Eigen::Index idx) const {
  const Eigen::Vector3i m = site_coefficients(idx);
  return LatticeVector{m}.cartesian();
}

Eigen::MatrixXcd PeriodicGrid::axis_transform(const Eigen::MatrixXcd& state,
                                              bool forward) const {
  const Eigen::Index n = n_;
  const Eigen::Index plane = n * n;
  Eigen::MatrixXcd out(state.rows(), state.cols());
  const Eigen::MatrixXcd mat = forward ? dft_ : Eigen::MatrixXcd(dft_.adjoint());
  // Transform the slowest (first) axis; callers permute axes between passes.
  for (Eigen::Index block = 0; block < plane; ++block) {
    for (Eigen::Index s = 0; s < state.cols(); ++s) {
      Eigen::VectorXcd line(n);
      for (Eigen::Index a = 0; a < n; ++a) line(a) = state(a * plane + block, s);
      line = mat * line;
      for (Eigen::Index a = 0; a < n; ++a) out(a * plane + block, s) = line(a);
    }
  }
  return out;
}

namespace {

// Cyclic axis permutation (m1,m2,m3) -> (m2,m3,m1) on flat indices.
Eigen::MatrixXcd rotate_axes(const Eigen::MatrixXcd& state, Eigen::Index n) {
  const Eigen::Index plane = n * n;
  Eigen::MatrixXcd out(state.rows(), state.cols());
  for (Eigen::Index m1 = 0; m1 < n; ++m1)
    for (Eigen::Index m2 = 0; m2 < n; ++m2)
      for (Eigen::Index m3 = 0; m3 < n; ++m3)
        out.row((m2 * n + m3) * n + m1) = state.row((m1 * n + m2) * n + m3);
  return out;
}

}  // namespace

Eigen::MatrixXcd PeriodicGrid::fourier_forward(const Eigen::MatrixXcd& state) const {
  if (state.rows() != sites() || state.cols() != 2)
    throw std::invalid_argument("fourier_forward: state must have shape (N^3, 2)");
  Eigen::MatrixXcd cur = state;
  for (int pass = 0; pass < 3; ++pass)
    cur = rotate_axes(axis_transform(cur, true), n_);
  return cur;
}

Eigen::MatrixXcd PeriodicGrid::fourier_inverse(const Eigen::MatrixXcd& state) const {
  if (state.rows() != sites() || state.cols() != 2)
    throw std::invalid_argument("fourier_inverse: state must have shape (N^3, 2)");
  Eigen::MatrixXcd cur = state;
  for (int pass = 0; pass < 3; ++pass)
    cur = rotate_axes(axis_transform(cur, false), n_);
  return cur;
}

}  // namespace weyl

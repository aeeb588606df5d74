#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "weyl/verify.hpp"
#include "weyl/walk.hpp"

using namespace weyl;

namespace {

constexpr WalkKind kKinds[] = {WalkKind::APlus, WalkKind::AMinus,
                               WalkKind::BPlus, WalkKind::BMinus};

}  // namespace

TEST_CASE("kind names round trip") {
  for (WalkKind kind : kKinds) CHECK(walk_kind_from_string(to_string(kind)) == kind);
  CHECK_THROWS(walk_kind_from_string("C+"));
}

TEST_CASE("coin table") {
  const CoinSet aplus = coin_set(WalkKind::APlus);
  const CoinSet aminus = coin_set(WalkKind::AMinus);
  // Reconciled zeta families: A+ uses (1-i)/4 (the unique assignment for
  // which the coin sum reproduces the product-form matrix).
  CHECK(aplus.zeta == Complex(0.25, -0.25));
  CHECK(aminus.zeta == Complex(0.25, 0.25));

  // Coin at h1 for A+: [[zeta*, 0], [zeta*, 0]].
  Matrix2c want;
  want << std::conj(aplus.zeta), 0, std::conj(aplus.zeta), 0;
  CHECK((aplus.coins[0] - want).norm() == 0);

  // Coin at -h4 for A-: [[0, zeta], [0, zeta]].
  want << 0, aminus.zeta, 0, aminus.zeta;
  CHECK((aminus.coins[7] - want).norm() == 0);

  // B coins are entrywise transposes of the A coins.
  const CoinSet bplus = coin_set(WalkKind::BPlus);
  for (int i = 0; i < 8; ++i)
    CHECK((bplus.coins[i] - aplus.coins[i].transpose()).norm() == 0);

  for (WalkKind kind : kKinds) {
    const CoinSet set = coin_set(kind);
    Matrix2c left = Matrix2c::Zero(), right = Matrix2c::Zero();
    for (const Matrix2c& c : set.coins) {
      CHECK(Eigen::JacobiSVD<Matrix2c>(c).singularValues()(1) <= 1e-15);  // rank 1
      left += c.adjoint() * c;
      right += c * c.adjoint();
    }
    CHECK((left - Matrix2c::Identity()).norm() <= 1e-14);
    CHECK((right - Matrix2c::Identity()).norm() <= 1e-14);
  }
}

TEST_CASE("walk matrix special points") {
  CHECK((walk_matrix(WalkKind::APlus, {0, 0, 0}) - Matrix2c::Identity()).norm() <=
        1e-15);
  CHECK((walk_matrix(WalkKind::APlus, {kPi, 0, 0}) + Matrix2c::Identity()).norm() <=
        1e-12);
}

TEST_CASE("three-way equality and unitarity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Vector3 k = random_in_zone(rng);
    for (WalkKind kind : kKinds) {
      const Matrix2c w = walk_matrix(kind, k);
      CHECK((w.adjoint() * w - Matrix2c::Identity()).norm() <= 1e-12);
      CHECK((w - walk_matrix_coin_sum(kind, k)).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK((w - walk_matrix_closed_form(kind, k)).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK(std::abs(lambda_of_kind(kind, k) * lambda_of_kind(kind, k) +
                     n_of_kind(kind, k).squaredNorm() - 1) <= 1e-13);
    }
  }
}

TEST_CASE("coin mutation is caught by the equality sweep") {
  CoinSet set = coin_set(WalkKind::APlus);
  CHECK(coin_sum_mismatch(WalkKind::APlus, set, 200, 99) <= 1e-12);
  set.coins[2](0, 1) = -set.coins[2](0, 1);  // inject a sign error
  CHECK(coin_sum_mismatch(WalkKind::APlus, set, 200, 99) > 1e-3);
}

TEST_CASE("dispersion") {
  const Dispersion d0 = dispersion({0, 0, 0});
  CHECK(d0.lambda == 1.0);
  CHECK(d0.n.norm() == 0.0);
  CHECK(d0.omega_plus == 0.0);

  for (Real kx : {0.1, 0.7, 1.9, 3.0}) {
    const Dispersion d = dispersion({kx, 0, 0});
    CHECK(d.lambda == doctest::Approx(std::cos(kx)).epsilon(1e-14));
    CHECK((d.n - Vector3(std::sin(kx), 0, 0)).norm() <= 1e-14);
    CHECK(d.omega_plus == doctest::Approx(kx).epsilon(1e-12));
  }

  const Dispersion d1 = dispersion({kPi / 2, kPi / 2, kPi / 2});
  CHECK(d1.lambda == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(d1.n.norm() <= 1e-12);
  CHECK(d1.omega_plus == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("eigen spinors") {
  const EigenSolution plus = eigen_spinor(WalkKind::APlus, {0.3, 0, 0}, +1);
  CHECK(plus.omega == doctest::Approx(0.3).epsilon(1e-12));
  CHECK((plus.psi - Spinor(1, 1) / std::sqrt(2.0)).norm() <= 1e-12);

  const EigenSolution minus = eigen_spinor(WalkKind::APlus, {0.3, 0, 0}, -1);
  CHECK(minus.omega == doctest::Approx(-0.3).epsilon(1e-12));
  CHECK((minus.psi - Spinor(1, -1) / std::sqrt(2.0)).norm() <= 1e-12);

  const EigenSolution center = eigen_spinor(WalkKind::APlus, {0, 0, 0}, +1);
  CHECK(center.omega == 0.0);
  CHECK((center.psi - Spinor(1, 0)).norm() == 0);

  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const Vector3 k = random_in_zone(rng);
    for (WalkKind kind : kKinds)
      for (int branch : {+1, -1}) {
        const EigenSolution sol = eigen_spinor(kind, k, branch);
        CHECK(std::abs(sol.psi.norm() - 1) <= 1e-12);
        const Matrix2c w = walk_matrix(kind, k);
        CHECK((w * sol.psi - std::exp(Complex(0, -sol.omega)) * sol.psi).norm() <=
              1e-10);
      }
  }
  CHECK_THROWS(eigen_spinor(WalkKind::APlus, {0.1, 0, 0}, 2));
}

TEST_CASE("step") {
  const PeriodicGrid grid(6);
  std::mt19937_64 rng(13);
  std::normal_distribution<Real> gauss;

  SUBCASE("eigen plane wave picks up e^{-i omega}") {
    const Eigen::Index target = grid.site_index(4, 2, 1);
    const Vector3 kappa = grid.momentum_coefficients(target);
    const Vector3 k = grid.momentum_cartesian(target);
    const EigenSolution sol = eigen_spinor(WalkKind::APlus, k, +1);
    LatticeState psi{&grid, Eigen::MatrixXcd(grid.sites(), 2)};
    for (Eigen::Index i = 0; i < grid.sites(); ++i) {
      const Eigen::Vector3i m = grid.site_coefficients(i);
      psi.amplitudes.row(i) = std::exp(Complex(0, kappa.dot(m.cast<Real>()))) *
                              sol.psi.transpose() /
                              std::sqrt(static_cast<Real>(grid.sites()));
    }
    const LatticeState next = step(WalkKind::APlus, psi);
    CHECK((next.amplitudes - std::exp(Complex(0, -sol.omega)) * psi.amplitudes)
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
  }

  SUBCASE("norm preservation and momentum-space equivalence") {
    LatticeState psi{&grid, Eigen::MatrixXcd(grid.sites(), 2)};
    for (Eigen::Index i = 0; i < grid.sites(); ++i)
      for (int s = 0; s < 2; ++s)
        psi.amplitudes(i, s) = Complex(gauss(rng), gauss(rng));
    psi.amplitudes /= psi.amplitudes.norm();

    const LatticeState next = step(WalkKind::BMinus, psi);
    CHECK(std::abs(next.amplitudes.norm() - 1) <= 1e-12);

    Eigen::MatrixXcd hat = grid.fourier_forward(psi.amplitudes);
    for (Eigen::Index i = 0; i < grid.sites(); ++i) {
      const Matrix2c w = walk_matrix(WalkKind::BMinus, grid.momentum_cartesian(i));
      hat.row(i) = (w * hat.row(i).transpose()).transpose();
    }
    const Eigen::MatrixXcd back = grid.fourier_inverse(hat);
    CHECK((back - next.amplitudes).cwiseAbs().maxCoeff() <= 1e-10);
  }

  SUBCASE("size mismatch throws") {
    LatticeState bad{&grid, Eigen::MatrixXcd::Zero(10, 2)};
    CHECK_THROWS(step(WalkKind::APlus, bad));
  }
}

TEST_CASE("translation covariance") {
  const PeriodicGrid small(8);
  CHECK(translation_covariance_check(WalkKind::APlus, small) <= 1e-12);
  CHECK(translation_covariance_check(WalkKind::BMinus, small) <= 1e-12);
  const PeriodicGrid larger(16);
  CHECK(translation_covariance_check(WalkKind::APlus, larger) <= 1e-12);
}

TEST_CASE("weyl limit and doubling cones") {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<Real> u(-1, 1);
  for (int i = 0; i < 200; ++i) {
    Vector3 q(u(rng), u(rng), u(rng));
    q *= 0.1 / std::max(1.0, q.norm() * 10);  // |q| <= 0.1
    if (q.norm() < 1e-4) continue;
    const Matrix2c w = walk_matrix(WalkKind::APlus, q);
    const Matrix2c lin = Matrix2c::Identity() - Complex(0, 1) * pauli_dot(q);
    CHECK(Eigen::JacobiSVD<Matrix2c>(w - lin).singularValues()(0) <=
          q.squaredNorm());
    CHECK(std::abs(dispersion(q).omega_plus / q.norm() - 1) <= q.norm());

    for (const Vector3& k0 :
         {Vector3(0, 0, 0), Vector3(kPi / 2, kPi / 2, kPi / 2),
          Vector3(-kPi / 2, -kPi / 2, -kPi / 2), Vector3(kPi, 0, 0)}) {
      const Real w0 = dispersion(k0).omega_plus;
      const Real wq = dispersion(k0 + q).omega_plus;
      CHECK(std::abs(wq - std::abs(w0 - q.norm())) <= q.squaredNorm());
    }
  }
}

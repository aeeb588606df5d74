#include "weyl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <json.hpp>

#include "weyl/symmetry.hpp"

namespace weyl {

namespace {

long long scaled(Real scale, long long count) {
  return std::max<long long>(1, static_cast<long long>(count * scale));
}

std::uniform_real_distribution<Real> unit_dist(-1.0, 1.0);

Vector3 random_cube(std::mt19937_64& rng, Real half_side) {
  return {half_side * unit_dist(rng), half_side * unit_dist(rng),
          half_side * unit_dist(rng)};
}

Vector3 random_unit(std::mt19937_64& rng) {
  while (true) {
    const Vector3 v = random_cube(rng, 1.0);
    const Real n = v.norm();
    if (n > 1e-3 && n <= 1) return v / n;
  }
}

SpinorTransform random_sl2(std::mt19937_64& rng, Real max_rapidity = 1.0) {
  std::uniform_real_distribution<Real> angle(0.0, 2 * kPi);
  const SpinorTransform r = rotation(random_unit(rng), angle(rng));
  const SpinorTransform b = boost(random_unit(rng), max_rapidity * unit_dist(rng));
  return b * r;
}

constexpr WalkKind kAllKinds[] = {WalkKind::APlus, WalkKind::AMinus,
                                  WalkKind::BPlus, WalkKind::BMinus};

// Independent high-order oracle for the 1/b integral: composite 16-point
// Gauss-Legendre on a fixed fine partition (no shared code with the
// adaptive Simpson used by f_prime).
Real oracle_b_integral(Real r, Real theta, Real phi, int panels = 512) {
  static const Real x16[] = {
      -0.9894009349916499, -0.9445750230732326, -0.8656312023878318,
      -0.7554044083550030, -0.6178762444026438, -0.4580167776572274,
      -0.2816035507792589, -0.0950125098376374, 0.0950125098376374,
      0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
      0.7554044083550030,  0.8656312023878318,  0.9445750230732326,
      0.9894009349916499};
  static const Real w16[] = {
      0.0271524594117541, 0.0622535239386479, 0.0951585116824928,
      0.1246289712555339, 0.1495959888165767, 0.1691565193950025,
      0.1826034150449236, 0.1894506104550685, 0.1894506104550685,
      0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
      0.1246289712555339, 0.0951585116824928, 0.0622535239386479,
      0.0271524594117541};
  const Real c2p = std::cos(2 * phi);
  const Real c4 = c2p * c2p;
  const Real ct = std::cos(theta), sp = std::sin(phi);
  const Real w = 1 - ct * ct * sp * sp;
  Real total = 0;
  const Real h = r / panels;
  for (int p = 0; p < panels; ++p) {
    const Real mid = (p + 0.5) * h;
    for (int i = 0; i < 16; ++i) {
      const Real s = mid + 0.5 * h * x16[i];
      const Real q = 0.5 - s * s * w;
      total += 0.5 * h * w16[i] / (c4 + q * q);
    }
  }
  return total;
}

Real oracle_f_prime(const Vector3& m) {
  const BallPoint p = BallPoint::from_cartesian(m);
  if (p.r == 0) return 1;
  return 1 + p.r * (std::atanh(p.r) + oracle_b_integral(p.r, p.theta, p.phi));
}

struct Suite {
  VerifyReport report;

  void add(const std::string& name, Real max_error, Real tolerance,
           long long samples) {
    const bool ok = max_error <= tolerance;
    report.checks.push_back({name, ok, max_error, samples, tolerance});
    if (!ok) report.pass = false;
  }
};

}  // namespace

Vector3 random_in_zone(std::mt19937_64& rng) {
  while (true) {
    const Vector3 k = random_cube(rng, kPi);
    if (in_brillouin(k)) return k;
  }
}

Vector3 random_in_region(std::mt19937_64& rng, Region region) {
  while (true) {
    const Vector3 k = random_in_zone(rng);
    const auto r = region_of(k);
    if (r && *r == region) return k;
  }
}

OnShellPoint random_on_shell(std::mt19937_64& rng, Region region) {
  return {random_in_region(rng, region), unit_dist(rng) >= 0 ? +1 : -1, region};
}

Vector3 random_in_H(std::mt19937_64& rng) {
  while (true) {
    const Vector3 m = random_cube(rng, 1.0);
    if (m.squaredNorm() < 1 && in_H(m)) return m;
  }
}

Real coin_sum_mismatch(WalkKind kind, const CoinSet& coins, int samples,
                       unsigned seed) {
  std::mt19937_64 rng(seed);
  const auto hops = generators();
  Real worst = 0;
  for (int i = 0; i < samples; ++i) {
    const Vector3 k = random_in_zone(rng);
    Matrix2c sum = Matrix2c::Zero();
    for (int j = 0; j < 8; ++j)
      sum += std::exp(Complex(0, -k.dot(hops[j]))) * coins.coins[j];
    worst = std::max(worst, (sum - walk_matrix(kind, k)).cwiseAbs().maxCoeff());
  }
  return worst;
}

namespace {

void lattice_checks(Suite& s, std::mt19937_64& rng, Real scale) {
  {
    std::uniform_int_distribution<int> coeff(-20, 20);
    const long long n = scaled(scale, 1000);
    Real worst = 0;
    for (long long i = 0; i < n; ++i) {
      const LatticeVector v{{coeff(rng), coeff(rng), coeff(rng)}};
      const Vector3 c = v.cartesian();
      const int p0 = static_cast<int>(std::llround(c.x())) & 1;
      for (int j = 1; j < 3; ++j)
        if ((static_cast<int>(std::llround(c[j])) & 1) != p0) worst = 1;
    }
    s.add("lattice.parity", worst, 0.0, n);
  }
  {
    const auto dual = dual_basis();
    const auto gen = positive_generators();
    Real worst = 0;
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l)
        worst = std::max(worst,
                         std::abs(dual[j].dot(gen[l]) - (j == l ? 1.0 : 0.0)));
    s.add("lattice.dual_biorthogonality", worst, 0.0, 9);
  }
  {
    const long long n = scaled(scale, 1000000);
    long long inside = 0;
    for (long long i = 0; i < n; ++i)
      if (in_brillouin(random_cube(rng, kPi))) ++inside;
    const Real frac = static_cast<Real>(inside) / n;
    // The rhombic dodecahedron fills exactly 1/4 of the bounding cube;
    // 1% of that at the full 1e6 samples, widened as 1/sqrt(n) below scale 1.
    const Real tol = 0.0025 * std::max(1.0, 1.0 / std::sqrt(scale));
    s.add("lattice.zone_volume_mc", std::abs(frac - 0.25), tol, n);
  }
  {
    const PeriodicGrid grid(8);
    std::normal_distribution<Real> gauss;
    Eigen::MatrixXcd state(grid.sites(), 2);
    for (Eigen::Index i = 0; i < grid.sites(); ++i)
      for (int c = 0; c < 2; ++c) state(i, c) = Complex(gauss(rng), gauss(rng));
    state /= std::sqrt(state.squaredNorm());
    const Eigen::MatrixXcd back = grid.fourier_inverse(grid.fourier_forward(state));
    const Real rt = (back - state).cwiseAbs().maxCoeff();
    const Real norm_drift =
        std::abs(grid.fourier_forward(state).norm() - state.norm());
    s.add("lattice.fourier_round_trip", std::max(rt, norm_drift), 1e-12,
          grid.sites());
  }
}

void walk_checks(Suite& s, std::mt19937_64& rng, Real scale) {
  const long long n_unitarity = scaled(scale, 10000);
  Real unit_err = 0, lam_err = 0, equal_err = 0;
  for (long long i = 0; i < n_unitarity; ++i) {
    const Vector3 k = random_in_zone(rng);
    for (WalkKind kind : kAllKinds) {
      const Matrix2c w = walk_matrix(kind, k);
      unit_err = std::max(
          unit_err, (w.adjoint() * w - Matrix2c::Identity()).norm());
      const Real lam = lambda_of_kind(kind, k);
      lam_err = std::max(
          lam_err,
          std::abs(lam * lam + n_of_kind(kind, k).squaredNorm() - 1));
      equal_err = std::max(
          equal_err, (w - walk_matrix_closed_form(kind, k)).cwiseAbs().maxCoeff());
      equal_err = std::max(
          equal_err, (w - walk_matrix_coin_sum(kind, k)).cwiseAbs().maxCoeff());
    }
  }
  s.add("walk.unitarity", unit_err, 1e-12, n_unitarity * 4);
  s.add("walk.lambda_n_identity", lam_err, 1e-13, n_unitarity * 4);
  s.add("walk.three_way_equality", equal_err, 1e-12, n_unitarity * 4);

  {
    const long long n = scaled(scale, 1000);
    Real worst = 0;
    for (long long i = 0; i < n; ++i) {
      const Vector3 k = random_in_zone(rng);
      for (WalkKind kind : kAllKinds)
        for (int branch : {+1, -1}) {
          const EigenSolution sol = eigen_spinor(kind, k, branch);
          const Matrix2c w = walk_matrix(kind, k);
          worst = std::max(
              worst,
              (w * sol.psi - std::exp(Complex(0, -sol.omega)) * sol.psi).norm());
        }
    }
    s.add("walk.spectrum", worst, 1e-10, n * 8);
  }
  {
    const long long n = scaled(scale, 1000);
    Real worst_mat = 0, worst_disp = 0;
    for (long long i = 0; i < n; ++i) {
      const Vector3 q = 0.1 * random_unit(rng) * std::abs(unit_dist(rng));
      if (q.norm() < 1e-6) continue;
      const Matrix2c w = walk_matrix(WalkKind::APlus, q);
      const Matrix2c lin =
          Matrix2c::Identity() - Complex(0, 1) * pauli_dot(q);
      const Eigen::JacobiSVD<Matrix2c> svd(w - lin);
      worst_mat = std::max(
          worst_mat, svd.singularValues()(0) / q.squaredNorm());
      const Real eps = dispersion(q).omega_plus / q.norm() - 1;
      worst_disp = std::max(worst_disp, std::abs(eps) / q.norm());
    }
    s.add("walk.weyl_limit_matrix", worst_mat, 1.0, n);
    s.add("walk.weyl_limit_dispersion", worst_disp, 1.0, n);
  }
  {
    const long long n = scaled(scale, 1000);
    Real worst = 0;
    for (const DoublingPoint& dp : doubling_points()) {
      const Real w0 = dispersion(dp.k).omega_plus;
      for (long long i = 0; i < n; ++i) {
        const Vector3 q = 0.1 * random_unit(rng) * std::abs(unit_dist(rng));
        if (q.norm() < 1e-6) continue;
        const Real w = dispersion(dp.k + q).omega_plus;
        worst = std::max(worst,
                         std::abs(w - std::abs(w0 - q.norm())) / q.squaredNorm());
      }
    }
    s.add("walk.doubling_cones", worst, 1.0, n * 4);
  }
  {
    Real worst = 0;
    const PeriodicGrid grid(8);
    for (WalkKind kind : kAllKinds)
      worst = std::max(worst, translation_covariance_check(kind, grid));
    s.add("walk.translation_covariance", worst, 1e-12, 4);
  }
}

void geometry_checks(Suite& s, std::mt19937_64& rng, Real scale) {
  {
    const long long n = scaled(scale, 100000);
    Real worst = 0;
    for (long long i = 0; i < n; ++i) {
      const Vector3 k = random_in_zone(rng);
      const Real lam = lambda_of(k);
      const Vector3 m = n_of(k);
      const Real s2x = std::sin(2 * k.x()), c2x = std::cos(2 * k.x());
      const Real s2y = std::sin(2 * k.y()), c2y = std::cos(2 * k.y());
      const Real s2z = std::sin(2 * k.z()), c2z = std::cos(2 * k.z());
      const Real ids[] = {
          2 * (lam * m.x() - m.y() * m.z()) - s2x * c2y,
          2 * (lam * m.z() - m.y() * m.x()) - s2z * c2y,
          1 - 2 * (m.x() * m.x() + m.y() * m.y()) - c2y * c2x,
          1 - 2 * (m.z() * m.z() + m.y() * m.y()) - c2y * c2z,
          2 * (lam * m.y() + m.x() * m.z()) - s2y};
      for (Real e : ids) worst = std::max(worst, std::abs(e));
      worst = std::max(worst, std::abs(lam * lam - 1 + m.squaredNorm()));
    }
    s.add("geometry.invfun_identities", worst, 1e-12, n);
  }
  {
    const long long n = scaled(scale, 1000);
    Real worst = 0;
    for (long long i = 0; i < n; ++i) {
      // cos(2 k_y) = 0 plane
      Vector3 k(0.5 * unit_dist(rng), (unit_dist(rng) > 0 ? 1 : -1) * kPi / 4,
                0.5 * unit_dist(rng));
      worst = std::max(worst, std::abs(jacobian_det(k)));
      // lambda = 0 surface: pick kx, ky, solve for kz
      const Real kx = 0.6 * unit_dist(rng), ky = 0.6 * unit_dist(rng);
      const Real kz = std::atan2(std::cos(kx) * std::cos(ky),
                                 std::sin(kx) * std::sin(ky));
      const Vector3 k2 = wrap_to_zone(Vector3(kx, ky, kz));
      worst = std::max(worst, std::abs(jacobian_det(k2)));
    }
    s.add("geometry.jacobian_vanishes_on_singular", worst, 1e-12, 2 * n);
  }
  {
    const long long n = scaled(scale, 1000);
    const Real h = 1e-5;
    Real worst = 0;
    for (long long i = 0; i < n; ++i) {
      const Vector3 k = random_in_zone(rng);
      Matrix3 jac;
      for (int a = 0; a < 3; ++a) {
        Vector3 kp = k, km = k;
        kp[a] += h;
        km[a] -= h;
        jac.row(a) = ((n_of(kp) - n_of(km)) / (2 * h)).transpose();
      }
      worst = std::max(worst, std::abs(jac.determinant() - jacobian_det(k)));
    }
    s.add("geometry.jacobian_fd", worst, 1e-6, n);
  }
  {
    const long long n = scaled(scale, 10000);
    Real worst = 0;
    for (Region region : {Region::B0, Region::B1, Region::B2, Region::B3})
      for (long long i = 0; i < n; ++i) {
        const Vector3 k = random_in_region(rng, region);
        worst = std::max(worst, (n_inverse(n_of(k), region) - k).norm());
      }
    s.add("geometry.inverse_round_trip", worst, 1e-9, 4 * n);
  }
  {
    const long long n = scaled(scale, 1000);
    Real worst = 0;
    for (Region region : {Region::B0, Region::B1, Region::B2, Region::B3})
      for (long long i = 0; i < n; ++i) {
        const Vector3 m = random_in_H(rng);
        worst = std::max(worst, (n_of(n_inverse(m, region)) - m).norm());
      }
    s.add("geometry.forward_round_trip", worst, 1e-9, 4 * n);
  }
  {
    const long long n = scaled(scale, 1000000);
    long long excluded = 0;
    for (long long i = 0; i < n; ++i)
      if (!region_of(random_in_zone(rng))) ++excluded;
    s.add("geometry.region_partition_excluded_fraction",
          static_cast<Real>(excluded) / n, 0.01, n);
  }
}

void rescaling_checks(Suite& s, std::mt19937_64& rng, Real scale) {
  s.add("rescaling.f_prime_center", std::abs(f_prime(Vector3::Zero()) - 1), 0.0,
        1);
  {
    const long long n = scaled(scale, 1000);
    Real worst = 0;
    for (long long i = 0; i < n; ++i) {
      const Vector3 m = random_in_H(rng);
      const Real got = f_prime(m), want = oracle_f_prime(m);
      worst = std::max(worst, std::abs(got - want) / std::abs(want));
    }
    s.add("rescaling.f_prime_oracle", worst, 1e-8, n);
  }
  {
    Real worst = 0;
    for (Real r = 0.05; r < 1.0; r += 0.05) {
      const Real closed = 1 + r * std::atanh(r) + 0.8 * r * r;
      worst = std::max(worst, std::abs(f_prime(r * Vector3::UnitZ()) - closed));
    }
    s.add("rescaling.zray_closed_form", worst, 1e-10, 19);
  }
  {
    const long long n = scaled(scale, 1000);
    Real worst = 0;  // 1 if any non-increasing pair found
    for (long long i = 0; i < n; ++i) {
      const Vector3 u = random_unit(rng);
      const Real rm = r_max(u);
      Real prev = 0;
      for (int j = 1; j <= 50; ++j) {
        const Real r = rm * j / 51.0;
        const Real val = r * f_prime(r * u);
        if (val <= prev) worst = 1;
        prev = val;
      }
    }
    s.add("rescaling.radial_monotonicity", worst, 0.0, n * 50);
  }
  {
    // Divergence is polynomial only on the singular-plane rays (the flaps of
    // Sigma'); generic rays diverge logarithmically at the sphere.
    const long long n = scaled(scale, 100);
    Real min_val = 1e300;
    std::uniform_real_distribution<Real> theta_dist(-kPi / 2, kPi / 2);
    for (long long i = 0; i < n; ++i) {
      Real theta, w;
      do {
        theta = theta_dist(rng);
        const Real ct = std::cos(theta);
        w = 1 - ct * ct * 0.5;  // phi = pi/4 plane
      } while (w <= 0.5001);
      const Vector3 u(std::cos(theta) / std::sqrt(2.0), std::sin(theta),
                      std::cos(theta) / std::sqrt(2.0));
      const Real rm = r_max(u.normalized());
      const Real r = rm * (1 - 1e-6);
      min_val = std::min(min_val, r * f_prime(r * u.normalized()));
    }
    s.add("rescaling.radial_divergence",
          min_val > 1e3 ? 0.0 : 1.0, 0.0, n);
  }
  {
    const long long n = scaled(scale, 300);
    Real worst = 0;
    for (long long i = 0; i < n; ++i) {
      const Vector3 u = random_unit(rng);
      const Real r = 0.95 * r_max(u) * std::abs(unit_dist(rng));
      const Real rho = r * f_prime(r * u);
      worst = std::max(worst, std::abs(radial_invert(rho, u) - r));
    }
    s.add("rescaling.radial_round_trip", worst, 1e-10, n);
  }
  {
    const long long n = scaled(scale, 1000);
    Real worst = 0;
    for (Region region : {Region::B0, Region::B1, Region::B2, Region::B3})
      for (long long i = 0; i < n; ++i) {
        const OnShellPoint x = random_on_shell(rng, region);
        const OnShellPoint back = dmap_inverse(dmap(x), region);
        worst = std::max(worst, (back.k - x.k).norm());
        worst = std::max(worst, std::abs(back.omega() - x.omega()));
      }
    s.add("rescaling.dmap_round_trip", worst, 1e-8, 4 * n);
  }
}

void symmetry_checks(Suite& s, std::mt19937_64& rng, Real scale) {
  const Matrix4 metric = Vector4(1, -1, -1, -1).asDiagonal();
  {
    const long long n = scaled(scale, 1000);
    Real worst_null = 0, worst_lorentz = 0;
    for (long long i = 0; i < n; ++i) {
      const SpinorTransform lam = random_sl2(rng);
      const Matrix4 l = vector_rep(lam);
      worst_lorentz = std::max(
          worst_lorentz, (l.transpose() * metric * l - metric).cwiseAbs().maxCoeff());
      worst_lorentz = std::max(worst_lorentz, std::abs(l.determinant() - 1));
      const Vector3 p = random_cube(rng, 2.0);
      const Vector4 null(p.norm(), p.x(), p.y(), p.z());
      const Vector4 out = l * null;
      worst_null = std::max(
          worst_null, std::abs(out[0] * out[0] - out.tail<3>().squaredNorm()) /
                          (1 + out.tail<3>().squaredNorm()));
    }
    s.add("symmetry.lorentz_matrix", worst_lorentz, 1e-10, n);
    s.add("symmetry.null_cone_preserved", worst_null, 1e-10, n);
  }
  {
    const long long n = scaled(scale, 1000);
    Real worst = 0;
    for (long long i = 0; i < n; ++i) {
      const SpinorTransform lam = random_sl2(rng);
      for (bool right : {true, false}) {
        const SpinorPair mm = spinor_pair(lam, right);
        const Region region = right ? Region::B0 : Region::B3;
        const FourMomentum p = dmap(random_on_shell(rng, region));
        const SpinorTransform vlam = right ? lam : SpinorTransform(lam.adjoint().inverse());
        const Vector4 pp = vector_rep(vlam) * p.as_vector();
        const Matrix2c lhs = sigma_contract(pp[0], pp.tail<3>());
        const Matrix2c rhs =
            mm.m_tilde * sigma_contract(p.p0, p.p) * mm.m.inverse();
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    }
    s.add("symmetry.changeref_residual", worst, 1e-8, 2 * n);
  }
  {
    const long long n = scaled(scale, 100);
    Real worst = 0;
    for (long long i = 0; i < n; ++i) {
      const SpinorTransform l1 = random_sl2(rng, 0.5);
      const SpinorTransform l2 = random_sl2(rng, 0.5);
      OnShellPoint x = random_on_shell(rng, Region::B0);
      // keep the chained image comfortably inside H
      if (n_of(x.k).norm() > 0.6) {
        --i;
        continue;
      }
      const OnShellPoint a = deformed_apply(l2, deformed_apply(l1, x));
      const OnShellPoint b = deformed_apply(SpinorTransform(l2 * l1), x);
      worst = std::max(worst, (a.k - b.k).norm());
      worst = std::max(worst, std::abs(a.omega() - b.omega()));
    }
    s.add("symmetry.deformed_homomorphism", worst, 1e-8, n);
  }
  {
    const long long n = scaled(scale, 100);
    Real worst = 0;
    const std::pair<bool, bool> swaps[] = {
        {true, false}, {false, true}, {true, true}};
    for (long long i = 0; i < n; ++i) {
      for (const auto& [swap02, swap13] : swaps) {
        const FrameChange fc = region_permutation(swap02, swap13);
        const Region region = swap02 ? Region::B0 : Region::B1;
        const OnShellPoint x = random_on_shell(rng, region);
        const Solution sol{x, x.solution_spinor()};
        const Solution once = frame_change_apply(fc, sol);
        const Solution twice = frame_change_apply(fc, once);
        if (once.x.region == x.region) worst = std::max(worst, 1.0);
        worst = std::max(worst, (twice.x.k - x.k).norm());
      }
    }
    s.add("symmetry.region_permutation_involution", worst, 1e-9, 3 * n);
  }
  {
    const long long n = scaled(scale, 10);
    Real worst = 0;
    for (long long i = 0; i < n; ++i) {
      const SpinorTransform lam = random_sl2(rng, 0.8);
      const Matrix4 l = vector_rep(lam);
      const Vector3 dir = random_unit(rng);
      auto dev = [&](Real kn) {
        const Vector3 k = kn * dir;
        const OnShellPoint x{k, +1, Region::B0};
        const OnShellPoint xp = deformed_apply(lam, x);
        const Vector4 lin = l * Vector4(dispersion(k).omega_plus, k.x(), k.y(), k.z());
        const Vector4 def(xp.omega(), xp.k.x(), xp.k.y(), xp.k.z());
        return (def - lin).norm();
      };
      const Real d1 = dev(0.05), d2 = dev(0.025);
      if (d2 < 1e-14) continue;
      const Real order = std::log2(d1 / d2);
      worst = std::max(worst, std::abs(order - 2));
    }
    s.add("symmetry.small_k_linearity_order", worst, 0.25, n);
  }
  {
    const long long n = scaled(scale, 10);
    const Real h = 1e-3;
    Real worst = 0;
    for (long long i = 0; i < n; ++i) {
      const SpinorTransform lam = random_sl2(rng, 0.8);
      const Matrix4 l = vector_rep(lam);
      // The map has a conical |k| dependence at the origin (the p0 column of
      // L couples to it), so a plain central difference is only O(h)
      // accurate; one Richardson step removes the linear error term.
      auto central = [&](int a, Real step) {
        Vector3 kp = Vector3::Zero(), km = Vector3::Zero();
        kp[a] = step;
        km[a] = -step;
        const Vector3 fp = deformed_apply(lam, {kp, +1, Region::B0}).k;
        const Vector3 fm = deformed_apply(lam, {km, +1, Region::B0}).k;
        return Vector3((fp - fm) / (2 * step));
      };
      Matrix3 jac;
      for (int a = 0; a < 3; ++a)
        jac.col(a) = 2 * central(a, h / 2) - central(a, h);
      worst = std::max(
          worst, (jac - l.bottomRightCorner<3, 3>()).cwiseAbs().maxCoeff());
    }
    s.add("symmetry.origin_jacobian", worst, 1e-5, n);
  }
  {
    const long long n = scaled(scale, 100);
    Real worst = 0;
    for (long long i = 0; i < n; ++i) {
      std::uniform_real_distribution<Real> eta(-1.0, 1.0);
      const FrameChange fc = lorentz_frame_change(boost(random_unit(rng), eta(rng)));
      OnShellPoint x = random_on_shell(rng, Region::B0);
      if (n_of(x.k).norm() > 0.7) {
        --i;
        continue;
      }
      const Solution out = frame_change_apply(fc, {x, x.solution_spinor()});
      const FourMomentum pp = dmap(out.x);
      worst = std::max(
          worst, (sigma_contract(pp.p0, pp.p) * out.psi).norm() / out.psi.norm());
    }
    s.add("symmetry.frame_change_solution_residual", worst, 1e-7, n);
  }
  {
    // Orbit presets of the figure: on-shell residual, sphericity, anisotropy.
    Real on_shell_worst = 0;
    Real aniso[3] = {0, 0, 0};
    Real sphericity0 = 0;
    const Real presets[3] = {0.07, 0.2, 0.4};
    for (int pi_ = 0; pi_ < 3; ++pi_) {
      const OnShellPoint x0{{presets[pi_], 0, 0}, +1, Region::B0};
      const auto pts = orbit(x0, OrbitGenerator::FullSO3, Vector3::UnitZ(), 200);
      Real kmin = 1e300, kmax = 0, nmin = 1e300, nmax = 0;
      for (const auto& smp : pts) {
        on_shell_worst = std::max(
            on_shell_worst,
            std::abs(std::cos(smp.omega) - lambda_of(smp.k)));
        kmin = std::min(kmin, smp.k.norm());
        kmax = std::max(kmax, smp.k.norm());
        nmin = std::min(nmin, n_of(smp.k).norm());
        nmax = std::max(nmax, n_of(smp.k).norm());
      }
      aniso[pi_] = kmax / kmin;
      // Sphericity is judged against the sphere defined by the invariant
      // f'(n)||n|| = const, i.e. on ||n||: max deviation from the best-fit
      // sphere relative to its radius.
      if (pi_ == 0) sphericity0 = (nmax - nmin) / (nmax + nmin);
    }
    s.add("symmetry.orbit_on_shell", on_shell_worst, 1e-8, 600);
    s.add("symmetry.orbit_small_k_sphericity", sphericity0, 0.01, 200);
    const bool increasing = aniso[0] < aniso[1] && aniso[1] < aniso[2] &&
                            aniso[2] > 1.001;
    s.add("symmetry.orbit_anisotropy_progression", increasing ? 0.0 : 1.0, 0.0,
          600);
  }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
  Suite suite;
  std::mt19937_64 rng(opts.seed);
  lattice_checks(suite, rng, opts.scale);
  walk_checks(suite, rng, opts.scale);
  geometry_checks(suite, rng, opts.scale);
  rescaling_checks(suite, rng, opts.scale);
  symmetry_checks(suite, rng, opts.scale);
  {
    // Coin-sum equality stated once more through the mutation-testable path.
    Real worst = 0;
    for (WalkKind kind : kAllKinds)
      worst = std::max(worst,
                       coin_sum_mismatch(kind, coin_set(kind),
                                         static_cast<int>(scaled(opts.scale, 1000)),
                                         opts.seed + 7));
    suite.add("walk.coin_sum_table", worst, 1e-12,
              4 * scaled(opts.scale, 1000));
  }
  return suite.report;
}

std::string VerifyReport::to_json() const {
  nlohmann::json j;
  j["pass"] = pass;
  j["conventions"] = {{"fourier_sign", fourier_sign},
                      {"zeta_assignment", zeta_assignment},
                      {"sigma_pairing", sigma_pairing},
                      {"eigenphase", eigenphase}};
  j["checks"] = nlohmann::json::array();
  for (const CheckResult& c : checks)
    j["checks"].push_back({{"name", c.name},
                           {"status", c.passed ? "pass" : "fail"},
                           {"max_error", c.max_error},
                           {"samples", c.samples},
                           {"tolerance", c.tolerance}});
  return j.dump(2) + "\n";
}

}  // namespace weyl

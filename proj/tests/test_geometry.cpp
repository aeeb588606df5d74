#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "weyl/geometry.hpp"
#include "weyl/verify.hpp"

using namespace weyl;

namespace {

constexpr Region kRegions[] = {Region::B0, Region::B1, Region::B2, Region::B3};

}  // namespace

TEST_CASE("region labels") {
  for (Region r : kRegions) CHECK(region_from_string(to_string(r)) == r);
  CHECK_THROWS(region_from_string("B4"));
  CHECK(sign_lambda(Region::B0) == +1);
  CHECK(sign_lambda(Region::B3) == -1);
  CHECK(sign_cos2ky(Region::B1) == +1);
  CHECK(sign_cos2ky(Region::B2) == -1);
  CHECK(right_handed(Region::B2));
  CHECK_FALSE(right_handed(Region::B1));
}

TEST_CASE("n and lambda") {
  CHECK(lambda_of({0, 0, 0}) == 1.0);
  CHECK(n_of({0, 0, 0}).norm() == 0.0);
  for (Real ky : {0.3, -1.1, 2.0}) {
    CHECK(lambda_of({0, ky, 0}) == doctest::Approx(std::cos(ky)).epsilon(1e-14));
    CHECK((n_of({0, ky, 0}) - Vector3(0, std::sin(ky), 0)).norm() <= 1e-14);
  }
}

TEST_CASE("jacobian determinant") {
  CHECK(jacobian_det({0, 0, 0}) == 1.0);
  CHECK(std::abs(jacobian_det({0, kPi / 4, 0})) <= 1e-15);

  std::mt19937_64 rng(21);
  const Real h = 1e-5;
  for (int i = 0; i < 100; ++i) {
    const Vector3 k = random_in_zone(rng);
    Matrix3 jac;
    for (int a = 0; a < 3; ++a) {
      Vector3 kp = k, km = k;
      kp[a] += h;
      km[a] -= h;
      jac.row(a) = ((n_of(kp) - n_of(km)) / (2 * h)).transpose();
    }
    CHECK(std::abs(jac.determinant() - jacobian_det(k)) <= 1e-6);
  }
}

TEST_CASE("H and Sigma' membership") {
  CHECK(in_H({0, 0, 0}));
  CHECK_FALSE(in_sigma_prime({0, 0, 0}));

  // On the plane m_x = m_z but with 2 m_x^2 + 2 m_y^2 < 1: still in H.
  const Vector3 near_plane = 0.999 / std::sqrt(2.0) * Vector3(1, 0, 1);
  CHECK(in_H(near_plane));
  CHECK_FALSE(in_sigma_prime(near_plane));

  // On the plane and past the ellipse: removed.
  const Vector3 removed(0.5, 0.6, 0.5);
  CHECK(in_sigma_prime(removed));
  CHECK_FALSE(in_H(removed));

  // Points on the unit sphere or outside are in neither set.
  CHECK_FALSE(in_H({1, 0, 0}));
  CHECK_FALSE(in_sigma_prime({0.8, 0.8, 0.8}));

  // Boundary probe: classification stable under small radial perturbation.
  const Vector3 probe = 0.999 / std::sqrt(1.28) * Vector3(0.8, 0, 0.8);
  for (Real eps : {-1e-9, 0.0, 1e-9}) {
    const Vector3 m = (1 + eps) * probe;
    CHECK(in_H(m));
  }
}

TEST_CASE("ball point spherical convention") {
  const BallPoint p = BallPoint::from_cartesian({0.3, 0.2, -0.1});
  const Vector3 rec(p.r * std::cos(p.theta) * std::cos(p.phi),
                    p.r * std::sin(p.theta),
                    p.r * std::cos(p.theta) * std::sin(p.phi));
  CHECK((rec - Vector3(0.3, 0.2, -0.1)).norm() <= 1e-15);
  CHECK(BallPoint::from_cartesian({0, 0, 0}).phi == 0.0);
  CHECK(BallPoint::from_cartesian({0, 0.4, 0}).phi == 0.0);  // cos(theta) = 0
}

TEST_CASE("region classification") {
  CHECK(region_of({0, 0, 0}) == Region::B0);
  CHECK(region_of({-kPi / 2, -kPi / 2, -kPi / 2}) == Region::B2);
  CHECK(region_of({kPi / 2, kPi / 2, kPi / 2}) == Region::B3);
  CHECK(region_of({kPi, 0, 0}) == Region::B1);
  CHECK_FALSE(region_of({0, kPi / 4, 0}).has_value());  // cos 2k_y = 0
  CHECK_THROWS(region_of({kPi, kPi, 0}));               // outside the zone
}

TEST_CASE("doubling points") {
  const auto pts = doubling_points();
  CHECK(pts[0].k.norm() == 0);
  CHECK(lambda_of(pts[0].k) == 1.0);
  CHECK(lambda_of(pts[1].k) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(lambda_of(pts[2].k) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lambda_of(pts[3].k) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(pts[0].region == Region::B0);
  CHECK(pts[1].region == Region::B3);
  CHECK(pts[2].region == Region::B2);
  CHECK(pts[3].region == Region::B1);
  CHECK(pts[0].right_handed);
  CHECK(pts[2].right_handed);
  CHECK_FALSE(pts[1].right_handed);
  CHECK_FALSE(pts[3].right_handed);
}

TEST_CASE("region centers") {
  for (Region r : kRegions) {
    const Vector3 c = region_center(r);
    CHECK(n_of(c).norm() <= 1e-12);
    CHECK(region_of(c) == r);
  }
}

TEST_CASE("inverse identities") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 2000; ++i) {
    const Vector3 k = random_in_zone(rng);
    const Real lam = lambda_of(k);
    const Vector3 m = n_of(k);
    const Real c2y = std::cos(2 * k.y());
    CHECK(std::abs(2 * (lam * m.y() + m.x() * m.z()) - std::sin(2 * k.y())) <=
          1e-12);
    CHECK(std::abs(2 * (lam * m.x() - m.y() * m.z()) -
                   std::sin(2 * k.x()) * c2y) <= 1e-12);
    CHECK(std::abs(1 - 2 * (m.x() * m.x() + m.y() * m.y()) -
                   std::cos(2 * k.x()) * c2y) <= 1e-12);
    CHECK(std::abs(2 * (lam * m.z() - m.y() * m.x()) -
                   std::sin(2 * k.z()) * c2y) <= 1e-12);
    CHECK(std::abs(1 - 2 * (m.z() * m.z() + m.y() * m.y()) -
                   std::cos(2 * k.z()) * c2y) <= 1e-12);
    CHECK(std::abs(lam * lam - (1 - m.squaredNorm())) <= 1e-12);
  }
}

TEST_CASE("n_inverse") {
  CHECK(n_inverse({0, 0, 0}, Region::B0).norm() == 0);

  const Vector3 k0(0.3, 0.2, 0.1);
  CHECK((n_inverse(n_of(k0), Region::B0) - k0).norm() <= 1e-9);

  std::mt19937_64 rng(23);
  for (Region region : kRegions)
    for (int i = 0; i < 300; ++i) {
      const Vector3 k = random_in_region(rng, region);
      const Vector3 back = n_inverse(n_of(k), region);
      CHECK((back - k).norm() <= 1e-9);
      CHECK(region_of(back) == region);
    }
  for (Region region : kRegions)
    for (int i = 0; i < 100; ++i) {
      const Vector3 m = random_in_H(rng);
      CHECK((n_of(n_inverse(m, region)) - m).norm() <= 1e-9);
    }

  CHECK_THROWS(n_inverse({0.5, 0.6, 0.5}, Region::B0));  // inside Sigma'
  CHECK_THROWS(n_inverse({1.2, 0, 0}, Region::B0));      // outside the ball
}

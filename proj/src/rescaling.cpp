#include "weyl/rescaling.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "weyl/walk.hpp"

namespace weyl {

Real OnShellPoint::omega() const {
  return branch * std::acos(std::clamp(lambda_of(k), -1.0, 1.0));
}

Spinor OnShellPoint::solution_spinor() const {
  return eigen_spinor(WalkKind::APlus, k, branch).psi;
}

namespace {

struct RayShape {
  Real c4;  // cos^2(2 phi)
  Real w;   // 1 - cos^2(theta) sin^2(phi)
};

RayShape ray_shape(Real theta, Real phi) {
  const Real c2p = std::cos(2 * phi);
  const Real ct = std::cos(theta), sp = std::sin(phi);
  return {c2p * c2p, 1 - ct * ct * sp * sp};
}

// int_0^r ds / (c4 + (1/2 - w s^2)^2) in closed form. The denominator
// factors as (alpha - w s^2)(conj(alpha) - w s^2) with alpha = 1/2 - i c,
// c = sqrt(c4), and each factor integrates to atanh; partial fractions give
// Im F(alpha) / c with F(alpha) = atanh(r sqrt(w/alpha)) / sqrt(w alpha).
// For alpha off the real axis the argument of atanh stays clear of its
// branch cuts, so principal branches apply throughout.
Real b_integral(const RayShape& ray, Real r) {
  if (r <= 0) return 0;
  const Real a = 0.5, w = ray.w;
  const Real c = std::sqrt(ray.c4);
  if (w < 1e-30) return r / (ray.c4 + a * a);
  if (c < 1e-150) {
    // Real double pole: int ds / (a - w s^2)^2.
    const Real rt = std::sqrt(w / a);
    return r / (2 * a * (a - w * r * r)) +
           std::atanh(r * rt) / (2 * a * a * rt);
  }
  const Complex alpha(a, -c);
  const Complex beta = std::sqrt(w / alpha);
  const Complex f = std::atanh(r * beta) / (alpha * beta);
  return f.imag() / c;
}

Real f_prime_ray(const RayShape& ray, Real r) {
  if (r <= 0) return 1;
  if (r >= 1) throw std::domain_error("f_prime: radius outside the unit ball");
  return 1 + r * (std::atanh(r) + b_integral(ray, r));
}

}  // namespace

Real f_prime(const Vector3& m) {
  if (!in_H(m)) throw std::domain_error("f_prime: point outside H");
  const BallPoint p = BallPoint::from_cartesian(m);
  return f_prime_ray(ray_shape(p.theta, p.phi), p.r);
}

Real r_max(const Vector3& u) {
  if (std::abs(u.norm() - 1) > 1e-9)
    throw std::invalid_argument("r_max: direction must be unit length");
  const BallPoint p = BallPoint::from_cartesian(u);
  if (std::abs(std::cos(2 * p.phi)) > 1e-14) return 1;
  const Real w = ray_shape(p.theta, p.phi).w;
  if (w <= 0.5) return 1;  // ellipse met at or beyond the sphere
  const Real r0 = std::sqrt(1 / (2 * w));
  return r0 < 1 ? r0 : 1;
}

Real radial_invert(Real rho, const Vector3& u) {
  if (rho < 0) throw std::invalid_argument("radial_invert: rho must be >= 0");
  if (rho == 0) return 0;
  const BallPoint p = BallPoint::from_cartesian(u);
  const RayShape ray = ray_shape(p.theta, p.phi);
  const Real rmax = r_max(u);
  auto g = [&](Real r) { return r * f_prime_ray(ray, r); };

  Real hi = rmax * 0.5;
  int j = 1;
  while (g(hi) < rho) {
    ++j;
    hi = rmax * (1 - std::pow(2.0, -j));
    // The profile diverges at r_max, so the root is bracketed; once the
    // remaining sliver is below the answer tolerance, hi is the answer.
    if (rmax - hi <= 1e-12) return hi;
  }
  Real lo = 0;
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const Real mid = 0.5 * (lo + hi);
    (g(mid) < rho ? lo : hi) = mid;
  }
  if (hi - lo > 1e-12)
    throw std::runtime_error("radial_invert: bisection did not converge");
  return 0.5 * (lo + hi);
}

FourMomentum dmap(const OnShellPoint& x) {
  const Vector3 n = n_of(x.k);
  const Real nn = n.norm();
  if (nn == 0) return {0, Vector3::Zero()};
  const Real f = f_prime(n);
  return {f * x.branch * nn, f * n};
}

OnShellPoint dmap_inverse(const FourMomentum& p, Region region) {
  const Real rho = p.p.norm();
  if (std::abs(p.null_defect()) > 1e-8 * (1 + rho * rho))
    throw std::invalid_argument("dmap_inverse: four-momentum off the null cone");
  if (rho < 1e-300)
    return {region_center(region), p.p0 >= 0 ? +1 : -1, region};
  const Vector3 u = p.p / rho;
  const Real r = radial_invert(rho, u);
  const Vector3 k = n_inverse(r * u, region);
  return {k, p.p0 >= 0 ? +1 : -1, region};
}

}  // namespace weyl

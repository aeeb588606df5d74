#include "weyl/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "weyl/lattice.hpp"
#include "weyl/walk.hpp"

namespace weyl {

std::string to_string(Region r) {
  switch (r) {
    case Region::B0: return "B0";
    case Region::B1: return "B1";
    case Region::B2: return "B2";
    case Region::B3: return "B3";
  }
  return "?";
}

Region region_from_string(const std::string& name) {
  if (name == "B0") return Region::B0;
  if (name == "B1") return Region::B1;
  if (name == "B2") return Region::B2;
  if (name == "B3") return Region::B3;
  throw std::invalid_argument("unknown region: " + name);
}

Real lambda_of(const Vector3& k) { return lambda_of_kind(WalkKind::APlus, k); }
Vector3 n_of(const Vector3& k) { return n_of_kind(WalkKind::APlus, k); }

Real jacobian_det(const Vector3& k) {
  return std::cos(2 * k.y()) * lambda_of(k);
}

BallPoint BallPoint::from_cartesian(const Vector3& m) {
  BallPoint p;
  p.m = m;
  p.r = m.norm();
  if (p.r < 1e-300) {
    p.theta = 0;
    p.phi = 0;
    return p;
  }
  p.theta = std::asin(std::clamp(m.y() / p.r, -1.0, 1.0));
  const Real rc = std::hypot(m.x(), m.z());
  p.phi = rc < 1e-300 ? 0.0 : std::atan2(m.z(), m.x());
  return p;
}

bool in_sigma_prime(const Vector3& m) {
  if (m.squaredNorm() >= 1) return false;
  const bool on_plane = std::abs(m.x() - m.z()) <= kBoundaryEps ||
                        std::abs(m.x() + m.z()) <= kBoundaryEps;
  return on_plane && 2 * m.x() * m.x() + 2 * m.y() * m.y() >= 1 - kBoundaryEps;
}

bool in_H(const Vector3& m) {
  return m.squaredNorm() < 1 && !in_sigma_prime(m);
}

std::optional<Region> region_of(const Vector3& k) {
  if (!in_brillouin(k)) throw std::invalid_argument("region_of: k outside the zone");
  const Real lam = lambda_of(k);
  const Real c2y = std::cos(2 * k.y());
  if (std::abs(lam) < kBoundaryEps || std::abs(c2y) < kBoundaryEps)
    return std::nullopt;
  if (!in_H(n_of(k))) return std::nullopt;
  if (lam > 0) return c2y > 0 ? Region::B0 : Region::B2;
  return c2y > 0 ? Region::B1 : Region::B3;
}

Vector3 n_inverse(const Vector3& m, Region region) {
  if (!in_H(m)) throw std::invalid_argument("n_inverse: m outside H");
  const Real lam = sign_lambda(region) * std::sqrt(std::max(0.0, 1 - m.squaredNorm()));
  const Real s2y = 2 * (lam * m.y() + m.x() * m.z());
  if (std::abs(s2y) >= 1)
    throw std::domain_error("n_inverse: point too close to the singular image");
  const Real c2y = sign_cos2ky(region) * std::sqrt(1 - s2y * s2y);
  const Real s2x = 2 * (lam * m.x() - m.y() * m.z()) / c2y;
  const Real c2x = (1 - 2 * (m.x() * m.x() + m.y() * m.y())) / c2y;
  const Real s2z = 2 * (lam * m.z() - m.y() * m.x()) / c2y;
  const Real c2z = (1 - 2 * (m.z() * m.z() + m.y() * m.y())) / c2y;

  const Vector3 base(std::atan2(s2x, c2x) / 2, std::atan2(s2y, c2y) / 2,
                     std::atan2(s2z, c2z) / 2);
  // Half-angle ambiguity: each component is fixed up to a +-pi shift.
  Vector3 best = base;
  Real best_err = -1;
  for (int dx = -1; dx <= 1; ++dx)
    for (int dy = -1; dy <= 1; ++dy)
      for (int dz = -1; dz <= 1; ++dz) {
        const Vector3 cand(base.x() + dx * kPi, base.y() + dy * kPi,
                           base.z() + dz * kPi);
        if (!in_brillouin(cand)) continue;
        if (sign_lambda(region) * lambda_of(cand) <= 0) continue;
        if (sign_cos2ky(region) * std::cos(2 * cand.y()) <= 0) continue;
        const Real err = (n_of(cand) - m).norm();
        if (best_err < 0 || err < best_err) {
          best = cand;
          best_err = err;
        }
      }
  if (best_err < 0 || best_err > 1e-9)
    throw std::runtime_error("n_inverse: no branch reproduces m (geometry bug)");
  return best;
}

std::array<DoublingPoint, 4> doubling_points() {
  const std::array<Vector3, 4> pts = {
      Vector3(0, 0, 0), Vector3(kPi / 2, kPi / 2, kPi / 2),
      Vector3(-kPi / 2, -kPi / 2, -kPi / 2), Vector3(kPi, 0, 0)};
  std::array<DoublingPoint, 4> out;
  for (int i = 0; i < 4; ++i) {
    const auto r = region_of(pts[i]);
    if (!r) throw std::logic_error("doubling point excluded");
    out[i] = {pts[i], *r, right_handed(*r)};
  }
  return out;
}

Vector3 region_center(Region r) {
  switch (r) {
    case Region::B0: return {0, 0, 0};
    case Region::B1: return {kPi, 0, 0};
    case Region::B2: return {-kPi / 2, -kPi / 2, -kPi / 2};
    case Region::B3: return {kPi / 2, kPi / 2, kPi / 2};
  }
  return {0, 0, 0};
}

}  // namespace weyl

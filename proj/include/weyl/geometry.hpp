#pragma once

#include <array>
#include <optional>
#include <string>

#include "weyl/types.hpp"

namespace weyl {

/// Connected invertibility domain of n(k), one per particle species.
/// Classified by the signs of lambda(k) and cos(2 k_y):
///   B0:(+,+)  B1:(-,+)  B2:(+,-)  B3:(-,-).
/// Same-chirality pairs are {B0,B2} (lambda>0) and {B1,B3} (lambda<0).
enum class Region { B0, B1, B2, B3 };

std::string to_string(Region r);
Region region_from_string(const std::string& name);

constexpr int sign_lambda(Region r) {
  return (r == Region::B0 || r == Region::B2) ? +1 : -1;
}
constexpr int sign_cos2ky(Region r) {
  return (r == Region::B0 || r == Region::B1) ? +1 : -1;
}
/// Right-handed species sit in the lambda>0 regions.
constexpr bool right_handed(Region r) { return sign_lambda(r) > 0; }

inline constexpr Real kBoundaryEps = 1e-12;  // eps_b and eps_g of the spec

/// lambda and n of the (+)-walk; the symmetry analysis is built on these.
Real lambda_of(const Vector3& k);
Vector3 n_of(const Vector3& k);

/// Closed-form Jacobian determinant of n(k): cos(2 k_y) * lambda(k).
Real jacobian_det(const Vector3& k);

/// Point of the open unit ball with the spherical convention of the
/// rescaling profile: m = r (cos(theta)cos(phi), sin(theta), cos(theta)sin(phi)),
/// phi = 0 when m = 0 or cos(theta) = 0.
struct BallPoint {
  Vector3 m;
  Real r, theta, phi;

  static BallPoint from_cartesian(const Vector3& m);
};

/// Sigma' = removed set: near a plane m_x = +-m_z with 2 m_x^2 + 2 m_y^2 >= 1.
bool in_sigma_prime(const Vector3& m);
/// H = open unit ball minus Sigma'.
bool in_H(const Vector3& m);

/// Region classification; nullopt (Excluded) on the measure-zero bands
/// |lambda| < eps, |cos 2k_y| < eps or when n(k) falls outside H.
/// Throws on out-of-zone input.
std::optional<Region> region_of(const Vector3& k);

/// Analytic inverse of n restricted to a region, via the half-angle
/// identities; branch shifts are resolved by exhaustive enumeration plus
/// forward verification.  Throws if m is outside H or no branch reproduces m.
Vector3 n_inverse(const Vector3& m, Region region);

struct DoublingPoint {
  Vector3 k;
  Region region;
  bool right_handed;
};

/// k0=0, k1=pi/2(1,1,1), k2=-pi/2(1,1,1), k3=pi(1,0,0) with computed
/// region assignments (B0, B3, B2, B1 respectively) and chiralities.
std::array<DoublingPoint, 4> doubling_points();

/// Center of a region: the unique k in the region with n(k)=0.
Vector3 region_center(Region r);

}  // namespace weyl

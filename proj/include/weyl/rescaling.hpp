#pragma once

#include "weyl/geometry.hpp"
#include "weyl/types.hpp"

namespace weyl {

/// Four-momentum (p0, p); null when produced by dmap.
struct FourMomentum {
  Real p0;
  Vector3 p;

  Vector4 as_vector() const { return {p0, p.x(), p.y(), p.z()}; }
  static FourMomentum from_vector(const Vector4& v) {
    return {v[0], Vector3(v[1], v[2], v[3])};
  }
  Real null_defect() const { return p0 * p0 - p.squaredNorm(); }
};

/// On-shell walk solution: wave-vector, frequency branch and region.
struct OnShellPoint {
  Vector3 k;
  int branch;  // +-1
  Region region;

  Real omega() const;
  /// Spinor solving p_mu sigma^mu psi = 0 at this point (branch helicity).
  Spinor solution_spinor() const;
};

/// Radial rescaling profile of the dilation diffeomorphism:
///   f'(m) = 1 + r * (atanh(r) + Int_0^r ds / b(s,theta,phi)),
/// the 1/(1-s^2) part in closed form, the 1/b part by adaptive quadrature
/// (relative tolerance 1e-10, absolute floor 1e-14).
/// Throws if m is outside H.
Real f_prime(const Vector3& m);

/// First singular radius along direction u: 1 unless u lies in one of the
/// planes m_x = +-m_z and the ellipse 2m_x^2+2m_y^2=1 is met inside the ball.
Real r_max(const Vector3& u);

/// Unique r in [0, r_max(u)) with r * f'(r u) = rho, by bracketing bisection.
Real radial_invert(Real rho, const Vector3& u);

/// D^(f): on-shell point to null four-momentum p = f'(n) (sin(omega), n).
FourMomentum dmap(const OnShellPoint& x);

/// Inverse diffeomorphism onto the given region.  Requires p near the null
/// cone: |p0^2 - |p|^2| <= 1e-8 (1 + |p|^2).
OnShellPoint dmap_inverse(const FourMomentum& p, Region region);

}  // namespace weyl

#pragma once

#include <array>
#include <vector>

#include "weyl/lattice.hpp"
#include "weyl/rescaling.hpp"
#include "weyl/types.hpp"

namespace weyl {

/// SL(2,C) element acting on the internal spinor space.
using SpinorTransform = Matrix2c;

/// exp(+(eta/2) axis.sigma); one-parameter boost subgroup.
SpinorTransform boost(const Vector3& axis, Real rapidity);
/// exp(-i (alpha/2) axis.sigma); spinor double cover of rotations.
SpinorTransform rotation(const Vector3& axis, Real angle);

/// The unique Lorentz matrix L with C(L p) = Lambda C(p) Lambda^dagger,
/// where C(p) = p_mu sigma^mu = p0 I - p.sigma.  Proper and orthochronous
/// for the exponential parameterization.
Matrix4 vector_rep(const SpinorTransform& lambda);

struct SpinorPair {
  Matrix2c m;        // M
  Matrix2c m_tilde;  // M~
};

/// Right-handed: (M, M~) = ((Lambda^dagger)^-1, Lambda); left-handed swapped.
SpinorPair spinor_pair(const SpinorTransform& lambda, bool right_handed);

/// Deformed Lorentz action D^-1 o L o D on an on-shell point.
OnShellPoint deformed_apply(const SpinorTransform& lambda, const OnShellPoint& x);

/// Region permutation within same-chirality pairs; the group is Z2 x Z2.
struct RegionPermutation {
  bool swap02 = false;  // B0 <-> B2
  bool swap13 = false;  // B1 <-> B3

  Region apply(Region r) const;
};

/// Change of inertial frame: a Lorentz part, a region permutation and a
/// translation phase field a(omega,k) = -(omega*t + k.y), all over the
/// single global profile f.
struct FrameChange {
  SpinorTransform lambda = SpinorTransform::Identity();
  bool right_handed = true;
  RegionPermutation perm;
  long long t = 0;              // time steps for the phase field
  Vector3 y = Vector3::Zero();  // lattice translation (Cartesian)

  Real phase(const OnShellPoint& x) const;
  SpinorPair spinors() const;
  /// The spinor transform whose vector_rep moves four-momenta, given the
  /// chirality (left-handed uses (Lambda^dagger)^-1).
  SpinorTransform effective_lambda() const;
};

FrameChange identity_frame_change();
FrameChange lorentz_frame_change(const SpinorTransform& lambda,
                                 bool right_handed = true);
/// Throws if a requested swap pairs regions of different chirality
/// (cannot happen for the two admissible swaps; guard kept for the
/// explicit pairing interface).
FrameChange region_permutation(bool swap02, bool swap13);
FrameChange translation_phase(long long t, const LatticeVector& y);

struct Solution {
  OnShellPoint x;
  Spinor psi;
};

/// Transform an eigenvalue-equation solution: x' via the deformed action and
/// region permutation, psi' = e^{i a} M psi.
Solution frame_change_apply(const FrameChange& fc, const Solution& sol);

/// Composition acting as fc2 after fc1 (single global profile).
FrameChange compose(const FrameChange& fc2, const FrameChange& fc1);

enum class OrbitGenerator { RotationsAboutAxis, BoostsAlongAxis, FullSO3 };

struct OrbitSample {
  Vector3 axis;
  Real angle;  // rotation angle or rapidity
  Vector3 k;
  Real omega;
};

/// Orbit of an on-shell point under a sampled subgroup.  SO(3) sampling uses
/// deterministic Fibonacci-sphere axes with uniform angles; boosts sample
/// rapidities uniformly in [-2, 2].
std::vector<OrbitSample> orbit(const OnShellPoint& x0, OrbitGenerator gen,
                               const Vector3& axis, int samples);

}  // namespace weyl

#include "weyl/symmetry.hpp"

#include <cmath>
#include <stdexcept>

#include "weyl/walk.hpp"

namespace weyl {

SpinorTransform boost(const Vector3& axis, Real rapidity) {
  if (std::abs(axis.norm() - 1) > 1e-9)
    throw std::invalid_argument("boost: axis must be unit length");
  return std::cosh(rapidity / 2) * Matrix2c::Identity() +
         std::sinh(rapidity / 2) * pauli_dot(axis);
}

SpinorTransform rotation(const Vector3& axis, Real angle) {
  if (std::abs(axis.norm() - 1) > 1e-9)
    throw std::invalid_argument("rotation: axis must be unit length");
  return std::cos(angle / 2) * Matrix2c::Identity() -
         Complex(0, std::sin(angle / 2)) * pauli_dot(axis);
}

Matrix4 vector_rep(const SpinorTransform& lambda) {
  Matrix4 out;
  for (int nu = 0; nu < 4; ++nu) {
    Vector4 e = Vector4::Zero();
    e[nu] = 1;
    const FourMomentum p = FourMomentum::from_vector(e);
    const Matrix2c x = lambda * sigma_contract(p.p0, p.p) * lambda.adjoint();
    out(0, nu) = 0.5 * std::real(x(0, 0) + x(1, 1));
    out(1, nu) = -0.5 * std::real(x(0, 1) + x(1, 0));
    out(2, nu) = -0.5 * std::real(Complex(0, 1) * (x(0, 1) - x(1, 0)));
    out(3, nu) = -0.5 * std::real(x(0, 0) - x(1, 1));
  }
  return out;
}

SpinorPair spinor_pair(const SpinorTransform& lambda, bool right_handed) {
  const Matrix2c inv_adj = lambda.adjoint().inverse();
  if (right_handed) return {inv_adj, lambda};
  return {lambda, inv_adj};
}

OnShellPoint deformed_apply(const SpinorTransform& lambda, const OnShellPoint& x) {
  const Matrix4 l = vector_rep(lambda);
  if (l(0, 0) < 0.5)
    throw std::invalid_argument("deformed_apply: non-orthochronous transform");
  const Vector4 p = l * dmap(x).as_vector();
  return dmap_inverse(FourMomentum::from_vector(p), x.region);
}

Region RegionPermutation::apply(Region r) const {
  if (swap02 && r == Region::B0) return Region::B2;
  if (swap02 && r == Region::B2) return Region::B0;
  if (swap13 && r == Region::B1) return Region::B3;
  if (swap13 && r == Region::B3) return Region::B1;
  return r;
}

Real FrameChange::phase(const OnShellPoint& x) const {
  return wrap_angle(-(x.omega() * t + x.k.dot(y)));
}

SpinorTransform FrameChange::effective_lambda() const {
  return right_handed ? lambda : SpinorTransform(lambda.adjoint().inverse());
}

SpinorPair FrameChange::spinors() const { return spinor_pair(lambda, right_handed); }

FrameChange identity_frame_change() { return {}; }

FrameChange lorentz_frame_change(const SpinorTransform& lambda, bool right_handed) {
  FrameChange fc;
  fc.lambda = lambda;
  fc.right_handed = right_handed;
  return fc;
}

FrameChange region_permutation(bool swap02, bool swap13) {
  // Admissible swaps pair equal sign_lambda regions by construction.
  if (swap02 && sign_lambda(Region::B0) != sign_lambda(Region::B2))
    throw std::invalid_argument("region_permutation: chirality mismatch");
  if (swap13 && sign_lambda(Region::B1) != sign_lambda(Region::B3))
    throw std::invalid_argument("region_permutation: chirality mismatch");
  FrameChange fc;
  fc.perm = {swap02, swap13};
  return fc;
}

FrameChange translation_phase(long long t, const LatticeVector& y) {
  FrameChange fc;
  fc.t = t;
  fc.y = y.cartesian();
  return fc;
}

Solution frame_change_apply(const FrameChange& fc, const Solution& sol) {
  OnShellPoint x = sol.x;
  const Real a = fc.phase(sol.x);
  if (fc.perm.swap02 || fc.perm.swap13) {
    const Region target = fc.perm.apply(x.region);
    if (target != x.region) x = {n_inverse(n_of(x.k), target), x.branch, target};
  }
  if (!fc.lambda.isIdentity(1e-15)) x = deformed_apply(fc.effective_lambda(), x);
  const SpinorPair mm = fc.spinors();
  return {x, Spinor(std::exp(Complex(0, a)) * (mm.m * sol.psi))};
}

FrameChange compose(const FrameChange& fc2, const FrameChange& fc1) {
  FrameChange out;
  if (fc1.right_handed != fc2.right_handed)
    throw std::invalid_argument("compose: chirality mismatch");
  out.right_handed = fc1.right_handed;
  out.lambda = fc2.lambda * fc1.lambda;
  out.perm.swap02 = fc1.perm.swap02 != fc2.perm.swap02;
  out.perm.swap13 = fc1.perm.swap13 != fc2.perm.swap13;
  out.t = fc1.t + fc2.t;
  out.y = fc1.y + fc2.y;
  return out;
}

namespace {

Vector3 fibonacci_axis(int i, int count) {
  // Deterministic Fibonacci sphere.
  const Real golden = (1 + std::sqrt(5.0)) / 2;
  const Real z = 1 - 2.0 * (i + 0.5) / count;
  const Real rho = std::sqrt(std::max(0.0, 1 - z * z));
  const Real phi = 2 * kPi * std::fmod(i / golden, 1.0);
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

}  // namespace

std::vector<OrbitSample> orbit(const OnShellPoint& x0, OrbitGenerator gen,
                               const Vector3& axis, int samples) {
  std::vector<OrbitSample> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    OrbitSample s;
    switch (gen) {
      case OrbitGenerator::RotationsAboutAxis:
        s.axis = axis.normalized();
        s.angle = 2 * kPi * i / samples;
        break;
      case OrbitGenerator::BoostsAlongAxis:
        s.axis = axis.normalized();
        s.angle = samples == 1 ? 0.0 : -2.0 + 4.0 * i / (samples - 1);
        break;
      case OrbitGenerator::FullSO3:
        s.axis = fibonacci_axis(i, samples);
        s.angle = 2 * kPi * std::fmod(i * 0.61803398874989484820, 1.0);
        break;
    }
    const SpinorTransform lam = gen == OrbitGenerator::BoostsAlongAxis
                                    ? boost(s.axis, s.angle)
                                    : rotation(s.axis, s.angle);
    const OnShellPoint x = deformed_apply(lam, x0);
    s.k = x.k;
    s.omega = x.omega();
    out.push_back(s);
  }
  return out;
}

}  // namespace weyl

// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "weyl/runs.hpp"
#include "weyl/verify.hpp"
#include "weyl/walk.hpp"

using namespace weyl;

namespace {

int failures = 0;

void report(int idx, const char* what, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s  %s (%s)\n", idx, ok ? "PASS" : "FAIL", what,
              detail.c_str());
  if (!ok) ++failures;
}

const CheckResult* find(const VerifyReport& rep, const std::string& name) {
  for (const CheckResult& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

// Criterion built from named checks of the verification suite; the suite's
// sample counts at scale 1 are the criterion's counts.
void from_checks(const VerifyReport& rep, int idx, const char* what,
                 const std::vector<std::string>& names) {
  bool ok = true;
  std::ostringstream detail;
  for (size_t i = 0; i < names.size(); ++i) {
    const CheckResult* c = find(rep, names[i]);
    if (!c) {
      ok = false;
      detail << names[i] << " missing";
      continue;
    }
    ok = ok && c->passed;
    if (i) detail << "; ";
    detail << c->name << " err " << c->max_error << " tol " << c->tolerance;
  }
  report(idx, what, ok, detail.str());
}

void wavepacket_criterion() {
  const Vector3 kbar(0.3, 0, 0);
  RunConfig cfg;
  cfg.size = 32;
  cfg.steps = 50;
  cfg.sigma = 0.05;
  cfg.k0 = kbar;
  cfg.out = "acceptance_evolve.csv";
  run_evolve(cfg);

  std::ifstream in(cfg.out);
  std::string line;
  std::getline(in, line);  // header
  std::vector<Vector3> mean;
  Real worst_norm = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string cell;
    Real v[5];
    for (double& x : v) {
      std::getline(row, cell, ',');
      x = std::stod(cell);
    }
    mean.emplace_back(v[1], v[2], v[3]);
    worst_norm = std::max(worst_norm, v[4]);
  }

  bool ok = mean.size() == 51 && worst_norm <= 1e-10;
  // Drift over the last 40 steps vs the finite-difference group velocity.
  Vector3 velocity = Vector3::Zero(), grad = Vector3::Zero();
  if (ok) {
    velocity = (mean[50] - mean[10]) / 40.0;
    const Real h = 1e-5;
    for (int a = 0; a < 3; ++a) {
      Vector3 kp = kbar, km = kbar;
      kp[a] += h;
      km[a] -= h;
      grad[a] = (dispersion(kp).omega_plus - dispersion(km).omega_plus) / (2 * h);
    }
    ok = (velocity - grad).norm() <= 0.05 * grad.norm();
  }
  std::ostringstream detail;
  detail << "norm drift " << worst_norm << "; velocity (" << velocity.x() << ","
         << velocity.y() << "," << velocity.z() << ") vs grad (" << grad.x()
         << "," << grad.y() << "," << grad.z() << ")";
  report(10, "wavepacket kinematics", ok, detail.str());
}

}  // namespace

int main() {
  VerifyOptions opts;
  const VerifyReport rep = run_verify(opts);

  from_checks(rep, 1, "unitarity & construction equivalence",
              {"walk.unitarity", "walk.three_way_equality"});
  from_checks(rep, 2, "dispersion & conic doubling bound",
              {"walk.spectrum", "walk.weyl_limit_dispersion",
               "walk.doubling_cones"});
  from_checks(rep, 3, "closed-form vs finite-difference jacobian",
              {"geometry.jacobian_fd"});
  from_checks(rep, 4, "inversion identities & round trip",
              {"geometry.invfun_identities", "geometry.inverse_round_trip"});
  from_checks(rep, 5, "rescaling profile",
              {"rescaling.f_prime_center", "rescaling.f_prime_oracle",
               "rescaling.zray_closed_form", "rescaling.radial_divergence"});
  from_checks(rep, 6, "null-shell diffeomorphism round trips",
              {"rescaling.dmap_round_trip"});
  from_checks(rep, 7, "group structure",
              {"symmetry.changeref_residual", "symmetry.deformed_homomorphism",
               "symmetry.region_permutation_involution"});
  from_checks(rep, 8, "linear recovery at small k",
              {"symmetry.small_k_linearity_order"});
  from_checks(rep, 9, "orbit figure reproduction",
              {"symmetry.orbit_on_shell", "symmetry.orbit_small_k_sphericity",
               "symmetry.orbit_anisotropy_progression"});
  wavepacket_criterion();

  std::printf("%s\n", failures == 0 ? "ACCEPTANCE: all criteria passed"
                                    : "ACCEPTANCE: criteria failed");
  return failures == 0 ? 0 : 1;
}

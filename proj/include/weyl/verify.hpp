#pragma once

#include <random>
#include <string>
#include <vector>

#include "weyl/geometry.hpp"
#include "weyl/rescaling.hpp"
#include "weyl/types.hpp"
#include "weyl/walk.hpp"

namespace weyl {

struct CheckResult {
  std::string name;
  bool passed;
  Real max_error;
  long long samples;
  Real tolerance;
};

struct VerifyOptions {
  unsigned seed = 1;
  /// Multiplies the spec sample counts (tests use < 1 for speed).
  Real scale = 1.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool pass = true;

  // Convention record (see the decisions in walk.hpp).
  std::string fourier_sign = "exp(-i k.h)";
  std::string zeta_assignment = "A(+-)/B(+-): zeta = (1 -+ i)/4";
  std::string sigma_pairing = "(sigma_x, +-sigma_y, sigma_z)";
  std::string eigenphase = "W_k psi = exp(-i omega) psi";

  std::string to_json() const;
};

VerifyReport run_verify(const VerifyOptions& opts);

/// Max |coin-sum - walk_matrix| over random in-zone k for an arbitrary coin
/// table (exposed so a corrupted table can be checked by mutation tests).
Real coin_sum_mismatch(WalkKind kind, const CoinSet& coins, int samples,
                       unsigned seed);

/// Uniform sample of the Brillouin zone (rejection from the bounding cube).
Vector3 random_in_zone(std::mt19937_64& rng);
/// Uniform in-zone sample conditioned on a region (rejection).
Vector3 random_in_region(std::mt19937_64& rng, Region region);
OnShellPoint random_on_shell(std::mt19937_64& rng, Region region);
/// Uniform sample of H (rejection from the unit ball).
Vector3 random_in_H(std::mt19937_64& rng);

}  // namespace weyl

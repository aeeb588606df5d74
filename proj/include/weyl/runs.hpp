#pragma once

#include <optional>
#include <string>

#include "weyl/geometry.hpp"
#include "weyl/types.hpp"
#include "weyl/walk.hpp"

namespace weyl {

/// Configuration of one CLI run; serializable to a key=value document.
struct RunConfig {
  std::string command = "dispersion";
  WalkKind walk = WalkKind::APlus;
  int grid = 16;                  // dispersion sweep resolution per axis
  std::optional<Vector3> k0;      // orbit base point (presets when unset)
  int samples = 200;              // orbit samples
  std::string generator = "so3";  // so3 | rotations | boosts
  int steps = 50;                 // evolution steps
  int size = 32;                  // evolution grid N
  Real sigma = 0.05;              // packet momentum width
  int branch = +1;
  Region region = Region::B0;
  std::string out = "out.csv";
  unsigned seed = 1;
  int threads = 1;

  std::string to_kv() const;
  static RunConfig from_kv(const std::string& text);
};

/// Dispersion sweep over a grid^3 momentum grid, wrapped to the zone.
/// Rows: kx,ky,kz,lambda,nx,ny,nz,omega_plus,region  (region EX if excluded).
void run_dispersion(const RunConfig& cfg);

/// Orbit export, rows: sample,ax,ay,az,angle,kx,ky,kz,omega; one trailing
/// comment line per orbit with the anisotropy ratio max|k|/min|k|.
/// Runs the three presets k_x in {0.07, 0.2, 0.4} when cfg.k0 is unset.
void run_orbit(const RunConfig& cfg);

/// Gaussian-packet evolution, rows: step,mean_x,mean_y,mean_z,norm_error.
/// Packet centered at cfg.k0 (default (0.3,0,0)) with width cfg.sigma.
void run_evolve(const RunConfig& cfg);

/// Full verification suite; writes the JSON report to cfg.out.
/// Returns true when every check passed.
bool run_verify_to_file(const RunConfig& cfg);

}  // namespace weyl

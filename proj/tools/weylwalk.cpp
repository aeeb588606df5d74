#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weyl/runs.hpp"

namespace {

void add_common(CLI::App* sub, weyl::RunConfig& cfg, std::vector<double>& k0) {
  std::string walk = "A+", region = "B0";
  sub->add_option("--walk", walk, "Walk kind: A+, A-, B+ or B-")
      ->check(CLI::IsMember({"A+", "A-", "B+", "B-"}))
      ->each([&cfg](const std::string& v) { cfg.walk = weyl::walk_kind_from_string(v); });
  sub->add_option("--grid", cfg.grid, "Momentum sweep resolution per axis");
  sub->add_option("--k0", k0, "Base wave-vector kx ky kz")->expected(3);
  sub->add_option("--samples", cfg.samples, "Orbit sample count");
  sub->add_option("--steps", cfg.steps, "Evolution steps");
  sub->add_option("--size", cfg.size, "Evolution grid size N");
  sub->add_option("--sigma", cfg.sigma, "Packet momentum width");
  sub->add_option("--branch", cfg.branch, "Frequency branch, +1 or -1")
      ->check(CLI::IsMember({1, -1}));
  sub->add_option("--region", region, "Region label B0..B3")
      ->check(CLI::IsMember({"B0", "B1", "B2", "B3"}))
      ->each([&cfg](const std::string& v) { cfg.region = weyl::region_from_string(v); });
  sub->add_option("--out", cfg.out, "Output file path");
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--threads", cfg.threads, "Worker threads (1 = bitwise reproducible)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl walk on the BCC lattice: dispersion, orbits, evolution, checks"};
  app.require_subcommand(1);

  weyl::RunConfig cfg;
  std::vector<double> k0;
  auto* dispersion = app.add_subcommand("dispersion", "Export the dispersion sweep");
  auto* orbit = app.add_subcommand("orbit", "Export symmetry orbits of a wave-vector");
  auto* evolve = app.add_subcommand("evolve", "Evolve a Gaussian packet and export moments");
  auto* verify = app.add_subcommand("verify", "Run the verification suite, write JSON report");
  for (auto* sub : {dispersion, orbit, evolve, verify}) add_common(sub, cfg, k0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (k0.size() == 3) cfg.k0 = weyl::Vector3(k0[0], k0[1], k0[2]);

  try {
    if (dispersion->parsed()) {
      cfg.command = "dispersion";
      if (cfg.out == "out.csv") cfg.out = "dispersion.csv";
      weyl::run_dispersion(cfg);
    } else if (orbit->parsed()) {
      cfg.command = "orbit";
      if (cfg.out == "out.csv") cfg.out = "orbit.csv";
      weyl::run_orbit(cfg);
    } else if (evolve->parsed()) {
      cfg.command = "evolve";
      if (cfg.out == "out.csv") cfg.out = "evolve.csv";
      weyl::run_evolve(cfg);
    } else {
      cfg.command = "verify";
      if (cfg.out == "out.csv") cfg.out = "verify.json";
      if (!weyl::run_verify_to_file(cfg)) {
        std::fprintf(stderr, "verification failed; see %s\n", cfg.out.c_str());
        return 1;
      }
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}

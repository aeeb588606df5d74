#include "weyl/runs.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "weyl/lattice.hpp"
#include "weyl/rescaling.hpp"
#include "weyl/symmetry.hpp"
#include "weyl/verify.hpp"

namespace weyl {

namespace {

std::string fmt(Real x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // fixed \n endings everywhere
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

OrbitGenerator generator_from_string(const std::string& name) {
  if (name == "so3") return OrbitGenerator::FullSO3;
  if (name == "rotations") return OrbitGenerator::RotationsAboutAxis;
  if (name == "boosts") return OrbitGenerator::BoostsAlongAxis;
  throw std::invalid_argument("unknown orbit generator: " + name);
}

}  // namespace

std::string RunConfig::to_kv() const {
  std::ostringstream out;
  out << "command = " << command << "\n";
  out << "walk = " << to_string(walk) << "\n";
  out << "grid = " << grid << "\n";
  if (k0)
    out << "k0 = " << fmt(k0->x()) << " " << fmt(k0->y()) << " "
        << fmt(k0->z()) << "\n";
  else
    out << "k0 = none\n";
  out << "samples = " << samples << "\n";
  out << "generator = " << generator << "\n";
  out << "steps = " << steps << "\n";
  out << "size = " << size << "\n";
  out << "sigma = " << fmt(sigma) << "\n";
  out << "branch = " << branch << "\n";
  out << "region = " << to_string(region) << "\n";
  out << "out = " << this->out << "\n";
  out << "seed = " << seed << "\n";
  out << "threads = " << threads << "\n";
  return out.str();
}

RunConfig RunConfig::from_kv(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) continue;
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 3);
    if (key == "command") cfg.command = value;
    else if (key == "walk") cfg.walk = walk_kind_from_string(value);
    else if (key == "grid") cfg.grid = std::stoi(value);
    else if (key == "k0") {
      if (value == "none") cfg.k0.reset();
      else {
        std::istringstream v(value);
        Vector3 k;
        v >> k.x() >> k.y() >> k.z();
        if (!v) throw std::invalid_argument("bad k0 value: " + value);
        cfg.k0 = k;
      }
    } else if (key == "samples") cfg.samples = std::stoi(value);
    else if (key == "generator") cfg.generator = value;
    else if (key == "steps") cfg.steps = std::stoi(value);
    else if (key == "size") cfg.size = std::stoi(value);
    else if (key == "sigma") cfg.sigma = std::stod(value);
    else if (key == "branch") cfg.branch = std::stoi(value);
    else if (key == "region") cfg.region = region_from_string(value);
    else if (key == "out") cfg.out = value;
    else if (key == "seed") cfg.seed = static_cast<unsigned>(std::stoul(value));
    else if (key == "threads") cfg.threads = std::stoi(value);
    else throw std::invalid_argument("unknown config key: " + key);
  }
  return cfg;
}

void run_dispersion(const RunConfig& cfg) {
  if (cfg.grid < 2) throw std::invalid_argument("dispersion: grid must be >= 2");
  const auto dual = dual_basis();
  std::ofstream out = open_out(cfg.out);
  out << "kx,ky,kz,lambda,nx,ny,nz,omega_plus,region\n";
  for (int a = 0; a < cfg.grid; ++a)
    for (int b = 0; b < cfg.grid; ++b)
      for (int c = 0; c < cfg.grid; ++c) {
        const Vector3 kappa(-kPi + 2 * kPi * a / cfg.grid,
                            -kPi + 2 * kPi * b / cfg.grid,
                            -kPi + 2 * kPi * c / cfg.grid);
        const Vector3 k = wrap_to_zone(kappa.x() * dual[0] +
                                       kappa.y() * dual[1] +
                                       kappa.z() * dual[2]);
        const Dispersion d = dispersion(k);
        const auto region = region_of(k);
        out << fmt(k.x()) << ',' << fmt(k.y()) << ',' << fmt(k.z()) << ','
            << fmt(d.lambda) << ',' << fmt(d.n.x()) << ',' << fmt(d.n.y())
            << ',' << fmt(d.n.z()) << ',' << fmt(d.omega_plus) << ','
            << (region ? to_string(*region) : std::string("EX")) << "\n";
      }
}

void run_orbit(const RunConfig& cfg) {
  std::vector<Vector3> bases;
  if (cfg.k0)
    bases.push_back(*cfg.k0);
  else
    for (Real kx : {0.07, 0.2, 0.4}) bases.emplace_back(kx, 0, 0);

  std::ofstream out = open_out(cfg.out);
  out << "sample,ax,ay,az,angle,kx,ky,kz,omega\n";
  long long sample = 0;
  for (const Vector3& k0 : bases) {
    const auto region = region_of(wrap_to_zone(k0));
    if (!region)
      throw std::invalid_argument("orbit: base wave-vector in excluded region");
    if (*region != cfg.region)
      throw std::invalid_argument("orbit: base wave-vector not in region " +
                                  to_string(cfg.region));
    const OnShellPoint x0{wrap_to_zone(k0), cfg.branch, *region};
    const auto pts = orbit(x0, generator_from_string(cfg.generator),
                           Vector3::UnitZ(), cfg.samples);
    Real kmin = 1e300, kmax = 0;
    for (const OrbitSample& s : pts) {
      out << sample++ << ',' << fmt(s.axis.x()) << ',' << fmt(s.axis.y())
          << ',' << fmt(s.axis.z()) << ',' << fmt(s.angle) << ','
          << fmt(s.k.x()) << ',' << fmt(s.k.y()) << ',' << fmt(s.k.z()) << ','
          << fmt(s.omega) << "\n";
      kmin = std::min(kmin, s.k.norm());
      kmax = std::max(kmax, s.k.norm());
    }
    out << "# k0=" << fmt(k0.x()) << " " << fmt(k0.y()) << " " << fmt(k0.z())
        << " anisotropy=" << fmt(kmax / kmin) << "\n";
  }
}

void run_evolve(const RunConfig& cfg) {
  if (cfg.size < 8) throw std::invalid_argument("evolve: grid size must be >= 8");
  // With sigma N < 1 the nearest off-peak mode carries weight exp(-pi^2/
  // (sigma N)^2) < 5e-5 and the sampled packet degenerates to a plane wave.
  if (cfg.sigma * cfg.size < 1)
    throw std::invalid_argument("evolve: packet narrower than one momentum-grid cell");
  const Vector3 kbar = cfg.k0.value_or(Vector3(0.3, 0, 0));

  const PeriodicGrid grid(cfg.size);
  LatticeState state{&grid, Eigen::MatrixXcd::Zero(grid.sites(), 2)};
  for (Eigen::Index i = 0; i < grid.sites(); ++i) {
    const Vector3 k = grid.momentum_cartesian(i);
    const Real d2 = wrap_to_zone(k - kbar).squaredNorm();  // torus distance
    const Real g = std::exp(-d2 / (4 * cfg.sigma * cfg.sigma));
    if (g < 1e-14) continue;
    state.amplitudes.row(i) =
        g * eigen_spinor(cfg.walk, k, cfg.branch).psi.transpose();
  }
  state.amplitudes /= std::sqrt(state.amplitudes.squaredNorm());
  state.amplitudes = grid.fourier_inverse(state.amplitudes);

  const auto gen = positive_generators();
  std::ofstream out = open_out(cfg.out);
  out << "step,mean_x,mean_y,mean_z,norm_error\n";
  Vector3 prev_mu = Vector3::Zero();
  for (int t = 0; t <= cfg.steps; ++t) {
    // Circular mean of each generator coefficient, unwrapped across steps.
    Complex phasors[3] = {0, 0, 0};
    Real norm2 = 0;
    for (Eigen::Index i = 0; i < grid.sites(); ++i) {
      const Real p = state.amplitudes.row(i).squaredNorm();
      norm2 += p;
      const Eigen::Vector3i m = grid.site_coefficients(i);
      for (int j = 0; j < 3; ++j)
        phasors[j] += p * std::exp(Complex(0, 2 * kPi * m[j] / grid.n()));
    }
    Vector3 mu;
    for (int j = 0; j < 3; ++j) {
      Real c = std::arg(phasors[j]) * grid.n() / (2 * kPi);
      c += grid.n() * std::round((prev_mu[j] - c) / grid.n());
      mu[j] = c;
    }
    prev_mu = mu;
    const Vector3 x = mu.x() * gen[0] + mu.y() * gen[1] + mu.z() * gen[2];
    out << t << ',' << fmt(x.x()) << ',' << fmt(x.y()) << ',' << fmt(x.z())
        << ',' << fmt(std::abs(std::sqrt(norm2) - 1)) << "\n";
    if (t < cfg.steps) state = step(cfg.walk, state);
  }
}

bool run_verify_to_file(const RunConfig& cfg) {
  VerifyOptions opts;
  opts.seed = cfg.seed;
  const VerifyReport report = run_verify(opts);
  std::ofstream out = open_out(cfg.out);
  out << report.to_json();
  return report.pass;
}

}  // namespace weyl

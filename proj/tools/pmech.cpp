// pmech — command-line front-end for the H^1 engine.
//
// Subcommands:
//   verify          named property suites -> report.json
//   oscillator      RK4 vs exact rotation -> trajectory.csv + report.json
//   quantize        both wave-operator assemblies -> binaries + report.json
//   correspondence  bracket-vs-Poisson sweep -> correspondence.csv + report.json
//
// Exit codes: 0 all checks pass, 1 check failure, 2 configuration error,
// 3 numerical abort.  Output directory precedence: --out flag, then the
// PMECH_OUTDIR environment variable, then the config key out_dir, then ".".

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pmech/bargmann.hpp"
#include "pmech/common.hpp"
#include "pmech/config.hpp"
#include "pmech/convolution.hpp"
#include "pmech/dynamics.hpp"
#include "pmech/grid.hpp"
#include "pmech/heisenberg.hpp"
#include "pmech/oscillator.hpp"
#include "pmech/pbracket.hpp"
#include "pmech/report.hpp"
#include "pmech/schrodinger.hpp"
#include "pmech/serialize.hpp"
#include "pmech/signals.hpp"

namespace {

using namespace pmech;

constexpr cplx kI{0.0, 1.0};

// --------------------------------------------------------------- tolerances

struct ToleranceEntry {
  const char* name;
  double tol;
};

// Every check name any subcommand can emit, with its default tolerance.
const std::vector<ToleranceEntry>& tolerance_registry() {
  static const std::vector<ToleranceEntry> table{
      // verify: heisenberg
      {"group_axioms_random_triples", 1e-12},
      {"invariant_field_commutator", 1e-7},
      // verify: gridfn
      {"quadrature_separable_gaussian", 1e-10},
      {"fourier_s_parseval", 1e-12},
      {"spectral_derivative_gaussian", 1e-8},
      // verify: convolution
      {"twisted_fast_vs_direct", 1e-8},
      {"convolution_associativity", 1e-7},
      // verify: bracket
      {"antiderivative_mode_agreement", 1e-7},
      {"bracket_antisymmetry", 1e-14},
      {"jacobi_identity", 1e-6},
      {"leibniz_rule", 1e-6},
      // verify: rep
      {"rep_convolution_homomorphism", 1e-3},
      {"rep_assembly_agreement", 1e-6},
      {"classical_pointwise_product", 1e-6},
      {"bracket_commutator_image", 1e-3},
      // oscillator
      {"snapshot_identity", 1e-15},
      {"final_rotation_residual", 1e-5},
      {"transport_worst_residual", 1e-6},
      {"heisenberg_image", 1e-2},
      {"hamilton_image", 1e-2},
      {"transport_alternative", 1e-2},
      {"hamiltonian_conservation", 1e-6},
      // quantize
      {"assembly_agreement", 1e-3},
      // correspondence
      {"correspondence_order_slope", 0.2},
  };
  return table;
}

// Effective tolerances: defaults, overlaid by config keys "tol.<name>",
// overlaid by --tol NAME=VALUE flags.
class TolTable {
 public:
  TolTable(const RunConfig& cfg, const std::vector<std::string>& flag_pairs) {
    for (const ToleranceEntry& entry : tolerance_registry()) {
      tols_[entry.name] = cfg.get_double(std::string("tol.") + entry.name,
                                         entry.tol);
    }
    for (const std::string& pair : flag_pairs) {
      const auto eq = pair.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw config_error("--tol expects NAME=VALUE, got '" + pair + "'");
      }
      const std::string name = pair.substr(0, eq);
      if (tols_.find(name) == tols_.end()) {
        throw config_error("--tol: unknown check name '" + name + "'");
      }
      RunConfig probe;
      probe.set(name, pair.substr(eq + 1));
      tols_[name] = probe.get_double(name, 0.0);
    }
  }

  double operator()(const std::string& name) const {
    const auto it = tols_.find(name);
    if (it == tols_.end()) {
      throw config_error("unregistered check name '" + name + "'");
    }
    return it->second;
  }

 private:
  std::map<std::string, double> tols_;
};

// ------------------------------------------------------------------ helpers

std::vector<double> window5() { return {-1.5, -0.75, 0.0, 0.75, 1.5}; }

TestSignal signal_by_name(const std::string& name) {
  if (name.rfind("bracket_", 0) == 0 && name.size() == 9) {
    const char d = name[8];
    if (d >= '0' && d <= '4') return bracket_signal(d - '0');
  }
  if (name.rfind("generator_", 0) == 0 && name.size() == 11) {
    const char d = name[10];
    if (d >= '0' && d <= '2') return bracket_generator(d - '0');
  }
  if (name == "oscillator") return oscillator_signal();
  if (name.rfind("constant_", 0) == 0 && name.size() == 10) {
    const char d = name[9];
    if (d >= '0' && d <= '1') return constant_symbol_signal(d - '0');
  }
  throw config_error(
      "unknown signal '" + name +
      "' (expected bracket_0..4, generator_0..2, constant_0..1, oscillator)");
}

GridSpec grid_by_name(const std::string& name) {
  if (name == "oracle_16") return oracle_grid_16();
  if (name == "catalog_32") return catalog_grid_32();
  if (name == "bracket_64") return bracket_grid_64();
  if (name == "oscillator_64") return oscillator_grid_64();
  if (name == "oscillator_32") return oscillator_grid_32();
  throw config_error("unknown grid '" + name +
                     "' (expected oracle_16, catalog_32, bracket_64, "
                     "oscillator_64, oscillator_32)");
}

void print_results(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    std::printf("[%s] %-34s residual %.3e  tolerance %.3e\n",
                r.pass ? "PASS" : "FAIL", r.check.c_str(), r.residual,
                r.tolerance);
  }
}

int finish(std::vector<CheckResult> results, const std::string& out_dir) {
  print_results(results);
  const std::string path =
      (std::filesystem::path(out_dir) / "report.json").string();
  write_report(path, results);
  std::printf("report: %s\n", path.c_str());
  return all_pass(results) ? 0 : 1;
}

// ------------------------------------------------------------ verify suites

double check_group_axioms(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  const GroupPoint e{0.0, 0.0, 0.0};
  double worst = 0.0;
  const auto dist = [](const GroupPoint& a, const GroupPoint& b) {
    return std::max({std::abs(a.s - b.s), std::abs(a.x - b.x),
                     std::abs(a.y - b.y)});
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const GroupPoint g1{u(rng), u(rng), u(rng)};
    const GroupPoint g2{u(rng), u(rng), u(rng)};
    const GroupPoint g3{u(rng), u(rng), u(rng)};
    worst = std::max(worst, dist(multiply(g1, e), g1));
    worst = std::max(worst, dist(multiply(e, g1), g1));
    worst = std::max(worst, dist(multiply(g1, inverse(g1)), e));
    worst = std::max(worst, dist(multiply(multiply(g1, g2), g3),
                                 multiply(g1, multiply(g2, g3))));
  }
  return worst;
}

std::vector<CheckResult> run_suite_heisenberg(std::uint64_t seed,
                                              const TolTable& tol) {
  std::vector<CheckResult> out;
  {
    const Timer t;
    const double r = check_group_axioms(seed);
    out.push_back(make_check("group_axioms_random_triples", r,
                             tol("group_axioms_random_triples"),
                             t.elapsed_ms()));
  }
  {
    const Timer t;
    const PFunction f = sample_signal(catalog_grid_32(), bracket_signal(0));
    const InvariantField xl{FieldSide::left, FieldAxis::X, 1};
    const InvariantField yl{FieldSide::left, FieldAxis::Y, 1};
    const PFunction comm = apply_field(xl, apply_field(yl, f)) -
                           apply_field(yl, apply_field(xl, f));
    const double r = rel_distance(comm, derivative_axis(f, Axis::s));
    out.push_back(make_check("invariant_field_commutator", r,
                             tol("invariant_field_commutator"),
                             t.elapsed_ms()));
  }
  return out;
}

std::vector<CheckResult> run_suite_gridfn(std::uint64_t /*seed*/,
                                          const TolTable& tol) {
  std::vector<CheckResult> out;
  {
    const Timer t;
    GaussianParams par;
    par.sigma_s = 1.0 / std::sqrt(2.0);
    par.sigma_x = par.sigma_s;
    par.sigma_y = par.sigma_s;
    const GridSpec fine{8.0, 6.0, 6.0, 64, 32, 32};
    const PFunction f = sample_signal(fine, TestSignal{"unit_gaussian", par});
    const double r = std::abs(quadrature(f) - std::pow(kPi, 1.5));
    out.push_back(make_check("quadrature_separable_gaussian", r,
                             tol("quadrature_separable_gaussian"),
                             t.elapsed_ms()));
  }
  {
    const Timer t;
    GaussianParams par;
    par.sigma_s = 2.0;
    par.sigma_x = 0.8;
    par.sigma_y = 0.9;
    par.a1 = 0.4;
    const PFunction f =
        sample_signal(catalog_grid_32(), TestSignal{"probe", par});
    const SlicedFunction hat = fourier_s(f);
    double hat_sq = 0.0;
    for (const cplx& v : hat.slices) hat_sq += std::norm(v);
    double f_sq = 0.0;
    for (const cplx& v : f.values) f_sq += std::norm(v);
    const double ratio =
        f.spec.h_s() *
        std::sqrt(static_cast<double>(f.spec.N_s) / (2.0 * kPi));
    const double r = std::abs(std::sqrt(hat_sq) - ratio * std::sqrt(f_sq)) /
                     (ratio * std::sqrt(f_sq));
    out.push_back(make_check("fourier_s_parseval", r,
                             tol("fourier_s_parseval"), t.elapsed_ms()));
  }
  {
    const Timer t;
    GaussianParams par;
    par.sigma_s = 2.0;
    par.sigma_x = 0.8;
    par.sigma_y = 0.9;
    const TestSignal sig{"probe", par};
    const GridSpec g = catalog_grid_32();
    const PFunction f = sample_signal(g, sig);
    const PFunction dx = derivative_axis(f, Axis::x);
    PFunction expect(g);
    for (std::size_t j = 0; j < g.N_s; ++j) {
      for (std::size_t a = 0; a < g.N_x; ++a) {
        for (std::size_t b = 0; b < g.N_y; ++b) {
          const double x = g.x_node(a);
          expect.at(j, a, b) = sig.value(g.s_node(j), x, g.y_node(b)) *
                               (-x / (par.sigma_x * par.sigma_x));
        }
      }
    }
    const double r = rel_distance(dx, expect);
    out.push_back(make_check("spectral_derivative_gaussian", r,
                             tol("spectral_derivative_gaussian"),
                             t.elapsed_ms()));
  }
  return out;
}

std::vector<CheckResult> run_suite_convolution(std::uint64_t seed,
                                               const TolTable& tol) {
  std::vector<CheckResult> out;
  {
    const Timer t;
    const GridSpec g = oracle_grid_16();
    const auto catalog = random_catalog(g, 4, seed);
    double worst = 0.0;
    for (int i = 0; i < 2; ++i) {
      const PFunction a = sample_signal(g, catalog[2 * i]);
      const PFunction b = sample_signal(g, catalog[2 * i + 1]);
      worst = std::max(
          worst, rel_distance(convolve_fast(a, b), convolve_direct(a, b)));
    }
    out.push_back(make_check("twisted_fast_vs_direct", worst,
                             tol("twisted_fast_vs_direct"), t.elapsed_ms()));
  }
  {
    const Timer t;
    const GridSpec g = catalog_grid_32();
    const PFunction a = sample_signal(g, bracket_signal(0));
    const PFunction b = sample_signal(g, bracket_signal(1));
    const PFunction c = sample_signal(g, bracket_signal(2));
    const double r = rel_distance(convolve_fast(convolve_fast(a, b), c),
                                  convolve_fast(a, convolve_fast(b, c)));
    out.push_back(make_check("convolution_associativity", r,
                             tol("convolution_associativity"),
                             t.elapsed_ms()));
  }
  return out;
}

std::vector<CheckResult> run_suite_bracket(std::uint64_t seed,
                                           const TolTable& tol) {
  std::vector<CheckResult> out;
  const GridSpec g = catalog_grid_32();
  {
    const Timer t;
    const PFunction f = sample_signal(g, bracket_generator(0));
    const double r =
        rel_distance(apply_antiderivative(f, AntiMode::fourier_division),
                     apply_antiderivative(f, AntiMode::grid_cumulative));
    out.push_back(make_check("antiderivative_mode_agreement", r,
                             tol("antiderivative_mode_agreement"),
                             t.elapsed_ms()));
  }
  const auto catalog = random_catalog(g, 3, seed + 1);
  const PFunction a = sample_signal(g, catalog[0]);
  const PFunction b = sample_signal(g, catalog[1]);
  const PFunction c = sample_signal(g, catalog[2]);
  {
    const Timer t;
    const PFunction ab = pbracket(a, b);
    const PFunction ba = pbracket(b, a);
    const double r = (ab + ba).norm() / ab.norm();
    out.push_back(make_check("bracket_antisymmetry", r,
                             tol("bracket_antisymmetry"), t.elapsed_ms()));
  }
  {
    const Timer t;
    const PFunction j1 = pbracket(pbracket(a, b), c);
    const PFunction j2 = pbracket(pbracket(b, c), a);
    const PFunction j3 = pbracket(pbracket(c, a), b);
    const double scale = std::max({j1.norm(), j2.norm(), j3.norm()});
    const double r = (j1 + j2 + j3).norm() / scale;
    out.push_back(
        make_check("jacobi_identity", r, tol("jacobi_identity"),
                   t.elapsed_ms()));
  }
  {
    const Timer t;
    const PFunction lhs = pbracket(a, convolve_fast(b, c));
    const PFunction rhs = convolve_fast(pbracket(a, b), c) +
                          convolve_fast(b, pbracket(a, c));
    const double r = rel_distance(lhs, rhs);
    out.push_back(
        make_check("leibniz_rule", r, tol("leibniz_rule"), t.elapsed_ms()));
  }
  return out;
}

std::vector<CheckResult> run_suite_rep(std::uint64_t seed,
                                       const TolTable& tol) {
  std::vector<CheckResult> out;
  const WaveGrid wg{64, 12.0};
  const double hbar = 0.5;
  {
    const Timer t;
    const GridSpec g = catalog_grid_32();
    const auto catalog = random_catalog(g, 2, seed + 2);
    const PFunction k1 = sample_signal(g, catalog[0]);
    const PFunction k2 = sample_signal(g, catalog[1]);
    const Eigen::MatrixXcd a1 = rep_quantize(k1, wg, hbar).matrix;
    const Eigen::MatrixXcd a2 = rep_quantize(k2, wg, hbar).matrix;
    const Eigen::MatrixXcd a12 =
        rep_quantize(convolve_fast(k1, k2), wg, hbar).matrix;
    const double r =
        op_norm(a12 - a1 * a2) / (op_norm(a1) * op_norm(a2));
    out.push_back(make_check("rep_convolution_homomorphism", r,
                             tol("rep_convolution_homomorphism"),
                             t.elapsed_ms()));

    const Timer t2;
    const ClassicalSymbol s1 = rep_classical(k1, window5(), window5());
    const ClassicalSymbol s2 = rep_classical(k2, window5(), window5());
    const ClassicalSymbol s12 =
        rep_classical(convolve_fast(k1, k2), window5(), window5());
    const double rc = (s12.values - s1.values.cwiseProduct(s2.values))
                          .cwiseAbs()
                          .maxCoeff() /
                      s12.values.cwiseAbs().maxCoeff();
    out.push_back(make_check("classical_pointwise_product", rc,
                             tol("classical_pointwise_product"),
                             t2.elapsed_ms()));
  }
  {
    const Timer t;
    const PFunction k = sample_signal(catalog_grid_32(), bracket_signal(1));
    const Eigen::MatrixXcd m1 =
        rep_quantize(k, wg, hbar, RepSign::plus,
                     RepAssembly::conjugate_lattice)
            .matrix;
    const Eigen::MatrixXcd m2 =
        rep_quantize(k, wg, hbar, RepSign::plus, RepAssembly::grid_quadrature)
            .matrix;
    const double r = op_norm(m1 - m2) / op_norm(m1);
    out.push_back(make_check("rep_assembly_agreement", r,
                             tol("rep_assembly_agreement"), t.elapsed_ms()));
  }
  {
    const Timer t;
    const GridSpec g = bracket_grid_64();
    const PFunction k1 = sample_signal(g, bracket_signal(0));
    const PFunction k2 = sample_signal(g, bracket_signal(1));
    const Eigen::MatrixXcd a1 = rep_quantize(k1, wg, hbar).matrix;
    const Eigen::MatrixXcd a2 = rep_quantize(k2, wg, hbar).matrix;
    const Eigen::MatrixXcd abr =
        rep_quantize(pbracket(k1, k2), wg, hbar).matrix;
    const Eigen::MatrixXcd comm = (a1 * a2 - a2 * a1) / (kI * hbar);
    const double r = op_norm(abr - comm) / op_norm(comm);
    out.push_back(make_check("bracket_commutator_image", r,
                             tol("bracket_commutator_image"),
                             t.elapsed_ms()));
  }
  return out;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite,
               std::uint64_t seed, const TolTable& tol,
               const std::string& out_dir) {
  using SuiteFn = std::vector<CheckResult> (*)(std::uint64_t,
                                               const TolTable&);
  const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"heisenberg", run_suite_heisenberg}, {"gridfn", run_suite_gridfn},
      {"convolution", run_suite_convolution}, {"bracket", run_suite_bracket},
      {"rep", run_suite_rep},
  };
  const std::string wanted = suite.empty()
                                 ? cfg.get_string("suite", "")
                                 : suite;
  if (!wanted.empty()) {
    const bool known =
        std::any_of(suites.begin(), suites.end(),
                    [&](const auto& s) { return s.first == wanted; });
    if (!known) {
      std::string names;
      for (const auto& s : suites) {
        names += (names.empty() ? "" : ", ") + s.first;
      }
      throw config_error("unknown suite '" + wanted + "' (expected one of " +
                         names + ")");
    }
  }
  std::vector<CheckResult> results;
  for (const auto& [name, fn] : suites) {
    if (!wanted.empty() && name != wanted) continue;
    std::printf("suite %s\n", name.c_str());
    const std::vector<CheckResult> part = fn(seed, tol);
    results.insert(results.end(), part.begin(), part.end());
  }
  return finish(std::move(results), out_dir);
}

// -------------------------------------------------------------- oscillator

int cmd_oscillator(const RunConfig& cfg, const TolTable& tol,
                   const std::string& out_dir) {
  const GridSpec g = grid_by_name(cfg.get_string("grid", "oscillator_32"));
  const TestSignal sig = signal_by_name(cfg.get_string("signal", "oscillator"));
  const PFunction f0 = sample_signal(g, sig);
  const HamiltonianSpec H = oscillator_hamiltonian();

  const double t_end = cfg.get_double("t_end", 2.0 * kPi);
  const double dt = cfg.get_double("dt", 2.0 * kPi / 2000.0);
  const auto snapshots = cfg.get_size("snapshots", 41);
  const double hbar = cfg.get_double("hbar", 0.5);

  std::vector<TrajectoryState> traj;
  if (t_end == 0.0) {
    traj.push_back(TrajectoryState{0.0, f0});
  } else {
    traj = evolve_rk4(f0, H, t_end, dt, snapshots);
  }

  std::vector<double> times;
  TrajectoryColumn col_norm{"f_norm", {}};
  TrajectoryColumn col_transport{"transport_residual", {}};
  TrajectoryColumn col_rotation{"rotation_residual", {}};
  double worst_transport = 0.0;
  for (const TrajectoryState& state : traj) {
    times.push_back(state.t);
    col_norm.values.push_back(state.f.norm());
    const double tr = rel_distance(rhs(state.f, H), transport_rhs(state.f));
    worst_transport = std::max(worst_transport, tr);
    col_transport.values.push_back(tr);
    col_rotation.values.push_back(
        rel_distance(state.f, oscillator_flow(f0, state.t)));
  }
  const std::string csv_path =
      (std::filesystem::path(out_dir) / "trajectory.csv").string();
  save_trajectory_csv(csv_path, times,
                      {col_norm, col_transport, col_rotation});
  std::printf("trajectory: %s\n", csv_path.c_str());

  std::vector<CheckResult> results;
  if (traj.size() < 3) {
    const Timer t;
    results.push_back(make_check("snapshot_identity",
                                 rel_distance(traj.front().f, f0),
                                 tol("snapshot_identity"), t.elapsed_ms()));
    return finish(std::move(results), out_dir);
  }

  {
    const Timer t;
    results.push_back(make_check("final_rotation_residual",
                                 col_rotation.values.back(),
                                 tol("final_rotation_residual"),
                                 t.elapsed_ms()));
    results.push_back(make_check("transport_worst_residual", worst_transport,
                                 tol("transport_worst_residual"),
                                 t.elapsed_ms()));
  }
  const Timer t;
  const ConsistencyReport rep =
      check_consistency(traj, H, hbar, WaveGrid{64, 12.0}, window5(),
                        window5());
  const double ms = t.elapsed_ms();
  results.push_back(make_check("heisenberg_image", rep.heisenberg,
                               tol("heisenberg_image"), ms));
  results.push_back(
      make_check("hamilton_image", rep.hamilton, tol("hamilton_image"), ms));
  results.push_back(make_check("transport_alternative", rep.transport_alt,
                               tol("transport_alternative"), ms));
  results.push_back(make_check("hamiltonian_conservation", rep.conservation,
                               tol("hamiltonian_conservation"), ms));
  return finish(std::move(results), out_dir);
}

// ---------------------------------------------------------------- quantize

int cmd_quantize(const RunConfig& cfg, const TolTable& tol,
                 const std::string& out_dir) {
  const GridSpec g = grid_by_name(cfg.get_string("grid", "catalog_32"));
  const TestSignal sig = signal_by_name(cfg.get_string("signal", "bracket_1"));
  const double hbar = cfg.get_double("hbar", 0.5);
  const WaveGrid wg{cfg.get_size("N_v", 64), cfg.get_double("L_v", 12.0)};
  wg.validate();

  const double hmax = admissible_hbar_max(wg, g.L_y);
  if (!(hbar > 0.0) || hbar > hmax) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "hbar=%g outside the admissible range (0, %g] for this "
                  "lattice (shift sqrt(hbar) L_y must stay within L_v/2)",
                  hbar, hmax);
    throw config_error(buf);
  }

  const PFunction k = sample_signal(g, sig);
  const Timer t;
  const WaveOp lattice = rep_quantize(k, wg, hbar, RepSign::plus,
                                      RepAssembly::conjugate_lattice);
  const WaveOp quad = rep_quantize(k, wg, hbar, RepSign::plus,
                                   RepAssembly::grid_quadrature);
  const double ms = t.elapsed_ms();

  const auto base = [&](const char* name) {
    return (std::filesystem::path(out_dir) / name).string();
  };
  save_waveop(lattice, base("waveop_conjugate_lattice"));
  save_waveop(quad, base("waveop_grid_quadrature"));
  std::printf("wave operators: %s.{bin,json}, %s.{bin,json}\n",
              base("waveop_conjugate_lattice").c_str(),
              base("waveop_grid_quadrature").c_str());

  const double r =
      op_norm(lattice.matrix - quad.matrix) / op_norm(lattice.matrix);
  std::vector<CheckResult> results;
  results.push_back(
      make_check("assembly_agreement", r, tol("assembly_agreement"), ms));
  return finish(std::move(results), out_dir);
}

// ---------------------------------------------------------- correspondence

int cmd_correspondence(const RunConfig& cfg, const TolTable& tol,
                       const std::string& out_dir) {
  const std::vector<double> hbars =
      cfg.get_double_list("hbar_list", {0.4, 0.2, 0.1, 0.05});
  if (hbars.size() < 4) {
    throw config_error("hbar_list needs at least 4 values to fit a slope, got " +
                       std::to_string(hbars.size()));
  }
  for (std::size_t i = 1; i < hbars.size(); ++i) {
    if (!(hbars[i] < hbars[i - 1]) || !(hbars[i] > 0.0)) {
      throw config_error("hbar_list must be positive and strictly decreasing");
    }
  }

  const GridSpec g = bracket_grid_64();
  const TestSignal s1 = bracket_signal(0);
  const TestSignal s2 = bracket_signal(1);
  const PFunction k1 = sample_signal(g, s1);
  const PFunction k2 = sample_signal(g, s2);
  const Timer t;
  const PFunction br = pbracket(k1, k2);

  double scale = 0.0;
  for (const double q : window5()) {
    for (const double p : window5()) {
      scale = std::max(scale, std::abs(symbol_poisson(s1, s2, q, p)));
    }
  }

  std::vector<double> residuals;
  for (const double hbar : hbars) {
    double worst = 0.0;
    for (const double q : window5()) {
      for (const double p : window5()) {
        worst = std::max(worst, std::abs(symbol_at(br, hbar, q, p) -
                                         symbol_poisson(s1, s2, q, p)));
      }
    }
    residuals.push_back(worst / scale);
  }

  const std::string csv_path =
      (std::filesystem::path(out_dir) / "correspondence.csv").string();
  {
    std::ofstream out(csv_path);
    if (!out) throw config_error("cannot open '" + csv_path + "' for writing");
    out.precision(std::numeric_limits<double>::max_digits10);
    out << "hbar,residual\n";
    for (std::size_t i = 0; i < hbars.size(); ++i) {
      out << hbars[i] << "," << residuals[i] << "\n";
    }
  }
  std::printf("sweep: %s\n", csv_path.c_str());

  double sx = 0.0, sy = 0.0, sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < hbars.size(); ++i) {
    const double lx = std::log(hbars[i]);
    const double ly = std::log(residuals[i]);
    sx += lx;
    sy += ly;
    sxy += lx * ly;
    sxx += lx * lx;
  }
  const auto n = static_cast<double>(hbars.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  std::printf("fitted slope: %.4f\n", slope);

  std::vector<CheckResult> results;
  results.push_back(make_check("correspondence_order_slope",
                               std::abs(slope - 2.0),
                               tol("correspondence_order_slope"),
                               t.elapsed_ms()));
  return finish(std::move(results), out_dir);
}

// --------------------------------------------------------------------- main

std::string resolve_out_dir(const std::string& flag, const RunConfig& cfg) {
  std::string dir = flag;
  if (dir.empty()) {
    if (const char* env = std::getenv("PMECH_OUTDIR")) dir = env;
  }
  if (dir.empty()) dir = cfg.get_string("out_dir", ".");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw config_error("cannot create output directory '" + dir +
                       "': " + ec.message());
  }
  return dir;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pmech: verification suites, oscillator dynamics, quantization "
      "exports, and classical-correspondence sweeps on H^1"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_flag;
  std::string suite;
  std::uint64_t seed = 20250815u;
  std::vector<std::string> tol_pairs;

  app.add_option("--config", config_path, "key=value configuration file")
      ->expected(1);
  app.add_option("--out", out_flag,
                 "output directory (overrides PMECH_OUTDIR and the config "
                 "key out_dir)");
  app.add_option("--seed", seed, "seed for randomized catalogs");
  app.add_option("--tol", tol_pairs,
                 "tolerance override NAME=VALUE (repeatable)");

  CLI::App* verify = app.add_subcommand(
      "verify", "run property suites and write report.json");
  verify->add_option("--suite", suite,
                     "restrict to one suite: heisenberg, gridfn, "
                     "convolution, bracket, rep");

  CLI::App* oscillator = app.add_subcommand(
      "oscillator",
      "integrate the oscillator flow; writes trajectory.csv (columns: t, "
      "f_norm, transport_residual, rotation_residual) and report.json");
  CLI::App* quantize = app.add_subcommand(
      "quantize",
      "build a wave operator through both assemblies; writes "
      "waveop_*.{bin,json} and report.json");
  CLI::App* correspondence = app.add_subcommand(
      "correspondence",
      "sweep hbar and fit the bracket-vs-Poisson convergence slope; writes "
      "correspondence.csv (columns: hbar, residual) and report.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = RunConfig::from_file(config_path);
    if (app.count("--seed") == 0 && cfg.has("seed")) {
      seed = cfg.get_size("seed", seed);
    }
    const TolTable tol(cfg, tol_pairs);
    const std::string out_dir = resolve_out_dir(out_flag, cfg);

    if (verify->parsed()) return cmd_verify(cfg, suite, seed, tol, out_dir);
    if (oscillator->parsed()) return cmd_oscillator(cfg, tol, out_dir);
    if (quantize->parsed()) return cmd_quantize(cfg, tol, out_dir);
    if (correspondence->parsed()) return cmd_correspondence(cfg, tol, out_dir);
    return 2;
  } catch (const config_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const numerical_abort& e) {
    std::fprintf(stderr, "numerical abort: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

// Acceptance gate: the ten release criteria, each printed as one PASS/FAIL
// line with its measured residuals.  All criteria run even if one fails;
// the exit code is 0 only when every criterion passes.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "pmech/bargmann.hpp"
#include "pmech/convolution.hpp"
#include "pmech/dynamics.hpp"
#include "pmech/grid.hpp"
#include "pmech/heisenberg.hpp"
#include "pmech/oscillator.hpp"
#include "pmech/pbracket.hpp"
#include "pmech/report.hpp"
#include "pmech/schrodinger.hpp"
#include "pmech/signals.hpp"

using namespace pmech;

namespace {

constexpr cplx kI{0.0, 1.0};

struct SubCheck {
  std::string label;
  double value = 0.0;
  double bound = 0.0;
  bool centered = false;  // interpret as |value - 4| <= bound style elsewhere
};

std::vector<double> window5() { return {-1.5, -0.75, 0.0, 0.75, 1.5}; }

double point_dist(const GroupPoint& a, const GroupPoint& b) {
  return std::max({std::abs(a.s - b.s), std::abs(a.x - b.x),
                   std::abs(a.y - b.y)});
}

// ------------------------------------------------------------------ 1
std::vector<SubCheck> criterion_group_axioms() {
  std::mt19937_64 rng(101u);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  const GroupPoint e{0.0, 0.0, 0.0};
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const GroupPoint g1{u(rng), u(rng), u(rng)};
    const GroupPoint g2{u(rng), u(rng), u(rng)};
    const GroupPoint g3{u(rng), u(rng), u(rng)};
    worst = std::max(worst, point_dist(multiply(g1, e), g1));
    worst = std::max(worst, point_dist(multiply(e, g1), g1));
    worst = std::max(worst, point_dist(multiply(g1, inverse(g1)), e));
    worst = std::max(worst, point_dist(multiply(multiply(g1, g2), g3),
                                       multiply(g1, multiply(g2, g3))));
  }
  return {{"axioms", worst, 1e-12}};
}

// ------------------------------------------------------------------ 2
std::vector<SubCheck> criterion_convolution_oracle() {
  const GridSpec g16 = oracle_grid_16();
  const auto catalog = random_catalog(g16, 20, 202u);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const PFunction a = sample_signal(g16, catalog[2 * i]);
    const PFunction b = sample_signal(g16, catalog[2 * i + 1]);
    worst = std::max(worst,
                     rel_distance(convolve_fast(a, b), convolve_direct(a, b)));
  }

  const GridSpec g32 = catalog_grid_32();
  const PFunction a = sample_signal(g32, bracket_signal(0));
  const PFunction b = sample_signal(g32, bracket_signal(1));
  const PFunction c = sample_signal(g32, bracket_signal(2));
  const double assoc =
      rel_distance(convolve_fast(convolve_fast(a, b), c),
                   convolve_fast(a, convolve_fast(b, c)));
  return {{"fast_vs_direct", worst, 1e-8}, {"associativity", assoc, 1e-7}};
}

// ------------------------------------------------------------------ 3
std::vector<SubCheck> criterion_antiderivative() {
  const GridSpec g = catalog_grid_32();
  const PFunction f1 = sample_signal(g, bracket_generator(0));
  const PFunction f2 = sample_signal(g, bracket_generator(1));

  double modes = 0.0;
  for (const PFunction* f : {&f1, &f2}) {
    const PFunction a = apply_antiderivative(*f, AntiMode::fourier_division);
    const PFunction b = apply_antiderivative(*f, AntiMode::grid_cumulative);
    modes = std::max(modes, rel_distance(a, b));
  }

  const PFunction whole =
      apply_antiderivative(convolve_fast(f1, f2), AntiMode::fourier_division);
  const double left = rel_distance(
      convolve_fast(apply_antiderivative(f1, AntiMode::fourier_division), f2),
      whole);
  const double right = rel_distance(
      convolve_fast(f1, apply_antiderivative(f2, AntiMode::fourier_division)),
      whole);
  return {{"modes_agree", modes, 1e-7},
          {"left_shift", left, 1e-7},
          {"right_shift", right, 1e-7}};
}

// ------------------------------------------------------------------ 4
std::vector<SubCheck> criterion_bracket_algebra() {
  const GridSpec g = catalog_grid_32();
  const auto catalog = random_catalog(g, 15, 404u);
  double anti = 0.0;
  double jacobi = 0.0;
  double leibniz = 0.0;
  for (int i = 0; i < 5; ++i) {
    const PFunction a = sample_signal(g, catalog[3 * i]);
    const PFunction b = sample_signal(g, catalog[3 * i + 1]);
    const PFunction c = sample_signal(g, catalog[3 * i + 2]);

    const PFunction ab = pbracket(a, b);
    const PFunction ba = pbracket(b, a);
    anti = std::max(anti, (ab + ba).norm() / ab.norm());

    const PFunction j1 = pbracket(ab, c);
    const PFunction j2 = pbracket(pbracket(b, c), a);
    const PFunction j3 = pbracket(pbracket(c, a), b);
    const double jscale = std::max({j1.norm(), j2.norm(), j3.norm()});
    jacobi = std::max(jacobi, (j1 + j2 + j3).norm() / jscale);

    const PFunction lhs = pbracket(a, convolve_fast(b, c));
    const PFunction rhs =
        convolve_fast(ab, c) + convolve_fast(b, pbracket(a, c));
    leibniz = std::max(leibniz, rel_distance(lhs, rhs));
  }
  return {{"antisymmetry", anti, 1e-14},
          {"jacobi", jacobi, 1e-6},
          {"leibniz", leibniz, 1e-6}};
}

// ------------------------------------------------------------------ 5
std::vector<SubCheck> criterion_homomorphism() {
  const GridSpec g = catalog_grid_32();
  const auto catalog = random_catalog(g, 2, 505u);
  const PFunction k1 = sample_signal(g, catalog[0]);
  const PFunction k2 = sample_signal(g, catalog[1]);
  const PFunction k12 = convolve_fast(k1, k2);
  const WaveGrid grid{64, 12.0};
  double quantum = 0.0;
  for (const double hbar : {0.25, 0.5, 1.0}) {
    const Eigen::MatrixXcd a1 = rep_quantize(k1, grid, hbar).matrix;
    const Eigen::MatrixXcd a2 = rep_quantize(k2, grid, hbar).matrix;
    const Eigen::MatrixXcd a12 = rep_quantize(k12, grid, hbar).matrix;
    quantum = std::max(quantum, op_norm(a12 - a1 * a2) /
                                    (op_norm(a1) * op_norm(a2)));
  }

  const ClassicalSymbol s1 = rep_classical(k1, window5(), window5());
  const ClassicalSymbol s2 = rep_classical(k2, window5(), window5());
  const ClassicalSymbol s12 = rep_classical(k12, window5(), window5());
  const double classical =
      (s12.values - s1.values.cwiseProduct(s2.values)).cwiseAbs().maxCoeff() /
      s12.values.cwiseAbs().maxCoeff();
  return {{"quantum", quantum, 1e-3}, {"classical", classical, 1e-6}};
}

// ------------------------------------------------------------------ 6
std::vector<SubCheck> criterion_bracket_images() {
  const GridSpec g = bracket_grid_64();
  const auto catalog = random_catalog(g, 20, 606u);
  double quantum = 0.0;
  double classical = 0.0;
  for (int i = 0; i < 10; ++i) {
    const TestSignal& s1 = catalog[2 * i];
    const TestSignal& s2 = catalog[2 * i + 1];
    const PFunction k1 = sample_signal(g, s1);
    const PFunction k2 = sample_signal(g, s2);
    const PFunction br = pbracket(k1, k2);

    for (const double hbar : {0.25, 0.5, 1.0}) {
      const WaveGrid grid{hbar == 0.25 ? std::size_t{96} : std::size_t{64},
                          12.0};
      const Eigen::MatrixXcd a1 = rep_quantize(k1, grid, hbar).matrix;
      const Eigen::MatrixXcd a2 = rep_quantize(k2, grid, hbar).matrix;
      const Eigen::MatrixXcd abr = rep_quantize(br, grid, hbar).matrix;
      const Eigen::MatrixXcd comm = (a1 * a2 - a2 * a1) / (kI * hbar);
      quantum = std::max(quantum, op_norm(abr - comm) / op_norm(comm));
    }

    double worst = 0.0;
    double scale = 0.0;
    for (const double q : window5()) {
      for (const double p : window5()) {
        const cplx analytic = symbol_poisson(s1, s2, q, p);
        worst = std::max(worst, std::abs(symbol_at(br, 0.0, q, p) - analytic));
        scale = std::max(scale, std::abs(analytic));
      }
    }
    classical = std::max(classical, worst / scale);
  }
  return {{"quantum", quantum, 1e-3}, {"classical", classical, 1e-4}};
}

// ------------------------------------------------------------------ 7
std::vector<SubCheck> criterion_oscillator() {
  const GridSpec g = oscillator_grid_32();
  const TestSignal sig = oscillator_signal();
  const PFunction f = sample_signal(g, sig);
  const HamiltonianSpec H = oscillator_hamiltonian();

  const double transport =
      rel_distance(rhs(f, H), transport_rhs(f));

  const double two_pi = 2.0 * kPi;
  const auto big = evolve_rk4(f, H, two_pi, two_pi / 2000.0, 2);
  const double recurrence = rel_distance(big.back().f, f);

  const double T = kPi / 4.0;
  const PFunction exact = oscillator_flow(f, T);
  const double err_coarse =
      rel_distance(evolve_rk4(f, H, T, T / 72.0, 2).back().f, exact);
  const double err_fine =
      rel_distance(evolve_rk4(f, H, T, T / 144.0, 2).back().f, exact);
  const double order = std::log2(err_coarse / err_fine);

  double quantum = 0.0;
  double period = 0.0;
  const double t_flow = 0.4;
  const PFunction flowed = oscillator_flow(f, t_flow);
  for (const double hbar : {0.25, 0.5, 1.0}) {
    const WaveGrid grid{64, 12.0};
    const Eigen::MatrixXcd k0 = rep_quantize(f, grid, hbar).matrix;
    const Eigen::MatrixXcd kt = rep_quantize(flowed, grid, hbar).matrix;
    const Eigen::MatrixXcd wave = heisenberg_flow(k0, grid.N_v, grid.L_v,
                                                  t_flow);
    quantum = std::max(quantum, op_norm(kt - wave) / op_norm(k0));
    const Eigen::MatrixXcd back =
        heisenberg_flow(k0, grid.N_v, grid.L_v, kPi);
    period = std::max(period, op_norm(back - k0) / op_norm(k0));
  }

  const double t_cls = 0.37;
  const PFunction rotated = oscillator_flow(f, t_cls);
  const double c = std::cos(2.0 * t_cls);
  const double s = std::sin(2.0 * t_cls);
  double worst = 0.0;
  double scale = 0.0;
  for (const double q : window5()) {
    for (const double p : window5()) {
      const cplx expect = sig.symbol(q * c + p * s, -q * s + p * c);
      worst = std::max(worst,
                       std::abs(symbol_at(rotated, 0.0, q, p) - expect));
      scale = std::max(scale, std::abs(expect));
    }
  }
  const double classical = worst / scale;

  return {{"transport", transport, 1e-6},
          {"recurrence_2pi", recurrence, 1e-5},
          {"rk4_order", std::abs(order - 4.0), 0.3},
          {"quantum_image", quantum, 1e-2},
          {"classical_image", classical, 1e-4},
          {"period_all_hbar", period, 1e-2}};
}

// ------------------------------------------------------------------ 8
std::vector<SubCheck> criterion_correspondence() {
  const GridSpec g = bracket_grid_64();
  const TestSignal s1 = bracket_signal(0);
  const TestSignal s2 = bracket_signal(1);
  const PFunction k1 = sample_signal(g, s1);
  const PFunction k2 = sample_signal(g, s2);
  const PFunction br = pbracket(k1, k2);

  double scale = 0.0;
  for (const double q : window5()) {
    for (const double p : window5()) {
      scale = std::max(scale, std::abs(symbol_poisson(s1, s2, q, p)));
    }
  }

  std::vector<double> lx;
  std::vector<double> ly;
  for (const double hbar : {0.4, 0.2, 0.1, 0.05}) {
    double worst = 0.0;
    for (const double q : window5()) {
      for (const double p : window5()) {
        worst = std::max(worst, std::abs(symbol_at(br, hbar, q, p) -
                                         symbol_poisson(s1, s2, q, p)));
      }
    }
    lx.push_back(std::log(hbar));
    ly.push_back(std::log(worst / scale));
  }
  const auto n = static_cast<double>(lx.size());
  double sx = 0.0, sy = 0.0, sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxy += lx[i] * ly[i];
    sxx += lx[i] * lx[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {{"order_in_hbar", std::abs(slope - 2.0), 0.2}};
}

// ------------------------------------------------------------------ 9
std::vector<SubCheck> criterion_ladder() {
  const std::size_t dim = 64;
  const auto n = static_cast<Eigen::Index>(dim);
  const Eigen::MatrixXcd e = euler_operator(dim);
  double spectrum = 0.0;
  for (Eigen::Index m = 0; m < n; ++m) {
    spectrum = std::max(spectrum,
                        std::abs(e(m, m) - cplx(0.5 + static_cast<double>(m),
                                                0.0)));
  }
  Eigen::MatrixXcd off = e;
  off.diagonal().setZero();
  const double transitions = off.cwiseAbs().maxCoeff();

  double unitary = 0.0;
  for (const double t : {0.37, 2.0 * kPi, 4.0 * kPi}) {
    const Eigen::MatrixXcd u = dynamical_group(dim, t);
    unitary = std::max(unitary,
                       (u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n))
                           .cwiseAbs()
                           .maxCoeff());
  }
  return {{"spectrum", spectrum, 0.0},
          {"unitary", unitary, 1e-14},
          {"transitions", transitions, 0.0}};
}

// ------------------------------------------------------------------ 10
std::vector<SubCheck> criterion_flow_consistency() {
  const GridSpec g = catalog_grid_32();
  GaussianParams hp;
  hp.a0 = 0.0;
  hp.a1 = 0.2;
  hp.sigma_s = 2.0;
  hp.sigma_x = 0.62;
  hp.sigma_y = 0.62;
  hp.x0 = 0.20;
  hp.y0 = -0.10;
  const PFunction h = sample_signal(g, TestSignal{"hamiltonian", hp});

  const PFunction self = pbracket(h, h);
  const double self_norm = self.norm() / convolve_fast(h, h).norm();

  HamiltonianSpec H;
  H.kind = HamiltonianSpec::Kind::convolution_kernel;
  H.kernel = h;
  const auto traj = evolve_rk4(h, H, 0.02, 0.0025, 3);
  const double conserved = rel_distance(traj.back().f, traj.front().f);

  GaussianParams gp;
  gp.a0 = 1.0;
  gp.a1 = -0.15;
  gp.sigma_s = 2.0;
  gp.sigma_x = 0.58;
  gp.sigma_y = 0.58;
  gp.x0 = -0.15;
  gp.y0 = 0.25;
  const PFunction g0 = sample_signal(g, TestSignal{"observable", gp});

  const double t = 0.45;
  const PFunction evolved_bracket = oscillator_flow(pbracket(h, g0), t);
  const PFunction bracket_evolved =
      pbracket(oscillator_flow(h, t), oscillator_flow(g0, t));
  const double automorphism = rel_distance(bracket_evolved, evolved_bracket);

  return {{"self_bracket", self_norm, 1e-14},
          {"conservation", conserved, 1e-6},
          {"flow_automorphism", automorphism, 1e-5}};
}

struct Criterion {
  int index;
  const char* name;
  std::vector<SubCheck> (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "group axioms", criterion_group_axioms},
      {2, "convolution oracle equivalence", criterion_convolution_oracle},
      {3, "antiderivative routes and shifts", criterion_antiderivative},
      {4, "bracket algebra", criterion_bracket_algebra},
      {5, "representation homomorphism", criterion_homomorphism},
      {6, "bracket images (flagship)", criterion_bracket_images},
      {7, "harmonic oscillator dynamics", criterion_oscillator},
      {8, "classical correspondence order", criterion_correspondence},
      {9, "ladder model", criterion_ladder},
      {10, "flow consistency", criterion_flow_consistency},
  };

  bool all_ok = true;
  for (const Criterion& crit : criteria) {
    const Timer timer;
    std::string detail;
    bool ok = true;
    try {
      const std::vector<SubCheck> subs = crit.run();
      for (const SubCheck& sub : subs) {
        const bool sub_ok = std::isfinite(sub.value) && sub.value <= sub.bound;
        ok = ok && sub_ok;
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s %.3g<=%.3g", sub.label.c_str(),
                      sub.value, sub.bound);
        detail += (detail.empty() ? "" : "; ");
        detail += buf;
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    all_ok = all_ok && ok;
    std::printf("[%s] criterion %2d: %s (%s) [%.1f s]\n", ok ? "PASS" : "FAIL",
                crit.index, crit.name, detail.c_str(),
                timer.elapsed_ms() / 1000.0);
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}

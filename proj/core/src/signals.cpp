#include "pmech/signals.hpp"

#include <cmath>
#include <random>

#include "pmech/common.hpp"

namespace pmech {

namespace {
const cplx kI{0.0, 1.0};

double gauss(double t, double t0, double sigma) {
  const double u = (t - t0) / sigma;
  return std::exp(-0.5 * u * u);
}
}  // namespace

cplx TestSignal::value(double s, double x, double y) const {
  return (par.a0 + par.a1 * s) * gauss(s, 0.0, par.sigma_s) *
         gauss(x, par.x0, par.sigma_x) * gauss(y, par.y0, par.sigma_y);
}

ClosedForm TestSignal::closed_form() const {
  const TestSignal self = *this;
  return [self](double s, double x, double y) { return self.value(s, x, y); };
}

cplx TestSignal::fourier_slice(double hbar, double x, double y) const {
  const double ss = par.sigma_s;
  const cplx sprof = ss * std::exp(-0.5 * ss * ss * hbar * hbar) *
                     (par.a0 - kI * par.a1 * ss * ss * hbar);
  return sprof * gauss(x, par.x0, par.sigma_x) * gauss(y, par.y0, par.sigma_y);
}

cplx TestSignal::symbol(double q, double p) const {
  const double amp = par.a0 * par.sigma_s * par.sigma_x * par.sigma_y *
                     std::pow(kTwoPi, 1.5);
  const cplx phase = std::exp(kI * (q * par.x0 + p * par.y0));
  const double damp = std::exp(-0.5 * (sqr(par.sigma_x * q) + sqr(par.sigma_y * p)));
  return amp * phase * damp;
}

cplx TestSignal::symbol_dq(double q, double p) const {
  return (kI * par.x0 - sqr(par.sigma_x) * q) * symbol(q, p);
}

cplx TestSignal::symbol_dp(double q, double p) const {
  return (kI * par.y0 - sqr(par.sigma_y) * p) * symbol(q, p);
}

cplx symbol_poisson(const TestSignal& k1, const TestSignal& k2, double q, double p) {
  return k1.symbol_dq(q, p) * k2.symbol_dp(q, p) -
         k1.symbol_dp(q, p) * k2.symbol_dq(q, p);
}

PFunction sample_signal(const GridSpec& g, const TestSignal& sig) {
  return sample(g, sig.closed_form());
}

double balanced_sigma(double L, int N) { return L * std::sqrt(2.0 / (kPi * N)); }

GridSpec oracle_grid_16() { return GridSpec{10.0, 6.0, 6.0, 16, 16, 16}; }
GridSpec catalog_grid_32() { return GridSpec{20.0, 6.0, 6.0, 32, 32, 32}; }
GridSpec bracket_grid_64() { return GridSpec{20.0, 6.0, 6.0, 64, 32, 32}; }
GridSpec oscillator_grid_64() { return GridSpec{6.0, 6.0, 6.0, 64, 64, 64}; }
GridSpec oscillator_grid_32() { return GridSpec{6.0, 6.0, 6.0, 32, 32, 32}; }
GridSpec smeared_grid_128() { return GridSpec{2.4, 2.0, 2.0, 64, 128, 128}; }

std::vector<TestSignal> random_catalog(const GridSpec& g, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> width_scale(0.95, 1.10);
  std::uniform_real_distribution<double> center(-0.36, 0.36);
  std::uniform_real_distribution<double> tilt(-0.30, 0.30);

  // Base widths: s-profile wide enough for smooth hbar slices, transverse
  // widths well inside the domain so wrap-around tails stay negligible.
  const double base_s = std::min(2.5, 0.125 * g.L_s);
  const double base_xy = 0.1 * std::min(g.L_x, g.L_y);

  std::vector<TestSignal> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    TestSignal sig;
    sig.name = "catalog_" + std::to_string(i);
    sig.par.a0 = 1.0;
    sig.par.a1 = tilt(rng);
    sig.par.sigma_s = base_s * width_scale(rng);
    sig.par.sigma_x = base_xy * width_scale(rng);
    sig.par.sigma_y = base_xy * width_scale(rng);
    sig.par.x0 = center(rng);
    sig.par.y0 = center(rng);
    out.push_back(sig);
  }
  return out;
}

TestSignal bracket_signal(int which) {
  static const double tilts[3] = {0.30, -0.24, 0.18};
  static const double cx[3] = {0.20, -0.15, 0.10};
  static const double cy[3] = {-0.10, 0.25, 0.15};
  static const double wx[3] = {0.62, 0.58, 0.66};
  static const double wy[3] = {0.66, 0.60, 0.58};
  const int i = ((which % 3) + 3) % 3;
  TestSignal sig;
  sig.name = "bracket_" + std::to_string(i);
  sig.par.a0 = 1.0;
  sig.par.a1 = tilts[i];
  sig.par.sigma_s = 2.0;
  sig.par.sigma_x = wx[i];
  sig.par.sigma_y = wy[i];
  sig.par.x0 = cx[i];
  sig.par.y0 = cy[i];
  return sig;
}

TestSignal bracket_generator(int which) {
  TestSignal sig = bracket_signal(which);
  sig.name = "generator_" + std::to_string(((which % 3) + 3) % 3);
  sig.par.a0 = 0.0;
  sig.par.a1 = 0.20;
  return sig;
}

TestSignal constant_symbol_signal(int which) {
  // Narrow transverse widths flatten the symbol over the probe window:
  // S(q,p) varies as exp(-sigma^2 q^2 / 2), so sigma = 0.45 keeps the
  // variation over |q| <= 1.5 near 10%.
  const int i = ((which % 2) + 2) % 2;
  TestSignal sig;
  sig.name = "constant_symbol_" + std::to_string(i);
  sig.par.a0 = 1.0;
  sig.par.a1 = (i == 0) ? 0.25 : -0.20;
  sig.par.sigma_s = 2.0;
  sig.par.sigma_x = 0.45;
  sig.par.sigma_y = 0.45;
  sig.par.x0 = (i == 0) ? 0.10 : -0.08;
  sig.par.y0 = (i == 0) ? -0.06 : 0.12;
  return sig;
}

TestSignal oscillator_signal() {
  TestSignal sig;
  sig.name = "oscillator_observable";
  sig.par.a0 = 1.0;
  sig.par.a1 = 0.0;
  sig.par.sigma_s = 0.85;  // near balanced_sigma(6, 32): resolved and box-interior
  sig.par.sigma_x = 0.9;
  sig.par.sigma_y = 0.9;
  sig.par.x0 = 0.4;
  sig.par.y0 = 0.25;
  return sig;
}

}  // namespace pmech

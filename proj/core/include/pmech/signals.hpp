#pragma once

// Catalog of closed-form test signals and the fixed grids used by the
// verification suites.  Every signal is a separable Gaussian profile
//
//     k(s,x,y) = (a0 + a1*s) exp(-s^2/2*sigma_s^2)
//                * exp(-(x-x0)^2/2*sigma_x^2) * exp(-(y-y0)^2/2*sigma_y^2)
//
// for which the s-Fourier slice, the phase-space symbol and its first
// derivatives are all available in closed form.  Those closed forms act as
// independent references for the transform, representation and bracket
// checks.

#include <cstdint>
#include <string>
#include <vector>

#include "pmech/grid.hpp"

namespace pmech {

struct GaussianParams {
  double a0 = 1.0;       // constant part of the s-profile
  double a1 = 0.0;       // linear-in-s part of the s-profile
  double sigma_s = 1.0;  // s width
  double sigma_x = 1.0;  // x width
  double sigma_y = 1.0;  // y width
  double x0 = 0.0;       // x center
  double y0 = 0.0;       // y center
};

struct TestSignal {
  std::string name;
  GaussianParams par;

  // Point evaluation k(s,x,y).
  cplx value(double s, double x, double y) const;
  ClosedForm closed_form() const;

  // Unitary s-Fourier transform evaluated at (hbar, x, y):
  //   khat(hbar,x,y) = sigma_s exp(-sigma_s^2 hbar^2/2) (a0 - i a1 sigma_s^2 hbar)
  //                    * exp(-(x-x0)^2/2 sigma_x^2) exp(-(y-y0)^2/2 sigma_y^2) .
  cplx fourier_slice(double hbar, double x, double y) const;

  // Phase-space symbol S[k](q,p) = \int k(s,x,y) e^{i(qx+py)} ds dx dy and
  // its first derivatives in q and p.
  cplx symbol(double q, double p) const;
  cplx symbol_dq(double q, double p) const;
  cplx symbol_dp(double q, double p) const;
};

// Pointwise Poisson bracket {S[k1], S[k2]}(q,p) from the closed-form symbol
// derivatives: dq(S1) dp(S2) - dp(S1) dq(S2).
cplx symbol_poisson(const TestSignal& k1, const TestSignal& k2, double q, double p);

PFunction sample_signal(const GridSpec& g, const TestSignal& sig);

// Width giving equal spatial and spectral tail exponents on [-L,L) with N
// nodes: sigma = L*sqrt(2/(pi*N)).
double balanced_sigma(double L, int N);

// Fixed grids used across the test suites.
GridSpec oracle_grid_16();      // {L=10,6,6; N=16,16,16}  dual-route convolution oracle
GridSpec catalog_grid_32();     // {L=20,6,6; N=32,32,32}  algebra / representation checks
GridSpec bracket_grid_64();     // {L=20,6,6; N=64,32,32}  bracket and correspondence checks
GridSpec oscillator_grid_64();  // {L=6,6,6;  N=64,64,64}  harmonic-oscillator dynamics
GridSpec oscillator_grid_32();    // {L=6,6,6;  N=32,32,32}  rotation dynamics, integrator order
GridSpec smeared_grid_128();    // {L=2.4,2,2; N=64,128,128} smeared delta-kernel images

// Deterministic random signal catalog: `count` Gaussians with widths and
// centers drawn from ranges that keep both spatial and spectral tails far
// below the target tolerances on grid `g`.
std::vector<TestSignal> random_catalog(const GridSpec& g, int count, std::uint64_t seed);

// The fixed signals used by the bracket / correspondence suites on
// bracket_grid_64(): unit-mean s-profiles with distinct linear tilts.
TestSignal bracket_signal(int which);
// Zero-mean variants (a0 = 0) admissible as antiderivative inputs and as
// conjugation-flow Hamiltonians.
TestSignal bracket_generator(int which);

// Narrow-width variants whose symbols are nearly constant over the probe
// window; used by the correspondence suite's "constant" pair mode.
TestSignal constant_symbol_signal(int which);

// The smooth localized observable used by the oscillator suite.
TestSignal oscillator_signal();

}  // namespace pmech

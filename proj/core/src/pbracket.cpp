#include "pmech/pbracket.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pmech/common.hpp"
#include "pmech/convolution.hpp"
#include "pmech/fft.hpp"

namespace pmech {

namespace {

const cplx kI{0.0, 1.0};

void check_admissible(const PFunction& k, double fraction) {
  if (fraction > kZeroSliceTolerance) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", fraction);
    throw config_error(
        "antiderivative: input carries zero-frequency mass along s "
        "(fraction " + std::string(buf) +
        "); only s-derivatives/commutators are admissible");
  }
  (void)k;
}

PFunction anti_fourier_division(const PFunction& k) {
  const GridSpec& g = k.spec;
  SlicedFunction kh = fourier_s(k);

  double total = 0.0;
  for (const cplx& v : kh.slices) total += std::norm(v);
  const std::size_t plane = g.N_x * g.N_y;
  const std::size_t m0 = g.N_s / 2;  // hbar = 0 slice
  double zero = 0.0;
  for (std::size_t t = 0; t < plane; ++t) zero += std::norm(kh.slices[m0 * plane + t]);
  check_admissible(k, total > 0.0 ? std::sqrt(zero / total) : 0.0);

  for (std::size_t m = 0; m < g.N_s; ++m) {
    if (m == m0) continue;
    const cplx inv = 1.0 / (kI * kh.hbar_grid[m]);
    for (std::size_t t = 0; t < plane; ++t) kh.slices[m * plane + t] *= inv;
  }
  // hbar = 0 slice from the first s-moment of the input.
  const double w = -g.h_s() / kSqrtTwoPi;
  for (std::size_t t = 0; t < plane; ++t) kh.slices[m0 * plane + t] = cplx(0.0);
  for (std::size_t j = 0; j < g.N_s; ++j) {
    const double ws = w * g.s_node(j);
    const cplx* row = &k.values[j * plane];
    cplx* out = &kh.slices[m0 * plane];
    for (std::size_t t = 0; t < plane; ++t) out[t] += ws * row[t];
  }
  return inverse_fourier_s(kh);
}

PFunction anti_grid_cumulative(const PFunction& k) {
  const GridSpec& g = k.spec;
  check_admissible(k, zero_slice_fraction(k));

  const std::size_t plane = g.N_x * g.N_y;
  const std::size_t Ns = g.N_s;
  std::vector<cplx> c = k.values;
  fft::transform_many(c.data(), static_cast<int>(Ns),
                      static_cast<int>(plane), static_cast<int>(plane), 1, -1);
  const double invNs = 1.0 / static_cast<double>(Ns);
  for (cplx& v : c) v *= invNs;

  // Angular frequencies of the plain DFT basis e^{i w_m (s + L_s)}.
  std::vector<double> omega(Ns);
  for (std::size_t m = 0; m < Ns; ++m) {
    const double mm = (m < Ns / 2) ? static_cast<double>(m)
                                   : static_cast<double>(m) - static_cast<double>(Ns);
    omega[m] = kPi * mm / g.L_s;
  }

  // Termwise antiderivative, zero at s = -L_s:
  //   A(s) = c_0 (s + L) + sum_{m != 0} c_m (e^{i w_m (s+L)} - 1) / (i w_m).
  std::vector<cplx> c0(plane);
  std::vector<cplx> constant(plane, cplx(0.0));
  for (std::size_t t = 0; t < plane; ++t) c0[t] = c[t];
  for (std::size_t t = 0; t < plane; ++t) c[t] = cplx(0.0);
  for (std::size_t m = 1; m < Ns; ++m) {
    const cplx inv = 1.0 / (kI * omega[m]);
    cplx* row = &c[m * plane];
    for (std::size_t t = 0; t < plane; ++t) {
      row[t] *= inv;
      constant[t] += row[t];
    }
  }
  fft::transform_many(c.data(), static_cast<int>(Ns),
                      static_cast<int>(plane), static_cast<int>(plane), 1, +1);

  PFunction out(g);
  for (std::size_t j = 0; j < Ns; ++j) {
    const double ramp = g.h_s() * static_cast<double>(j);  // s_j + L_s
    const cplx* osc = &c[j * plane];
    cplx* row = &out.values[j * plane];
    for (std::size_t t = 0; t < plane; ++t)
      row[t] = c0[t] * ramp + osc[t] - constant[t];
  }
  return out;
}

}  // namespace

double zero_slice_fraction(const PFunction& k) {
  const std::vector<cplx> slice0 = fourier_s_at(k, 0.0);
  const double zero = l2_norm(slice0);
  // Parseval for the unitary s-transform on the grid:
  // ||khat||_2 = h_s sqrt(N_s / (2 pi)) ||k||_2.
  const double total = k.spec.h_s() *
                       std::sqrt(static_cast<double>(k.spec.N_s) / kTwoPi) *
                       l2_norm(k.values);
  return total > 0.0 ? zero / total : 0.0;
}

PFunction apply_antiderivative(const PFunction& k, AntiMode mode) {
  k.spec.validate();
  return mode == AntiMode::fourier_division ? anti_fourier_division(k)
                                            : anti_grid_cumulative(k);
}

PFunction pbracket(const PFunction& k1, const PFunction& k2, AntiMode mode) {
  const PFunction a = convolve_fast(k1, k2);
  const PFunction b = convolve_fast(k2, k1);
  return apply_antiderivative(a - b, mode);
}

}  // namespace pmech

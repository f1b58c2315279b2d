#pragma once

#include <cstddef>
#include <functional>

#include "pmech/common.hpp"

namespace pmech {

/// Uniform periodic grid over [-L_s, L_s) x [-L_x, L_x) x [-L_y, L_y).
/// Node counts must be powers of two, at least 16 per axis.
struct GridSpec {
  double L_s = 0.0;
  double L_x = 0.0;
  double L_y = 0.0;
  std::size_t N_s = 0;
  std::size_t N_x = 0;
  std::size_t N_y = 0;

  bool operator==(const GridSpec&) const = default;

  void validate() const;

  double h_s() const { return 2.0 * L_s / static_cast<double>(N_s); }
  double h_x() const { return 2.0 * L_x / static_cast<double>(N_x); }
  double h_y() const { return 2.0 * L_y / static_cast<double>(N_y); }

  double s_node(std::size_t j) const { return -L_s + h_s() * static_cast<double>(j); }
  double x_node(std::size_t a) const { return -L_x + h_x() * static_cast<double>(a); }
  double y_node(std::size_t b) const { return -L_y + h_y() * static_cast<double>(b); }

  /// Dual (frequency) step of the s-transform.
  double hbar_step() const { return kPi / L_s; }
  /// Ascending dual nodes; hbar_node(N_s/2) == 0.
  double hbar_node(std::size_t m) const {
    return hbar_step() * (static_cast<double>(m) - static_cast<double>(N_s) / 2.0);
  }

  std::size_t size() const { return N_s * N_x * N_y; }
  std::size_t index(std::size_t j, std::size_t a, std::size_t b) const {
    return (j * N_x + a) * N_y + b;
  }
};

/// A complex function sampled on a GridSpec; storage is s-major, then x,
/// then y (matching the binary serialization layout).
struct PFunction {
  GridSpec spec;
  std::vector<cplx> values;

  PFunction() = default;
  explicit PFunction(const GridSpec& g) : spec(g), values(g.size(), cplx(0.0)) {}

  cplx& at(std::size_t j, std::size_t a, std::size_t b) { return values[spec.index(j, a, b)]; }
  const cplx& at(std::size_t j, std::size_t a, std::size_t b) const {
    return values[spec.index(j, a, b)];
  }

  /// Fraction of squared mass in the outer shell (|coordinate| >= 3/4 of the
  /// half-extent on any axis).  Sampling and Hamiltonian validation keep
  /// this below 0.01.  The convolution guard applies the same threshold but
  /// first removes each (x, y) column's s-mean: content that is constant
  /// along s is periodic and cannot leak across the s boundary.
  double tail_mass() const;

  /// sqrt(h_s h_x h_y) * ||values||_2, the L^2(R^3) norm approximation.
  double norm() const;
};

PFunction operator+(const PFunction& a, const PFunction& b);
PFunction operator-(const PFunction& a, const PFunction& b);
PFunction operator*(cplx scale, const PFunction& f);

/// ||a - b|| / ||b|| over the value vectors (0/0 -> 0).
double rel_distance(const PFunction& a, const PFunction& b);

/// The s-direction Fourier transform of a PFunction: slice m holds
/// khat(hbar_m, x, y) with the unitary convention
///   khat(hbar) = (2 pi)^{-1/2} Integral k(s) e^{-i s hbar} ds
/// and hbar_m = (m - N_s/2) pi / L_s ascending.
struct SlicedFunction {
  GridSpec spec;
  std::vector<cplx> slices;        // same layout as PFunction::values
  std::vector<double> hbar_grid;   // ascending, length N_s

  SlicedFunction() = default;
  explicit SlicedFunction(const GridSpec& g);

  cplx& at(std::size_t m, std::size_t a, std::size_t b) { return slices[spec.index(m, a, b)]; }
  const cplx& at(std::size_t m, std::size_t a, std::size_t b) const {
    return slices[spec.index(m, a, b)];
  }
};

SlicedFunction fourier_s(const PFunction& f);
PFunction inverse_fourier_s(const SlicedFunction& fs);

/// Evaluates the s-transform at one (possibly off-grid) frequency:
/// out[a*N_y+b] = (h_s / sqrt(2 pi)) sum_j f[j,a,b] e^{-i s_j hbar}.
std::vector<cplx> fourier_s_at(const PFunction& f, double hbar);

using ClosedForm = std::function<cplx(double s, double x, double y)>;

/// Samples a closed form on the grid.  Throws config_error when the sampled
/// data fails the tail-mass guard (domain too small).
PFunction sample(const GridSpec& spec, const ClosedForm& fn);

/// h_s h_x h_y * sum of values (approximates the group integral).
cplx quadrature(const PFunction& f);

/// Same, with an s-moment weight s^power (power in {1, 2}).
cplx quadrature_s_moment(const PFunction& f, int power);

/// Periodic spectral interpolation u(v) -> u(v + a) for u sampled on
/// [-L, L); exact for band-limited data, exact roll for grid-step shifts.
std::vector<cplx> shift_interp(const std::vector<cplx>& u, double L, double a);

/// Spectral shift along the s axis: f(s, x, y) -> f(s + a, x, y).
PFunction shift_s(const PFunction& f, double a);

enum class Axis { s = 0, x = 1, y = 2 };

/// Spectral partial derivative along one axis (Nyquist mode zeroed).
PFunction derivative_axis(const PFunction& f, Axis axis);

/// Pointwise multiplication by the coordinate of one axis.
PFunction multiply_coordinate(const PFunction& f, Axis axis);

}  // namespace pmech

#pragma once

// The harmonic oscillator on H^1.  Its Hamiltonian is the second-derivative
// delta string
//
//     H = -[ d(s) d''(x) d(y) + d(s) d(x) d''(y) ] ,
//
// never placed on a grid directly: convolution against it acts by invariant
// fields (f * H through left-invariant, H * f through right-invariant
// fields; the overall sign makes the wave image positive).  The bracket
// rhs collapses to the rotation generator
//
//     {{f, H}} = 2 (y d/dx - x d/dy) f ,
//
// whose flow rotates the (x, y) plane at rate 2:
//     f(t) = f0(s, x cos 2t + y sin 2t, -x sin 2t + y cos 2t) .
//
// Wave picture: rho_h(H) = hbar (M^2 + D^2) with flow conjugation by
// e^{i t (M^2 + D^2)} (hbar-independent generator, period pi in t).
// Classical picture: symbol q^2 + p^2, symbols rotate with the same angle.

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "pmech/dynamics.hpp"
#include "pmech/grid.hpp"
#include "pmech/schrodinger.hpp"

namespace pmech {

/// A rotation of the (x, y) plane by angle t:
/// x' = x cos t + y sin t,  y' = -x sin t + y cos t.
struct RotationFlow {
  double t = 0.0;
};

/// The oscillator Hamiltonian as a field polynomial (differential kind).
HamiltonianSpec oscillator_hamiltonian();

/// The transport rhs 2 (y d/dx - x d/dy) f, spectral derivatives.  Raises
/// numerical_abort("Nyquist violation ...") when the input carries
/// non-negligible energy in the x or y Nyquist plane.
PFunction transport_rhs(const PFunction& f);

/// f0 composed with RotationFlow{t}:
///   rotate_exact(f0, t)(s, x, y) = f0(s, x cos t + y sin t, -x sin t + y cos t).
/// Requires N_x == N_y and L_x == L_y.  Multiples of pi/2 reduce to exact
/// index remaps; the residual angle r in [-pi/4, pi/4] is applied as the
/// three-shear factorization shear_x(tan r/2) shear_y(-sin r) shear_x(tan r/2)
/// with spectral (band-limited) shears.
PFunction rotate_exact(const PFunction& f0, const RotationFlow& flow);
PFunction rotate_exact(const PFunction& f0, double t);

/// The bracket flow of the oscillator: rotate_exact(f0, 2t), solving
/// d/dt f = transport_rhs(f) with f(0) = f0.
PFunction oscillator_flow(const PFunction& f0, double t);

/// W = M^2 + D^2 on a raw wave lattice (diagnostic sizes allowed):
/// diag(v_i^2) plus the spectral second-derivative quadratic form.
Eigen::MatrixXcd harmonic_generator(std::size_t N_v, double L_v);

/// Heisenberg-picture conjugation  e^{i t W} K e^{-i t W}  with
/// W = harmonic_generator (scaling-and-squaring matrix exponential).
Eigen::MatrixXcd heisenberg_flow(const Eigen::MatrixXcd& K, std::size_t N_v,
                                 double L_v, double t);

/// The Gaussian-smeared stand-in for the delta string at width sigma; its
/// representation images converge to the exact ones as sigma -> 0 with
/// O(sigma^2) error, removed below by Richardson extrapolation.
PFunction smeared_oscillator_kernel(const GridSpec& g, double sigma);

/// Relative operator-norm distance between the Richardson-extrapolated
/// (weights 8/3, -2, 1/3 at sigma0, sigma0 sqrt2, 2 sigma0) wave image of
/// the smeared Hamiltonian and hbar (M^2 + D^2).
double quantum_image_residual(const GridSpec& g, double hbar, double sigma0,
                              std::size_t N_v, double L_v);

/// Same for the classical window against q^2 + p^2 (max norm).
double classical_image_residual(const GridSpec& g, double sigma0,
                                const std::vector<double>& qs,
                                const std::vector<double>& ps);

}  // namespace pmech

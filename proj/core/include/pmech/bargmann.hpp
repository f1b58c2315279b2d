#pragma once

// Ladder (Fock) model of the dynamics: the Euler operator with spectrum
// {m + 1/2}, the diagonal one-parameter group it generates, and the group
// action on the holomorphic model, assembled from triangular
// multiplication / shift factors with log-domain coefficients.

#include <cstddef>

#include <Eigen/Dense>

#include "pmech/common.hpp"

namespace pmech {

/// Point (s, z) of the reduced group acting on the holomorphic model;
/// composition carries the symplectic area term.
struct BargmannPoint {
  double s = 0.0;
  cplx z{0.0, 0.0};
};

/// (s1, z1) . (s2, z2) = (s1 + s2 + Im(conj(z1) z2) / 2, z1 + z2).
BargmannPoint bargmann_compose(const BargmannPoint& a, const BargmannPoint& b);

/// Diagonal Euler operator diag(m + 1/2), m = 0..dim-1.
Eigen::MatrixXcd euler_operator(std::size_t dim);

/// exp(i t (Euler)) = diag(exp(i t (m + 1/2))): unitary, period 4 pi, and
/// equal to -Identity at t = 2 pi.
Eigen::MatrixXcd dynamical_group(std::size_t dim, double t);

/// Action of the group point g on the first `dim` ladder states:
///   exp(2 i s hbar) exp(-hbar |z|^2 / 2) Mult(i sqrt(hbar) conj(z))
///     Shift(i sqrt(hbar) z)
/// assembled at working size 2*dim and truncated; coupling into the
/// discarded states above 1e-6 raises numerical_abort.
Eigen::MatrixXcd beta_action(std::size_t dim, double hbar,
                             const BargmannPoint& g);

}  // namespace pmech

#pragma once

// Group convolution on H^1:
//
//     (k1 * k2)(g) = Integral k1(h) k2(h^{-1} g) dh ,   dh = ds dx dy .
//
// Both routes share the same discrete model: the inputs are embedded in a
// 2x zero-padded grid (so the circular wrap never touches the data), the
// s-axis is diagonalized by the unitary transform of module gridfn, and each
// dual slice obeys the twisted planar convolution
//
//     out(hbar; x, y) = sqrt(2 pi) Integral k1hat(hbar; x', y')
//                        k2hat(hbar; x - x', y - y')
//                        e^{ i hbar (x y' - x' y) / 2 } dx' dy' .
//
// convolve_fast evaluates the slice by an FFT factorization of the phase
// (O(N^2 log N) per slice); convolve_direct evaluates the literal double sum
// (O(N^4) per slice) and serves as the reference route.  The two must agree
// to rounding; their agreement is part of the acceptance gate.

#include <array>
#include <vector>

#include "pmech/grid.hpp"

namespace pmech {

/// FFT-factorized route.
PFunction convolve_fast(const PFunction& k1, const PFunction& k2);

/// FFT-factorized route without the boundary-mass precondition.  Series
/// solvers whose intermediate terms legitimately widen toward the box edge
/// use this and account for the truncation in their own error budget;
/// everything else should call convolve_fast.
PFunction convolve_fast_unguarded(const PFunction& k1, const PFunction& k2);

/// Literal-quadrature route.  Refuses grids whose full direct cost
/// (N_x N_y) * (4 N_x N_y) * (2 N_s) exceeds 2^26; use convolve_direct_at
/// on larger grids.
PFunction convolve_direct(const PFunction& k1, const PFunction& k2);

/// Literal-quadrature route restricted to selected output nodes
/// (s-index, x-index, y-index on the unpadded grid).
std::vector<cplx> convolve_direct_at(const PFunction& k1, const PFunction& k2,
                                     const std::vector<std::array<std::size_t, 3>>& points);

/// One dual slice of the fast route, exposed for unit tests: a and b hold
/// N_x*N_y values (x-major), xs/ys are the node coordinates, and the output
/// is the twisted planar convolution *without* the sqrt(2 pi) factor.
void twisted_convolution_slice(const cplx* a, const cplx* b, cplx* out,
                               std::size_t N_x, std::size_t N_y,
                               const double* xs, const double* ys,
                               double hx, double hy, double hbar);

}  // namespace pmech

#pragma once

// The universal bracket
//
//     {{k1, k2}} = A( k1*k2 - k2*k1 )
//
// where A inverts the central derivative d/ds.  A is well defined only on
// functions with (numerically) no zero-frequency content along s; the
// commutator of two admitted kernels always qualifies because the dual
// slice at hbar = 0 is an ordinary (commutative) planar convolution.
//
// Two independent realizations of A are kept and cross-checked:
//   grid_cumulative  — running integral from s = -L_s, evaluated termwise on
//                      the trigonometric interpolant (exact on the grid's
//                      band limit),
//   fourier_division — division of the dual slices by i*hbar, with the
//                      hbar = 0 slice fixed by the first-moment rule
//                      Ahat(0) = -(2 pi)^{-1/2} Integral s k(s) ds.
// The two agree to rounding on admissible inputs; that agreement is part of
// the acceptance gate.

#include "pmech/grid.hpp"

namespace pmech {

enum class AntiMode { grid_cumulative, fourier_division };

/// ||khat(0,.,.)||_2 / ||khat||_2 — the admissibility measure for A.
double zero_slice_fraction(const PFunction& k);

/// Inputs whose zero-slice fraction exceeds this are rejected by A.
/// Commutators keep the fraction at the level of their s tails leaving
/// the box (measured ~2e-7 on 32-node s grids, ~1e-4 on coarse 16-node
/// ones), while genuine zero-frequency mass shows up at O(1e-1); the
/// gate sits between the coarse-grid floor and that contamination level.
inline constexpr double kZeroSliceTolerance = 1e-3;

PFunction apply_antiderivative(const PFunction& k, AntiMode mode);

PFunction pbracket(const PFunction& k1, const PFunction& k2,
                   AntiMode mode = AntiMode::fourier_division);

}  // namespace pmech

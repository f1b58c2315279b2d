#pragma once

// The universal equation of motion  df/dt = {{f, H}}  in the observable
// picture: a Runge-Kutta integrator, the conjugation-series solution
// f(t) = exp(-t AH) * f0 * exp(t AH) (convolution exponentials), and
// cross-representation consistency checks along trajectories.

#include <cstddef>
#include <vector>

#include "pmech/grid.hpp"
#include "pmech/heisenberg.hpp"
#include "pmech/pbracket.hpp"
#include "pmech/schrodinger.hpp"

namespace pmech {

/// One additive term of a differential Hamiltonian action: coeff times the
/// composition of invariant fields, applied outermost-first (factors[0] is
/// applied last).
struct FieldTerm {
  double coeff = 1.0;
  std::vector<InvariantField> factors;
};

/// A Hamiltonian, either a convolution kernel H(s,x,y) or a polynomial in
/// invariant fields (degree <= 4).  For the differential kind, left_action
/// realizes f * H and right_action realizes H * f.
struct HamiltonianSpec {
  enum class Kind { convolution_kernel, differential_operator };
  Kind kind = Kind::convolution_kernel;
  PFunction kernel;
  std::vector<FieldTerm> left_action;
  std::vector<FieldTerm> right_action;

  void validate() const;  // finite degree <= 4; kernel admission
};

struct TrajectoryState {
  double t = 0.0;
  PFunction f;
};

/// {{f, H}}: convolution kind goes through the bracket of module pbracket;
/// differential kind applies the field actions and one antiderivative.
PFunction rhs(const PFunction& f, const HamiltonianSpec& H,
              AntiMode mode = AntiMode::fourier_division);

/// Classical fourth-order Runge-Kutta integration of df/dt = {{f,H}} with
/// `snapshots` states stored (including both endpoints).  Differential
/// Hamiltonians enforce the advection bound dt <= 0.5 h / v_max; a norm
/// growth beyond 10x aborts with a diagnostic.
std::vector<TrajectoryState> evolve_rk4(const PFunction& f0,
                                        const HamiltonianSpec& H, double t_end,
                                        double dt, std::size_t snapshots = 50);

/// Conjugation-series solution exp(-t AH) * f0 * exp(t AH); both
/// exponentials are truncated convolution-power series (order <= max_order,
/// early exit once a term drops below 1e-13 of the accumulated sum).
/// Non-convergence raises numerical_abort with a spectral-radius estimate.
PFunction evolve_conjugation(const PFunction& f0, const HamiltonianSpec& H,
                             double t, int max_order = 20);

/// Residuals along a trajectory; each entry is a relative size.
struct ConsistencyReport {
  double heisenberg = 0.0;    // ||dK/dt - (1/i hbar)[K, H_h]|| per snapshot, max
  double hamilton = 0.0;      // classical window residual against {., H_0}, max
  double transport_alt = 0.0; // d/ds(df/dt) = f*H - H*f residual, max
  double conservation = 0.0;  // ||{{H,H}}|| / ||H*H||, the drift of H along
                              // its own flow (kernel kind; 0 otherwise)
};

/// Verifies a trajectory in the wave and classical representations.  Time
/// derivatives use centered differences over the snapshot spacing, so the
/// residuals are dominated by the differencing error.
ConsistencyReport check_consistency(const std::vector<TrajectoryState>& traj,
                                    const HamiltonianSpec& H, double hbar,
                                    const WaveGrid& grid,
                                    const std::vector<double>& qs,
                                    const std::vector<double>& ps);

/// Flow linearity: || evolve(A) + evolve(B) - evolve(A+B) || relative at the
/// endpoint (exact to rounding for the linear integrator).
double linearity_residual(const PFunction& A, const PFunction& B,
                          const HamiltonianSpec& H, double t_end, double dt);

/// The exact rotation flow is an algebra automorphism: relative endpoint
/// distance between rotate(A) * rotate(B) and rotate(A * B) (group
/// convolution) under the oscillator flow at time t.
double product_residual_rotation(const PFunction& A, const PFunction& B,
                                 double t);

}  // namespace pmech

#pragma once

// Wave-space representations of H^1 and the three quantization routes.
//
// Group action on wavefunctions over v (sign = plus):
//
//     [rho_h(s,x,y) u](v) = e^{-i (h s - h x y / 2 + sqrt(h) x v)} u(v - sqrt(h) y)
//
// an exact homomorphism: rho(g) rho(g') = rho(g g') with no residual phase.
// sign = minus is the entrywise complex conjugate action (the mirror
// convention); both signs are homomorphisms.
//
// Integrated kernels:  rho_h(k) = Integral k(g) rho_h(g) dg  couples only to
// the dual slice khat(+h, x, y).  Two independent matrix assemblies are kept
// and cross-checked:
//   conjugate_lattice — re-interpolates the slice onto the scaled lattice
//                       x_n = nu_n / sqrt(h) (best for smooth, wide slices),
//   grid_quadrature   — direct quadrature over the (x, y) grid nodes
//                       (best for narrow or boundary-heavy slices).
//
// Phase-space routes:
//   symbol_window / rep_classical — S_h[k](q,p) = sqrt(2 pi) Int khat(h,x,y)
//       e^{i(qx+py)} dx dy, the classical (h = 0) limit being a homomorphism
//       onto pointwise multiplication;
//   weyl_from_kernel — midpoint (tau = 1/2 by default) phase-space
//       quantization of the rescaled symbol a(vbar, nu) =
//       S_h[k](-sqrt(h) vbar, -sqrt(h) nu) on a doubled-resolution dual
//       lattice; agrees with rep_quantize on admissible kernels.

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "pmech/grid.hpp"
#include "pmech/heisenberg.hpp"
#include "pmech/pbracket.hpp"

namespace pmech {

/// Uniform periodic wavefunction lattice over [-L_v, L_v); N_v a power of
/// two, at least 32.
struct WaveGrid {
  std::size_t N_v = 0;
  double L_v = 0.0;

  bool operator==(const WaveGrid&) const = default;
  void validate() const;

  double h_v() const { return 2.0 * L_v / static_cast<double>(N_v); }
  double v_node(std::size_t i) const { return -L_v + h_v() * static_cast<double>(i); }
  double nu_step() const { return kPi / L_v; }
  /// Ascending dual nodes; nu_node(N_v/2) == 0.
  double nu_node(std::size_t m) const {
    return nu_step() * (static_cast<double>(m) - static_cast<double>(N_v) / 2.0);
  }
};

enum class RepSign { plus, minus };
enum class RepAssembly { conjugate_lattice, grid_quadrature };

struct WaveOp {
  double hbar = 0.0;
  RepSign sign = RepSign::plus;
  WaveGrid grid;
  Eigen::MatrixXcd matrix;
};

/// Largest hbar the lattice admits without shift wrap-around:
/// sqrt(hbar) * L_y <= L_v / 2.
double admissible_hbar_max(const WaveGrid& grid, double L_y);

/// rho_h(g) as an N_v x N_v matrix (spectral shift, exact on the band limit).
WaveOp rep_group_element(const WaveGrid& grid, double hbar, RepSign sign,
                         const GroupPoint& g);

/// Integrated kernel rho_h(k).
WaveOp rep_quantize(const PFunction& k, const WaveGrid& grid, double hbar,
                    RepSign sign = RepSign::plus,
                    RepAssembly assembly = RepAssembly::conjugate_lattice);

/// Raw-lattice grid_quadrature assembly without WaveGrid admission checks;
/// diagnostic lattices (e.g. very small N_v) are allowed.  sign = plus.
Eigen::MatrixXcd rep_quadrature_matrix(const PFunction& k, double hbar,
                                       std::size_t N_v, double L_v);

/// Phase-space window S_h[k] sampled on qs x ps; dq/dp in {0,1} multiply the
/// integrand by (i x)^dq (i y)^dp, i.e. take symbol derivatives.
struct ClassicalSymbol {
  std::vector<double> qs, ps;
  Eigen::MatrixXcd values;  // values(i, j) = S(qs[i], ps[j])
};
ClassicalSymbol symbol_window(const PFunction& k, double hbar,
                              std::vector<double> qs, std::vector<double> ps,
                              int dq = 0, int dp = 0);

/// Single-point symbol evaluation S_h[k](q, p).
cplx symbol_at(const PFunction& k, double hbar, double q, double p);

/// The classical representation: S_0[k], a homomorphism onto pointwise
/// multiplication of symbols.
ClassicalSymbol rep_classical(const PFunction& k, std::vector<double> qs,
                              std::vector<double> ps);

/// Midpoint-rule phase-space quantization lattice: 2 N_v half-step midpoint
/// nodes vbar_r and 2 N_v fine dual nodes nu_m (half the parent dual step).
struct SymbolGrid {
  std::size_t N_v = 0;
  double L_v = 0.0;

  double h_v() const { return 2.0 * L_v / static_cast<double>(N_v); }
  double vbar_node(std::size_t r) const {
    return -L_v + 0.5 * h_v() * static_cast<double>(r);
  }
  double nu_step() const { return 0.5 * kPi / L_v; }
  double nu_node(std::size_t m) const {
    return nu_step() * (static_cast<double>(m) - static_cast<double>(N_v));
  }
};
SymbolGrid symbol_grid(const WaveGrid& grid);

struct WeylConfig {
  double tau = 0.5;  // operator-ordering parameter; 0.5 = symmetric midpoint
};

/// Kernel matrix of the ordered quantization of a tabulated symbol
/// (table(r, m) = a(vbar_r, nu_m) on symbol_grid(grid)):
///   K[i,j] = (h_v nu_step / 2 pi) sum_m a(tau v_i + (1-tau) v_j, nu_m)
///            e^{i (v_i - v_j) nu_m} .
Eigen::MatrixXcd weyl_quantize(const Eigen::MatrixXcd& table,
                               const WaveGrid& grid, const WeylConfig& cfg);

/// Quantizes a group kernel through its rescaled phase-space symbol.
WaveOp weyl_from_kernel(const PFunction& k, const WaveGrid& grid, double hbar,
                        const WeylConfig& cfg = {});

/// Operator 2-norm by power iteration on M^H M (deterministic start).
double op_norm(const Eigen::MatrixXcd& m);

/// Cross-representation bracket check: quantum compares rho_h({{k1,k2}})
/// against (K1 K2 - K2 K1)/(i hbar) in operator norm; classical compares
/// S_0[{{k1,k2}}] against the Poisson bracket of the symbols (grid route,
/// derivative windows) in max norm.
struct BracketImageCheck {
  double quantum = 0.0;
  double classical = 0.0;
};
BracketImageCheck check_bracket_images(const PFunction& k1, const PFunction& k2,
                                       const WaveGrid& grid, double hbar,
                                       const std::vector<double>& qs,
                                       const std::vector<double>& ps,
                                       AntiMode mode = AntiMode::fourier_division);

}  // namespace pmech

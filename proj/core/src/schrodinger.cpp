#include "pmech/schrodinger.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "pmech/common.hpp"
#include "pmech/fft.hpp"

namespace pmech {

namespace {

const cplx kI{0.0, 1.0};

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// E(i, m) = e^{i v_i nu_m}; all spectral lattice operations factor through it.
Eigen::MatrixXcd mode_matrix(std::size_t N_v, double L_v) {
  WaveGrid g{N_v, L_v};
  Eigen::MatrixXcd E(N_v, N_v);
  for (std::size_t i = 0; i < N_v; ++i)
    for (std::size_t m = 0; m < N_v; ++m)
      E(i, m) = std::exp(kI * (g.v_node(i) * g.nu_node(m)));
  return E;
}

// Band-limited shift u(v) -> u(v - a): E diag(e^{-i a nu}) E^H / N_v, an
// exact lattice identity for a = 0 and exact trigonometric interpolation
// otherwise.
Eigen::MatrixXcd shift_matrix(const Eigen::MatrixXcd& E, std::size_t N_v,
                              double L_v, double a) {
  WaveGrid g{N_v, L_v};
  Eigen::VectorXcd d(N_v);
  for (std::size_t m = 0; m < N_v; ++m)
    d(m) = std::exp(-kI * (a * g.nu_node(m)));
  return (E * d.asDiagonal() * E.adjoint()) / static_cast<double>(N_v);
}

PFunction conjugated(const PFunction& k) {
  PFunction out = k;
  for (cplx& v : out.values) v = std::conj(v);
  return out;
}

void check_hbar(double hbar) {
  if (!(hbar > 0.0))
    throw config_error("representation: hbar must be positive, got " +
                       std::to_string(hbar));
}

void check_shift_range(double hbar, double y_extent, double L_v) {
  const double shift = std::sqrt(hbar) * y_extent;
  if (shift > 0.5 * L_v + 1e-12)
    throw config_error(
        "representation: sqrt(hbar) * |y| = " + std::to_string(shift) +
        " exceeds L_v/2 = " + std::to_string(0.5 * L_v) +
        "; admissible hbar <= " + std::to_string(sqr(0.5 * L_v / y_extent)) +
        " (shrink hbar or enlarge L_v)");
}

// grid_quadrature assembly at sign = plus on a raw (N_v, L_v) lattice.
Eigen::MatrixXcd assemble_quadrature(const PFunction& k, double hbar,
                                     std::size_t N_v, double L_v) {
  const GridSpec& g = k.spec;
  const double sq = std::sqrt(hbar);
  const std::vector<cplx> kh = fourier_s_at(k, hbar);
  const Eigen::MatrixXcd E = mode_matrix(N_v, L_v);
  WaveGrid wg{N_v, L_v};

  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N_v, N_v);
  Eigen::VectorXcd psi(N_v);
  for (std::size_t b = 0; b < g.N_y; ++b) {
    const double yb = g.y_node(b);
    // psi_b(v) = sqrt(2 pi) h_x sum_a khat(h, x_a, y_b)
    //            e^{i h x_a y_b / 2} e^{-i sqrt(h) x_a v}.
    for (std::size_t i = 0; i < N_v; ++i) {
      cplx acc(0.0);
      const double v = wg.v_node(i);
      for (std::size_t a = 0; a < g.N_x; ++a) {
        const double xa = g.x_node(a);
        acc += kh[a * g.N_y + b] *
               std::exp(kI * (0.5 * hbar * xa * yb - sq * xa * v));
      }
      psi(i) = kSqrtTwoPi * g.h_x() * acc;
    }
    M.noalias() += (g.h_y() * psi).asDiagonal() *
                   shift_matrix(E, N_v, L_v, sq * yb);
  }
  return M;
}

// conjugate_lattice assembly at sign = plus: re-interpolate the dual slice
// onto the scaled lattice x_n = nu_n / sqrt(h).
Eigen::MatrixXcd assemble_conjugate_lattice(const PFunction& k, double hbar,
                                            const WaveGrid& wg) {
  const GridSpec& g = k.spec;
  const double sq = std::sqrt(hbar);
  const std::size_t Nv = wg.N_v;

  // x-direction Fourier coefficients of the slice, basis e^{i w_c (x + L_x)}.
  std::vector<cplx> cx = fourier_s_at(k, hbar);  // kh[a * N_y + b]
  fft::transform_many(cx.data(), static_cast<int>(g.N_x),
                      static_cast<int>(g.N_y), static_cast<int>(g.N_y), 1, -1);
  const double invNx = 1.0 / static_cast<double>(g.N_x);
  for (cplx& v : cx) v *= invNx;
  std::vector<double> omega(g.N_x);
  for (std::size_t c = 0; c < g.N_x; ++c) {
    const double cc = (c < g.N_x / 2) ? static_cast<double>(c)
                                      : static_cast<double>(c) - static_cast<double>(g.N_x);
    omega[c] = kPi * cc / g.L_x;
  }

  // kt(n, b) = khat(h, nu_n / sqrt(h), y_b), masked outside the x-domain.
  Eigen::MatrixXcd kt = Eigen::MatrixXcd::Zero(Nv, g.N_y);
  std::vector<double> xt(Nv);
  for (std::size_t n = 0; n < Nv; ++n) {
    xt[n] = wg.nu_node(n) / sq;
    if (std::abs(xt[n]) >= g.L_x) continue;
    for (std::size_t c = 0; c < g.N_x; ++c) {
      const cplx ph = std::exp(kI * (omega[c] * (xt[n] + g.L_x)));
      for (std::size_t b = 0; b < g.N_y; ++b)
        kt(n, b) += cx[c * g.N_y + b] * ph;
    }
  }

  const Eigen::MatrixXcd E = mode_matrix(Nv, wg.L_v);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(Nv, Nv);
  Eigen::VectorXcd coeff(Nv), psi(Nv);
  for (std::size_t b = 0; b < g.N_y; ++b) {
    const double yb = g.y_node(b);
    for (std::size_t n = 0; n < Nv; ++n)
      coeff(n) = kSqrtTwoPi * (wg.nu_step() / sq) * kt(n, b) *
                 std::exp(kI * (0.5 * hbar * xt[n] * yb));
    // psi(v_j) = sum_n coeff_n e^{-i nu_n v_j}.
    for (std::size_t j = 0; j < Nv; ++j) {
      cplx acc(0.0);
      for (std::size_t n = 0; n < Nv; ++n) acc += coeff(n) * std::conj(E(j, n));
      psi(j) = acc;
    }
    M.noalias() += (g.h_y() * psi).asDiagonal() *
                   shift_matrix(E, Nv, wg.L_v, sq * yb);
  }
  return M;
}

}  // namespace

void WaveGrid::validate() const {
  if (!power_of_two(N_v) || N_v < 32)
    throw config_error("WaveGrid: N_v must be a power of two >= 32, got " +
                       std::to_string(N_v));
  if (!(L_v > 0.0)) throw config_error("WaveGrid: L_v must be positive");
}

double admissible_hbar_max(const WaveGrid& grid, double L_y) {
  return sqr(0.5 * grid.L_v / L_y);
}

WaveOp rep_group_element(const WaveGrid& grid, double hbar, RepSign sign,
                         const GroupPoint& g) {
  grid.validate();
  check_hbar(hbar);
  if (g.n != 1)
    throw config_error("rep_group_element: only H^1 points are supported");
  const double sq = std::sqrt(hbar);
  check_shift_range(hbar, std::abs(g.y), grid.L_v);

  const Eigen::MatrixXcd E = mode_matrix(grid.N_v, grid.L_v);
  Eigen::MatrixXcd M = shift_matrix(E, grid.N_v, grid.L_v, sq * g.y);
  for (std::size_t i = 0; i < grid.N_v; ++i) {
    const cplx phase = std::exp(
        -kI * (hbar * g.s - 0.5 * hbar * g.x * g.y + sq * g.x * grid.v_node(i)));
    M.row(i) *= phase;
  }
  if (sign == RepSign::minus) M = M.conjugate();
  return WaveOp{hbar, sign, grid, std::move(M)};
}

WaveOp rep_quantize(const PFunction& k, const WaveGrid& grid, double hbar,
                    RepSign sign, RepAssembly assembly) {
  grid.validate();
  k.spec.validate();
  check_hbar(hbar);
  check_shift_range(hbar, k.spec.L_y, grid.L_v);
  if (k.spec.N_x * k.spec.N_y * grid.N_v * grid.N_v > (std::size_t(1) << 34))
    throw config_error("rep_quantize: assembly cost exceeds the 2^34 budget");

  if (sign == RepSign::minus) {
    WaveOp op = rep_quantize(conjugated(k), grid, hbar, RepSign::plus, assembly);
    op.matrix = op.matrix.conjugate();
    op.sign = RepSign::minus;
    return op;
  }
  Eigen::MatrixXcd M = (assembly == RepAssembly::conjugate_lattice)
                           ? assemble_conjugate_lattice(k, hbar, grid)
                           : assemble_quadrature(k, hbar, grid.N_v, grid.L_v);
  return WaveOp{hbar, sign, grid, std::move(M)};
}

Eigen::MatrixXcd rep_quadrature_matrix(const PFunction& k, double hbar,
                                       std::size_t N_v, double L_v) {
  k.spec.validate();
  check_hbar(hbar);
  if (!power_of_two(N_v) || N_v < 4)
    throw config_error("rep_quadrature_matrix: N_v must be a power of two >= 4");
  return assemble_quadrature(k, hbar, N_v, L_v);
}

ClassicalSymbol symbol_window(const PFunction& k, double hbar,
                              std::vector<double> qs, std::vector<double> ps,
                              int dq, int dp) {
  k.spec.validate();
  if (dq < 0 || dq > 2 || dp < 0 || dp > 2)
    throw config_error("symbol_window: derivative orders must lie in {0,1,2}");
  const GridSpec& g = k.spec;
  std::vector<cplx> kh = fourier_s_at(k, hbar);
  for (std::size_t a = 0; a < g.N_x; ++a) {
    cplx wx(1.0);
    for (int r = 0; r < dq; ++r) wx *= kI * g.x_node(a);
    for (std::size_t b = 0; b < g.N_y; ++b) {
      cplx w = wx;
      for (int r = 0; r < dp; ++r) w *= kI * g.y_node(b);
      kh[a * g.N_y + b] *= w;
    }
  }
  Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      KH(kh.data(), static_cast<Eigen::Index>(g.N_x),
         static_cast<Eigen::Index>(g.N_y));

  Eigen::MatrixXcd Eq(qs.size(), g.N_x), Ep(ps.size(), g.N_y);
  for (std::size_t r = 0; r < qs.size(); ++r)
    for (std::size_t a = 0; a < g.N_x; ++a)
      Eq(r, a) = std::exp(kI * (qs[r] * g.x_node(a)));
  for (std::size_t m = 0; m < ps.size(); ++m)
    for (std::size_t b = 0; b < g.N_y; ++b)
      Ep(m, b) = std::exp(kI * (ps[m] * g.y_node(b)));

  ClassicalSymbol out;
  out.qs = std::move(qs);
  out.ps = std::move(ps);
  out.values = kSqrtTwoPi * g.h_x() * g.h_y() * (Eq * KH * Ep.transpose());
  return out;
}

ClassicalSymbol rep_classical(const PFunction& k, std::vector<double> qs,
                              std::vector<double> ps) {
  return symbol_window(k, 0.0, std::move(qs), std::move(ps));
}

cplx symbol_at(const PFunction& k, double hbar, double q, double p) {
  const GridSpec& g = k.spec;
  const std::vector<cplx> kh = fourier_s_at(k, hbar);
  cplx acc(0.0);
  for (std::size_t a = 0; a < g.N_x; ++a) {
    const cplx ex = std::exp(kI * (q * g.x_node(a)));
    cplx inner(0.0);
    for (std::size_t b = 0; b < g.N_y; ++b)
      inner += kh[a * g.N_y + b] * std::exp(kI * (p * g.y_node(b)));
    acc += ex * inner;
  }
  return kSqrtTwoPi * g.h_x() * g.h_y() * acc;
}

SymbolGrid symbol_grid(const WaveGrid& grid) {
  return SymbolGrid{grid.N_v, grid.L_v};
}

Eigen::MatrixXcd weyl_quantize(const Eigen::MatrixXcd& table,
                               const WaveGrid& grid, const WeylConfig& cfg) {
  grid.validate();
  const SymbolGrid sg = symbol_grid(grid);
  const std::size_t Nv = grid.N_v;
  const std::size_t Nf = 2 * Nv;
  if (table.rows() != static_cast<Eigen::Index>(Nf) ||
      table.cols() != static_cast<Eigen::Index>(Nf))
    throw config_error("weyl_quantize: table must be (2 N_v) x (2 N_v)");
  if (cfg.tau < 0.0 || cfg.tau > 1.0)
    throw config_error("weyl_quantize: tau must lie in [0, 1]");

  // F(d + Nv - 1, m) = e^{i d h_v nu_m}, d = i - j.
  Eigen::MatrixXcd F(2 * Nv - 1, Nf);
  for (std::size_t di = 0; di < 2 * Nv - 1; ++di) {
    const double d = static_cast<double>(di) - static_cast<double>(Nv) + 1.0;
    for (std::size_t m = 0; m < Nf; ++m)
      F(di, m) = std::exp(kI * (d * grid.h_v() * sg.nu_node(m)));
  }

  const double scale = grid.h_v() * sg.nu_step() / kTwoPi;
  Eigen::MatrixXcd K(Nv, Nv);
  for (std::size_t i = 0; i < Nv; ++i) {
    for (std::size_t j = 0; j < Nv; ++j) {
      const double r_real =
          2.0 * (cfg.tau * static_cast<double>(i) +
                 (1.0 - cfg.tau) * static_cast<double>(j));
      const double r_floor = std::floor(r_real);
      std::size_t r0 = static_cast<std::size_t>(std::max(0.0, r_floor));
      if (r0 > Nf - 1) r0 = Nf - 1;
      const std::size_t r1 = std::min(r0 + 1, Nf - 1);
      const double w = std::min(1.0, std::max(0.0, r_real - static_cast<double>(r0)));
      const std::size_t di = i - j + Nv - 1;
      cplx acc(0.0);
      for (std::size_t m = 0; m < Nf; ++m)
        acc += ((1.0 - w) * table(r0, m) + w * table(r1, m)) * F(di, m);
      K(i, j) = scale * acc;
    }
  }
  return K;
}

WaveOp weyl_from_kernel(const PFunction& k, const WaveGrid& grid, double hbar,
                        const WeylConfig& cfg) {
  grid.validate();
  k.spec.validate();
  check_hbar(hbar);
  const GridSpec& g = k.spec;
  const SymbolGrid sg = symbol_grid(grid);
  const double sq = std::sqrt(hbar);
  const std::size_t Nf = 2 * grid.N_v;

  const std::vector<cplx> kh = fourier_s_at(k, hbar);
  Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::RowMajor>>
      KH(kh.data(), static_cast<Eigen::Index>(g.N_x),
         static_cast<Eigen::Index>(g.N_y));

  // table(r, m) = S_h[k](-sqrt(h) vbar_r, -sqrt(h) nu_m).
  Eigen::MatrixXcd Eq(Nf, g.N_x), Ep(Nf, g.N_y);
  for (std::size_t r = 0; r < Nf; ++r)
    for (std::size_t a = 0; a < g.N_x; ++a)
      Eq(r, a) = std::exp(-kI * (sq * sg.vbar_node(r) * g.x_node(a)));
  for (std::size_t m = 0; m < Nf; ++m)
    for (std::size_t b = 0; b < g.N_y; ++b)
      Ep(m, b) = std::exp(-kI * (sq * sg.nu_node(m) * g.y_node(b)));
  const Eigen::MatrixXcd table =
      kSqrtTwoPi * g.h_x() * g.h_y() * (Eq * KH * Ep.transpose());

  return WaveOp{hbar, RepSign::plus, grid, weyl_quantize(table, grid, cfg)};
}

double op_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  const Eigen::Index n = m.cols();
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i)
    v(i) = cplx(1.0 + 0.25 * std::sin(1.7 * static_cast<double>(i)),
                0.25 * std::cos(2.3 * static_cast<double>(i)));
  v.normalize();
  double lambda = 0.0;
  for (int iter = 0; iter < 100; ++iter) {
    Eigen::VectorXcd w = m.adjoint() * (m * v);
    const double nl = w.norm();
    if (nl == 0.0) return 0.0;
    v = w / nl;
    if (std::abs(nl - lambda) <= 1e-12 * std::max(nl, 1.0) && iter >= 20) {
      lambda = nl;
      break;
    }
    lambda = nl;
  }
  return std::sqrt(lambda);
}

BracketImageCheck check_bracket_images(const PFunction& k1, const PFunction& k2,
                                       const WaveGrid& grid, double hbar,
                                       const std::vector<double>& qs,
                                       const std::vector<double>& ps,
                                       AntiMode mode) {
  const PFunction br = pbracket(k1, k2, mode);

  BracketImageCheck out;
  {
    const WaveOp K1 = rep_quantize(k1, grid, hbar);
    const WaveOp K2 = rep_quantize(k2, grid, hbar);
    const WaveOp B = rep_quantize(br, grid, hbar);
    const Eigen::MatrixXcd C =
        (K1.matrix * K2.matrix - K2.matrix * K1.matrix) / (kI * hbar);
    out.quantum = op_norm(B.matrix - C) / op_norm(C);
  }
  {
    const ClassicalSymbol s1q = symbol_window(k1, 0.0, qs, ps, 1, 0);
    const ClassicalSymbol s1p = symbol_window(k1, 0.0, qs, ps, 0, 1);
    const ClassicalSymbol s2q = symbol_window(k2, 0.0, qs, ps, 1, 0);
    const ClassicalSymbol s2p = symbol_window(k2, 0.0, qs, ps, 0, 1);
    const ClassicalSymbol sb = rep_classical(br, qs, ps);
    const Eigen::MatrixXcd poisson = s1q.values.cwiseProduct(s2p.values) -
                                     s1p.values.cwiseProduct(s2q.values);
    const double denom = poisson.cwiseAbs().maxCoeff();
    out.classical = (sb.values - poisson).cwiseAbs().maxCoeff() /
                    (denom > 0.0 ? denom : 1.0);
  }
  return out;
}

}  // namespace pmech

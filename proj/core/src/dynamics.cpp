#include "pmech/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pmech/common.hpp"
#include "pmech/convolution.hpp"
#include "pmech/oscillator.hpp"

namespace pmech {

namespace {

constexpr cplx kI{0.0, 1.0};

PFunction apply_term(const FieldTerm& term, const PFunction& f) {
  PFunction g = f;
  for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
    g = apply_field(*it, g);
  }
  return cplx(term.coeff, 0.0) * g;
}

PFunction apply_action(const std::vector<FieldTerm>& terms, const PFunction& f) {
  PFunction acc(f.spec);
  for (const FieldTerm& term : terms) {
    acc = acc + apply_term(term, f);
  }
  return acc;
}

void check_degree(const std::vector<FieldTerm>& terms, const char* which) {
  for (const FieldTerm& term : terms) {
    if (term.factors.size() > 4) {
      throw config_error(std::string("HamiltonianSpec: ") + which +
                         " term of degree " + std::to_string(term.factors.size()) +
                         " exceeds the supported degree 4");
    }
  }
}

/// Wave-picture image of a differential Hamiltonian, assembled from the
/// derived generators acting on wave functions over the v-lattice:
///   X -> -i sqrt(hbar) v,   Y -> -sqrt(hbar) d/dv,   S -> -i hbar.
/// Terms use the left-action string; factors compose outermost-first, i.e.
/// the matrix product runs left to right over `factors`.
Eigen::MatrixXcd differential_wave_image(const std::vector<FieldTerm>& terms,
                                         const WaveGrid& grid, double hbar) {
  const auto n = static_cast<Eigen::Index>(grid.N_v);
  Eigen::MatrixXcd modes(n, n);
  Eigen::VectorXcd dnu(n);
  Eigen::VectorXcd vdiag(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v = grid.v_node(static_cast<std::size_t>(i));
    vdiag(i) = cplx(v, 0.0);
    for (Eigen::Index m = 0; m < n; ++m) {
      modes(i, m) = std::exp(kI * (v * grid.nu_node(static_cast<std::size_t>(m))));
    }
  }
  for (Eigen::Index m = 0; m < n; ++m) {
    dnu(m) = kI * grid.nu_node(static_cast<std::size_t>(m));
  }
  const Eigen::MatrixXcd ddv =
      modes * dnu.asDiagonal() * modes.adjoint() / static_cast<double>(grid.N_v);
  const double root = std::sqrt(hbar);

  auto generator = [&](FieldAxis axis) -> Eigen::MatrixXcd {
    switch (axis) {
      case FieldAxis::X:
        return (-kI * root) * Eigen::MatrixXcd(vdiag.asDiagonal());
      case FieldAxis::Y:
        return -root * ddv;
      case FieldAxis::S:
      default:
        return (-kI * hbar) * Eigen::MatrixXcd::Identity(n, n);
    }
  };

  Eigen::MatrixXcd image = Eigen::MatrixXcd::Zero(n, n);
  for (const FieldTerm& term : terms) {
    Eigen::MatrixXcd prod =
        cplx(term.coeff, 0.0) * Eigen::MatrixXcd::Identity(n, n);
    for (const InvariantField& factor : term.factors) {
      prod = prod * generator(factor.axis);
    }
    image += prod;
  }
  return image;
}

/// Classical (hbar = 0) symbol of a differential Hamiltonian: the generators
/// collapse to X -> -i q, Y -> -i p, S -> 0 on the left-action string.
cplx differential_classical_value(const std::vector<FieldTerm>& terms, double q,
                                  double p) {
  cplx acc{0.0, 0.0};
  for (const FieldTerm& term : terms) {
    cplx prod{term.coeff, 0.0};
    for (const InvariantField& factor : term.factors) {
      switch (factor.axis) {
        case FieldAxis::X:
          prod *= cplx(0.0, -q);
          break;
        case FieldAxis::Y:
          prod *= cplx(0.0, -p);
          break;
        case FieldAxis::S:
        default:
          prod = cplx(0.0, 0.0);
          break;
      }
    }
    acc += prod;
  }
  return acc;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

void HamiltonianSpec::validate() const {
  if (kind == Kind::convolution_kernel) {
    kernel.spec.validate();
    if (kernel.tail_mass() > 0.01) {
      throw config_error(
          "HamiltonianSpec: kernel mass reaches the domain boundary "
          "(tail fraction " +
          std::to_string(kernel.tail_mass()) + " > 0.01)");
    }
  } else {
    check_degree(left_action, "left_action");
    check_degree(right_action, "right_action");
  }
}

PFunction rhs(const PFunction& f, const HamiltonianSpec& H, AntiMode mode) {
  H.validate();
  if (H.kind == HamiltonianSpec::Kind::convolution_kernel) {
    return pbracket(f, H.kernel, mode);
  }
  const PFunction commutator =
      apply_action(H.left_action, f) + cplx(-1.0, 0.0) * apply_action(H.right_action, f);
  return apply_antiderivative(commutator, mode);
}

std::vector<TrajectoryState> evolve_rk4(const PFunction& f0,
                                        const HamiltonianSpec& H, double t_end,
                                        double dt, std::size_t snapshots) {
  H.validate();
  f0.spec.validate();
  if (!(dt > 0.0)) {
    throw config_error("evolve_rk4: dt must be positive");
  }
  if (t_end < 0.0) {
    throw config_error("evolve_rk4: t_end must be nonnegative");
  }
  if (H.kind == HamiltonianSpec::Kind::differential_operator) {
    const double h = std::min(f0.spec.h_x(), f0.spec.h_y());
    const double v_max = 2.0 * std::max(f0.spec.L_x, f0.spec.L_y);
    const double bound = 0.5 * h / v_max;
    if (dt > bound * (1.0 + 1e-12)) {
      throw config_error("evolve_rk4: dt = " + std::to_string(dt) +
                         " exceeds the advection stability bound 0.5 h / "
                         "v_max = " +
                         std::to_string(bound));
    }
  }

  std::vector<TrajectoryState> traj;
  traj.push_back({0.0, f0});
  if (t_end == 0.0) {
    return traj;
  }

  auto nsteps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-12));
  if (nsteps == 0) {
    nsteps = 1;
  }
  const double step = t_end / static_cast<double>(nsteps);
  if (snapshots < 2) {
    snapshots = 2;
  }
  const std::size_t keep = std::min<std::size_t>(snapshots - 1, nsteps);

  PFunction f = f0;
  const double norm0 = f0.norm();
  std::size_t next_keep = 1;
  const cplx half(0.5 * step, 0.0);
  const cplx two(2.0, 0.0);
  for (std::size_t n = 1; n <= nsteps; ++n) {
    const PFunction k1 = rhs(f, H);
    const PFunction k2 = rhs(f + half * k1, H);
    const PFunction k3 = rhs(f + half * k2, H);
    const PFunction k4 = rhs(f + cplx(step, 0.0) * k3, H);
    f = f + cplx(step / 6.0, 0.0) * (k1 + two * k2 + two * k3 + k4);
    const double t = step * static_cast<double>(n);
    if (norm0 > 0.0) {
      const double growth = f.norm() / norm0;
      if (growth > 10.0) {
        throw numerical_abort("evolve_rk4: instability, ||f|| grew by " +
                              std::to_string(growth) + "x at t = " +
                              std::to_string(t) + "; reduce dt");
      }
    }
    if (next_keep <= keep && n >= (next_keep * nsteps) / keep) {
      traj.push_back({t, f});
      ++next_keep;
    }
  }
  return traj;
}

PFunction evolve_conjugation(const PFunction& f0, const HamiltonianSpec& H,
                             double t, int max_order) {
  H.validate();
  if (H.kind != HamiltonianSpec::Kind::convolution_kernel) {
    throw config_error(
        "evolve_conjugation requires a convolution-kernel Hamiltonian");
  }
  f0.spec.validate();
  if (!(f0.spec == H.kernel.spec)) {
    throw config_error("evolve_conjugation: f0 and H live on different grids");
  }
  if (max_order < 1) {
    throw config_error("evolve_conjugation: max_order must be >= 1");
  }
  if (t == 0.0) {
    return f0;
  }
  const PFunction gen = apply_antiderivative(H.kernel, AntiMode::fourier_division);

  const double seed_scale = f0.norm();
  auto series = [&](const PFunction& seed, double direction,
                    bool multiply_left) {
    PFunction acc = seed;
    PFunction term = seed;
    double prev_norm = seed.norm();
    double rate = 0.0;
    for (int k = 1; k <= max_order; ++k) {
      // Intermediate terms widen with each factor; the series accounts for
      // the resulting truncation itself, so the boundary guard is skipped.
      const PFunction prod = multiply_left ? convolve_fast_unguarded(gen, term)
                                           : convolve_fast_unguarded(term, gen);
      term = cplx(direction * t / static_cast<double>(k), 0.0) * prod;
      acc = acc + term;
      const double term_norm = term.norm();
      if (term_norm <= 1e-13 * acc.norm()) {
        return acc;
      }
      if (prev_norm > 0.0) {
        rate = std::max(rate, static_cast<double>(k) * term_norm /
                                  (std::abs(t) * prev_norm));
      }
      if (seed_scale > 0.0 && term_norm > 1e8 * seed_scale) {
        throw numerical_abort(
            "evolve_conjugation: series diverging (term " + std::to_string(k) +
            " has relative size " + std::to_string(term_norm / seed_scale) +
            "); reduce |t|");
      }
      prev_norm = term_norm;
    }
    throw numerical_abort(
        "evolve_conjugation: series not converged within " +
        std::to_string(max_order) +
        " orders; spectral radius estimate |t| ||A|| ~= " +
        std::to_string(std::abs(t) * rate) + "; reduce |t|");
  };

  const PFunction left_half = series(f0, -1.0, true);
  return series(left_half, +1.0, false);
}

ConsistencyReport check_consistency(const std::vector<TrajectoryState>& traj,
                                    const HamiltonianSpec& H, double hbar,
                                    const WaveGrid& grid,
                                    const std::vector<double>& qs,
                                    const std::vector<double>& ps) {
  H.validate();
  if (traj.size() < 3) {
    throw config_error(
        "check_consistency needs at least three trajectory snapshots");
  }
  if (qs.empty() || ps.empty()) {
    throw config_error("check_consistency: empty classical window");
  }
  ConsistencyReport report;

  // Wave picture: dK/dt against (1 / i hbar) [K, H_h] with centered
  // differences over the snapshot spacing.
  const Eigen::MatrixXcd h_wave =
      H.kind == HamiltonianSpec::Kind::convolution_kernel
          ? rep_quantize(H.kernel, grid, hbar).matrix
          : differential_wave_image(H.left_action, grid, hbar);
  std::vector<Eigen::MatrixXcd> ops;
  ops.reserve(traj.size());
  for (const TrajectoryState& state : traj) {
    ops.push_back(rep_quantize(state.f, grid, hbar).matrix);
  }
  for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
    const double span = traj[i + 1].t - traj[i - 1].t;
    const Eigen::MatrixXcd dK = (ops[i + 1] - ops[i - 1]) / span;
    const Eigen::MatrixXcd comm =
        (ops[i] * h_wave - h_wave * ops[i]) / (kI * hbar);
    const double denom = std::max(op_norm(comm), 1e-300);
    report.heisenberg =
        std::max(report.heisenberg, op_norm(dK - comm) / denom);
  }

  // Classical picture: dS/dt against the Poisson bracket {S, H_0} on the
  // (q, p) window.
  Eigen::MatrixXcd h0_q(qs.size(), ps.size());
  Eigen::MatrixXcd h0_p(qs.size(), ps.size());
  if (H.kind == HamiltonianSpec::Kind::convolution_kernel) {
    h0_q = symbol_window(H.kernel, 0.0, qs, ps, 1, 0).values;
    h0_p = symbol_window(H.kernel, 0.0, qs, ps, 0, 1).values;
  } else {
    const double fd = 1e-5;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      for (std::size_t j = 0; j < ps.size(); ++j) {
        h0_q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            (differential_classical_value(H.left_action, qs[i] + fd, ps[j]) -
             differential_classical_value(H.left_action, qs[i] - fd, ps[j])) /
            (2.0 * fd);
        h0_p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            (differential_classical_value(H.left_action, qs[i], ps[j] + fd) -
             differential_classical_value(H.left_action, qs[i], ps[j] - fd)) /
            (2.0 * fd);
      }
    }
  }
  std::vector<Eigen::MatrixXcd> sym(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    sym[i] = symbol_window(traj[i].f, 0.0, qs, ps).values;
  }
  for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
    const double span = traj[i + 1].t - traj[i - 1].t;
    const Eigen::MatrixXcd ds = (sym[i + 1] - sym[i - 1]) / span;
    const Eigen::MatrixXcd sq =
        symbol_window(traj[i].f, 0.0, qs, ps, 1, 0).values;
    const Eigen::MatrixXcd sp =
        symbol_window(traj[i].f, 0.0, qs, ps, 0, 1).values;
    const Eigen::MatrixXcd poisson =
        sq.cwiseProduct(h0_p) - sp.cwiseProduct(h0_q);
    const double denom = std::max(max_abs(poisson), 1e-300);
    report.hamilton = std::max(report.hamilton, max_abs(ds - poisson) / denom);
  }

  // Secondary transport residual: d/ds (df/dt) = f*H - H*f.
  for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
    const double span = traj[i + 1].t - traj[i - 1].t;
    const PFunction df =
        cplx(1.0 / span, 0.0) * (traj[i + 1].f - traj[i - 1].f);
    const PFunction lhs = derivative_axis(df, Axis::s);
    PFunction commutator(traj[i].f.spec);
    if (H.kind == HamiltonianSpec::Kind::convolution_kernel) {
      commutator = convolve_fast(traj[i].f, H.kernel) -
                   convolve_fast(H.kernel, traj[i].f);
    } else {
      commutator = apply_action(H.left_action, traj[i].f) +
                   cplx(-1.0, 0.0) * apply_action(H.right_action, traj[i].f);
    }
    const double denom = std::max(commutator.norm(), 1e-300);
    report.transport_alt =
        std::max(report.transport_alt, (lhs - commutator).norm() / denom);
  }

  // Drift of the Hamiltonian along its own flow, {{H, H}} relative to H*H.
  if (H.kind == HamiltonianSpec::Kind::convolution_kernel) {
    const PFunction drift = pbracket(H.kernel, H.kernel);
    const PFunction square = convolve_fast(H.kernel, H.kernel);
    report.conservation = drift.norm() / std::max(square.norm(), 1e-300);
  }
  return report;
}

double linearity_residual(const PFunction& A, const PFunction& B,
                          const HamiltonianSpec& H, double t_end, double dt) {
  const auto ta = evolve_rk4(A, H, t_end, dt, 2);
  const auto tb = evolve_rk4(B, H, t_end, dt, 2);
  const auto tab = evolve_rk4(A + B, H, t_end, dt, 2);
  return rel_distance(ta.back().f + tb.back().f, tab.back().f);
}

double product_residual_rotation(const PFunction& A, const PFunction& B,
                                 double t) {
  const PFunction ra = oscillator_flow(A, t);
  const PFunction rb = oscillator_flow(B, t);
  const PFunction evolved_product = oscillator_flow(convolve_fast(A, B), t);
  return rel_distance(convolve_fast(ra, rb), evolved_product);
}

}  // namespace pmech

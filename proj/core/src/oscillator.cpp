#include "pmech/oscillator.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "pmech/common.hpp"
#include "pmech/fft.hpp"

namespace pmech {

namespace {

const cplx kI{0.0, 1.0};

// Energy fraction carried by the Nyquist plane along x or y; spectral
// derivatives and shears are blind to that plane.
double nyquist_fraction(const PFunction& f, Axis axis) {
  const GridSpec& g = f.spec;
  std::vector<cplx> c = f.values;
  const std::size_t plane = g.N_x * g.N_y;
  for (std::size_t j = 0; j < g.N_s; ++j) {
    cplx* slab = &c[j * plane];
    if (axis == Axis::x)
      fft::transform_many(slab, static_cast<int>(g.N_x),
                          static_cast<int>(g.N_y), static_cast<int>(g.N_y), 1,
                          -1);
    else
      fft::transform_many(slab, static_cast<int>(g.N_y),
                          static_cast<int>(g.N_x), 1, static_cast<int>(g.N_y),
                          -1);
  }
  double total = 0.0;
  for (const cplx& v : c) total += std::norm(v);
  if (total == 0.0) return 0.0;
  double nyq = 0.0;
  if (axis == Axis::x) {
    for (std::size_t j = 0; j < g.N_s; ++j)
      for (std::size_t b = 0; b < g.N_y; ++b)
        nyq += std::norm(c[g.index(j, g.N_x / 2, b)]);
  } else {
    for (std::size_t j = 0; j < g.N_s; ++j)
      for (std::size_t a = 0; a < g.N_x; ++a)
        nyq += std::norm(c[g.index(j, a, g.N_y / 2)]);
  }
  return std::sqrt(nyq / total);
}

// Exact index remap for the quarter turn: out(x, y) = f(y, -x).
PFunction quarter_turn(const PFunction& f) {
  const GridSpec& g = f.spec;
  PFunction out(g);
  const std::size_t N = g.N_x;
  for (std::size_t j = 0; j < g.N_s; ++j)
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        out.at(j, a, b) = f.at(j, b, (N - a) % N);
  return out;
}

// In-place f(x, y) <- f(x + alpha y, y): per-row spectral translation.
void shear_x(PFunction& f, double alpha) {
  const GridSpec& g = f.spec;
  const std::size_t plane = g.N_x * g.N_y;
  for (std::size_t j = 0; j < g.N_s; ++j)
    fft::transform_many(&f.values[j * plane], static_cast<int>(g.N_x),
                        static_cast<int>(g.N_y), static_cast<int>(g.N_y), 1, -1);
  const double invN = 1.0 / static_cast<double>(g.N_x);
  for (std::size_t c = 0; c < g.N_x; ++c) {
    const double cc = (c < g.N_x / 2) ? static_cast<double>(c)
                                      : static_cast<double>(c) - static_cast<double>(g.N_x);
    const double omega = kPi * cc / g.L_x;
    for (std::size_t b = 0; b < g.N_y; ++b) {
      const cplx ph = invN * std::exp(kI * (omega * alpha * g.y_node(b)));
      for (std::size_t j = 0; j < g.N_s; ++j) f.at(j, c, b) *= ph;
    }
  }
  for (std::size_t j = 0; j < g.N_s; ++j)
    fft::transform_many(&f.values[j * plane], static_cast<int>(g.N_x),
                        static_cast<int>(g.N_y), static_cast<int>(g.N_y), 1, +1);
}

// In-place f(x, y) <- f(x, y + alpha x).
void shear_y(PFunction& f, double alpha) {
  const GridSpec& g = f.spec;
  const std::size_t plane = g.N_x * g.N_y;
  for (std::size_t j = 0; j < g.N_s; ++j)
    fft::transform_many(&f.values[j * plane], static_cast<int>(g.N_y),
                        static_cast<int>(g.N_x), 1, static_cast<int>(g.N_y), -1);
  const double invN = 1.0 / static_cast<double>(g.N_y);
  for (std::size_t d = 0; d < g.N_y; ++d) {
    const double dd = (d < g.N_y / 2) ? static_cast<double>(d)
                                      : static_cast<double>(d) - static_cast<double>(g.N_y);
    const double omega = kPi * dd / g.L_y;
    for (std::size_t a = 0; a < g.N_x; ++a) {
      const cplx ph = invN * std::exp(kI * (omega * alpha * g.x_node(a)));
      for (std::size_t j = 0; j < g.N_s; ++j) f.at(j, a, d) *= ph;
    }
  }
  for (std::size_t j = 0; j < g.N_s; ++j)
    fft::transform_many(&f.values[j * plane], static_cast<int>(g.N_y),
                        static_cast<int>(g.N_x), 1, static_cast<int>(g.N_y), +1);
}

constexpr double kNyquistTolerance = 1e-8;

}  // namespace

HamiltonianSpec oscillator_hamiltonian() {
  HamiltonianSpec H;
  H.kind = HamiltonianSpec::Kind::differential_operator;
  const InvariantField Xl{FieldSide::left, FieldAxis::X, 1};
  const InvariantField Yl{FieldSide::left, FieldAxis::Y, 1};
  const InvariantField Xr{FieldSide::right, FieldAxis::X, 1};
  const InvariantField Yr{FieldSide::right, FieldAxis::Y, 1};
  H.left_action = {{-1.0, {Xl, Xl}}, {-1.0, {Yl, Yl}}};
  H.right_action = {{-1.0, {Xr, Xr}}, {-1.0, {Yr, Yr}}};
  return H;
}

PFunction transport_rhs(const PFunction& f) {
  f.spec.validate();
  const double nx = nyquist_fraction(f, Axis::x);
  const double ny = nyquist_fraction(f, Axis::y);
  if (nx > kNyquistTolerance || ny > kNyquistTolerance)
    throw numerical_abort("Nyquist violation: input energy at the grid band "
                          "limit (fractions " + std::to_string(nx) + ", " +
                          std::to_string(ny) + "); refine N_x/N_y");
  const PFunction ydx = multiply_coordinate(derivative_axis(f, Axis::x), Axis::y);
  const PFunction xdy = multiply_coordinate(derivative_axis(f, Axis::y), Axis::x);
  return cplx(2.0) * (ydx - xdy);
}

PFunction rotate_exact(const PFunction& f0, const RotationFlow& flow) {
  return rotate_exact(f0, flow.t);
}

PFunction rotate_exact(const PFunction& f0, double t) {
  const GridSpec& g = f0.spec;
  g.validate();
  if (g.N_x != g.N_y || g.L_x != g.L_y)
    throw config_error("rotate_exact: the (x, y) grid must be square");

  double th = std::fmod(t, kTwoPi);
  if (th < 0.0) th += kTwoPi;
  long q = std::lround(th / (0.5 * kPi));
  const double r = th - static_cast<double>(q) * (0.5 * kPi);
  q = ((q % 4) + 4) % 4;

  PFunction out = f0;
  for (long i = 0; i < q; ++i) out = quarter_turn(out);
  if (std::abs(r) > 1e-15) {
    const double a = std::tan(0.5 * r);
    const double b = -std::sin(r);
    shear_x(out, a);
    shear_y(out, b);
    shear_x(out, a);
  }
  return out;
}

PFunction oscillator_flow(const PFunction& f0, double t) {
  return rotate_exact(f0, 2.0 * t);
}

Eigen::MatrixXcd harmonic_generator(std::size_t N_v, double L_v) {
  WaveGrid g{N_v, L_v};
  Eigen::MatrixXcd E(N_v, N_v);
  Eigen::VectorXd nu2(N_v);
  for (std::size_t m = 0; m < N_v; ++m) nu2(m) = sqr(g.nu_node(m));
  for (std::size_t i = 0; i < N_v; ++i)
    for (std::size_t m = 0; m < N_v; ++m)
      E(i, m) = std::exp(kI * (g.v_node(i) * g.nu_node(m)));
  const Eigen::MatrixXd D2 =
      ((E * nu2.asDiagonal() * E.adjoint()) / static_cast<double>(N_v)).real();
  Eigen::MatrixXcd W = D2.cast<cplx>();
  for (std::size_t i = 0; i < N_v; ++i) W(i, i) += sqr(g.v_node(i));
  return W;
}

Eigen::MatrixXcd heisenberg_flow(const Eigen::MatrixXcd& K, std::size_t N_v,
                                 double L_v, double t) {
  const Eigen::MatrixXcd W = harmonic_generator(N_v, L_v);
  const Eigen::MatrixXcd U = (kI * t * W).exp();
  return U * K * U.adjoint();
}

PFunction smeared_oscillator_kernel(const GridSpec& g, double sigma) {
  if (!(sigma > 0.0))
    throw config_error("smeared_oscillator_kernel: sigma must be positive");
  const double s2 = sqr(sigma);
  const double norm1 = 1.0 / (sigma * kSqrtTwoPi);
  auto dse = [=](double t) { return norm1 * std::exp(-0.5 * t * t / s2); };
  auto dse2 = [=](double t) { return (t * t - s2) / (s2 * s2) * dse(t); };
  return sample(g, [=](double s, double x, double y) {
    return cplx(-(dse2(x) * dse(y) + dse(x) * dse2(y)) * dse(s));
  });
}

namespace {
const double kRichardsonWeights[3] = {8.0 / 3.0, -2.0, 1.0 / 3.0};
const double kRichardsonScales[3] = {1.0, std::sqrt(2.0), 2.0};
}  // namespace

double quantum_image_residual(const GridSpec& g, double hbar, double sigma0,
                              std::size_t N_v, double L_v) {
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(N_v, N_v);
  for (int i = 0; i < 3; ++i) {
    const PFunction k = smeared_oscillator_kernel(g, sigma0 * kRichardsonScales[i]);
    M += kRichardsonWeights[i] * rep_quadrature_matrix(k, hbar, N_v, L_v);
  }
  const Eigen::MatrixXcd T = hbar * harmonic_generator(N_v, L_v);
  return op_norm(M - T) / op_norm(T);
}

double classical_image_residual(const GridSpec& g, double sigma0,
                                const std::vector<double>& qs,
                                const std::vector<double>& ps) {
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(qs.size(), ps.size());
  for (int i = 0; i < 3; ++i) {
    const PFunction k = smeared_oscillator_kernel(g, sigma0 * kRichardsonScales[i]);
    S += kRichardsonWeights[i] * symbol_window(k, 0.0, qs, ps).values;
  }
  Eigen::MatrixXd T(qs.size(), ps.size());
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j)
      T(i, j) = sqr(qs[i]) + sqr(ps[j]);
  return (S - T.cast<cplx>()).cwiseAbs().maxCoeff() / T.cwiseAbs().maxCoeff();
}

}  // namespace pmech

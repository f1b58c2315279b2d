#include "pmech/convolution.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include "pmech/common.hpp"
#include "pmech/fft.hpp"

namespace pmech {

namespace {

const cplx kI{0.0, 1.0};

GridSpec padded_spec(const GridSpec& g) {
  return GridSpec{2.0 * g.L_s, 2.0 * g.L_x, 2.0 * g.L_y,
                  2 * g.N_s,   2 * g.N_x,   2 * g.N_y};
}

// Embeds f in the center of the 2x grid.  Node coordinates are preserved:
// padded index j + N/2 carries the same coordinate as index j of the
// original axis.
PFunction embed_centered(const PFunction& f) {
  const GridSpec& g = f.spec;
  PFunction out(padded_spec(g));
  for (std::size_t j = 0; j < g.N_s; ++j)
    for (std::size_t a = 0; a < g.N_x; ++a)
      for (std::size_t b = 0; b < g.N_y; ++b)
        out.at(j + g.N_s / 2, a + g.N_x / 2, b + g.N_y / 2) = f.at(j, a, b);
  return out;
}

PFunction crop_centered(const PFunction& p, const GridSpec& g) {
  PFunction out(g);
  for (std::size_t j = 0; j < g.N_s; ++j)
    for (std::size_t a = 0; a < g.N_x; ++a)
      for (std::size_t b = 0; b < g.N_y; ++b)
        out.at(j, a, b) = p.at(j + g.N_s / 2, a + g.N_x / 2, b + g.N_y / 2);
  return out;
}

// Boundary-hazard fraction of an operand.  A component that is constant
// along s is periodic by construction, so it cannot leak across the s
// boundary; antiderivatives carry exactly such a component.  The s shell
// therefore measures only the deviation from each (x, y) column's s-mean,
// while the x and y shells measure the full values.
double boundary_hazard(const PFunction& f) {
  const GridSpec& g = f.spec;
  const std::size_t plane = g.N_x * g.N_y;
  std::vector<cplx> mean(plane, cplx(0.0));
  for (std::size_t j = 0; j < g.N_s; ++j)
    for (std::size_t t = 0; t < plane; ++t) mean[t] += f.values[j * plane + t];
  for (cplx& m : mean) m /= static_cast<double>(g.N_s);

  double total = 0.0;
  double shell = 0.0;
  for (std::size_t j = 0; j < g.N_s; ++j) {
    const bool js = std::abs(g.s_node(j)) >= 0.75 * g.L_s;
    for (std::size_t a = 0; a < g.N_x; ++a) {
      const bool as = std::abs(g.x_node(a)) >= 0.75 * g.L_x;
      for (std::size_t b = 0; b < g.N_y; ++b) {
        const cplx v = f.values[j * plane + a * g.N_y + b];
        total += std::norm(v);
        if (as || std::abs(g.y_node(b)) >= 0.75 * g.L_y)
          shell += std::norm(v);
        else if (js)
          shell += std::norm(v - mean[a * g.N_y + b]);
      }
    }
  }
  return total == 0.0 ? 0.0 : shell / total;
}

void check_grids(const PFunction& k1, const PFunction& k2) {
  if (!(k1.spec == k2.spec))
    throw config_error("convolve: operands live on different grids");
  k1.spec.validate();
}

void check_pair(const PFunction& k1, const PFunction& k2) {
  check_grids(k1, k2);
  const double t1 = boundary_hazard(k1);
  const double t2 = boundary_hazard(k2);
  if (t1 > 0.01 || t2 > 0.01) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g, %g", t1, t2);
    throw config_error("convolve: operand mass reaches the domain boundary "
                       "(tail fractions " + std::string(buf) +
                       "; enlarge the grid)");
  }
}

std::vector<double> axis_nodes(double L, std::size_t N) {
  std::vector<double> v(N);
  const double h = 2.0 * L / static_cast<double>(N);
  for (std::size_t i = 0; i < N; ++i) v[i] = -L + h * static_cast<double>(i);
  return v;
}

// Twisted phase table P[i,j] = e^{ i hbar x_i y_j / 2 }.
std::vector<cplx> phase_table(std::size_t Nx, std::size_t Ny, const double* xs,
                              const double* ys, double hbar) {
  std::vector<cplx> P(Nx * Ny);
  for (std::size_t i = 0; i < Nx; ++i) {
    const double f = 0.5 * hbar * xs[i];
    for (std::size_t j = 0; j < Ny; ++j)
      P[i * Ny + j] = std::exp(kI * (f * ys[j]));
  }
  return P;
}

// b recentred so that row/column offsets index displacements directly:
// br[m,n] = b[(m + Nx/2) mod Nx, (n + Ny/2) mod Ny], hence
// b(x_i - x_k, y_j - y_l) = br[(i-k) mod Nx, (j-l) mod Ny].
std::vector<cplx> recentre(const cplx* b, std::size_t Nx, std::size_t Ny) {
  std::vector<cplx> br(Nx * Ny);
  for (std::size_t m = 0; m < Nx; ++m) {
    const std::size_t ms = (m + Nx / 2) % Nx;
    for (std::size_t n = 0; n < Ny; ++n)
      br[m * Ny + n] = b[ms * Ny + (n + Ny / 2) % Ny];
  }
  return br;
}

}  // namespace

void twisted_convolution_slice(const cplx* a, const cplx* b, cplx* out,
                               std::size_t Nx, std::size_t Ny,
                               const double* xs, const double* ys,
                               double hx, double hy, double hbar) {
  const std::vector<cplx> P = phase_table(Nx, Ny, xs, ys, hbar);
  std::vector<cplx> fbr = recentre(b, Nx, Ny);
  fft::transform_many(fbr.data(), static_cast<int>(Ny), static_cast<int>(Nx),
                      1, static_cast<int>(Ny), -1);

  std::vector<cplx> work(Nx * Ny);
  std::vector<cplx> acc(Ny);
  const double scale = hx * hy / static_cast<double>(Ny);

  for (std::size_t i = 0; i < Nx; ++i) {
    // work[k,:] = a[k,:] .* P[i,:]  — attach the e^{i hbar x_i y' / 2} factor.
    const cplx* Pi = &P[i * Ny];
    for (std::size_t k = 0; k < Nx; ++k)
      for (std::size_t j = 0; j < Ny; ++j)
        work[k * Ny + j] = a[k * Ny + j] * Pi[j];
    // Convolve along y against row (i - k) of the recentred b.
    fft::transform_many(work.data(), static_cast<int>(Ny),
                        static_cast<int>(Nx), 1, static_cast<int>(Ny), -1);
    for (std::size_t k = 0; k < Nx; ++k) {
      const cplx* fb = &fbr[((i + Nx - k) % Nx) * Ny];
      for (std::size_t j = 0; j < Ny; ++j) work[k * Ny + j] *= fb[j];
    }
    fft::transform_many(work.data(), static_cast<int>(Ny),
                        static_cast<int>(Nx), 1, static_cast<int>(Ny), +1);
    // Contract over k with the conjugate phase e^{-i hbar x' y_j / 2}.
    std::fill(acc.begin(), acc.end(), cplx(0.0));
    for (std::size_t k = 0; k < Nx; ++k) {
      const cplx* Pk = &P[k * Ny];
      const cplx* wk = &work[k * Ny];
      for (std::size_t j = 0; j < Ny; ++j) acc[j] += std::conj(Pk[j]) * wk[j];
    }
    for (std::size_t j = 0; j < Ny; ++j) out[i * Ny + j] = scale * acc[j];
  }
}

PFunction convolve_fast(const PFunction& k1, const PFunction& k2) {
  check_pair(k1, k2);
  return convolve_fast_unguarded(k1, k2);
}

PFunction convolve_fast_unguarded(const PFunction& k1, const PFunction& k2) {
  check_grids(k1, k2);
  const GridSpec g = k1.spec;
  const PFunction p1 = embed_centered(k1);
  const PFunction p2 = embed_centered(k2);
  const GridSpec pg = p1.spec;

  const SlicedFunction s1 = fourier_s(p1);
  const SlicedFunction s2 = fourier_s(p2);
  SlicedFunction so(pg);

  const std::vector<double> xs = axis_nodes(pg.L_x, pg.N_x);
  const std::vector<double> ys = axis_nodes(pg.L_y, pg.N_y);
  const std::size_t plane = pg.N_x * pg.N_y;

  for (std::size_t m = 0; m < pg.N_s; ++m) {
    twisted_convolution_slice(&s1.slices[m * plane], &s2.slices[m * plane],
                              &so.slices[m * plane], pg.N_x, pg.N_y, xs.data(),
                              ys.data(), pg.h_x(), pg.h_y(), pg.hbar_node(m));
    for (std::size_t t = 0; t < plane; ++t) so.slices[m * plane + t] *= kSqrtTwoPi;
  }
  return crop_centered(inverse_fourier_s(so), g);
}

namespace {

// Direct twisted sum at one padded output node (i, j) of slice m.
cplx direct_slice_value(const cplx* a, const cplx* b, std::size_t Nx,
                        std::size_t Ny, const double* xs, const double* ys,
                        double hx, double hy, double hbar, std::size_t i,
                        std::size_t j) {
  cplx acc(0.0);
  for (std::size_t k = 0; k < Nx; ++k) {
    const std::size_t ik = (i + Nx - k) % Nx;
    // b(x_i - x_k, y_j - y_l) lives at recentred indices; fold the +N/2
    // offsets directly into the lookups.
    const std::size_t bi = (ik + Nx / 2) % Nx;
    const double phase_k = -0.5 * hbar * xs[k] * ys[j];
    for (std::size_t l = 0; l < Ny; ++l) {
      const std::size_t bj = ((j + Ny - l) % Ny + Ny / 2) % Ny;
      const double phase = 0.5 * hbar * xs[i] * ys[l] + phase_k;
      acc += a[k * Ny + l] * b[bi * Ny + bj] * std::exp(kI * phase);
    }
  }
  return acc * (hx * hy);
}

constexpr std::size_t kDirectBudget = std::size_t(1) << 26;

std::size_t direct_cost(const GridSpec& g) {
  return (g.N_x * g.N_y) * (4 * g.N_x * g.N_y) * (2 * g.N_s);
}

}  // namespace

PFunction convolve_direct(const PFunction& k1, const PFunction& k2) {
  check_pair(k1, k2);
  const GridSpec g = k1.spec;
  if (direct_cost(g) > kDirectBudget)
    throw config_error("convolve_direct: full literal sum needs " +
                       std::to_string(direct_cost(g)) +
                       " inner terms (budget 2^26); use convolve_direct_at");

  const PFunction p1 = embed_centered(k1);
  const PFunction p2 = embed_centered(k2);
  const GridSpec pg = p1.spec;
  const SlicedFunction s1 = fourier_s(p1);
  const SlicedFunction s2 = fourier_s(p2);
  SlicedFunction so(pg);

  const std::vector<double> xs = axis_nodes(pg.L_x, pg.N_x);
  const std::vector<double> ys = axis_nodes(pg.L_y, pg.N_y);
  const std::size_t plane = pg.N_x * pg.N_y;

  // Only the central crop window of each slice feeds the final result: the
  // inverse s-transform acts per (x, y) column.
  for (std::size_t m = 0; m < pg.N_s; ++m) {
    const double hb = pg.hbar_node(m);
    const cplx* a = &s1.slices[m * plane];
    const cplx* b = &s2.slices[m * plane];
    for (std::size_t i = g.N_x / 2; i < g.N_x / 2 + g.N_x; ++i)
      for (std::size_t j = g.N_y / 2; j < g.N_y / 2 + g.N_y; ++j)
        so.at(m, i, j) = kSqrtTwoPi * direct_slice_value(a, b, pg.N_x, pg.N_y,
                                                         xs.data(), ys.data(),
                                                         pg.h_x(), pg.h_y(),
                                                         hb, i, j);
  }
  return crop_centered(inverse_fourier_s(so), g);
}

std::vector<cplx> convolve_direct_at(
    const PFunction& k1, const PFunction& k2,
    const std::vector<std::array<std::size_t, 3>>& points) {
  check_pair(k1, k2);
  const GridSpec g = k1.spec;
  const PFunction p1 = embed_centered(k1);
  const PFunction p2 = embed_centered(k2);
  const GridSpec pg = p1.spec;
  const SlicedFunction s1 = fourier_s(p1);
  const SlicedFunction s2 = fourier_s(p2);

  const std::vector<double> xs = axis_nodes(pg.L_x, pg.N_x);
  const std::vector<double> ys = axis_nodes(pg.L_y, pg.N_y);
  const std::size_t plane = pg.N_x * pg.N_y;

  std::vector<cplx> out;
  out.reserve(points.size());
  std::vector<cplx> column(pg.N_s);
  for (const auto& pt : points) {
    if (pt[0] >= g.N_s || pt[1] >= g.N_x || pt[2] >= g.N_y)
      throw config_error("convolve_direct_at: point outside the grid");
    const std::size_t i = pt[1] + g.N_x / 2;
    const std::size_t j = pt[2] + g.N_y / 2;
    for (std::size_t m = 0; m < pg.N_s; ++m)
      column[m] = kSqrtTwoPi *
                  direct_slice_value(&s1.slices[m * plane], &s2.slices[m * plane],
                                     pg.N_x, pg.N_y, xs.data(), ys.data(),
                                     pg.h_x(), pg.h_y(), pg.hbar_node(m), i, j);
    // Invert the s-transform at the single requested node.
    const double dhb = pg.hbar_step();
    const double s = pg.s_node(pt[0] + g.N_s / 2);
    cplx acc(0.0);
    for (std::size_t m = 0; m < pg.N_s; ++m)
      acc += column[m] * std::exp(kI * (s * pg.hbar_node(m)));
    out.push_back(acc * (dhb / kSqrtTwoPi));
  }
  return out;
}

}  // namespace pmech

#include "pmech/grid.hpp"

#include <algorithm>
#include <cmath>

#include "pmech/fft.hpp"

namespace pmech {

double l2_norm(const std::vector<cplx>& v) {
  double acc = 0.0;
  for (const cplx& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

double l2_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) throw config_error("l2_distance: size mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::norm(a[i] - b[i]);
  return std::sqrt(acc);
}

double rel_l2_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  const double d = l2_distance(a, b);
  const double n = l2_norm(b);
  if (n == 0.0) return d == 0.0 ? 0.0 : d;
  return d / n;
}

namespace {

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Signed dual frequencies in natural FFT order: m -> pi*m/L for m < N/2,
// pi*(m-N)/L for m >= N/2 (so the Nyquist entry is the negative one).
std::vector<double> fft_freqs(std::size_t n, double L) {
  std::vector<double> w(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double mm = (m < n / 2) ? static_cast<double>(m)
                                  : static_cast<double>(m) - static_cast<double>(n);
    w[m] = kPi * mm / L;
  }
  return w;
}

}  // namespace

void GridSpec::validate() const {
  if (!(L_s > 0.0) || !(L_x > 0.0) || !(L_y > 0.0))
    throw config_error("GridSpec: extents must be positive");
  for (std::size_t n : {N_s, N_x, N_y}) {
    if (!power_of_two(n) || n < 16)
      throw config_error("GridSpec: node counts must be powers of two, at least 16");
  }
}

double PFunction::tail_mass() const {
  double total = 0.0;
  double shell = 0.0;
  for (std::size_t j = 0; j < spec.N_s; ++j) {
    const bool js = std::abs(spec.s_node(j)) >= 0.75 * spec.L_s;
    for (std::size_t a = 0; a < spec.N_x; ++a) {
      const bool as = js || std::abs(spec.x_node(a)) >= 0.75 * spec.L_x;
      for (std::size_t b = 0; b < spec.N_y; ++b) {
        const double m = std::norm(values[spec.index(j, a, b)]);
        total += m;
        if (as || std::abs(spec.y_node(b)) >= 0.75 * spec.L_y) shell += m;
      }
    }
  }
  return total == 0.0 ? 0.0 : shell / total;
}

double PFunction::norm() const {
  return std::sqrt(spec.h_s() * spec.h_x() * spec.h_y()) * l2_norm(values);
}

PFunction operator+(const PFunction& a, const PFunction& b) {
  if (!(a.spec == b.spec)) throw config_error("PFunction +: grid mismatch");
  PFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

PFunction operator-(const PFunction& a, const PFunction& b) {
  if (!(a.spec == b.spec)) throw config_error("PFunction -: grid mismatch");
  PFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
  return out;
}

PFunction operator*(cplx scale, const PFunction& f) {
  PFunction out = f;
  for (cplx& z : out.values) z *= scale;
  return out;
}

double rel_distance(const PFunction& a, const PFunction& b) {
  if (!(a.spec == b.spec)) throw config_error("rel_distance: grid mismatch");
  return rel_l2_distance(a.values, b.values);
}

SlicedFunction::SlicedFunction(const GridSpec& g)
    : spec(g), slices(g.size(), cplx(0.0)), hbar_grid(g.N_s) {
  for (std::size_t m = 0; m < g.N_s; ++m) hbar_grid[m] = g.hbar_node(m);
}

SlicedFunction fourier_s(const PFunction& f) {
  const GridSpec& g = f.spec;
  SlicedFunction out(g);
  out.slices = f.values;

  const std::size_t plane = g.N_x * g.N_y;
  // Alternate signs along s so a plain FFT lands on the centered dual grid.
  for (std::size_t j = 1; j < g.N_s; j += 2) {
    cplx* row = out.slices.data() + j * plane;
    for (std::size_t i = 0; i < plane; ++i) row[i] = -row[i];
  }
  fft::transform_many(out.slices.data(), static_cast<int>(g.N_s),
                      static_cast<int>(plane), static_cast<int>(plane), 1, -1);
  const double base = g.h_s() / kSqrtTwoPi;
  const double parity = (g.N_s / 2) % 2 == 0 ? 1.0 : -1.0;
  for (std::size_t m = 0; m < g.N_s; ++m) {
    const double w = base * parity * ((m % 2 == 0) ? 1.0 : -1.0);
    cplx* row = out.slices.data() + m * plane;
    for (std::size_t i = 0; i < plane; ++i) row[i] *= w;
  }
  return out;
}

PFunction inverse_fourier_s(const SlicedFunction& fs) {
  const GridSpec& g = fs.spec;
  PFunction out(g);
  out.values = fs.slices;

  const std::size_t plane = g.N_x * g.N_y;
  const double base = g.hbar_step() / kSqrtTwoPi;
  const double parity = (g.N_s / 2) % 2 == 0 ? 1.0 : -1.0;
  for (std::size_t m = 0; m < g.N_s; ++m) {
    const double w = base * parity * ((m % 2 == 0) ? 1.0 : -1.0);
    cplx* row = out.values.data() + m * plane;
    for (std::size_t i = 0; i < plane; ++i) row[i] *= w;
  }
  fft::transform_many(out.values.data(), static_cast<int>(g.N_s),
                      static_cast<int>(plane), static_cast<int>(plane), 1, +1);
  for (std::size_t j = 1; j < g.N_s; j += 2) {
    cplx* row = out.values.data() + j * plane;
    for (std::size_t i = 0; i < plane; ++i) row[i] = -row[i];
  }
  return out;
}

std::vector<cplx> fourier_s_at(const PFunction& f, double hbar) {
  const GridSpec& g = f.spec;
  const std::size_t plane = g.N_x * g.N_y;
  std::vector<cplx> out(plane, cplx(0.0));
  const double w = g.h_s() / kSqrtTwoPi;
  for (std::size_t j = 0; j < g.N_s; ++j) {
    const double ph = -g.s_node(j) * hbar;
    const cplx e = w * cplx(std::cos(ph), std::sin(ph));
    const cplx* row = f.values.data() + j * plane;
    for (std::size_t i = 0; i < plane; ++i) out[i] += e * row[i];
  }
  return out;
}

PFunction sample(const GridSpec& spec, const ClosedForm& fn) {
  spec.validate();
  PFunction out(spec);
  for (std::size_t j = 0; j < spec.N_s; ++j) {
    const double s = spec.s_node(j);
    for (std::size_t a = 0; a < spec.N_x; ++a) {
      const double x = spec.x_node(a);
      for (std::size_t b = 0; b < spec.N_y; ++b) {
        out.values[spec.index(j, a, b)] = fn(s, x, spec.y_node(b));
      }
    }
  }
  const double tm = out.tail_mass();
  if (tm >= 0.01) {
    throw config_error("sample: domain too small (tail mass " + std::to_string(tm) +
                       " >= 0.01)");
  }
  return out;
}

cplx quadrature(const PFunction& f) {
  cplx acc(0.0);
  for (const cplx& z : f.values) acc += z;
  return acc * (f.spec.h_s() * f.spec.h_x() * f.spec.h_y());
}

cplx quadrature_s_moment(const PFunction& f, int power) {
  const GridSpec& g = f.spec;
  const std::size_t plane = g.N_x * g.N_y;
  cplx acc(0.0);
  for (std::size_t j = 0; j < g.N_s; ++j) {
    const double w = power == 1 ? g.s_node(j) : std::pow(g.s_node(j), power);
    const cplx* row = f.values.data() + j * plane;
    cplx part(0.0);
    for (std::size_t i = 0; i < plane; ++i) part += row[i];
    acc += w * part;
  }
  return acc * (g.h_s() * g.h_x() * g.h_y());
}

std::vector<cplx> shift_interp(const std::vector<cplx>& u, double L, double a) {
  const std::size_t n = u.size();
  std::vector<cplx> out = u;
  fft::transform(out.data(), static_cast<int>(n), -1);
  const std::vector<double> w = fft_freqs(n, L);
  for (std::size_t m = 0; m < n; ++m) {
    const double ph = w[m] * a;
    out[m] *= cplx(std::cos(ph), std::sin(ph)) / static_cast<double>(n);
  }
  fft::transform(out.data(), static_cast<int>(n), +1);
  return out;
}

PFunction shift_s(const PFunction& f, double a) {
  const GridSpec& g = f.spec;
  PFunction out = f;
  const std::size_t plane = g.N_x * g.N_y;
  fft::transform_many(out.values.data(), static_cast<int>(g.N_s),
                      static_cast<int>(plane), static_cast<int>(plane), 1, -1);
  const std::vector<double> w = fft_freqs(g.N_s, g.L_s);
  for (std::size_t m = 0; m < g.N_s; ++m) {
    const double ph = w[m] * a;
    const cplx e = cplx(std::cos(ph), std::sin(ph)) / static_cast<double>(g.N_s);
    cplx* row = out.values.data() + m * plane;
    for (std::size_t i = 0; i < plane; ++i) row[i] *= e;
  }
  fft::transform_many(out.values.data(), static_cast<int>(g.N_s),
                      static_cast<int>(plane), static_cast<int>(plane), 1, +1);
  return out;
}

PFunction derivative_axis(const PFunction& f, Axis axis) {
  const GridSpec& g = f.spec;
  PFunction out = f;
  cplx* base = out.values.data();

  auto scale_modes = [](cplx* data, const std::vector<double>& w, std::size_t n,
                        std::size_t stride, std::size_t block) {
    // Multiplies mode m (at offset m*stride, for `block` contiguous entries)
    // by i*w[m]/n, zeroing the Nyquist mode.
    for (std::size_t m = 0; m < n; ++m) {
      const cplx factor = (m == n / 2) ? cplx(0.0)
                                       : cplx(0.0, w[m] / static_cast<double>(n));
      cplx* row = data + m * stride;
      for (std::size_t i = 0; i < block; ++i) row[i] *= factor;
    }
  };

  if (axis == Axis::s) {
    const std::size_t plane = g.N_x * g.N_y;
    fft::transform_many(base, static_cast<int>(g.N_s), static_cast<int>(plane),
                        static_cast<int>(plane), 1, -1);
    const std::vector<double> w = fft_freqs(g.N_s, g.L_s);
    scale_modes(base, w, g.N_s, plane, plane);
    fft::transform_many(base, static_cast<int>(g.N_s), static_cast<int>(plane),
                        static_cast<int>(plane), 1, +1);
  } else if (axis == Axis::x) {
    const std::vector<double> w = fft_freqs(g.N_x, g.L_x);
    for (std::size_t j = 0; j < g.N_s; ++j) {
      cplx* slab = base + j * g.N_x * g.N_y;
      fft::transform_many(slab, static_cast<int>(g.N_x), static_cast<int>(g.N_y),
                          static_cast<int>(g.N_y), 1, -1);
      scale_modes(slab, w, g.N_x, g.N_y, g.N_y);
      fft::transform_many(slab, static_cast<int>(g.N_x), static_cast<int>(g.N_y),
                          static_cast<int>(g.N_y), 1, +1);
    }
  } else {
    const std::vector<double> w = fft_freqs(g.N_y, g.L_y);
    for (std::size_t j = 0; j < g.N_s; ++j) {
      cplx* slab = base + j * g.N_x * g.N_y;
      fft::transform_many(slab, static_cast<int>(g.N_y), static_cast<int>(g.N_x), 1,
                          static_cast<int>(g.N_y), -1);
      for (std::size_t a = 0; a < g.N_x; ++a) {
        cplx* row = slab + a * g.N_y;
        for (std::size_t m = 0; m < g.N_y; ++m) {
          row[m] *= (m == g.N_y / 2)
                        ? cplx(0.0)
                        : cplx(0.0, w[m] / static_cast<double>(g.N_y));
        }
      }
      fft::transform_many(slab, static_cast<int>(g.N_y), static_cast<int>(g.N_x), 1,
                          static_cast<int>(g.N_y), +1);
    }
  }
  return out;
}

PFunction multiply_coordinate(const PFunction& f, Axis axis) {
  const GridSpec& g = f.spec;
  PFunction out = f;
  for (std::size_t j = 0; j < g.N_s; ++j) {
    for (std::size_t a = 0; a < g.N_x; ++a) {
      for (std::size_t b = 0; b < g.N_y; ++b) {
        const double c = axis == Axis::s ? g.s_node(j)
                        : axis == Axis::x ? g.x_node(a)
                                          : g.y_node(b);
        out.values[g.index(j, a, b)] *= c;
      }
    }
  }
  return out;
}

}  // namespace pmech

#include <array>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "pmech/convolution.hpp"
#include "pmech/grid.hpp"
#include "pmech/signals.hpp"

#include "helpers.hpp"

using namespace pmech;

TEST_SUITE("convolution") {
  TEST_CASE("gaussian convolution matches the twisted closed form") {
    // The s box must hold the *convolved* tilted profile (width sqrt(2)
    // sigma_s) to rounding, since the closed form below is the full-line
    // transform; 16 transverse nodes at the balanced width leave the
    // interior x,y floor near 3.5e-6.
    const GridSpec g{20.0, 6.0, 6.0, 64, 16, 16};
    const double sigma = balanced_sigma(6.0, 16);
    GaussianParams par;
    par.sigma_s = 2.0;
    par.sigma_x = sigma;
    par.sigma_y = sigma;
    par.a1 = 0.25;
    const TestSignal sig{"twisted_probe", par};
    const PFunction k = sample_signal(g, sig);
    const PFunction c = convolve_fast(k, k);

    const double alpha = 1.0 / (2.0 * sigma * sigma);
    for (const double hbar : {0.0, 0.5, 1.0}) {
      const std::vector<cplx> slice = fourier_s_at(c, hbar);
      const cplx phi = par.sigma_s *
                       std::exp(-0.5 * par.sigma_s * par.sigma_s * hbar * hbar) *
                       cplx(par.a0, -par.a1 * par.sigma_s * par.sigma_s * hbar);
      const double theta = 0.5 * hbar;
      const double width = (4.0 * alpha * alpha + theta * theta) / (8.0 * alpha);
      double worst = 0.0;
      double scale = 0.0;
      for (std::size_t a = 0; a < g.N_x; ++a) {
        for (std::size_t b = 0; b < g.N_y; ++b) {
          const double x = g.x_node(a);
          const double y = g.y_node(b);
          if (std::abs(x) > 3.0 || std::abs(y) > 3.0) {
            continue;  // keep clear of the periodic images
          }
          const cplx expect = kSqrtTwoPi * phi * phi * (kPi / (2.0 * alpha)) *
                              std::exp(-width * (x * x + y * y));
          worst = std::max(worst, std::abs(slice[a * g.N_y + b] - expect));
          scale = std::max(scale, std::abs(expect));
        }
      }
      CHECK(worst <= 4e-6 * scale);
    }
  }

  TEST_CASE("fast and direct routes agree") {
    const GridSpec g = oracle_grid_16();
    const auto catalog = random_catalog(g, 6, 911u);
    for (int i = 0; i < 3; ++i) {
      const PFunction a = sample_signal(g, catalog[2 * i]);
      const PFunction b = sample_signal(g, catalog[2 * i + 1]);
      const PFunction fast = convolve_fast(a, b);
      const PFunction direct = convolve_direct(a, b);
      CHECK(rel_distance(fast, direct) <= 1e-8);
    }
  }

  TEST_CASE("pointwise direct evaluation matches the full direct route") {
    const GridSpec g = oracle_grid_16();
    const auto catalog = random_catalog(g, 2, 417u);
    const PFunction a = sample_signal(g, catalog[0]);
    const PFunction b = sample_signal(g, catalog[1]);
    const PFunction direct = convolve_direct(a, b);
    const std::vector<std::array<std::size_t, 3>> points{
        {0, 0, 0}, {8, 8, 8}, {3, 14, 7}, {15, 1, 9}, {5, 4, 12}};
    const std::vector<cplx> at = convolve_direct_at(a, b, points);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& p = points[i];
      CHECK(std::abs(at[i] - direct.at(p[0], p[1], p[2])) <= 1e-12);
    }
  }

  TEST_CASE("center slice equals the plain planar convolution") {
    const GridSpec g = oracle_grid_16();
    const auto catalog = random_catalog(g, 2, 5150u);
    const PFunction a = sample_signal(g, catalog[0]);
    const PFunction b = sample_signal(g, catalog[1]);
    const PFunction c = convolve_fast(a, b);

    const std::vector<cplx> ca = fourier_s_at(a, 0.0);
    const std::vector<cplx> got = fourier_s_at(c, 0.0);
    const TestSignal& sb = catalog[1];
    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < g.N_x; ++i) {
      for (std::size_t j = 0; j < g.N_y; ++j) {
        cplx acc{0.0, 0.0};
        for (std::size_t k = 0; k < g.N_x; ++k) {
          for (std::size_t l = 0; l < g.N_y; ++l) {
            acc += ca[k * g.N_y + l] *
                   sb.fourier_slice(0.0, g.x_node(i) - g.x_node(k),
                                    g.y_node(j) - g.y_node(l));
          }
        }
        const cplx expect = kSqrtTwoPi * g.h_x() * g.h_y() * acc;
        worst = std::max(worst, std::abs(got[i * g.N_y + j] - expect));
        scale = std::max(scale, std::abs(expect));
      }
    }
    // Floor: the half-line closed form for b aliases at ~2e-7 on this s
    // step, and the convolved s tail leaves the box at ~1e-7.
    CHECK(worst <= 2e-6 * scale);
  }

  TEST_CASE("direct route refuses over-budget grids") {
    const GridSpec g = catalog_grid_32();
    const auto catalog = random_catalog(g, 2, 31u);
    const PFunction a = sample_signal(g, catalog[0]);
    const PFunction b = sample_signal(g, catalog[1]);
    CHECK_THROWS_AS((void)convolve_direct(a, b), config_error);
  }

  TEST_CASE("mismatched grids and boundary mass are rejected") {
    const PFunction small(oracle_grid_16());
    const PFunction big(catalog_grid_32());
    CHECK_THROWS_AS((void)convolve_fast(small, big), config_error);

    PFunction ones(oracle_grid_16());
    for (cplx& v : ones.values) {
      v = cplx(1.0, 0.0);
    }
    CHECK_THROWS_AS((void)convolve_fast(ones, ones), config_error);
  }
}

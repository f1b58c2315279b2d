#include <cmath>

#include <doctest.h>

#include "pmech/convolution.hpp"
#include "pmech/grid.hpp"
#include "pmech/pbracket.hpp"
#include "pmech/signals.hpp"

#include "helpers.hpp"

using namespace pmech;

namespace {

const double kRootHalf = 1.0 / std::sqrt(2.0);

// Closed-form comparisons along s need h_s small enough that the trapezoid
// aliasing of exp(-s^2) (~exp(-(pi/h_s)^2/4)) sits below the pins.
GridSpec fine_s_grid() { return GridSpec{8.0, 6.0, 6.0, 64, 32, 32}; }

}  // namespace

TEST_SUITE("bracket") {
  TEST_CASE("antiderivative of s exp(-s^2) is -exp(-s^2)/2") {
    GaussianParams par;
    par.a0 = 0.0;
    par.a1 = 1.0;
    par.sigma_s = kRootHalf;
    par.sigma_x = 0.8;
    par.sigma_y = 0.9;
    const PFunction k =
        sample_signal(fine_s_grid(), TestSignal{"odd_s", par});

    GaussianParams expect_par = par;
    expect_par.a0 = 1.0;
    expect_par.a1 = 0.0;
    const PFunction base =
        sample_signal(fine_s_grid(), TestSignal{"even_s", expect_par});
    const PFunction expect = cplx(-0.5, 0.0) * base;

    for (const AntiMode mode :
         {AntiMode::fourier_division, AntiMode::grid_cumulative}) {
      const PFunction anti = apply_antiderivative(k, mode);
      CHECK(testutil::max_abs_diff(anti, expect) <=
            1e-9 * testutil::max_abs(expect));
    }
  }

  TEST_CASE("both antiderivative routes agree on zero-mean signals") {
    const GridSpec g = catalog_grid_32();
    auto catalog = random_catalog(g, 3, 77u);
    for (auto& sig : catalog) {
      sig.par.a0 = 0.0;
      sig.par.a1 = 0.2;
      const PFunction k = sample_signal(g, sig);
      const PFunction a = apply_antiderivative(k, AntiMode::fourier_division);
      const PFunction b = apply_antiderivative(k, AntiMode::grid_cumulative);
      // The routes differ near hbar = 0, where division by i*hbar amplifies
      // the slice mismatch left by grid tails; observed ~2.5e-9 here.
      CHECK(rel_distance(a, b) <= 1e-7);
    }
  }

  TEST_CASE("antiderivative inverts the center derivative") {
    GaussianParams par;
    // sigma_s = 1 keeps the edge samples near exp(-32): the hbar = 0 moment
    // reconstruction is exact up to boundary terms of the summation by parts.
    par.sigma_s = 1.0;
    par.sigma_x = 0.7;
    par.sigma_y = 0.8;
    par.a1 = 0.3;
    const PFunction k =
        sample_signal(fine_s_grid(), TestSignal{"probe", par});
    const PFunction dk = derivative_axis(k, Axis::s);
    for (const AntiMode mode :
         {AntiMode::fourier_division, AntiMode::grid_cumulative}) {
      const PFunction back = apply_antiderivative(dk, mode);
      CHECK(rel_distance(back, k) <= 1e-8);
    }
  }

  TEST_CASE("nonzero center mass is rejected") {
    GaussianParams par;  // a0 = 1: the hbar = 0 slice carries mass
    const PFunction k =
        sample_signal(catalog_grid_32(), TestSignal{"meanful", par});
    CHECK(zero_slice_fraction(k) > kZeroSliceTolerance);
    CHECK_THROWS_AS(
        (void)apply_antiderivative(k, AntiMode::fourier_division),
        config_error);
  }

  TEST_CASE("antiderivative commutes with grid-step shifts along s") {
    // The cumulative route re-anchors at the left edge, so the signal must
    // be resolved by the grid (undersampled Gaussians ring across the whole
    // box) and must leave no mass inside the shift window.  sigma_s = 1.6 on
    // the 64-node grid puts both effects below 1e-14.
    const GridSpec g = bracket_grid_64();
    GaussianParams par;
    par.a0 = 0.0;
    par.a1 = 0.4;
    par.sigma_s = 1.6;
    par.sigma_x = 0.7;
    par.sigma_y = 0.8;
    par.x0 = 0.1;
    par.y0 = -0.2;
    const PFunction k = sample_signal(g, TestSignal{"shift_probe", par});
    const double step = 3.0 * g.h_s();
    for (const AntiMode mode :
         {AntiMode::fourier_division, AntiMode::grid_cumulative}) {
      const PFunction lhs = apply_antiderivative(shift_s(k, step), mode);
      const PFunction rhs = shift_s(apply_antiderivative(k, mode), step);
      CHECK(rel_distance(lhs, rhs) <= 1e-9);
    }
  }

  TEST_CASE("bracket is antisymmetric") {
    const GridSpec g = catalog_grid_32();
    const auto catalog = random_catalog(g, 2, 404u);
    const PFunction a = sample_signal(g, catalog[0]);
    const PFunction b = sample_signal(g, catalog[1]);
    const PFunction ab = pbracket(a, b);
    const PFunction ba = pbracket(b, a);
    CHECK((ab + ba).norm() <= 1e-14 * ab.norm());
  }

  TEST_CASE("bracket satisfies the Jacobi identity") {
    const GridSpec g = catalog_grid_32();
    const PFunction a = sample_signal(g, bracket_signal(0));
    const PFunction b = sample_signal(g, bracket_signal(1));
    const PFunction c = sample_signal(g, bracket_signal(2));
    const PFunction j1 = pbracket(pbracket(a, b), c);
    const PFunction j2 = pbracket(pbracket(b, c), a);
    const PFunction j3 = pbracket(pbracket(c, a), b);
    const double scale =
        std::max({j1.norm(), j2.norm(), j3.norm()});
    CHECK((j1 + j2 + j3).norm() <= 1e-6 * scale);
  }

  TEST_CASE("bracket is a derivation of the convolution") {
    const GridSpec g = catalog_grid_32();
    const PFunction a = sample_signal(g, bracket_signal(0));
    const PFunction b = sample_signal(g, bracket_signal(1));
    const PFunction c = sample_signal(g, bracket_signal(2));
    const PFunction lhs = pbracket(a, convolve_fast(b, c));
    const PFunction rhs =
        convolve_fast(pbracket(a, b), c) + convolve_fast(b, pbracket(a, c));
    CHECK(rel_distance(lhs, rhs) <= 1e-6);
  }

  TEST_CASE("antiderivative commutes with left convolution") {
    const GridSpec g = catalog_grid_32();
    const PFunction a = sample_signal(g, bracket_signal(0));
    const PFunction b = sample_signal(g, bracket_generator(1));  // zero mean
    const PFunction lhs =
        convolve_fast(a, apply_antiderivative(b, AntiMode::fourier_division));
    const PFunction rhs =
        apply_antiderivative(convolve_fast(a, b), AntiMode::fourier_division);
    CHECK(rel_distance(lhs, rhs) <= 1e-7);
  }
}

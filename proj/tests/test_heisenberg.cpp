#include <cmath>
#include <random>

#include <doctest.h>

#include "pmech/heisenberg.hpp"
#include "pmech/signals.hpp"

#include "helpers.hpp"

using namespace pmech;

namespace {

double point_dist(const GroupPoint& a, const GroupPoint& b) {
  return std::max({std::abs(a.s - b.s), std::abs(a.x - b.x),
                   std::abs(a.y - b.y)});
}

GroupPoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  return GroupPoint{u(rng), u(rng), u(rng)};
}

}  // namespace

TEST_SUITE("heisenberg") {
  TEST_CASE("multiplication matches the closed form") {
    const GroupPoint g{1.0, 2.0, 3.0};
    const GroupPoint h{4.0, 5.0, 6.0};
    const GroupPoint gh = multiply(g, h);
    CHECK(gh.s == doctest::Approx(1.0 + 4.0 + 0.5 * (2.0 * 6.0 - 5.0 * 3.0))
                      .epsilon(1e-15));
    CHECK(gh.x == doctest::Approx(7.0).epsilon(1e-15));
    CHECK(gh.y == doctest::Approx(9.0).epsilon(1e-15));
  }

  TEST_CASE("group axioms hold on 1000 random triples") {
    std::mt19937_64 rng(20250815u);
    const GroupPoint e{0.0, 0.0, 0.0};
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const GroupPoint g1 = random_point(rng);
      const GroupPoint g2 = random_point(rng);
      const GroupPoint g3 = random_point(rng);
      worst = std::max(worst, point_dist(multiply(g1, e), g1));
      worst = std::max(worst, point_dist(multiply(e, g1), g1));
      worst = std::max(worst, point_dist(multiply(g1, inverse(g1)), e));
      worst = std::max(worst, point_dist(multiply(inverse(g1), g1), e));
      worst = std::max(worst, point_dist(multiply(multiply(g1, g2), g3),
                                         multiply(g1, multiply(g2, g3))));
      worst = std::max(
          worst, point_dist(left_quotient(g1, g2),
                            multiply(inverse(g1), g2)));
    }
    CHECK(worst <= 1e-12);
  }

  TEST_CASE("left-invariant fields close on the center derivative") {
    GaussianParams par;
    // Widths chosen so every spectral tail (s at pi/h_s ~ 2.5, x and y at
    // pi/h ~ 8.4) sits far below the target residual even after the
    // derivative amplifies the Nyquist components.
    par.sigma_s = 3.0;
    par.sigma_x = 0.85;
    par.sigma_y = 0.85;
    par.x0 = 0.2;
    par.y0 = -0.2;
    par.a1 = 0.25;
    const TestSignal sig{"field_probe", par};
    const PFunction f = sample_signal(catalog_grid_32(), sig);

    const InvariantField xl{FieldSide::left, FieldAxis::X};
    const InvariantField yl{FieldSide::left, FieldAxis::Y};
    const InvariantField xr{FieldSide::right, FieldAxis::X};
    const InvariantField yr{FieldSide::right, FieldAxis::Y};
    const InvariantField ds{FieldSide::left, FieldAxis::S};

    const PFunction left_comm =
        apply_field(xl, apply_field(yl, f)) -
        apply_field(yl, apply_field(xl, f));
    const PFunction right_comm =
        apply_field(xr, apply_field(yr, f)) -
        apply_field(yr, apply_field(xr, f));
    const PFunction center = apply_field(ds, f);

    CHECK(rel_distance(left_comm, center) <= 1e-7);
    CHECK(rel_distance(right_comm, cplx(-1.0, 0.0) * center) <= 1e-7);

    // Left- and right-invariant fields commute with each other.
    const PFunction mixed = apply_field(xl, apply_field(yr, f)) -
                            apply_field(yr, apply_field(xl, f));
    CHECK(mixed.norm() <= 1e-7 * center.norm());
  }

  TEST_CASE("coordinate index other than 1 is rejected") {
    const PFunction f(oracle_grid_16());
    const InvariantField bad{FieldSide::left, FieldAxis::X, 2};
    CHECK_THROWS_AS((void)apply_field(bad, f), config_error);
  }
}

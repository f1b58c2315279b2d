#pragma once

// Shared helpers for the unit suites.

#include <cmath>
#include <cstddef>

#include "pmech/grid.hpp"

namespace pmech::testutil {

/// max_g |a(g) - b(g)|.
inline double max_abs_diff(const PFunction& a, const PFunction& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  }
  return worst;
}

/// max_g |a(g)|.
inline double max_abs(const PFunction& a) {
  double worst = 0.0;
  for (const cplx& v : a.values) {
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

}  // namespace pmech::testutil

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmech {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline const double kSqrtTwoPi = std::sqrt(kTwoPi);

/// Invalid argument / precondition violations (dimension mismatch, bad grid,
/// inadmissible parameters).  CLI maps this to exit code 2.
class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Runtime numerical failure (instability, non-convergent series, guard
/// trips).  CLI maps this to exit code 3.
class numerical_abort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double sqr(double t) { return t * t; }

/// Euclidean norm of a complex vector.
double l2_norm(const std::vector<cplx>& v);

/// ||a - b||_2; sizes must match.
double l2_distance(const std::vector<cplx>& a, const std::vector<cplx>& b);

/// ||a - b||_2 / ||b||_2 (0/0 -> 0).
double rel_l2_distance(const std::vector<cplx>& a, const std::vector<cplx>& b);

}  // namespace pmech

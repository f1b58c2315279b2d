#include "pmech/bargmann.hpp"

#include <cmath>
#include <string>

namespace pmech {

namespace {

constexpr cplx kI{0.0, 1.0};

/// sqrt(hi! / lo!) / (hi - lo)! in the log domain (hi >= lo).
double ladder_coeff(std::size_t hi, std::size_t lo) {
  const double a = std::lgamma(static_cast<double>(hi) + 1.0);
  const double b = std::lgamma(static_cast<double>(lo) + 1.0);
  const double d = std::lgamma(static_cast<double>(hi - lo) + 1.0);
  return std::exp(0.5 * (a - b) - d);
}

/// alpha^d with the magnitude folded into the same exponential as the
/// ladder coefficient would allow; plain form suffices for |alpha| O(1).
cplx power(cplx alpha, std::size_t d) {
  if (d == 0) {
    return cplx(1.0, 0.0);
  }
  if (alpha == cplx(0.0, 0.0)) {
    return cplx(0.0, 0.0);
  }
  const double mag = static_cast<double>(d) * std::log(std::abs(alpha));
  const double arg = static_cast<double>(d) * std::arg(alpha);
  return std::exp(mag) * cplx(std::cos(arg), std::sin(arg));
}

/// Lower-triangular multiplication factor M[m, n] = alpha^(m-n)
/// sqrt(m!/n!) / (m-n)!.
Eigen::MatrixXcd lower_factor(std::size_t dim, cplx alpha) {
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index row = 0; row < n; ++row) {
    for (Eigen::Index col = 0; col <= row; ++col) {
      const auto hi = static_cast<std::size_t>(row);
      const auto lo = static_cast<std::size_t>(col);
      out(row, col) = power(alpha, hi - lo) * ladder_coeff(hi, lo);
    }
  }
  return out;
}

/// Upper-triangular shift factor S[k, n] = C(n, k) a^(n-k) sqrt(k!/n!)
///   = a^(n-k) sqrt(n!/k!) / (n-k)!.
Eigen::MatrixXcd upper_factor(std::size_t dim, cplx a) {
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    for (Eigen::Index row = 0; row <= col; ++row) {
      const auto hi = static_cast<std::size_t>(col);
      const auto lo = static_cast<std::size_t>(row);
      out(row, col) = power(a, hi - lo) * ladder_coeff(hi, lo);
    }
  }
  return out;
}

}  // namespace

BargmannPoint bargmann_compose(const BargmannPoint& a, const BargmannPoint& b) {
  return {a.s + b.s + 0.5 * std::imag(std::conj(a.z) * b.z), a.z + b.z};
}

Eigen::MatrixXcd euler_operator(std::size_t dim) {
  if (dim == 0) {
    throw config_error("euler_operator: dimension must be positive");
  }
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    out(m, m) = cplx(static_cast<double>(m) + 0.5, 0.0);
  }
  return out;
}

Eigen::MatrixXcd dynamical_group(std::size_t dim, double t) {
  if (dim == 0) {
    throw config_error("dynamical_group: dimension must be positive");
  }
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    out(m, m) = std::exp(kI * (t * (static_cast<double>(m) + 0.5)));
  }
  return out;
}

Eigen::MatrixXcd beta_action(std::size_t dim, double hbar,
                             const BargmannPoint& g) {
  if (dim == 0) {
    throw config_error("beta_action: dimension must be positive");
  }
  if (!(hbar > 0.0)) {
    throw config_error("beta_action: hbar must be positive");
  }
  const std::size_t work = 2 * dim;
  const double root = std::sqrt(hbar);
  const cplx alpha = kI * root * std::conj(g.z);
  const cplx shift = kI * root * g.z;
  const cplx scalar = std::exp(kI * (2.0 * g.s * hbar)) *
                      std::exp(-0.5 * hbar * std::norm(g.z));
  const Eigen::MatrixXcd full =
      scalar * (lower_factor(work, alpha) * upper_factor(work, shift));

  const auto d = static_cast<Eigen::Index>(dim);
  const double leakage = full.block(d, 0, d, d).operatorNorm();
  if (leakage > 1e-6) {
    throw numerical_abort("beta_action: truncation leakage " +
                          std::to_string(leakage) +
                          " exceeds 1e-6; enlarge dim or shrink |z|");
  }
  return full.topLeftCorner(d, d);
}

}  // namespace pmech

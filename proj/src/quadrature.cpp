#include "ader/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ader {
namespace {

// Legendre P_n and P_n' on [-1,1] via the three-term recurrence.
void legendre_with_derivative(int n, double x, double& p, double& dp) {
  double p0 = 1.0;
  double p1 = x;
  if (n == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

QuadratureRule to_unit_interval(std::vector<double> x, std::vector<double> w) {
  QuadratureRule rule;
  const auto n = x.size();
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Ascending order on [0,1].
  for (std::size_t j = 0; j < n; ++j) {
    rule.nodes[n - 1 - j] = 0.5 * (x[j] + 1.0);
    rule.weights[n - 1 - j] = 0.5 * w[j];
  }
  return rule;
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
  if (n < 1 || n > 6) {
    throw std::invalid_argument("gauss_legendre: unsupported point count " + std::to_string(n));
  }
  std::vector<double> x(n), w(n);
  for (int j = 0; j < n; ++j) {
    double xj = std::cos(std::numbers::pi * (j + 0.75) / (n + 0.5));
    double p = 0, dp = 0;
    for (int it = 0; it < 100; ++it) {
      legendre_with_derivative(n, xj, p, dp);
      const double dx = p / dp;
      xj -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    legendre_with_derivative(n, xj, p, dp);
    x[j] = xj;
    w[j] = 2.0 / ((1.0 - xj * xj) * dp * dp);
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
  return to_unit_interval(std::move(x), std::move(w));
}

QuadratureRule gauss_lobatto(int n) {
  if (n < 2 || n > 6) {
    throw std::invalid_argument("gauss_lobatto: unsupported point count " + std::to_string(n));
  }
  // Interior nodes are the roots of P'_{n-1}; Newton on P'_{n-1} using
  // (1-x^2) P''_{n-1} = 2x P'_{n-1} - (n-1) n P_{n-1}.
  const int deg = n - 1;
  std::vector<double> x(n), w(n);
  x[0] = 1.0;
  x[n - 1] = -1.0;
  for (int j = 1; j < n - 1; ++j) {
    double xj = std::cos(std::numbers::pi * j / deg);
    for (int it = 0; it < 100; ++it) {
      double p = 0, dp = 0;
      legendre_with_derivative(deg, xj, p, dp);
      const double d2p = (2.0 * xj * dp - deg * (deg + 1.0) * p) / (1.0 - xj * xj);
      const double step = dp / d2p;
      xj -= step;
      if (std::abs(step) < 1e-16) break;
    }
    x[j] = xj;
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
  for (int j = 0; j < n; ++j) {
    double p = 0, dp = 0;
    if (j == 0 || j == n - 1) {
      p = (j == 0) ? 1.0 : (deg % 2 == 0 ? 1.0 : -1.0);
    } else {
      legendre_with_derivative(deg, x[j], p, dp);
    }
    w[j] = 2.0 / (deg * (deg + 1.0) * p * p);
  }
  auto rule = to_unit_interval(std::move(x), std::move(w));
  rule.nodes.front() = 0.0;
  rule.nodes.back() = 1.0;
  return rule;
}

std::vector<double> lagrange_derivative_matrix(const std::vector<double>& nodes) {
  const int n = static_cast<int>(nodes.size());
  std::vector<double> bary(n, 1.0);
  for (int b = 0; b < n; ++b)
    for (int k = 0; k < n; ++k)
      if (k != b) bary[b] /= (nodes[b] - nodes[k]);

  std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
  for (int a = 0; a < n; ++a) {
    double diag = 0.0;
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const double v = bary[b] / (bary[a] * (nodes[a] - nodes[b]));
      d[a * n + b] = v;
      diag -= v;
    }
    d[a * n + a] = diag;
  }
  return d;
}

}  // namespace ader

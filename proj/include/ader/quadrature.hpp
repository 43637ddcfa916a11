#pragma once

#include <vector>

namespace ader {

/// Quadrature rule normalized to the unit interval: sum of weights is 1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }

  template <class F>
  auto integrate(F&& f) const {
    auto sum = weights[0] * f(nodes[0]);
    for (int j = 1; j < size(); ++j) sum += weights[j] * f(nodes[j]);
    return sum;
  }
};

/// n-point Gauss-Legendre rule on [0,1]; exact to degree 2n-1. 1 <= n <= 6.
QuadratureRule gauss_legendre(int n);

/// n-point Gauss-Lobatto rule on [0,1] (endpoints included); exact to
/// degree 2n-3. 2 <= n <= 6.
QuadratureRule gauss_lobatto(int n);

/// Derivative matrix of the Lagrange interpolant through `nodes`:
/// entry (a, b) = L_b'(nodes[a]), row-major.
std::vector<double> lagrange_derivative_matrix(const std::vector<double>& nodes);

}  // namespace ader

#pragma once

// Reference computations for the tests, written independently of the
// library code they check.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

inline double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

inline double choose(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// Shifted Legendre polynomial on [0,1] through Bonnet's recursion.
inline double shifted_legendre(int l, double xi) {
  const double x = 2.0 * xi - 1.0;
  double p0 = 1.0, p1 = x;
  if (l == 0) return p0;
  for (int n = 1; n < l; ++n) {
    const double p2 = ((2 * n + 1) * x * p1 - n * p0) / (n + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

// Composite Simpson rule with many panels; accurate to ~1e-15 for the
// low-degree polynomials used here.
inline double integrate(const std::function<double(double)>& f, double a, double b, int panels = 2000) {
  const double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// 10-point Gauss-Legendre on [a,b] from tabulated values; exact to degree 19.
inline double gauss10(const std::function<double(double)>& f, double a, double b) {
  static const double x[5] = {0.1488743389816312, 0.4333953941292472, 0.6794095682990244, 0.8650633666889845,
                              0.9739065285171717};
  static const double w[5] = {0.2955242247147529, 0.2692667193099963, 0.2190863625159820, 0.1494513491505806,
                              0.0666713443086881};
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 5; ++i) s += w[i] * (f(c - h * x[i]) + f(c + h * x[i]));
  return s * h;
}

// Polynomial with coefficients a[k] of x^k.
struct Poly {
  std::vector<double> a;
  double operator()(double x) const {
    double v = 0.0;
    for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k) v = v * x + a[k];
    return v;
  }
  double antiderivative(double x) const {
    double v = 0.0;
    for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k) v = v * x + a[k] / (k + 1);
    return v * x;
  }
  double derivative(double x, int order) const {
    double v = 0.0;
    for (int k = static_cast<int>(a.size()) - 1; k >= order; --k) {
      double c = a[k];
      for (int p = 0; p < order; ++p) c *= (k - p);
      v = v * x + c;
    }
    return v;
  }
};

inline Poly random_poly(int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Poly p;
  for (int k = 0; k <= degree; ++k) p.a.push_back(u(rng));
  return p;
}

}  // namespace oracle

#include "ader/ck.hpp"

#include <cmath>
#include <limits>

#include "ader/series.hpp"

namespace ader {
namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_finite(const TimeDerivatives& g, int degree) {
  for (int k = 0; k <= degree; ++k)
    if (!g[k].allFinite()) throw InadmissibleState("Cauchy-Kowalewskaya: non-finite time derivative");
}

}  // namespace

TimeDerivatives ck_time_derivatives(const SystemDescriptor& system, const DerivativeStack& d) {
  if (system.constant) return ck_linear_closed_form(*system.constant, d);
  return ck_time_derivatives_generic(system, d);
}

TimeDerivatives ck_time_derivatives_generic(const SystemDescriptor& system, const DerivativeStack& d) {
  const int m = system.n_vars;
  const int degree = d.degree;
  TimeDerivatives out;
  for (auto& g : out) g = StateVector::Zero(m);
  out[0] = d[0];
  if (degree == 0) return out;

  std::array<SpaceTimeJet, kMaxVars> q, qx, rhs;
  for (int i = 0; i < m; ++i) {
    q[i] = SpaceTimeJet(degree, 0);
    for (int j = 0; j <= degree; ++j) q[i].at(j, 0) = d[j][i] / factorial(j);
  }
  // Layer k of the right-hand side is needed for x-degrees up to M-1-k, so
  // every evaluation can run at total degree M-1.
  std::array<SpaceTimeJet, kMaxVars> qt;
  for (int k = 0; k < degree; ++k) {
    for (int i = 0; i < m; ++i) {
      q[i].set_time_cap(k);
      qx[i] = q[i].dx().truncated(degree - 1);
      qt[i] = q[i].truncated(degree - 1);
    }
    try {
      system.jet_rhs(std::span<const SpaceTimeJet>(qt.data(), m), std::span<const SpaceTimeJet>(qx.data(), m),
                     std::span<SpaceTimeJet>(rhs.data(), m));
    } catch (const std::domain_error& e) {
      throw InadmissibleState(std::string("Cauchy-Kowalewskaya: ") + e.what());
    }
    for (int i = 0; i < m; ++i) {
      q[i].set_time_cap(k + 1);
      for (int j = 0; j <= degree - 1 - k; ++j) q[i].at(j, k + 1) = rhs[i].at(j, k) / (k + 1);
    }
  }
  for (int k = 1; k <= degree; ++k)
    for (int i = 0; i < m; ++i) out[k][i] = factorial(k) * q[i].at(0, k);
  check_finite(out, degree);
  return out;
}

TimeDerivatives ck_linear_closed_form(const ConstantCoefficients& coefficients, const DerivativeStack& d) {
  const int degree = d.degree;
  const auto& a = coefficients.a;
  const auto& b = coefficients.b;
  TimeDerivatives out;
  std::array<StateVector, kMaxDegree + 1> layer = d.d;
  out[0] = layer[0];
  for (int k = 1; k <= degree; ++k) {
    // Applying (B - A d/dx) maps derivative j to B D_j - A D_{j+1}; the top
    // entry loses its neighbour each time.
    for (int j = 0; j <= degree - k; ++j) layer[j] = b * layer[j] - a * layer[j + 1];
    out[k] = layer[0];
  }
  for (int k = degree + 1; k <= kMaxDegree; ++k) out[k] = StateVector::Zero(d.n_vars());
  check_finite(out, degree);
  return out;
}

double scalar_ck_closed_form(double lambda, double beta, std::span<const double> d, int k) {
  double sum = 0.0;
  for (int j = 0; j <= k && j < static_cast<int>(d.size()); ++j)
    sum += binomial(k, j) * std::pow(-lambda, j) * std::pow(beta, k - j) * d[j];
  return sum;
}

StateVector predictor_residual(const SystemDescriptor& system, const DerivativeStack& d, double tau,
                               const StateVector& w0) {
  StateVector h = d[0] - w0;
  if (tau == 0.0 || d.degree == 0) return h;
  const TimeDerivatives g = ck_time_derivatives(system, d);
  double coefficient = 1.0;
  for (int k = 1; k <= d.degree; ++k) {
    coefficient *= -tau / k;
    h += coefficient * g[k];
  }
  if (!h.allFinite()) throw InadmissibleState("predictor residual is not finite");
  return h;
}

SquareMatrix predictor_residual_jacobian_fd(const SystemDescriptor& system, const DerivativeStack& d, double tau) {
  const int m = system.n_vars;
  SquareMatrix jac(m, m);
  const StateVector zero = StateVector::Zero(m);
  DerivativeStack probe = d;
  const double root = std::cbrt(std::numeric_limits<double>::epsilon());
  for (int c = 0; c < m; ++c) {
    const double h = root * (1.0 + std::abs(d[0][c]));
    probe[0][c] = d[0][c] + h;
    const StateVector plus = predictor_residual(system, probe, tau, zero);
    probe[0][c] = d[0][c] - h;
    const StateVector minus = predictor_residual(system, probe, tau, zero);
    probe[0][c] = d[0][c];
    jac.col(c) = (plus - minus) / (2.0 * h);
  }
  return jac;
}

SquareMatrix predictor_residual_jacobian(const SystemDescriptor& system, const DerivativeStack& d, double tau) {
  const int m = system.n_vars;
  if (!system.constant) return predictor_residual_jacobian_fd(system, d, tau);
  // G^k depends on D_0 only through B^k D_0.
  const SquareMatrix& b = system.constant->b;
  SquareMatrix jac = SquareMatrix::Identity(m, m);
  SquareMatrix term = SquareMatrix::Identity(m, m);
  for (int k = 1; k <= d.degree; ++k) {
    term = (-tau / k) * (term * b);
    jac += term;
  }
  return jac;
}

}  // namespace ader

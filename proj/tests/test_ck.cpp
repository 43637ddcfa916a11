#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ader/ck.hpp"
#include "oracles.hpp"

using namespace ader;
using doctest::Approx;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// j-th derivative of sin(2 pi y) + s cos(2 pi y).
double trig(int j, double y, double s) {
  const double phase = kTwoPi * y + j * std::numbers::pi / 2;
  return std::pow(kTwoPi, j) * (std::sin(phase) + s * std::cos(phase));
}

DerivativeStack scalar_stack(std::span<const double> d, int degree) {
  DerivativeStack s(1, degree);
  for (int k = 0; k <= degree; ++k) s[k][0] = d[k];
  return s;
}

}  // namespace

TEST_SUITE("ck") {

TEST_CASE("scalar closed form") {
  const double d[] = {0.7, -1.3, 2.1, 0.4, -0.9};
  const double lam = 1.5, beta = -0.8;
  CHECK(scalar_ck_closed_form(lam, beta, d, 0) == 0.7);
  CHECK(scalar_ck_closed_form(lam, beta, d, 1) == Approx(-lam * d[1] + beta * d[0]));
  CHECK(scalar_ck_closed_form(lam, beta, d, 2) ==
        Approx(lam * lam * d[2] - 2 * lam * beta * d[1] + beta * beta * d[0]));
  for (int k = 0; k <= 4; ++k) CHECK(scalar_ck_closed_form(lam, 0.0, d, k) == Approx(std::pow(-lam, k) * d[k]));
}

TEST_CASE("generic recursion matches the binomial form") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const double lam = u(rng), beta = u(rng);
    const int degree = 1 + trial % kMaxDegree;
    double d[kMaxDegree + 1];
    for (double& v : d) v = u(rng);
    const auto g = ck_time_derivatives_generic(scalar_advection_reaction(lam, beta), scalar_stack(d, degree));
    for (int k = 0; k <= degree; ++k) {
      double scale = 0;
      for (int j = 0; j <= k; ++j)
        scale += oracle::choose(k, j) * std::pow(std::abs(lam), j) * std::pow(std::abs(beta), k - j) * std::abs(d[j]);
      CHECK(std::abs(g[k][0] - scalar_ck_closed_form(lam, beta, d, k)) <= 1e-11 * (1 + scale));
    }
  }
}

TEST_CASE("first time derivative is the PDE") {
  const double d[] = {0.3, 2.0};
  const auto g = ck_time_derivatives(scalar_advection_reaction(2.0, -3.0), scalar_stack(d, 1));
  CHECK(g[1][0] == Approx(-2.0 * 2.0 - 3.0 * 0.3));

  const auto euler = euler_ideal_gas(1.4);
  const StateVector q = primitive_to_conserved({1, 1, 2}, 1.4);
  DerivativeStack s(3, 1);
  s[0] = q;
  const double drho = 0.2 * kTwoPi;
  s[1] << drho, drho, 0.5 * drho;
  const auto ge = ck_time_derivatives(euler, s);
  const StateVector ref = -euler.a_matrix(q) * s[1];
  for (int i = 0; i < 3; ++i) CHECK(ge[1][i] == Approx(ref[i]).epsilon(1e-14));
}

TEST_CASE("linear system matches repeated operator application") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const double lam = 2 * u(rng), beta = u(rng);
    const auto sys = linear_system(lam, beta);
    const int degree = 1 + trial % kMaxDegree;
    DerivativeStack s(2, degree);
    for (int k = 0; k <= degree; ++k) s[k] << u(rng), u(rng);
    Eigen::Matrix2d a, b;
    a << 0, lam, lam, 0;
    b = beta * Eigen::Matrix2d::Identity();
    std::vector<Eigen::Vector2d> layer;
    for (int k = 0; k <= degree; ++k) layer.emplace_back(s[k][0], s[k][1]);
    const auto generic = ck_time_derivatives_generic(sys, s);
    const auto closed = ck_linear_closed_form(*sys.constant, s);
    for (int k = 1; k <= degree; ++k) {
      std::vector<Eigen::Vector2d> next;
      for (std::size_t j = 0; j + 1 < layer.size(); ++j) next.push_back(b * layer[j] - a * layer[j + 1]);
      layer = next;
      for (int i = 0; i < 2; ++i) {
        CHECK(std::abs(generic[k][i] - layer[0][i]) <= 1e-11 * (1 + std::abs(layer[0][i])) * std::pow(3.0, k));
        CHECK(std::abs(closed[k][i] - layer[0][i]) <= 1e-12 * (1 + std::abs(layer[0][i])) * std::pow(3.0, k));
      }
    }
  }
}

TEST_CASE("time derivatives of exact solutions") {
  const double lam = 1.0, beta = -1.0;
  const auto sys = linear_system(lam, beta);
  for (double x : {0.1, 0.45, 0.83}) {
    DerivativeStack s(2, kMaxDegree);
    for (int j = 0; j <= kMaxDegree; ++j) {
      const double phi = trig(j, x, 1.0), psi = trig(j, x, -1.0);
      s[j] << 0.5 * (phi + psi), 0.5 * (phi - psi);
    }
    const auto generic = ck_time_derivatives_generic(sys, s);
    for (int k = 0; k <= kMaxDegree; ++k) {
      double phi = 0, psi = 0;
      for (int j = 0; j <= k; ++j) {
        const double c = oracle::choose(k, j) * std::pow(beta, k - j);
        phi += c * std::pow(-lam, j) * trig(j, x, 1.0);
        psi += c * std::pow(lam, j) * trig(j, x, -1.0);
      }
      CHECK(std::abs(generic[k][0] - 0.5 * (phi + psi)) <= 1e-9 * (1 + std::abs(phi) + std::abs(psi)));
      CHECK(std::abs(generic[k][1] - 0.5 * (phi - psi)) <= 1e-9 * (1 + std::abs(phi) + std::abs(psi)));
    }
  }

  // smooth Euler advection: every conserved variable is affine in rho(x - t)
  const auto euler = euler_ideal_gas(1.4);
  for (double x : {0.0, 0.3, 0.71}) {
    DerivativeStack s(3, kMaxDegree);
    for (int j = 0; j <= kMaxDegree; ++j) {
      const double r = (j == 0 ? 1.0 : 0.0) + 0.2 * trig(j, x, 0.0);
      s[j] << r, r, 0.5 * r + (j == 0 ? 5.0 : 0.0);
    }
    const auto g = ck_time_derivatives(euler, s);
    for (int k = 1; k <= kMaxDegree; ++k)
      for (int i = 0; i < 3; ++i)
        CHECK(std::abs(g[k][i] - std::pow(-1.0, k) * s[k][i]) <= 1e-9 * (1 + std::abs(s[k][i])));
  }
}

TEST_CASE("inadmissible jet input is reported") {
  DerivativeStack s(3, 2);
  s[0] << 0.0, 1.0, 1.0;
  s[1] << 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(ck_time_derivatives(euler_ideal_gas(1.4), s), InadmissibleState);
}

TEST_CASE("predictor residual") {
  const double d[] = {0.4, 1.7};
  const auto s = scalar_stack(d, 1);
  const StateVector w0 = StateVector::Constant(1, 0.25);
  const auto adv = scalar_advection_reaction(1.3, 0.0);
  CHECK(predictor_residual(adv, s, 0.0, w0)[0] == Approx(0.4 - 0.25));
  CHECK(predictor_residual_jacobian(adv, s, 0.0)(0, 0) == Approx(1.0));
  const double tau = 0.05;
  CHECK(predictor_residual(adv, s, tau, w0)[0] == Approx(0.4 - 0.25 + tau * 1.3 * 1.7));
  CHECK(predictor_residual_jacobian(adv, s, tau)(0, 0) == Approx(1.0));

  const auto lin = linear_system(1.0, -1.0);
  DerivativeStack a(2, 3), b(2, 3);
  for (int k = 0; k <= 3; ++k) {
    a[k] << 0.1 * k, -0.2 * k;
    b[k] = a[k];
  }
  b[0] << 5.0, -7.0;
  CHECK((predictor_residual_jacobian(lin, a, 0.1) - predictor_residual_jacobian(lin, b, 0.1)).norm() < 1e-15);
}

TEST_CASE("finite-difference Jacobian matches the closed form") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const int degree = 1 + trial % kMaxDegree;
    const double tau = 0.1 * std::abs(u(rng));
    const auto sys = trial % 2 ? linear_system(u(rng), u(rng)) : scalar_advection_reaction(u(rng), 5 * u(rng));
    DerivativeStack s(sys.n_vars, degree);
    for (int k = 0; k <= degree; ++k)
      for (int i = 0; i < sys.n_vars; ++i) s[k][i] = u(rng);
    const SquareMatrix closed = predictor_residual_jacobian(sys, s, tau);
    const SquareMatrix fd = predictor_residual_jacobian_fd(sys, s, tau);
    for (int r = 0; r < sys.n_vars; ++r)
      for (int c = 0; c < sys.n_vars; ++c) CHECK(std::abs(closed(r, c) - fd(r, c)) <= 1e-6 * (1 + std::abs(closed(r, c))));
  }
}

}

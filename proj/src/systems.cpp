#include "ader/systems.hpp"

#include <cmath>
#include <numbers>

namespace ader {
namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

SystemDescriptor scalar_advection_reaction(double lambda, double beta) {
  auto sys = describe(ScalarAdvectionReactionPhysics{lambda, beta}, "scalar-advection-reaction");
  sys.constant = ConstantCoefficients{SquareMatrix::Constant(1, 1, lambda), SquareMatrix::Constant(1, 1, beta)};
  sys.has_source = beta != 0.0;
  sys.initial_condition = [](double x) { return StateVector::Constant(1, std::sin(kTwoPi * x)); };
  sys.exact_solution = [lambda, beta](double x, double t) {
    return StateVector::Constant(1, std::exp(beta * t) * std::sin(kTwoPi * (x - lambda * t)));
  };
  return sys;
}

SystemDescriptor leveque_yee(double beta) {
  auto sys = describe(LeVequeYeePhysics{beta}, "leveque-yee");
  sys.initial_condition = [](double x) { return StateVector::Constant(1, x < 0.3 ? 1.0 : 0.0); };
  // 0 and 1 are equilibria of the source, so the step travels undeformed
  // at unit speed.
  sys.exact_solution = [](double x, double t) { return StateVector::Constant(1, x < 0.3 + t ? 1.0 : 0.0); };
  return sys;
}

SystemDescriptor linear_system(double lambda, double beta) {
  auto sys = describe(LinearSystemPhysics{lambda, beta}, "linear-system");
  SquareMatrix a(2, 2);
  a << 0.0, lambda, lambda, 0.0;
  sys.constant = ConstantCoefficients{a, beta * SquareMatrix::Identity(2, 2)};
  sys.has_source = beta != 0.0;
  sys.initial_condition = [](double x) {
    StateVector q(2);
    q << std::sin(kTwoPi * x), std::cos(kTwoPi * x);
    return q;
  };
  sys.exact_solution = [lambda, beta](double x, double t) {
    const double phi = std::sin(kTwoPi * (x - lambda * t)) + std::cos(kTwoPi * (x - lambda * t));
    const double psi = std::sin(kTwoPi * (x + lambda * t)) - std::cos(kTwoPi * (x + lambda * t));
    const double f = 0.5 * std::exp(beta * t);
    StateVector q(2);
    q << f * (phi + psi), f * (phi - psi);
    return q;
  };
  return sys;
}

SystemDescriptor noncons_system(double lambda, double epsilon) {
  auto sys = describe(NonConservativePhysics{lambda}, "noncons");
  sys.exact_solution = [lambda, epsilon](double x, double t) {
    StateVector q(2);
    q << 1.0 + epsilon * std::cos(kTwoPi * (x - lambda * t)), 1.0 + epsilon * std::sin(kTwoPi * (x - lambda * t));
    return q;
  };
  sys.initial_condition = [exact = sys.exact_solution](double x) { return exact(x, 0.0); };
  return sys;
}

SystemDescriptor euler_ideal_gas(double gamma) {
  auto sys = describe(EulerPhysics{gamma}, "euler");
  sys.has_source = false;
  sys.exact_solution = [gamma](double x, double t) {
    return primitive_to_conserved({1.0 + 0.2 * std::sin(kTwoPi * (x - t)), 1.0, 2.0}, gamma);
  };
  sys.initial_condition = [exact = sys.exact_solution](double x) { return exact(x, 0.0); };
  return sys;
}

StateVector primitive_to_conserved(const EulerPrimitives& w, double gamma) {
  if (!(w.rho > 0.0) || !(w.p > 0.0)) throw InadmissibleState("Euler: non-positive density or pressure");
  StateVector q(3);
  q << w.rho, w.rho * w.u, w.p / (gamma - 1.0) + 0.5 * w.rho * w.u * w.u;
  return q;
}

EulerPrimitives conserved_to_primitive(const StateVector& q, double gamma) {
  if (!(q[0] > 0.0)) throw InadmissibleState("Euler: non-positive density");
  const double u = q[1] / q[0];
  const double p = (gamma - 1.0) * (q[2] - 0.5 * q[0] * u * u);
  if (!(p > 0.0)) throw InadmissibleState("Euler: non-positive pressure");
  return {q[0], u, p};
}

}  // namespace ader

#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>

#include "ader/grid.hpp"
#include "ader/series.hpp"
#include "ader/types.hpp"

namespace ader {

/// Constant A and source matrix B (S(Q) = B Q) of a linear system. Their
/// presence enables the closed-form Cauchy-Kowalewskaya path.
struct ConstantCoefficients {
  SquareMatrix a;
  SquareMatrix b;
};

/// One balance law dQ/dt + A(Q) dQ/dx = S(Q). Immutable after construction.
struct SystemDescriptor {
  std::string name;
  int n_vars = 0;

  std::function<SquareMatrix(const StateVector&)> a_matrix;
  std::function<StateVector(const StateVector&)> source;
  std::function<SquareMatrix(const StateVector&)> source_jacobian;
  std::function<StateVector(const StateVector&)> eigenvalues;
  std::function<bool(const StateVector&)> admissible;

  /// rhs = S(q) - A(q) qx evaluated in space-time jet arithmetic.
  std::function<void(std::span<const SpaceTimeJet> q, std::span<const SpaceTimeJet> qx,
                     std::span<SpaceTimeJet> rhs)>
      jet_rhs;

  std::optional<ConstantCoefficients> constant;
  bool has_source = true;

  InitialCondition initial_condition;
  ExactSolution exact_solution;  // empty when no closed form is known
};

// ---------------------------------------------------------------------------
// Physics definitions. Each exposes A(q) v and S(q) as templates over the
// scalar type so the same code serves plain reals and jets.

struct ScalarAdvectionReactionPhysics {
  static constexpr int n_vars = 1;
  double lambda = 1.0;
  double beta = 0.0;

  template <class T>
  void quasilinear_product(const T*, const T* v, T* out) const { out[0] = lambda * v[0]; }
  template <class T>
  void source(const T* q, T* out) const { out[0] = beta * q[0]; }

  SquareMatrix source_jacobian(const StateVector&) const { return SquareMatrix::Constant(1, 1, beta); }
  StateVector eigenvalues(const StateVector&) const { return StateVector::Constant(1, lambda); }
  bool admissible(const StateVector& q) const { return std::isfinite(q[0]); }
};

struct LeVequeYeePhysics {
  static constexpr int n_vars = 1;
  double beta = -1000.0;

  template <class T>
  void quasilinear_product(const T*, const T* v, T* out) const { out[0] = v[0]; }
  template <class T>
  void source(const T* q, T* out) const { out[0] = beta * (q[0] * (q[0] - 1.0) * (q[0] - 0.5)); }

  SquareMatrix source_jacobian(const StateVector& q) const {
    return SquareMatrix::Constant(1, 1, beta * (3.0 * q[0] * q[0] - 3.0 * q[0] + 0.5));
  }
  StateVector eigenvalues(const StateVector&) const { return StateVector::Constant(1, 1.0); }
  bool admissible(const StateVector& q) const { return std::isfinite(q[0]); }
};

struct LinearSystemPhysics {
  static constexpr int n_vars = 2;
  double lambda = 1.0;
  double beta = -1.0;

  template <class T>
  void quasilinear_product(const T*, const T* v, T* out) const {
    out[0] = lambda * v[1];
    out[1] = lambda * v[0];
  }
  template <class T>
  void source(const T* q, T* out) const {
    out[0] = beta * q[0];
    out[1] = beta * q[1];
  }

  SquareMatrix source_jacobian(const StateVector&) const {
    return beta * SquareMatrix::Identity(2, 2);
  }
  StateVector eigenvalues(const StateVector&) const {
    StateVector ev(2);
    ev << -std::abs(lambda), std::abs(lambda);
    return ev;
  }
  bool admissible(const StateVector& q) const { return q.allFinite(); }
};

/// u_t + lambda u_x + u v_x = 2 pi u (u - 1),  v_t + lambda v_x + u_x = -2 pi (v - 1).
struct NonConservativePhysics {
  static constexpr int n_vars = 2;
  double lambda = 1.0;

  template <class T>
  void quasilinear_product(const T* q, const T* v, T* out) const {
    out[0] = lambda * v[0] + q[0] * v[1];
    out[1] = v[0] + lambda * v[1];
  }
  template <class T>
  void source(const T* q, T* out) const {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    out[0] = two_pi * (q[0] * (q[0] - 1.0));
    out[1] = -two_pi * (q[1] - 1.0);
  }

  SquareMatrix source_jacobian(const StateVector& q) const {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    SquareMatrix j = SquareMatrix::Zero(2, 2);
    j(0, 0) = two_pi * (2.0 * q[0] - 1.0);
    j(1, 1) = -two_pi;
    return j;
  }
  StateVector eigenvalues(const StateVector& q) const {
    if (!(q[0] > 0.0)) throw InadmissibleState("non-conservative system: u must be positive");
    const double s = std::sqrt(q[0]);
    StateVector ev(2);
    ev << lambda - s, lambda + s;
    return ev;
  }
  bool admissible(const StateVector& q) const { return q.allFinite() && q[0] > 0.0; }
};

/// Ideal-gas Euler equations in conserved variables (rho, rho u, E); A is the
/// flux Jacobian.
struct EulerPhysics {
  static constexpr int n_vars = 3;
  double gamma = 1.4;

  template <class T>
  void quasilinear_product(const T* q, const T* v, T* out) const {
    const T u = q[1] / q[0];
    const T e = q[2] / q[0];
    const T u2 = u * u;
    const double g1 = gamma - 1.0;
    out[0] = v[1];
    out[1] = (0.5 * (gamma - 3.0)) * (u2 * v[0]) + (3.0 - gamma) * (u * v[1]) + g1 * v[2];
    out[2] = (u * (g1 * u2 - gamma * e)) * v[0] + (gamma * e - (1.5 * g1) * u2) * v[1] +
             gamma * (u * v[2]);
  }
  // Homogeneous: callers pass a zeroed output.
  template <class T>
  void source(const T*, T*) const {}

  SquareMatrix source_jacobian(const StateVector&) const { return SquareMatrix::Zero(3, 3); }
  double pressure(const StateVector& q) const { return (gamma - 1.0) * (q[2] - 0.5 * q[1] * q[1] / q[0]); }
  StateVector eigenvalues(const StateVector& q) const {
    if (!admissible(q)) throw InadmissibleState("Euler: non-positive density or pressure");
    const double u = q[1] / q[0];
    const double a = std::sqrt(gamma * pressure(q) / q[0]);
    StateVector ev(3);
    ev << u - a, u, u + a;
    return ev;
  }
  bool admissible(const StateVector& q) const {
    return q.allFinite() && q[0] > 0.0 && pressure(q) > 0.0;
  }
};

/// Wraps a physics definition into a type-erased descriptor.
template <class Physics>
SystemDescriptor describe(const Physics& physics, std::string name) {
  constexpr int m = Physics::n_vars;
  SystemDescriptor sys;
  sys.name = std::move(name);
  sys.n_vars = m;
  sys.a_matrix = [physics](const StateVector& q) {
    SquareMatrix a(Physics::n_vars, Physics::n_vars);
    double e[m] = {};
    double col[m] = {};
    for (int j = 0; j < m; ++j) {
      e[j] = 1.0;
      physics.quasilinear_product(q.data(), e, col);
      for (int i = 0; i < m; ++i) a(i, j) = col[i];
      e[j] = 0.0;
    }
    return a;
  };
  sys.source = [physics](const StateVector& q) {
    StateVector s = StateVector::Zero(Physics::n_vars);
    physics.source(q.data(), s.data());
    return s;
  };
  sys.source_jacobian = [physics](const StateVector& q) { return physics.source_jacobian(q); };
  sys.eigenvalues = [physics](const StateVector& q) { return physics.eigenvalues(q); };
  sys.admissible = [physics](const StateVector& q) { return physics.admissible(q); };
  sys.jet_rhs = [physics](std::span<const SpaceTimeJet> q, std::span<const SpaceTimeJet> qx,
                          std::span<SpaceTimeJet> rhs) {
    SpaceTimeJet adv[m];
    for (int i = 0; i < m; ++i) {
      adv[i] = SpaceTimeJet(q[0].degree(), q[0].time_cap());
      rhs[i] = SpaceTimeJet(q[0].degree(), q[0].time_cap());
    }
    physics.quasilinear_product(q.data(), qx.data(), adv);
    physics.source(q.data(), rhs.data());
    for (int i = 0; i < m; ++i) rhs[i] -= adv[i];
  };
  return sys;
}

// ---------------------------------------------------------------------------
// Test configurations.

/// q_t + lambda q_x = beta q; initial data sin(2 pi x).
SystemDescriptor scalar_advection_reaction(double lambda, double beta);

/// q_t + q_x = beta q (q - 1)(q - 1/2) with a unit step at x = 0.3.
SystemDescriptor leveque_yee(double beta);

/// Q_t + [[0, lambda], [lambda, 0]] Q_x = beta Q with (sin, cos) data.
SystemDescriptor linear_system(double lambda, double beta);

/// Non-conservative 2x2 system with the travelling-wave solution
/// u = 1 + eps cos(2 pi (x - lambda t)), v = 1 + eps sin(2 pi (x - lambda t)).
SystemDescriptor noncons_system(double lambda, double epsilon);

/// Euler equations with smooth density advection rho = 1 + 0.2 sin(2 pi (x - t)), u = 1, p = 2.
SystemDescriptor euler_ideal_gas(double gamma = 1.4);

struct EulerPrimitives {
  double rho = 1.0;
  double u = 0.0;
  double p = 1.0;
};

StateVector primitive_to_conserved(const EulerPrimitives& w, double gamma);
EulerPrimitives conserved_to_primitive(const StateVector& q, double gamma);

}  // namespace ader

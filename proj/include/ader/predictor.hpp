#pragma once

#include <vector>

#include <Eigen/LU>

#include "ader/quadrature.hpp"
#include "ader/systems.hpp"
#include "ader/types.hpp"
#include "ader/weno.hpp"

namespace ader {

struct PredictorOptions {
  double tolerance = 1e-12;
  int max_iterations = 50;
  int max_step_halvings = 5;
};

/// Back-substitution for D_M..D_1 with the source Jacobian and A frozen at
/// `d0`: (I - tau J) D_M = w^(M), (I - tau J) D_k = w^(k) - tau A D_{k+1}.
/// Entry 0 of the result is `d0`. Throws PredictorFailure if I - tau J is
/// singular.
DerivativeStack solve_derivative_chain(const SystemDescriptor& system, const StateVector& d0,
                                       const DerivativeStack& w, double tau);

/// Factorized Newton matrix that neighbouring point solves at the same time
/// level may start from; refreshed whenever the iteration stalls.
struct ChordCache {
  bool valid = false;
  Eigen::PartialPivLU<SquareMatrix> lu;
};

struct PointSolution {
  DerivativeStack d;
  int iterations = 0;
};

/// Nested fixed point at one space-time point: derivative chain from the
/// previous D_0, then a Newton update of D_0 on the implicit Taylor residual.
PointSolution solve_predictor_point(const SystemDescriptor& system, const DerivativeStack& w, double tau,
                                    const PredictorOptions& options = {}, ChordCache* cache = nullptr);

PointSolution solve_predictor_point(const SystemDescriptor& system, const ReconstructionPolynomial& poly,
                                    double xi, double tau, const PredictorOptions& options = {});

/// Space-time quadrature used by one scheme order.
struct PredictorRules {
  int degree = 0;
  QuadratureRule space;       // Gauss-Legendre, M+1 points
  QuadratureRule time;        // Gauss-Legendre, M+1 points
  QuadratureRule trace_time;  // Gauss-Lobatto, max(M+1, 2) points
  QuadratureRule path;        // Gauss-Legendre, 3 points
  std::vector<double> space_derivative;  // Lagrange derivative matrix on the space nodes

  static PredictorRules make(int degree);
};

/// Predictor of one cell at the quadrature nodes. Interior values are
/// indexed (space node l, time node j); traces follow the Gauss-Lobatto
/// time nodes.
struct PredictorTable {
  int n_space = 0;
  int n_time = 0;
  int n_vars = 0;
  std::vector<StateVector> values;  // l * n_time + j
  std::vector<StateVector> dqdx;    // derivative of the spatial interpolant, physical units
  std::vector<StateVector> left_trace;
  std::vector<StateVector> right_trace;
  int max_iterations = 0;

  const StateVector& value(int l, int j) const { return values[static_cast<std::size_t>(l) * n_time + j]; }
  const StateVector& gradient(int l, int j) const { return dqdx[static_cast<std::size_t>(l) * n_time + j]; }
};

/// Builds the table of one cell for a step of size dt. With `traces_only`
/// the interior nodes are skipped (ghost cells need only their traces).
PredictorTable build_predictor_table(const SystemDescriptor& system, const ReconstructionPolynomial& poly,
                                     double dt, const PredictorRules& rules, const PredictorOptions& options = {},
                                     bool traces_only = false);

}  // namespace ader

#include "ader/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/LU>

#include "ader/ck.hpp"

namespace ader {
namespace {

using Lu = Eigen::PartialPivLU<SquareMatrix>;

bool singular(const Lu& lu, int m) {
  const auto& u = lu.matrixLU();
  double scale = 0.0;
  double smallest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i) {
    scale = std::max(scale, std::abs(u(i, i)));
    smallest = std::min(smallest, std::abs(u(i, i)));
  }
  return !(smallest > 1e-14 * scale) || !(scale > 0.0);
}

double inf_norm(const StateVector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

}  // namespace

DerivativeStack solve_derivative_chain(const SystemDescriptor& system, const StateVector& d0,
                                       const DerivativeStack& w, double tau) {
  const int m = system.n_vars;
  const int degree = w.degree;
  DerivativeStack d = w;
  d[0] = d0;
  if (degree == 0 || tau == 0.0) return d;

  const SquareMatrix lhs = SquareMatrix::Identity(m, m) - tau * system.source_jacobian(d0);
  const Lu lu(lhs);
  if (singular(lu, m)) throw PredictorFailure("derivative chain: I - tau J is singular", -1, tau, 0.0);
  const SquareMatrix a = system.a_matrix(d0);
  d[degree] = lu.solve(w[degree]);
  for (int k = degree - 1; k >= 1; --k) d[k] = lu.solve(StateVector(w[k] - tau * (a * d[k + 1])));
  return d;
}

PointSolution solve_predictor_point(const SystemDescriptor& system, const DerivativeStack& w, double tau,
                                    const PredictorOptions& options, ChordCache* cache) {
  PointSolution out{w, 0};
  if (tau == 0.0 || w.degree == 0) {
    out.iterations = 1;
    return out;
  }
  const int m = system.n_vars;
  StateVector d0 = w[0];
  ChordCache local;
  ChordCache& chord = cache ? *cache : local;
  bool refresh = !chord.valid;
  double previous_step = std::numeric_limits<double>::infinity();
  double residual_norm = 0.0;

  for (int it = 1; it <= options.max_iterations; ++it) {
    DerivativeStack d = solve_derivative_chain(system, d0, w, tau);
    StateVector h;
    try {
      h = predictor_residual(system, d, tau, w[0]);
      if (refresh) {
        chord.lu.compute(predictor_residual_jacobian(system, d, tau));
        chord.valid = !singular(chord.lu, m);
        if (!chord.valid) throw PredictorFailure("predictor Newton matrix is singular", -1, tau, inf_norm(h));
        refresh = false;
      }
    } catch (const InadmissibleState& e) {
      throw PredictorFailure(std::string("predictor: ") + e.what(), -1, tau, residual_norm);
    }
    residual_norm = inf_norm(h);
    StateVector delta = chord.lu.solve(h);

    // Halve the step while the iterate leaves the admissible set.
    StateVector next = d0 - delta;
    int halvings = 0;
    while (!system.admissible(next)) {
      if (++halvings > options.max_step_halvings) {
        throw PredictorFailure("predictor iterate is inadmissible", -1, tau, residual_norm);
      }
      delta *= 0.5;
      next = d0 - delta;
    }

    const double step = inf_norm(delta);
    d0 = next;
    if (step <= options.tolerance * (1.0 + inf_norm(d0))) {
      out.d = solve_derivative_chain(system, d0, w, tau);
      out.iterations = it;
      return out;
    }
    // Chord iteration: keep the factorization while it contracts well.
    if (step > 0.1 * previous_step) refresh = true;
    previous_step = step;
  }
  throw PredictorFailure("predictor fixed point did not converge in " + std::to_string(options.max_iterations) +
                             " iterations",
                         -1, tau, residual_norm);
}

PointSolution solve_predictor_point(const SystemDescriptor& system, const ReconstructionPolynomial& poly,
                                    double xi, double tau, const PredictorOptions& options) {
  return solve_predictor_point(system, poly.derivatives_at(xi), tau, options);
}

PredictorRules PredictorRules::make(int degree) {
  PredictorRules r;
  r.degree = degree;
  r.space = gauss_legendre(degree + 1);
  r.time = gauss_legendre(degree + 1);
  r.trace_time = gauss_lobatto(std::max(degree + 1, 2));
  r.path = gauss_legendre(3);
  r.space_derivative = lagrange_derivative_matrix(r.space.nodes);
  return r;
}

PredictorTable build_predictor_table(const SystemDescriptor& system, const ReconstructionPolynomial& poly,
                                     double dt, const PredictorRules& rules, const PredictorOptions& options,
                                     bool traces_only) {
  PredictorTable table;
  const int m = system.n_vars;
  table.n_vars = m;
  table.n_space = rules.space.size();
  table.n_time = rules.time.size();

  auto solve = [&](const DerivativeStack& w, double tau, ChordCache& cache) {
    PointSolution s = solve_predictor_point(system, w, tau, options, &cache);
    table.max_iterations = std::max(table.max_iterations, s.iterations);
    return s.d[0];
  };

  const int n_trace = rules.trace_time.size();
  table.left_trace.resize(n_trace);
  table.right_trace.resize(n_trace);
  const DerivativeStack w_left = poly.derivatives_at(0.0);
  const DerivativeStack w_right = poly.derivatives_at(1.0);
  for (int u = 0; u < n_trace; ++u) {
    const double tau = rules.trace_time.nodes[u] * dt;
    ChordCache cache;
    table.left_trace[u] = solve(w_left, tau, cache);
    table.right_trace[u] = solve(w_right, tau, cache);
  }
  if (traces_only) return table;

  const int ns = table.n_space;
  const int nt = table.n_time;
  table.values.resize(static_cast<std::size_t>(ns) * nt);
  table.dqdx.assign(static_cast<std::size_t>(ns) * nt, StateVector::Zero(m));
  std::vector<ChordCache> caches(static_cast<std::size_t>(nt));
  for (int l = 0; l < ns; ++l) {
    const DerivativeStack w = poly.derivatives_at(rules.space.nodes[l]);
    for (int j = 0; j < nt; ++j)
      table.values[static_cast<std::size_t>(l) * nt + j] = solve(w, rules.time.nodes[j] * dt, caches[j]);
  }
  const double inv_dx = 1.0 / poly.dx();
  for (int a = 0; a < ns; ++a)
    for (int j = 0; j < nt; ++j) {
      StateVector g = StateVector::Zero(m);
      for (int b = 0; b < ns; ++b) g += rules.space_derivative[static_cast<std::size_t>(a) * ns + b] * table.value(b, j);
      table.dqdx[static_cast<std::size_t>(a) * nt + j] = g * inv_dx;
    }
  return table;
}

}  // namespace ader

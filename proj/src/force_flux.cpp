#include "ader/force_flux.hpp"

namespace ader {

SquareMatrix segment_average_A(const SystemDescriptor& system, const StateVector& q_left,
                               const StateVector& q_right, const QuadratureRule& rule) {
  const StateVector jump = q_right - q_left;
  if (jump.cwiseAbs().maxCoeff() == 0.0) return system.a_matrix(q_left);
  SquareMatrix sum = SquareMatrix::Zero(system.n_vars, system.n_vars);
  for (int s = 0; s < rule.size(); ++s) {
    const StateVector q = q_left + rule.nodes[s] * jump;
    if (!system.admissible(q)) throw InadmissibleState("segment path leaves the admissible set");
    sum += rule.weights[s] * system.a_matrix(q);
  }
  return sum;
}

ForceMatrices force_alpha_matrices(const SquareMatrix& a_tilde, double alpha, double dt, double dx) {
  const int m = static_cast<int>(a_tilde.rows());
  const double ratio = dx / (alpha * dt);
  const SquareMatrix dissipation =
      (alpha * dt / (4.0 * dx)) * (a_tilde * a_tilde + ratio * ratio * SquareMatrix::Identity(m, m));
  return {0.5 * a_tilde - dissipation, 0.5 * a_tilde + dissipation};
}

FluctuationPair interface_fluctuations(const SystemDescriptor& system, const PredictorTable& left,
                                       const PredictorTable& right, const PredictorRules& rules, double alpha,
                                       double dt, double dx) {
  const int m = system.n_vars;
  FluctuationPair out{StateVector::Zero(m), StateVector::Zero(m)};
  const auto& rule = rules.trace_time;
  for (int u = 0; u < rule.size(); ++u) {
    const StateVector& ql = left.right_trace[u];
    const StateVector& qr = right.left_trace[u];
    const StateVector jump = qr - ql;
    const ForceMatrices am = force_alpha_matrices(segment_average_A(system, ql, qr, rules.path), alpha, dt, dx);
    out.minus += rule.weights[u] * (am.minus * jump);
    out.plus += rule.weights[u] * (am.plus * jump);
  }
  return out;
}

StateVector source_integral(const SystemDescriptor& system, const PredictorTable& table,
                            const PredictorRules& rules) {
  StateVector sum = StateVector::Zero(system.n_vars);
  if (!system.has_source) return sum;
  for (int l = 0; l < table.n_space; ++l)
    for (int j = 0; j < table.n_time; ++j)
      sum += (rules.space.weights[l] * rules.time.weights[j]) * system.source(table.value(l, j));
  return sum;
}

StateVector noncons_volume_term(const SystemDescriptor& system, const PredictorTable& table,
                                const PredictorRules& rules) {
  StateVector sum = StateVector::Zero(system.n_vars);
  if (table.n_space < 2) return sum;
  for (int l = 0; l < table.n_space; ++l)
    for (int j = 0; j < table.n_time; ++j)
      sum += (rules.space.weights[l] * rules.time.weights[j]) * (system.a_matrix(table.value(l, j)) * table.gradient(l, j));
  return sum;
}

}  // namespace ader

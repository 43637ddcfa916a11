#pragma once

#include <utility>

#include "ader/predictor.hpp"
#include "ader/quadrature.hpp"
#include "ader/systems.hpp"

namespace ader {

/// Average of A along the straight segment from q_left to q_right.
SquareMatrix segment_average_A(const SystemDescriptor& system, const StateVector& q_left,
                               const StateVector& q_right, const QuadratureRule& rule);

struct ForceMatrices {
  SquareMatrix minus;
  SquareMatrix plus;
};

/// A^{+-} = A/2 +- (alpha dt / (4 dx)) [A^2 + (dx / (alpha dt))^2 I].
ForceMatrices force_alpha_matrices(const SquareMatrix& a_tilde, double alpha, double dt, double dx);

struct FluctuationPair {
  StateVector minus;
  StateVector plus;
};

/// Time-averaged fluctuations at the interface between `left` and `right`.
FluctuationPair interface_fluctuations(const SystemDescriptor& system, const PredictorTable& left,
                                       const PredictorTable& right, const PredictorRules& rules, double alpha,
                                       double dt, double dx);

/// Space-time average of S over the cell.
StateVector source_integral(const SystemDescriptor& system, const PredictorTable& table, const PredictorRules& rules);

/// Space-time average of A(Q) dQ/dx over the cell.
StateVector noncons_volume_term(const SystemDescriptor& system, const PredictorTable& table,
                                const PredictorRules& rules);

}  // namespace ader

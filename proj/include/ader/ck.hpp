#pragma once

#include <array>
#include <span>

#include "ader/systems.hpp"
#include "ader/types.hpp"

namespace ader {

/// Time derivatives d^k Q / dt^k for k = 0..M at one point; entry 0 is D_0.
using TimeDerivatives = std::array<StateVector, kMaxDegree + 1>;

/// Cauchy-Kowalewskaya time derivatives from the spatial stack D. Uses the
/// closed form when the system has constant coefficients and falls back to
/// the jet recursion otherwise.
TimeDerivatives ck_time_derivatives(const SystemDescriptor& system, const DerivativeStack& d);

/// Jet recursion valid for any system: the time layer k+1 of the local
/// Taylor expansion is layer k of S(Q) - A(Q) Q_x divided by k+1.
TimeDerivatives ck_time_derivatives_generic(const SystemDescriptor& system, const DerivativeStack& d);

/// (B - A d/dx)^k applied to the polynomial data, for constant A and B.
TimeDerivatives ck_linear_closed_form(const ConstantCoefficients& coefficients, const DerivativeStack& d);

/// sum_j C(k,j) (-lambda)^j beta^(k-j) d_j for q_t + lambda q_x = beta q.
double scalar_ck_closed_form(double lambda, double beta, std::span<const double> d, int k);

/// H(D_0) = D_0 - w_0 + sum_{k=1..M} (-tau)^k / k! G^k(D_0, D_1..D_k).
StateVector predictor_residual(const SystemDescriptor& system, const DerivativeStack& d, double tau,
                               const StateVector& w0);

/// dH/dD_0 with D_1..D_M held fixed. Closed form for constant coefficients,
/// central differences otherwise.
SquareMatrix predictor_residual_jacobian(const SystemDescriptor& system, const DerivativeStack& d, double tau);

/// Central-difference dH/dD_0, always; exposed for cross-checks.
SquareMatrix predictor_residual_jacobian_fd(const SystemDescriptor& system, const DerivativeStack& d, double tau);

}  // namespace ader

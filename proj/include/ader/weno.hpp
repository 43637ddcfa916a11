#pragma once

#include <array>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ader/grid.hpp"
#include "ader/types.hpp"

namespace ader {

enum class StencilKind { left = 0, central = 1, right = 2 };

/// Shifted Legendre polynomial theta_l on [0,1], 0 <= l <= 5.
double legendre(int l, double xi);

/// Cell offsets (relative to the reconstructed cell) covered by a stencil.
struct StencilRange {
  int first = 0;
  int last = 0;
  int size() const { return last - first + 1; }
};
StencilRange stencil_range(int degree, StencilKind kind);

/// Row r holds the integrals of theta_0..theta_M over the unit interval of
/// the r-th stencil cell. Odd-degree central stencils are overdetermined.
struct StencilMatrix {
  int rows = 0;
  int cols = 0;
  int first_offset = 0;
  std::vector<double> values;  // row-major

  double operator()(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }
};
StencilMatrix stencil_matrix(int degree, StencilKind kind);

/// Exact-arithmetic reconstruction operators for one degree M, built once
/// and cached. All maps act on a window of 2M+1 cell averages ordered from
/// offset -M to +M.
struct ReconstructionTables {
  int degree = 0;
  std::array<Eigen::MatrixXd, 3> candidate_map;  // (M+1) x (2M+1), Legendre coefficients
  Eigen::MatrixXd oscillation;                   // (M+1) x (M+1) Gram matrix of derivatives
  Eigen::MatrixXd legendre_to_monomial;          // monomial coeff k = sum_l T(k,l) beta_l

  static const ReconstructionTables& get(int degree);
};

/// Legendre coefficients of the candidate polynomial through the averages of
/// one stencil (values ordered by increasing cell index).
std::vector<double> candidate_polynomial(std::span<const double> stencil_values, int degree,
                                         StencilKind kind);

/// sum_{k=1..M} int_0^1 (d^k p / d xi^k)^2 for p = sum_l beta_l theta_l.
double oscillation_index(std::span<const double> beta, int degree);

struct WenoWeights {
  double left = 0.0;
  double central = 0.0;
  double right = 0.0;
};

/// omega_S proportional to lambda_S / (OI_S + 1e-14)^4 with lambda_L = lambda_R = 1
/// and lambda_C = 1e5, normalized to sum to 1.
WenoWeights nonlinear_weights(double oi_left, double oi_central, double oi_right);

struct ScalarReconstruction {
  std::array<double, kMaxDegree + 1> legendre{};
  WenoWeights weights;
};

/// Blended reconstruction of one unknown from its 2M+1 window.
ScalarReconstruction reconstruct_scalar(std::span<const double> window, int degree);

/// Per-cell reconstruction of every unknown, in the Legendre basis on the
/// unit cell; derivatives are reported in physical units.
class ReconstructionPolynomial {
 public:
  ReconstructionPolynomial() = default;
  ReconstructionPolynomial(int degree, int n_vars, double dx) : degree_(degree), n_vars_(n_vars), dx_(dx) {}

  int degree() const { return degree_; }
  int n_vars() const { return n_vars_; }
  double dx() const { return dx_; }

  double legendre_coefficient(int var, int l) const { return legendre_[var][l]; }
  const WenoWeights& weights(int var) const { return weights_[var]; }

  /// Sets the Legendre coefficients of one unknown and refreshes its
  /// monomial form.
  void set(int var, std::span<const double> legendre_coefficients, WenoWeights weights = {});

  /// d^k/dx^k of the reconstruction of `var` at reference coordinate xi.
  double eval_derivative(int var, double xi, int k) const;

  /// D_k = d^k w / dx^k at xi for k = 0..M and every unknown.
  DerivativeStack derivatives_at(double xi) const;

 private:
  int degree_ = 0;
  int n_vars_ = 0;
  double dx_ = 1.0;
  std::array<std::array<double, kMaxDegree + 1>, kMaxVars> legendre_{};
  std::array<std::array<double, kMaxDegree + 1>, kMaxVars> monomial_{};
  std::array<WenoWeights, kMaxVars> weights_{};
};

/// Reconstructs cell `cell` of `field`; needs `degree` valid neighbours on
/// each side (ghosts included).
ReconstructionPolynomial reconstruct(const CellField& field, int cell, int degree, double dx);

}  // namespace ader

#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ader {

// Largest system size handled (Euler: 3) and largest reconstruction degree
// (fifth order: M = 4).
inline constexpr int kMaxVars = 3;
inline constexpr int kMaxDegree = 4;

using StateVector = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxVars, 1>;
using SquareMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxVars, kMaxVars>;

/// Q and its spatial derivatives D_0..D_M at one space-time point, in
/// physical units.
struct DerivativeStack {
  std::array<StateVector, kMaxDegree + 1> d;
  int degree = 0;

  DerivativeStack() = default;
  DerivativeStack(int n_vars, int degree_m) : degree(degree_m) {
    for (auto& v : d) v = StateVector::Zero(n_vars);
  }

  int n_vars() const { return static_cast<int>(d[0].size()); }
  StateVector& operator[](int k) { return d[k]; }
  const StateVector& operator[](int k) const { return d[k]; }
};

/// Raised when a state leaves the admissible set of a system (vacuum,
/// negative pressure, complex eigenvalues).
class InadmissibleState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the local predictor cannot be computed; carries enough
/// context to locate the failing cell.
class PredictorFailure : public std::runtime_error {
 public:
  PredictorFailure(const std::string& what, int cell, double tau, double residual)
      : std::runtime_error(what), cell_(cell), tau_(tau), residual_(residual) {}

  int cell() const { return cell_; }
  double tau() const { return tau_; }
  double residual() const { return residual_; }

  PredictorFailure with_cell(int cell) const {
    return PredictorFailure(what() + std::string(" (cell ") + std::to_string(cell) + ")",
                            cell, tau_, residual_);
  }

 private:
  int cell_;
  double tau_;
  double residual_;
};

}  // namespace ader

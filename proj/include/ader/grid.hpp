#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ader/types.hpp"

namespace ader {

enum class BoundaryKind { periodic, transmissive };

BoundaryKind parse_boundary(const std::string& name);
std::string to_string(BoundaryKind kind);

/// Uniform 1-D grid; cell i (0-based) spans [x_lo + i dx, x_lo + (i+1) dx].
struct Grid {
  double x_lo = 0.0;
  double x_hi = 1.0;
  int n_cells = 1;
  double dx = 1.0;

  double center(int i) const { return x_lo + (i + 0.5) * dx; }
  double left_face(int i) const { return x_lo + i * dx; }
  double length() const { return x_hi - x_lo; }
};

Grid make_grid(double x_lo, double x_hi, int n_cells);

/// Cell averages of m unknowns with a ghost layer on each side. Cell indices
/// run from -ghost to n_cells + ghost - 1.
class CellField {
 public:
  CellField() = default;
  CellField(int n_cells, int n_vars, int ghost);

  int n_cells() const { return n_cells_; }
  int n_vars() const { return n_vars_; }
  int ghost() const { return ghost_; }

  double& operator()(int cell, int var) { return data_[offset(cell) + var]; }
  double operator()(int cell, int var) const { return data_[offset(cell) + var]; }

  std::span<double> cell(int i) { return {data_.data() + offset(i), static_cast<std::size_t>(n_vars_)}; }
  std::span<const double> cell(int i) const {
    return {data_.data() + offset(i), static_cast<std::size_t>(n_vars_)};
  }

  StateVector state(int i) const;
  void set_state(int i, const StateVector& q);

  /// Sum over interior cells of dx * Q_i, per variable.
  std::vector<double> totals(double dx) const;

  bool all_finite() const;

 private:
  std::size_t offset(int cell) const {
    return static_cast<std::size_t>(cell + ghost_) * static_cast<std::size_t>(n_vars_);
  }

  int n_cells_ = 0;
  int n_vars_ = 0;
  int ghost_ = 0;
  std::vector<double> data_;
};

/// Fills `width` ghost cells per side. Periodic ghosts wrap modulo n_cells;
/// transmissive ghosts copy the nearest interior cell.
void apply_boundary(CellField& field, BoundaryKind kind, int width);

using InitialCondition = std::function<StateVector(double x)>;
using ExactSolution = std::function<StateVector(double x, double t)>;

/// Cell averages of f over each interior cell, 5-point Gauss-Legendre.
CellField cell_averages(const Grid& grid, int n_vars, int ghost, const InitialCondition& f);

struct ErrorNorms {
  double linf = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
};

/// Per-variable errors of `numeric` against the cell averages of the exact
/// solution at time t.
std::vector<ErrorNorms> error_norms(const Grid& grid, const CellField& numeric,
                                    const ExactSolution& exact, double t);

/// log2(err_coarse / err_fine) for a mesh doubling; NaN if either error is
/// not positive.
double observed_order(double err_coarse, double err_fine);

struct RunConfig {
  int order = 3;  // M + 1, 1..5 (1 is the first-order scheme)
  double cfl = 0.1;
  double alpha = 1.0;
  double t_out = 1.0;
  BoundaryKind boundary = BoundaryKind::periodic;
  double fp_tolerance = 1e-12;
  int fp_max_iterations = 50;
  double max_dt = 1e-2;  // used when every wave speed vanishes

  int degree() const { return order - 1; }
  int ghost_width() const { return order; }
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const RunConfig& config);

}  // namespace ader

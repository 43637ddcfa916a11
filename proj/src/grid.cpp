#include "ader/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ader/quadrature.hpp"

namespace ader {

BoundaryKind parse_boundary(const std::string& name) {
  if (name == "periodic") return BoundaryKind::periodic;
  if (name == "transmissive") return BoundaryKind::transmissive;
  throw std::invalid_argument("unknown boundary kind '" + name + "'");
}

std::string to_string(BoundaryKind kind) {
  return kind == BoundaryKind::periodic ? "periodic" : "transmissive";
}

Grid make_grid(double x_lo, double x_hi, int n_cells) {
  if (n_cells < 1) throw std::invalid_argument("make_grid: n_cells must be positive");
  if (!(x_hi > x_lo)) throw std::invalid_argument("make_grid: x_hi must exceed x_lo");
  return Grid{x_lo, x_hi, n_cells, (x_hi - x_lo) / n_cells};
}

CellField::CellField(int n_cells, int n_vars, int ghost)
    : n_cells_(n_cells),
      n_vars_(n_vars),
      ghost_(ghost),
      data_(static_cast<std::size_t>(n_cells + 2 * ghost) * n_vars, 0.0) {
  if (n_cells < 1 || n_vars < 1 || n_vars > kMaxVars || ghost < 0) {
    throw std::invalid_argument("CellField: bad dimensions");
  }
}

StateVector CellField::state(int i) const {
  StateVector q(n_vars_);
  for (int v = 0; v < n_vars_; ++v) q[v] = (*this)(i, v);
  return q;
}

void CellField::set_state(int i, const StateVector& q) {
  for (int v = 0; v < n_vars_; ++v) (*this)(i, v) = q[v];
}

std::vector<double> CellField::totals(double dx) const {
  std::vector<double> sum(n_vars_, 0.0);
  for (int i = 0; i < n_cells_; ++i)
    for (int v = 0; v < n_vars_; ++v) sum[v] += dx * (*this)(i, v);
  return sum;
}

bool CellField::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

void apply_boundary(CellField& field, BoundaryKind kind, int width) {
  if (width > field.ghost()) throw std::invalid_argument("apply_boundary: ghost layer too thin");
  const int n = field.n_cells();
  for (int g = 1; g <= width; ++g) {
    int src_left = 0;
    int src_right = n - 1;
    if (kind == BoundaryKind::periodic) {
      src_left = ((-g) % n + n) % n;
      src_right = (n - 1 + g) % n;
    }
    for (int v = 0; v < field.n_vars(); ++v) {
      field(-g, v) = field(src_left, v);
      field(n - 1 + g, v) = field(src_right, v);
    }
  }
}

CellField cell_averages(const Grid& grid, int n_vars, int ghost, const InitialCondition& f) {
  static const QuadratureRule rule = gauss_legendre(5);
  CellField field(grid.n_cells, n_vars, ghost);
  for (int i = 0; i < grid.n_cells; ++i) {
    const double x0 = grid.left_face(i);
    StateVector avg = StateVector::Zero(n_vars);
    for (int j = 0; j < rule.size(); ++j) avg += rule.weights[j] * f(x0 + rule.nodes[j] * grid.dx);
    field.set_state(i, avg);
  }
  return field;
}

std::vector<ErrorNorms> error_norms(const Grid& grid, const CellField& numeric,
                                    const ExactSolution& exact, double t) {
  static const QuadratureRule rule = gauss_legendre(5);
  const int m = numeric.n_vars();
  std::vector<ErrorNorms> norms(m);
  for (int i = 0; i < grid.n_cells; ++i) {
    const double x0 = grid.left_face(i);
    StateVector avg = StateVector::Zero(m);
    for (int j = 0; j < rule.size(); ++j) avg += rule.weights[j] * exact(x0 + rule.nodes[j] * grid.dx, t);
    for (int v = 0; v < m; ++v) {
      const double e = std::abs(numeric(i, v) - avg[v]);
      norms[v].linf = std::max(norms[v].linf, e);
      norms[v].l1 += grid.dx * e;
      norms[v].l2 += grid.dx * e * e;
    }
  }
  for (auto& nrm : norms) nrm.l2 = std::sqrt(nrm.l2);
  return norms;
}

double observed_order(double err_coarse, double err_fine) {
  if (!(err_coarse > 0.0) || !(err_fine > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return std::log2(err_coarse / err_fine);
}

void validate(const RunConfig& config) {
  if (config.order < 1 || config.order > kMaxDegree + 1)
    throw std::invalid_argument("order must lie in 1..5");
  if (!(config.cfl > 0.0)) throw std::invalid_argument("cfl must be positive");
  if (!(config.alpha >= 1.0)) throw std::invalid_argument("alpha must be >= 1");
  if (!(config.t_out >= 0.0)) throw std::invalid_argument("t_out must be non-negative");
  if (!(config.fp_tolerance > 0.0)) throw std::invalid_argument("fixed-point tolerance must be positive");
  if (config.fp_max_iterations < 1) throw std::invalid_argument("fixed-point iteration cap must be positive");
  if (!(config.max_dt > 0.0)) throw std::invalid_argument("max_dt must be positive");
}

}  // namespace ader

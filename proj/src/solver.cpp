#include "ader/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>

#include "ader/force_flux.hpp"
#include "ader/weno.hpp"

namespace ader {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs body(i) for i in [first, last), serially or across OpenMP threads.
// The first exception thrown by any iteration is rethrown afterwards.
template <class Body>
void for_cells(int first, int last, Execution execution, Body&& body) {
  if (execution == Execution::serial) {
    for (int i = first; i < last; ++i) body(i);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4)
  for (int i = first; i < last; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(ader_step_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

double compute_dt(const SystemDescriptor& system, const CellField& field, double cfl, double dx, double max_dt) {
  double speed = 0.0;
  for (int i = 0; i < field.n_cells(); ++i) {
    const StateVector ev = system.eigenvalues(field.state(i));
    speed = std::max(speed, ev.cwiseAbs().maxCoeff());
  }
  if (!(speed > 0.0)) return max_dt;
  return cfl * dx / speed;
}

double clip_dt(double t, double dt, double t_out) { return (t + dt > t_out) ? t_out - t : dt; }

StepReport step(const SystemDescriptor& system, const Grid& grid, CellField& field, double dt,
                const RunConfig& config, Execution execution) {
  const auto start = Clock::now();
  const int degree = config.degree();
  const int n = grid.n_cells;
  const int m = system.n_vars;
  if (field.ghost() < config.ghost_width()) throw std::invalid_argument("step: ghost layer too narrow");

  apply_boundary(field, config.boundary, field.ghost());
  const PredictorRules& rules = [&]() -> const PredictorRules& {
    static const std::array<PredictorRules, kMaxDegree + 1> all = [] {
      std::array<PredictorRules, kMaxDegree + 1> r;
      for (int k = 0; k <= kMaxDegree; ++k) r[k] = PredictorRules::make(k);
      return r;
    }();
    return all[degree];
  }();
  const PredictorOptions options{config.fp_tolerance, config.fp_max_iterations, 5};

  // Tables for cells -1..n; the two outer ones only feed interface traces.
  std::vector<PredictorTable> tables(static_cast<std::size_t>(n) + 2);
  for_cells(-1, n + 1, execution, [&](int i) {
    try {
      const ReconstructionPolynomial poly = reconstruct(field, i, degree, grid.dx);
      tables[static_cast<std::size_t>(i + 1)] =
          build_predictor_table(system, poly, dt, rules, options, i < 0 || i >= n);
    } catch (const PredictorFailure& e) {
      throw e.with_cell(i);
    } catch (const InadmissibleState& e) {
      throw PredictorFailure(e.what(), i, 0.0, 0.0);
    }
  });

  // fluct[k] belongs to interface k - 1/2, k = 0..n.
  std::vector<FluctuationPair> fluct(static_cast<std::size_t>(n) + 1);
  for_cells(0, n + 1, execution, [&](int k) {
    fluct[static_cast<std::size_t>(k)] = interface_fluctuations(system, tables[static_cast<std::size_t>(k)],
                                                                tables[static_cast<std::size_t>(k + 1)], rules,
                                                                config.alpha, dt, grid.dx);
  });

  const double ratio = dt / grid.dx;
  for_cells(0, n, execution, [&](int i) {
    const PredictorTable& t = tables[static_cast<std::size_t>(i + 1)];
    const StateVector volume = source_integral(system, t, rules) - noncons_volume_term(system, t, rules);
    const StateVector jumps = fluct[static_cast<std::size_t>(i)].plus + fluct[static_cast<std::size_t>(i + 1)].minus;
    for (int v = 0; v < m; ++v) field(i, v) += -ratio * jumps[v] + dt * volume[v];
  });

  StepReport report;
  report.dt = dt;
  for (const auto& t : tables) report.max_iterations = std::max(report.max_iterations, t.max_iterations);
  report.wall_seconds = seconds_since(start);
  return report;
}

RunResult run(const SystemDescriptor& system, const Grid& grid, const RunConfig& config, Execution execution) {
  validate(config);
  const auto start = Clock::now();
  RunResult result;
  result.field = cell_averages(grid, system.n_vars, config.ghost_width(), system.initial_condition);
  RunReport& report = result.report;
  report.initial_totals = result.field.totals(grid.dx);

  double t = 0.0;
  while (t < config.t_out) {
    const double nominal = compute_dt(system, result.field, config.cfl, grid.dx, config.max_dt);
    const double dt = clip_dt(t, nominal, config.t_out);
    StepReport s = step(system, grid, result.field, dt, config, execution);
    report.max_iterations = std::max(report.max_iterations, s.max_iterations);
    report.step_reports.push_back(s);
    ++report.steps;
    t = (dt == nominal) ? t + dt : config.t_out;
    if (!result.field.all_finite()) throw std::runtime_error("solution became non-finite");
  }
  report.t_final = t;
  report.final_totals = result.field.totals(grid.dx);
  report.wall_seconds = seconds_since(start);
  return result;
}

std::vector<ConvergenceRow> convergence_study(const SystemDescriptor& system, const RunConfig& config,
                                              const std::vector<int>& meshes, double x_lo, double x_hi,
                                              int tracked_var, Execution execution) {
  if (!system.exact_solution) throw std::invalid_argument("convergence study needs an exact solution");
  std::vector<ConvergenceRow> rows;
  for (int n : meshes) {
    const Grid grid = make_grid(x_lo, x_hi, n);
    const RunResult r = run(system, grid, config, execution);
    ConvergenceRow row;
    row.mesh = n;
    row.errors = error_norms(grid, r.field, system.exact_solution, config.t_out)[static_cast<std::size_t>(tracked_var)];
    row.cpu_seconds = r.report.wall_seconds;
    row.max_iterations = r.report.max_iterations;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (rows.empty()) {
      row.linf_order = row.l1_order = row.l2_order = nan;
    } else {
      const ErrorNorms& prev = rows.back().errors;
      row.linf_order = observed_order(prev.linf, row.errors.linf);
      row.l1_order = observed_order(prev.l1, row.errors.l1);
      row.l2_order = observed_order(prev.l2, row.errors.l2);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ader

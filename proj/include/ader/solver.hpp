#pragma once

#include <vector>

#include "ader/grid.hpp"
#include "ader/predictor.hpp"
#include "ader/systems.hpp"

namespace ader {

/// cfl * dx / max |eigenvalue| over the interior cells; `max_dt` when every
/// wave speed vanishes.
double compute_dt(const SystemDescriptor& system, const CellField& field, double cfl, double dx, double max_dt);

/// Shortens dt so that t + dt does not pass t_out.
double clip_dt(double t, double dt, double t_out);

struct StepReport {
  double dt = 0.0;
  int max_iterations = 0;
  double wall_seconds = 0.0;
};

enum class Execution { serial, parallel };

/// One ADER step in place. The field's ghost layer must be at least
/// config.ghost_width() wide; it is refilled here.
StepReport step(const SystemDescriptor& system, const Grid& grid, CellField& field, double dt,
                const RunConfig& config, Execution execution = Execution::parallel);

struct RunReport {
  int steps = 0;
  double t_final = 0.0;
  int max_iterations = 0;
  double wall_seconds = 0.0;
  std::vector<double> initial_totals;
  std::vector<double> final_totals;
  std::vector<StepReport> step_reports;
};

struct RunResult {
  CellField field;
  RunReport report;
};

/// Marches the system's initial condition to config.t_out.
RunResult run(const SystemDescriptor& system, const Grid& grid, const RunConfig& config,
              Execution execution = Execution::parallel);

struct ConvergenceRow {
  int mesh = 0;
  ErrorNorms errors;
  double linf_order = 0.0;  // NaN on the first mesh
  double l1_order = 0.0;
  double l2_order = 0.0;
  double cpu_seconds = 0.0;
  int max_iterations = 0;
};

/// Runs every mesh on [x_lo, x_hi] and tabulates the errors of one variable
/// against the exact solution.
std::vector<ConvergenceRow> convergence_study(const SystemDescriptor& system, const RunConfig& config,
                                              const std::vector<int>& meshes, double x_lo = 0.0,
                                              double x_hi = 1.0, int tracked_var = 0,
                                              Execution execution = Execution::parallel);

}  // namespace ader

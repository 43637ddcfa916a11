#include <cmath>

#include "doctest.h"
#include "ader/solver.hpp"

using namespace ader;
using doctest::Approx;

namespace {

RunConfig config_for(int order, double alpha, double t_out, double cfl = 0.1) {
  RunConfig c;
  c.order = order;
  c.alpha = alpha;
  c.t_out = t_out;
  c.cfl = cfl;
  return c;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("time step selection") {
  CellField f(4, 1, 1);
  for (int i = 0; i < 4; ++i) f(i, 0) = i;
  CHECK(compute_dt(scalar_advection_reaction(1, 0), f, 0.1, 0.01, 1.0) == Approx(0.001).epsilon(1e-15));
  CHECK(compute_dt(scalar_advection_reaction(0, -1), f, 0.1, 0.01, 0.25) == 0.25);

  CellField g(3, 3, 1);
  for (int i = 0; i < 3; ++i) g.set_state(i, primitive_to_conserved({1, 1, 2}, 1.4));
  CHECK(compute_dt(euler_ideal_gas(1.4), g, 0.5, 0.1, 1.0) == Approx(0.05 / (1 + std::sqrt(2.8))).epsilon(1e-14));

  CHECK(clip_dt(0.9995, 0.001, 1.0) == Approx(0.0005).epsilon(1e-12));
  CHECK(clip_dt(0.2, 0.001, 1.0) == 0.001);
  CHECK(0.9995 + clip_dt(0.9995, 0.001, 1.0) == 1.0);
}

TEST_CASE("first-order step is upwind for alpha = 2 and c = 1/2") {
  const auto adv = scalar_advection_reaction(1.0, 0.0);
  const Grid g = make_grid(0, 1, 4);
  auto cfg = config_for(1, 2.0, 1.0, 0.5);
  CellField f(4, 1, cfg.ghost_width());
  for (int i = 0; i < 4; ++i) f(i, 0) = i + 1;
  step(adv, g, f, 0.5 * g.dx, cfg, Execution::serial);
  const double expected[] = {2.5, 1.5, 2.5, 3.5};
  for (int i = 0; i < 4; ++i) CHECK(f(i, 0) == Approx(expected[i]).epsilon(1e-14));
}

TEST_CASE("uniform equilibrium is a steady state") {
  StateVector one(2);
  one << 1.0, 1.0;
  struct Case {
    SystemDescriptor sys;
    StateVector q;
  };
  const Case cases[] = {{noncons_system(1, 0.02), one},
                        {euler_ideal_gas(1.4), primitive_to_conserved({1.2, 0.7, 0.9}, 1.4)},
                        {leveque_yee(-1000), StateVector::Constant(1, 0.0)}};
  for (const auto& c : cases)
    for (int order = 1; order <= 5; ++order) {
      const Grid g = make_grid(0, 1, 10);
      auto cfg = config_for(order, 2.0, 1.0);
      CellField f(10, c.sys.n_vars, cfg.ghost_width());
      for (int i = 0; i < 10; ++i) f.set_state(i, c.q);
      step(c.sys, g, f, compute_dt(c.sys, f, 0.1, g.dx, 1e-2), cfg, Execution::serial);
      for (int i = 0; i < 10; ++i) CHECK((f.state(i) - c.q).cwiseAbs().maxCoeff() <= 1e-13);
    }
}

TEST_CASE("run hits the output time exactly and honours the CFL bound") {
  const auto sys = linear_system(1.0, -1.0);
  const Grid g = make_grid(0, 1, 16);
  auto cfg = config_for(3, 1.9, 0.0);
  auto r = run(sys, g, cfg);
  const CellField init = cell_averages(g, 2, cfg.ghost_width(), sys.initial_condition);
  CHECK(r.report.steps == 0);
  for (int i = 0; i < 16; ++i)
    for (int v = 0; v < 2; ++v) CHECK(r.field(i, v) == init(i, v));

  cfg.t_out = 0.137;
  r = run(sys, g, cfg);
  CHECK(r.report.t_final == 0.137);
  CHECK(r.report.steps == static_cast<int>(r.report.step_reports.size()));
  for (const auto& s : r.report.step_reports) {
    CHECK(s.dt > 0.0);
    CHECK(s.dt <= cfg.cfl * g.dx / 1.0 * (1 + 1e-15));
  }
  CHECK(r.report.max_iterations <= 25);
}

TEST_CASE("serial and parallel execution agree") {
  const auto sys = euler_ideal_gas(1.4);
  const Grid g = make_grid(0, 1, 16);
  const auto cfg = config_for(3, 2.0, 0.02);
  const auto a = run(sys, g, cfg, Execution::serial);
  const auto b = run(sys, g, cfg, Execution::parallel);
  CHECK(a.report.steps == b.report.steps);
  for (int i = 0; i < 16; ++i)
    for (int v = 0; v < 3; ++v) CHECK(a.field(i, v) == b.field(i, v));
}

TEST_CASE("Euler periodic run conserves mass, momentum and energy") {
  const auto sys = euler_ideal_gas(1.4);
  const Grid g = make_grid(0, 1, 16);
  const auto cfg = config_for(4, 2.0, 1.0);
  CellField f = cell_averages(g, 3, cfg.ghost_width(), sys.initial_condition);
  const auto start = f.totals(g.dx);
  for (int n = 0; n < 20; ++n) {
    const auto before = f.totals(g.dx);
    step(sys, g, f, compute_dt(sys, f, cfg.cfl, g.dx, cfg.max_dt), cfg, Execution::serial);
    const auto after = f.totals(g.dx);
    for (int v = 0; v < 3; ++v) CHECK(std::abs(after[v] - before[v]) <= 1e-11 * std::abs(before[v]));
  }
  const auto end = f.totals(g.dx);
  for (int v = 0; v < 3; ++v) CHECK(std::abs(end[v] - start[v]) <= 1e-9 * std::abs(start[v]));
}

TEST_CASE("convergence study rows") {
  const auto sys = linear_system(1.0, -1.0);
  const auto cfg = config_for(3, 1.9, 0.1);
  const auto rows = convergence_study(sys, cfg, {8, 16, 32});
  REQUIRE(rows.size() == 3);
  CHECK(std::isnan(rows[0].l1_order));
  CHECK(std::isnan(rows[0].linf_order));
  CHECK(std::isnan(rows[0].l2_order));
  for (std::size_t k = 1; k < rows.size(); ++k) {
    CHECK(rows[k].errors.l1 < rows[k - 1].errors.l1);
    CHECK(rows[k].l1_order == Approx(observed_order(rows[k - 1].errors.l1, rows[k].errors.l1)));
    CHECK(rows[k].cpu_seconds >= 0.0);
  }
  CHECK(rows[2].l1_order > 2.5);
}

TEST_CASE("one-step error decreases at the local order") {
  const auto sys = linear_system(1.0, -1.0);
  for (int order : {2, 3, 4}) {
    auto cfg = config_for(order, 1.9, 1.0);
    double prev = 0.0;
    for (int n : {16, 32, 64}) {
      const Grid g = make_grid(0, 1, n);
      CellField f = cell_averages(g, 2, cfg.ghost_width(), sys.initial_condition);
      const double dt = 0.1 * g.dx;
      step(sys, g, f, dt, cfg, Execution::serial);
      const double err = error_norms(g, f, sys.exact_solution, dt)[0].l1;
      if (n > 16) {
        CAPTURE(order);
        CHECK(observed_order(prev, err) >= order + 1 - 0.5);
      }
      prev = err;
    }
  }
}

TEST_CASE("invalid configurations are rejected") {
  const auto sys = linear_system(1.0, -1.0);
  const Grid g = make_grid(0, 1, 8);
  auto cfg = config_for(3, 0.5, 0.1);
  CHECK_THROWS_AS(run(sys, g, cfg), std::invalid_argument);
  cfg = config_for(3, 2.0, 0.1);
  CellField thin(8, 2, 1);
  CHECK_THROWS(step(sys, g, thin, 0.01, cfg));
}

}

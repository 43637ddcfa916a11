// Serial reference kernels against the OpenMP cell loop for one full step.

#include <benchmark/benchmark.h>

#include "ader/presets.hpp"
#include "ader/solver.hpp"

namespace {

void bench_step(benchmark::State& state, const char* preset, ader::Execution execution) {
  ader::Preset p = ader::make_preset(preset);
  p.config.order = static_cast<int>(state.range(0));
  const int cells = static_cast<int>(state.range(1));
  const ader::Grid g = ader::make_grid(p.x_lo, p.x_hi, cells);
  const ader::CellField start = ader::cell_averages(g, p.system.n_vars, p.config.ghost_width(), p.system.initial_condition);
  const double dt = ader::compute_dt(p.system, start, p.config.cfl, g.dx, p.config.max_dt);
  for (auto _ : state) {
    ader::CellField f = start;
    ader::step(p.system, g, f, dt, p.config, execution);
    benchmark::DoNotOptimize(f(0, 0));
  }
  state.SetItemsProcessed(state.iterations() * cells);
}

void args(benchmark::internal::Benchmark* b) {
  for (int order : {3, 5}) b->Args({order, 64})->Args({order, 256});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK_CAPTURE(bench_step, euler_serial, "euler-smooth", ader::Execution::serial)->Apply(args);
BENCHMARK_CAPTURE(bench_step, euler_parallel, "euler-smooth", ader::Execution::parallel)->Apply(args);
BENCHMARK_CAPTURE(bench_step, linear_serial, "linear-system", ader::Execution::serial)->Apply(args);
BENCHMARK_CAPTURE(bench_step, linear_parallel, "linear-system", ader::Execution::parallel)->Apply(args);

BENCHMARK_MAIN();

// ader1d: solve, converge and stability front end.

#include <fstream>
#include <iostream>
#include <locale>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "ader/presets.hpp"
#include "ader/solver.hpp"
#include "ader/stability.hpp"

namespace {

struct Overrides {
  std::string preset = "linear-system";
  int order = 0;
  int cells = 0;
  double cfl = 0.0;
  double alpha = 0.0;
  double t_out = -1.0;
  std::string boundary;
  double gamma = 1.4;
  bool serial = false;
};

void add_run_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--preset", o.preset, "Test configuration")
      ->check(CLI::IsMember(ader::preset_names()))
      ->capture_default_str();
  cmd->add_option("--order", o.order, "Scheme order M+1 (1..5); preset default 3");
  cmd->add_option("--cells", o.cells, "Number of cells; preset default (100 or 64)");
  cmd->add_option("--cfl", o.cfl, "CFL coefficient; preset default 0.1");
  cmd->add_option("--alpha", o.alpha, "FORCE-alpha parameter; preset default");
  cmd->add_option("--t-out", o.t_out, "Output time; preset default");
  cmd->add_option("--boundary", o.boundary, "periodic or transmissive; preset default")
      ->check(CLI::IsMember({"periodic", "transmissive"}));
  cmd->add_option("--gamma", o.gamma, "Ratio of specific heats (euler-smooth)")->capture_default_str();
  cmd->add_flag("--serial", o.serial, "Use the single-threaded reference kernels");
}

ader::Preset resolve(const Overrides& o) {
  ader::Preset p = ader::make_preset(o.preset);
  if (o.preset == "euler-smooth" && o.gamma != 1.4) p.system = ader::euler_ideal_gas(o.gamma);
  if (o.order > 0) p.config.order = o.order;
  if (o.cells > 0) p.cells = o.cells;
  if (o.cfl > 0.0) p.config.cfl = o.cfl;
  if (o.alpha > 0.0) p.config.alpha = o.alpha;
  if (o.t_out >= 0.0) p.config.t_out = o.t_out;
  if (!o.boundary.empty()) p.config.boundary = ader::parse_boundary(o.boundary);
  ader::validate(p.config);
  return p;
}

// Writes to the named file, or stdout for "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open " + path);
    }
    stream().imbue(std::locale::classic());
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  if (v != v) return "nan";
  s.precision(10);
  s << std::scientific << v;
  return s.str();
}

int cmd_solve(const Overrides& o, const std::string& out_path) {
  const ader::Preset p = resolve(o);
  const ader::Grid grid = ader::make_grid(p.x_lo, p.x_hi, p.cells);
  const auto result =
      ader::run(p.system, grid, p.config, o.serial ? ader::Execution::serial : ader::Execution::parallel);
  const int m = p.system.n_vars;
  ader::CellField exact;
  if (p.system.exact_solution) {
    const double t = p.config.t_out;
    exact = ader::cell_averages(grid, m, 0, [&](double x) { return p.system.exact_solution(x, t); });
  }
  Output out(out_path);
  auto& os = out.stream();
  os << "x";
  for (int v = 1; v <= m; ++v) os << ",q_" << v;
  if (p.system.exact_solution)
    for (int v = 1; v <= m; ++v) os << ",exact_" << v;
  os << '\n';
  for (int i = 0; i < grid.n_cells; ++i) {
    os << fmt(grid.center(i));
    for (int v = 0; v < m; ++v) os << ',' << fmt(result.field(i, v));
    if (p.system.exact_solution)
      for (int v = 0; v < m; ++v) os << ',' << fmt(exact(i, v));
    os << '\n';
  }
  std::cerr << "steps=" << result.report.steps << " max_fp_iterations=" << result.report.max_iterations
            << " wall_s=" << result.report.wall_seconds << '\n';
  return 0;
}

int cmd_converge(const Overrides& o, std::vector<int> orders, std::vector<int> meshes, const std::string& out_path) {
  ader::Preset p = resolve(o);
  if (!p.system.exact_solution) throw std::runtime_error("preset " + p.name + " has no exact solution");
  if (orders.empty()) orders = {p.config.order};
  if (meshes.empty()) meshes = p.meshes;
  Output out(out_path);
  auto& os = out.stream();
  os << "order,mesh,linf_err,linf_ord,l1_err,l1_ord,l2_err,l2_ord,cpu_s\n";
  for (int order : orders) {
    ader::RunConfig config = p.config;
    config.order = order;
    ader::validate(config);
    const auto rows = ader::convergence_study(p.system, config, meshes, p.x_lo, p.x_hi, p.tracked_var,
                                              o.serial ? ader::Execution::serial : ader::Execution::parallel);
    for (const auto& r : rows) {
      os << order << ',' << r.mesh << ',' << fmt(r.errors.linf) << ',' << fmt(r.linf_order) << ','
         << fmt(r.errors.l1) << ',' << fmt(r.l1_order) << ',' << fmt(r.errors.l2) << ',' << fmt(r.l2_order)
         << ',' << fmt(r.cpu_seconds) << '\n';
      os.flush();
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1-D ADER finite volume solver with an implicit Taylor predictor"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  std::string out_path = "-";
  app.add_option("--threads", threads, "OpenMP threads (0: runtime default)");
  app.add_option("--out", out_path, "Output CSV file, '-' for stdout")->capture_default_str();

  Overrides solve_opts;
  auto* solve = app.add_subcommand("solve", "March a preset to its output time and print the profile");
  add_run_flags(solve, solve_opts);

  Overrides conv_opts;
  std::vector<int> orders;
  std::vector<int> meshes;
  auto* converge = app.add_subcommand("converge", "Mesh refinement table against the exact solution");
  add_run_flags(converge, conv_opts);
  converge->add_option("--orders", orders, "Scheme orders, e.g. 3,5 (default: preset order)")->delimiter(',');
  converge->add_option("--meshes", meshes, "Cell counts (default 16,32,64,128)")->delimiter(',');

  ader::StabilityQuery query;
  std::string predictor = "implicit";
  double c_min = 0.01, c_max = 1.2, c_step = 0.01;
  double r_min = -10.0, r_max = 0.0, r_step = 0.1;
  auto* stability = app.add_subcommand("stability", "von Neumann stability map for q_t + lambda q_x = beta q");
  stability->add_option("--order", query.order, "Scheme order M+1 (1..5)")->check(CLI::Range(1, 5))->capture_default_str();
  stability->add_option("--predictor", predictor, "explicit or implicit")
      ->check(CLI::IsMember({"explicit", "implicit"}))
      ->capture_default_str();
  stability->add_option("--alpha", query.alpha, "FORCE-alpha parameter (implicit maps)")->capture_default_str();
  stability->add_option("--scenarios", query.scenarios, "Random weight scenarios per point")->capture_default_str();
  stability->add_option("--theta-samples", query.theta_samples, "Wave numbers sampled in [0, 2 pi)")->capture_default_str();
  stability->add_option("--seed", query.seed, "Scenario generator seed")->capture_default_str();
  stability->add_option("--c-min", c_min, "Smallest c")->capture_default_str();
  stability->add_option("--c-max", c_max, "Largest c")->capture_default_str();
  stability->add_option("--c-step", c_step, "c spacing")->capture_default_str();
  stability->add_option("--r-min", r_min, "Smallest r")->capture_default_str();
  stability->add_option("--r-max", r_max, "Largest r")->capture_default_str();
  stability->add_option("--r-step", r_step, "r spacing")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (*solve) return cmd_solve(solve_opts, out_path);
    if (*converge) return cmd_converge(conv_opts, orders, meshes, out_path);
    if (*stability) {
      query.predictor = predictor == "explicit" ? ader::PredictorKind::explicit_ck : ader::PredictorKind::implicit_taylor;
      const auto map = ader::stability_map(ader::linear_grid(c_min, c_max, c_step),
                                           ader::linear_grid(r_min, r_max, r_step), query);
      Output out(out_path);
      ader::write_csv(out.stream(), map);
      return 0;
    }
  } catch (const ader::PredictorFailure& e) {
    std::cerr << "error: " << e.what() << " (tau=" << e.tau() << ", residual=" << e.residual() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

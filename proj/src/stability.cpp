#include "ader/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

#include "ader/quadrature.hpp"

namespace ader {
namespace {

struct Rules {
  QuadratureRule space;
  QuadratureRule time;
  QuadratureRule trace;
  std::vector<double> derivative;
};

const Rules& rules_for(int degree) {
  static const std::array<Rules, kMaxDegree + 1> all = [] {
    std::array<Rules, kMaxDegree + 1> r;
    for (int m = 0; m <= kMaxDegree; ++m) {
      r[m].space = gauss_legendre(m + 1);
      r[m].time = gauss_legendre(m + 1);
      r[m].trace = gauss_lobatto(std::max(m + 1, 2));
      r[m].derivative = lagrange_derivative_matrix(r[m].space.nodes);
    }
    return r;
  }();
  return all[degree];
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Aggregates of the predictor of one cell in reference coordinates: time
// averaged traces at xi = 0 and xi = 1, and the space-time averages of q and
// dq/dxi.
template <class T>
struct Response {
  T left{};
  T right{};
  T volume{};
  T gradient{};
};

template <class T>
T derivative_at(const std::vector<T>& b, double xi, int j) {
  const int degree = static_cast<int>(b.size()) - 1;
  T value{};
  for (int n = degree; n >= j; --n) {
    double falling = 1.0;
    for (int p = 0; p < j; ++p) falling *= (n - p);
    value = value * xi + falling * b[static_cast<std::size_t>(n)];
  }
  return value;
}

template <class T>
T predictor_value(const std::vector<T>& b, double xi, double tau, double c, double r, PredictorKind kind) {
  const int degree = static_cast<int>(b.size()) - 1;
  std::array<T, kMaxDegree + 1> w{};
  for (int j = 0; j <= degree; ++j) w[j] = derivative_at(b, xi, j);

  if (kind == PredictorKind::explicit_ck) {
    T q{};
    double tk = 1.0;  // tau^k / k!
    for (int k = 0; k <= degree; ++k) {
      T g{};
      for (int j = 0; j <= k; ++j) g += binomial(k, j) * std::pow(-c, j) * std::pow(r, k - j) * w[j];
      q += tk * g;
      tk *= tau / (k + 1);
    }
    return q;
  }

  // Derivative chain, then the scalar implicit Taylor equation for q.
  std::array<T, kMaxDegree + 1> d{};
  const double denom = 1.0 - tau * r;
  if (degree >= 1) {
    d[degree] = w[degree] / denom;
    for (int j = degree - 1; j >= 1; --j) d[j] = (w[j] - tau * c * d[j + 1]) / denom;
  }
  double lhs = 1.0;
  T rhs = w[0];
  double coefficient = 1.0;  // (-tau)^k / k!
  for (int k = 1; k <= degree; ++k) {
    coefficient *= -tau / k;
    lhs += coefficient * std::pow(r, k);
    T g{};
    for (int j = 1; j <= k; ++j) g += binomial(k, j) * std::pow(-c, j) * std::pow(r, k - j) * d[j];
    rhs -= coefficient * g;
  }
  return rhs / lhs;
}

template <class T>
Response<T> cell_response(const std::vector<T>& b, double c, double r, PredictorKind kind) {
  const int degree = static_cast<int>(b.size()) - 1;
  const Rules& rules = rules_for(degree);
  Response<T> out;
  for (int u = 0; u < rules.trace.size(); ++u) {
    const double tau = rules.trace.nodes[u];
    out.left += rules.trace.weights[u] * predictor_value(b, 0.0, tau, c, r, kind);
    out.right += rules.trace.weights[u] * predictor_value(b, 1.0, tau, c, r, kind);
  }
  const int ns = rules.space.size();
  const int nt = rules.time.size();
  std::vector<T> column(static_cast<std::size_t>(ns));
  for (int j = 0; j < nt; ++j) {
    for (int l = 0; l < ns; ++l) column[l] = predictor_value(b, rules.space.nodes[l], rules.time.nodes[j], c, r, kind);
    for (int a = 0; a < ns; ++a) {
      T slope{};
      if (ns > 1)
        for (int l = 0; l < ns; ++l) slope += rules.derivative[static_cast<std::size_t>(a) * ns + l] * column[l];
      const double weight = rules.space.weights[a] * rules.time.weights[j];
      out.volume += weight * column[a];
      out.gradient += weight * slope;
    }
  }
  return out;
}

// Update increment of cell 0 when every cell carries the same response
// scaled by its mode factor exp(I theta u).
Complex increment(const Response<Complex>& z, double theta, double c, double r, double alpha) {
  const double kappa = 0.25 * alpha * (c * c + 1.0 / (alpha * alpha));
  const Complex back = std::polar(1.0, -theta);
  const Complex ahead = std::polar(1.0, theta);
  return -(0.5 * c + kappa) * (z.left - back * z.right) - (0.5 * c - kappa) * (ahead * z.left - z.right) +
         r * z.volume - c * z.gradient;
}

Complex amplitude(double theta, double c, double r, const WenoWeights& weights, int degree, double alpha,
                  PredictorKind kind) {
  const std::vector<Complex> b = symbolic_reconstruction(theta, weights, degree);
  return 1.0 + increment(cell_response(b, c, r, kind), theta, c, r, alpha);
}

}  // namespace

std::vector<Complex> symbolic_reconstruction(double theta, const WenoWeights& weights, int degree) {
  const auto& tables = ReconstructionTables::get(degree);
  const std::array<double, 3> omega{weights.left, weights.central, weights.right};
  std::vector<Complex> beta(static_cast<std::size_t>(degree) + 1, 0.0);
  for (int s = 0; s < 3; ++s)
    for (int l = 0; l <= degree; ++l)
      for (int u = -degree; u <= degree; ++u)
        beta[l] += omega[s] * tables.candidate_map[s](l, u + degree) * std::polar(1.0, theta * u);
  std::vector<Complex> mono(beta.size(), 0.0);
  for (int k = 0; k <= degree; ++k)
    for (int l = k; l <= degree; ++l) mono[k] += tables.legendre_to_monomial(k, l) * beta[l];
  return mono;
}

Complex amplitude_explicit(double theta, double c, double r, const WenoWeights& weights, int degree, double alpha) {
  return amplitude(theta, c, r, weights, degree, alpha, PredictorKind::explicit_ck);
}

Complex amplitude_implicit(double theta, double c, double r, const WenoWeights& weights, int degree, double alpha) {
  return amplitude(theta, c, r, weights, degree, alpha, PredictorKind::implicit_taylor);
}

AmplitudeBasis amplitude_basis(double c, double r, const StabilityQuery& query) {
  const int degree = query.degree();
  const auto& tables = ReconstructionTables::get(degree);
  const double alpha = query.flux_alpha();
  AmplitudeBasis basis;
  basis.theta.resize(static_cast<std::size_t>(query.theta_samples));
  for (int k = 0; k < query.theta_samples; ++k) basis.theta[k] = 2.0 * std::numbers::pi * k / query.theta_samples;

  for (int s = 0; s < 3; ++s) {
    // Real responses to a unit average at each window offset.
    std::vector<Response<double>> unit(static_cast<std::size_t>(2 * degree + 1));
    for (int u = -degree; u <= degree; ++u) {
      std::vector<double> b(static_cast<std::size_t>(degree) + 1, 0.0);
      for (int k = 0; k <= degree; ++k)
        for (int l = k; l <= degree; ++l) b[k] += tables.legendre_to_monomial(k, l) * tables.candidate_map[s](l, u + degree);
      unit[u + degree] = cell_response(b, c, r, query.predictor);
    }
    auto& row = basis.per_stencil[s];
    row.resize(basis.theta.size());
    for (std::size_t k = 0; k < basis.theta.size(); ++k) {
      Response<Complex> z;
      for (int u = -degree; u <= degree; ++u) {
        const Complex mode = std::polar(1.0, basis.theta[k] * u);
        const auto& e = unit[u + degree];
        z.left += mode * e.left;
        z.right += mode * e.right;
        z.volume += mode * e.volume;
        z.gradient += mode * e.gradient;
      }
      row[k] = 1.0 + increment(z, basis.theta[k], c, r, alpha);
    }
  }
  return basis;
}

std::vector<WenoWeights> sample_scenarios(std::uint64_t seed, std::uint64_t point_index, int count) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(point_index), static_cast<std::uint32_t>(point_index >> 32)};
  std::mt19937_64 engine(seq);
  std::vector<WenoWeights> out(static_cast<std::size_t>(count));
  for (auto& w : out) {
    // 53-bit uniform on (0, 1]; avoids an all-zero triple.
    auto draw = [&] { return (static_cast<double>(engine() >> 11) + 1.0) * 0x1.0p-53; };
    const double l = draw(), cc = draw(), rr = draw();
    const double sum = l + cc + rr;
    w = {l / sum, cc / sum, rr / sum};
  }
  return out;
}

double stability_fraction(double c, double r, const StabilityQuery& query, std::uint64_t point_index) {
  if (query.scenarios < 1) throw std::invalid_argument("stability_fraction: need at least one scenario");
  const AmplitudeBasis basis = amplitude_basis(c, r, query);
  const auto scenarios = sample_scenarios(query.seed, point_index, query.scenarios);
  int stable = 0;
  for (const auto& w : scenarios) {
    double worst = 0.0;
    for (std::size_t k = 0; k < basis.theta.size(); ++k) worst = std::max(worst, std::abs(basis.combine(static_cast<int>(k), w)));
    if (worst <= 1.0 + 1e-12) ++stable;
  }
  return static_cast<double>(stable) / query.scenarios;
}

double StabilityMap::stable_area() const {
  const double dc = c.size() > 1 ? (c.back() - c.front()) / (c.size() - 1) : 1.0;
  const double dr = r.size() > 1 ? (r.back() - r.front()) / (r.size() - 1) : 1.0;
  double sum = 0.0;
  for (double f : fraction) sum += f;
  return sum * std::abs(dc * dr);
}

StabilityMap stability_map(const std::vector<double>& c_grid, const std::vector<double>& r_grid,
                           const StabilityQuery& query) {
  StabilityMap map{c_grid, r_grid, std::vector<double>(c_grid.size() * r_grid.size(), 0.0)};
  const long total = static_cast<long>(map.fraction.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long p = 0; p < total; ++p) {
    const std::size_t ir = static_cast<std::size_t>(p) / c_grid.size();
    const std::size_t ic = static_cast<std::size_t>(p) % c_grid.size();
    map.fraction[static_cast<std::size_t>(p)] =
        stability_fraction(c_grid[ic], r_grid[ir], query, static_cast<std::uint64_t>(p));
  }
  return map;
}

void write_csv(std::ostream& out, const StabilityMap& map) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "c,r,stable_fraction\n";
  out.precision(6);
  for (std::size_t ir = 0; ir < map.r.size(); ++ir)
    for (std::size_t ic = 0; ic < map.c.size(); ++ic)
      out << map.c[ic] << ',' << map.r[ir] << ',' << map.at(ir, ic) << '\n';
  out.flags(flags);
  out.precision(precision);
}

std::vector<double> linear_grid(double first, double last, double step) {
  if (!(step > 0.0) || last < first) throw std::invalid_argument("linear_grid: bad range");
  const long n = std::lround(std::floor((last - first) / step + 0.5));
  std::vector<double> g;
  for (long k = 0; k <= n; ++k) g.push_back(first + k * step);
  return g;
}

}  // namespace ader

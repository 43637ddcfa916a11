#include "ader/weno.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ader {
namespace {

using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<Rational>>;

constexpr double kWenoEpsilon = 1e-14;
constexpr int kWenoPower = 4;
constexpr double kCentralLinearWeight = 1e5;
constexpr double kSideLinearWeight = 1.0;

Rational binomial(int n, int k) {
  Rational r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Monomial coefficients of theta_l: (-1)^l sum_k C(l,k) C(l+k,k) (-xi)^k.
std::vector<Rational> legendre_monomials(int l) {
  std::vector<Rational> a(l + 1);
  for (int k = 0; k <= l; ++k) {
    const int sign = ((l + k) % 2 == 0) ? 1 : -1;
    a[k] = sign * binomial(l, k) * binomial(l + k, k);
  }
  return a;
}

Rational integral_over_cell(const std::vector<Rational>& poly, int offset) {
  Rational sum = 0;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    Rational hi = 1, lo = 1;
    for (std::size_t p = 0; p <= k; ++p) {
      hi *= (offset + 1);
      lo *= offset;
    }
    sum += poly[k] * (hi - lo) / static_cast<int>(k + 1);
  }
  return sum;
}

RationalMatrix exact_stencil_matrix(int degree, StencilKind kind) {
  const auto range = stencil_range(degree, kind);
  RationalMatrix s(range.size(), std::vector<Rational>(degree + 1));
  for (int r = 0; r < range.size(); ++r)
    for (int l = 0; l <= degree; ++l) s[r][l] = integral_over_cell(legendre_monomials(l), range.first + r);
  return s;
}

RationalMatrix identity(int n) {
  RationalMatrix id(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size(), p = b.size(), q = b[0].size();
  RationalMatrix c(n, std::vector<Rational>(q, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < p; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < q; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

RationalMatrix transpose(const RationalMatrix& a) {
  RationalMatrix t(a[0].size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Gauss-Jordan inverse; the matrices here are small and nonsingular.
RationalMatrix inverse(RationalMatrix a) {
  const int n = static_cast<int>(a.size());
  RationalMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular stencil system");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (int j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Map from the stencil's averages (in stencil order) to Legendre
// coefficients. Square systems are inverted; the odd-degree central stencil
// is solved in the least-squares sense after enforcing the average of the
// reconstructed cell exactly (beta_0 = q_i, since theta_l has zero mean for l > 0).
RationalMatrix exact_candidate_map(int degree, StencilKind kind) {
  const RationalMatrix s = exact_stencil_matrix(degree, kind);
  const int rows = static_cast<int>(s.size());
  if (rows == degree + 1) return inverse(s);

  const int centre = -stencil_range(degree, kind).first;
  RationalMatrix reduced;  // rows j != i, columns l = 1..M
  std::vector<int> row_of;
  for (int r = 0; r < rows; ++r) {
    if (r == centre) continue;
    reduced.emplace_back(s[r].begin() + 1, s[r].end());
    row_of.push_back(r);
  }
  const RationalMatrix rt = transpose(reduced);
  const RationalMatrix normal_inv = inverse(multiply(rt, reduced));
  const RationalMatrix pseudo = multiply(normal_inv, rt);  // M x (rows-1)

  RationalMatrix map(degree + 1, std::vector<Rational>(rows, 0));
  map[0][centre] = 1;
  for (int l = 1; l <= degree; ++l)
    for (std::size_t c = 0; c < row_of.size(); ++c) {
      // rhs_j = q_j - q_i * (integral of theta_0 over cell j) = q_j - q_i
      map[l][row_of[c]] += pseudo[l - 1][c];
      map[l][centre] -= pseudo[l - 1][c];
    }
  return map;
}

std::vector<Rational> derivative(const std::vector<Rational>& p) {
  if (p.size() <= 1) return {Rational(0)};
  std::vector<Rational> d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<int>(k);
  return d;
}

Rational unit_integral_of_product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) sum += a[i] * b[j] / static_cast<int>(i + j + 1);
  return sum;
}

ReconstructionTables build_tables(int degree) {
  ReconstructionTables t;
  t.degree = degree;
  const int width = 2 * degree + 1;
  for (auto kind : {StencilKind::left, StencilKind::central, StencilKind::right}) {
    const auto range = stencil_range(degree, kind);
    const RationalMatrix map = exact_candidate_map(degree, kind);
    Eigen::MatrixXd& dst = t.candidate_map[static_cast<int>(kind)];
    dst = Eigen::MatrixXd::Zero(degree + 1, width);
    for (int l = 0; l <= degree; ++l)
      for (int r = 0; r < range.size(); ++r)
        dst(l, range.first + r + degree) = static_cast<double>(map[l][r]);
  }

  t.oscillation = Eigen::MatrixXd::Zero(degree + 1, degree + 1);
  t.legendre_to_monomial = Eigen::MatrixXd::Zero(degree + 1, degree + 1);
  std::vector<std::vector<Rational>> polys;
  for (int l = 0; l <= degree; ++l) {
    polys.push_back(legendre_monomials(l));
    for (int k = 0; k <= l; ++k) t.legendre_to_monomial(k, l) = static_cast<double>(polys[l][k]);
  }
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; b <= degree; ++b) {
      Rational sum = 0;
      auto da = polys[a];
      auto db = polys[b];
      for (int k = 1; k <= degree; ++k) {
        da = derivative(da);
        db = derivative(db);
        sum += unit_integral_of_product(da, db);
      }
      t.oscillation(a, b) = static_cast<double>(sum);
    }
  return t;
}

}  // namespace

double legendre(int l, double xi) {
  if (l < 0 || l > 5) throw std::invalid_argument("legendre: degree out of range");
  double sum = 0.0;
  double power = 1.0;
  const auto a = legendre_monomials(l);
  for (int k = 0; k <= l; ++k) {
    sum += static_cast<double>(a[k]) * power;
    power *= xi;
  }
  return sum;
}

StencilRange stencil_range(int degree, StencilKind kind) {
  switch (kind) {
    case StencilKind::left:
      return {-degree, 0};
    case StencilKind::right:
      return {0, degree};
    case StencilKind::central:
      if (degree % 2 == 0) return {-degree / 2, degree / 2};
      return {-degree, degree};
  }
  throw std::invalid_argument("stencil_range: bad kind");
}

StencilMatrix stencil_matrix(int degree, StencilKind kind) {
  if (degree < 1 || degree > kMaxDegree) throw std::invalid_argument("stencil_matrix: degree out of range");
  const RationalMatrix s = exact_stencil_matrix(degree, kind);
  StencilMatrix out;
  out.rows = static_cast<int>(s.size());
  out.cols = degree + 1;
  out.first_offset = stencil_range(degree, kind).first;
  for (const auto& row : s)
    for (const auto& v : row) out.values.push_back(static_cast<double>(v));
  return out;
}

const ReconstructionTables& ReconstructionTables::get(int degree) {
  if (degree < 0 || degree > kMaxDegree) {
    throw std::invalid_argument("reconstruction degree out of range: " + std::to_string(degree));
  }
  static std::array<ReconstructionTables, kMaxDegree + 1> tables;
  static std::once_flag once;
  std::call_once(once, [] {
    for (int m = 0; m <= kMaxDegree; ++m) tables[m] = build_tables(m);
  });
  return tables[degree];
}

std::vector<double> candidate_polynomial(std::span<const double> stencil_values, int degree,
                                         StencilKind kind) {
  const auto range = stencil_range(degree, kind);
  if (static_cast<int>(stencil_values.size()) != range.size()) {
    throw std::invalid_argument("candidate_polynomial: stencil size mismatch");
  }
  const auto& map = ReconstructionTables::get(degree).candidate_map[static_cast<int>(kind)];
  std::vector<double> beta(degree + 1, 0.0);
  for (int l = 0; l <= degree; ++l)
    for (int r = 0; r < range.size(); ++r) beta[l] += map(l, range.first + r + degree) * stencil_values[r];
  return beta;
}

double oscillation_index(std::span<const double> beta, int degree) {
  const auto& sigma = ReconstructionTables::get(degree).oscillation;
  double oi = 0.0;
  for (int a = 1; a <= degree; ++a)
    for (int b = 1; b <= degree; ++b) oi += beta[a] * sigma(a, b) * beta[b];
  return oi;
}

WenoWeights nonlinear_weights(double oi_left, double oi_central, double oi_right) {
  const double wl = kSideLinearWeight / std::pow(oi_left + kWenoEpsilon, kWenoPower);
  const double wc = kCentralLinearWeight / std::pow(oi_central + kWenoEpsilon, kWenoPower);
  const double wr = kSideLinearWeight / std::pow(oi_right + kWenoEpsilon, kWenoPower);
  const double sum = wl + wc + wr;
  return {wl / sum, wc / sum, wr / sum};
}

ScalarReconstruction reconstruct_scalar(std::span<const double> window, int degree) {
  ScalarReconstruction out;
  if (degree == 0) {
    out.legendre[0] = window[0];
    out.weights = {0.0, 1.0, 0.0};
    return out;
  }
  const auto& tables = ReconstructionTables::get(degree);
  const int width = 2 * degree + 1;
  std::array<std::array<double, kMaxDegree + 1>, 3> beta{};
  std::array<double, 3> oi{};
  for (int s = 0; s < 3; ++s) {
    const auto& map = tables.candidate_map[s];
    for (int l = 0; l <= degree; ++l) {
      double sum = 0.0;
      for (int u = 0; u < width; ++u) sum += map(l, u) * window[u];
      beta[s][l] = sum;
    }
    oi[s] = oscillation_index(beta[s], degree);
  }
  out.weights = nonlinear_weights(oi[0], oi[1], oi[2]);
  for (int l = 0; l <= degree; ++l)
    out.legendre[l] = out.weights.left * beta[0][l] + out.weights.central * beta[1][l] +
                      out.weights.right * beta[2][l];
  // The blend preserves the mean exactly in exact arithmetic; pin it.
  out.legendre[0] = window[degree];
  return out;
}

void ReconstructionPolynomial::set(int var, std::span<const double> legendre_coefficients, WenoWeights weights) {
  const auto& t = ReconstructionTables::get(degree_).legendre_to_monomial;
  for (int l = 0; l <= degree_; ++l) legendre_[var][l] = legendre_coefficients[l];
  for (int k = 0; k <= degree_; ++k) {
    double sum = 0.0;
    for (int l = k; l <= degree_; ++l) sum += t(k, l) * legendre_[var][l];
    monomial_[var][k] = sum;
  }
  weights_[var] = weights;
}

double ReconstructionPolynomial::eval_derivative(int var, double xi, int k) const {
  if (k > degree_) return 0.0;
  const auto& b = monomial_[var];
  double value = 0.0;
  for (int n = degree_; n >= k; --n) {
    double falling = 1.0;
    for (int p = 0; p < k; ++p) falling *= (n - p);
    value = value * xi + falling * b[n];
  }
  return value / std::pow(dx_, k);
}

DerivativeStack ReconstructionPolynomial::derivatives_at(double xi) const {
  DerivativeStack stack(n_vars_, degree_);
  for (int k = 0; k <= degree_; ++k)
    for (int v = 0; v < n_vars_; ++v) stack[k][v] = eval_derivative(v, xi, k);
  return stack;
}

ReconstructionPolynomial reconstruct(const CellField& field, int cell, int degree, double dx) {
  ReconstructionPolynomial poly(degree, field.n_vars(), dx);
  std::array<double, 2 * kMaxDegree + 1> window{};
  for (int v = 0; v < field.n_vars(); ++v) {
    for (int u = -degree; u <= degree; ++u) window[u + degree] = field(cell + u, v);
    const auto r = reconstruct_scalar(std::span<const double>(window.data(), 2 * degree + 1), degree);
    poly.set(v, r.legendre, r.weights);
  }
  return poly;
}

}  // namespace ader

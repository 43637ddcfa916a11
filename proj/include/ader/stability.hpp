#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ader/weno.hpp"

namespace ader {

using Complex = std::complex<double>;

enum class PredictorKind { explicit_ck, implicit_taylor };

struct StabilityQuery {
  int order = 5;  // M + 1
  PredictorKind predictor = PredictorKind::implicit_taylor;
  double alpha = 1.0;  // used by the implicit predictor; explicit maps use plain FORCE
  int theta_samples = 128;
  int scenarios = 100;
  std::uint64_t seed = 12345;

  int degree() const { return order - 1; }
  double flux_alpha() const { return predictor == PredictorKind::explicit_ck ? 1.0 : alpha; }
};

/// Monomial coefficients (in xi) of the reconstruction of the Fourier mode
/// q_{i+u} = exp(I theta u) with fixed stencil weights.
std::vector<Complex> symbolic_reconstruction(double theta, const WenoWeights& weights, int degree);

/// Amplification factor of one step for q_t + lambda q_x = beta q, with
/// c = lambda dt / dx and r = beta dt.
Complex amplitude_explicit(double theta, double c, double r, const WenoWeights& weights, int degree,
                           double alpha = 1.0);
Complex amplitude_implicit(double theta, double c, double r, const WenoWeights& weights, int degree,
                           double alpha = 1.0);

/// Per-stencil amplitudes on a theta grid. The amplitude is linear in the
/// weights, so any weight triple is a combination of these three rows.
struct AmplitudeBasis {
  std::vector<double> theta;
  std::array<std::vector<Complex>, 3> per_stencil;  // left, central, right

  Complex combine(int sample, const WenoWeights& w) const {
    return w.left * per_stencil[0][sample] + w.central * per_stencil[1][sample] + w.right * per_stencil[2][sample];
  }
};
AmplitudeBasis amplitude_basis(double c, double r, const StabilityQuery& query);

/// `count` weight triples drawn uniformly on [0,1] and normalized to sum 1,
/// from a stream keyed by (seed, point_index).
std::vector<WenoWeights> sample_scenarios(std::uint64_t seed, std::uint64_t point_index, int count);

/// Ratio of sampled weight scenarios for which max_theta |A| <= 1 + 1e-12.
double stability_fraction(double c, double r, const StabilityQuery& query, std::uint64_t point_index = 0);

struct StabilityMap {
  std::vector<double> c;
  std::vector<double> r;
  std::vector<double> fraction;  // row-major over (r, c)

  double at(std::size_t ir, std::size_t ic) const { return fraction[ir * c.size() + ic]; }
  /// Sum of fractions times the grid cell area.
  double stable_area() const;
};

StabilityMap stability_map(const std::vector<double>& c_grid, const std::vector<double>& r_grid,
                           const StabilityQuery& query);

/// Writes `c,r,stable_fraction` rows.
void write_csv(std::ostream& out, const StabilityMap& map);

/// first, first + step, ... up to last (inclusive within half a step).
std::vector<double> linear_grid(double first, double last, double step);

}  // namespace ader

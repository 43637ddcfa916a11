#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ader/types.hpp"

namespace ader {

/// Degree-N truncated power series in one formal variable.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int degree, double constant = 0.0) : c_(degree + 1, 0.0) { c_[0] = constant; }
  TruncatedSeries(std::vector<double> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  double& operator[](int k) { return c_[k]; }
  double operator[](int k) const { return c_[k]; }
  const std::vector<double>& coefficients() const { return c_; }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    const int n = std::min(a.degree(), b.degree());
    a.c_.resize(n + 1);
    for (int k = 0; k <= n; ++k) a.c_[k] += b.c_[k];
    return a;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    const int n = std::min(a.degree(), b.degree());
    a.c_.resize(n + 1);
    for (int k = 0; k <= n; ++k) a.c_[k] -= b.c_[k];
    return a;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.degree(), b.degree());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) {
      double s = 0.0;
      for (int j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
      r.c_[k] = s;
    }
    return r;
  }
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.c_[0] == 0.0) throw std::domain_error("TruncatedSeries: division by a series with zero constant term");
    const int n = std::min(a.degree(), b.degree());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) {
      double s = a.c_[k];
      for (int j = 1; j <= k; ++j) s -= b.c_[j] * r.c_[k - j];
      r.c_[k] = s / b.c_[0];
    }
    return r;
  }
  friend TruncatedSeries operator*(double s, TruncatedSeries a) {
    for (auto& x : a.c_) x *= s;
    return a;
  }

 private:
  std::vector<double> c_;
};

/// Local space-time Taylor jet of one scalar field: coefficients c(j, k) of
/// x^j t^k with total degree j + k <= degree. Arithmetic is closed under the
/// truncation. Time layers above `time_cap` are treated as not yet known and
/// are neither read nor produced by arithmetic, so a partially built jet can
/// be pushed through generic code one time layer at a time.
class SpaceTimeJet {
 public:
  static constexpr int kCapacity = (kMaxDegree + 1) * (kMaxDegree + 2) / 2;

  SpaceTimeJet() = default;
  SpaceTimeJet(int degree, int time_cap) : degree_(degree), time_cap_(time_cap) {
    assert(degree >= 0 && degree <= kMaxDegree);
  }

  int degree() const { return degree_; }
  int time_cap() const { return time_cap_; }
  void set_time_cap(int cap) { time_cap_ = std::min(cap, degree_); }

  double& at(int j, int k) { return c_[index(j, k)]; }
  double at(int j, int k) const { return c_[index(j, k)]; }

  /// Copy restricted to total degree <= degree.
  SpaceTimeJet truncated(int degree) const {
    SpaceTimeJet r(std::min(degree, degree_), std::min(time_cap_, degree));
    const int n = (r.degree_ + 1) * (r.degree_ + 2) / 2;
    for (int i = 0; i < n; ++i) r.c_[i] = c_[i];
    return r;
  }

  /// Spatial derivative. Coefficients of total degree == degree() are lost;
  /// they are set to zero and never feed lower-degree coefficients.
  SpaceTimeJet dx() const {
    SpaceTimeJet r(degree_, time_cap_);
    for (int s = 0; s < degree_; ++s)
      for (int k = 0; k <= std::min(s, time_cap_); ++k) {
        const int j = s - k;
        r.c_[index(j, k)] = (j + 1) * c_[index(j + 1, k)];
      }
    return r;
  }

  friend SpaceTimeJet operator+(SpaceTimeJet a, const SpaceTimeJet& b) { return a += b; }
  friend SpaceTimeJet operator-(SpaceTimeJet a, const SpaceTimeJet& b) { return a -= b; }
  friend SpaceTimeJet operator-(SpaceTimeJet a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  SpaceTimeJet& operator+=(const SpaceTimeJet& b) {
    merge_shape(b);
    for (int i = 0; i < kCapacity; ++i) c_[i] += b.c_[i];
    return *this;
  }
  SpaceTimeJet& operator-=(const SpaceTimeJet& b) {
    merge_shape(b);
    for (int i = 0; i < kCapacity; ++i) c_[i] -= b.c_[i];
    return *this;
  }

  friend SpaceTimeJet operator*(const SpaceTimeJet& a, const SpaceTimeJet& b) {
    SpaceTimeJet r(std::min(a.degree_, b.degree_), std::min(a.time_cap_, b.time_cap_));
    for (const auto& t : convolution_terms(r.degree_, r.time_cap_)) r.c_[t[0]] += a.c_[t[1]] * b.c_[t[2]];
    return r;
  }

  friend SpaceTimeJet operator/(const SpaceTimeJet& a, const SpaceTimeJet& b) {
    const double b0 = b.c_[0];
    if (b0 == 0.0) throw std::domain_error("SpaceTimeJet: division by a jet with zero constant term");
    SpaceTimeJet r(std::min(a.degree_, b.degree_), std::min(a.time_cap_, b.time_cap_));
    // Terms arrive grouped by output coefficient in increasing order, and
    // each only reads quotient coefficients of lower total degree.
    const auto& terms = convolution_terms(r.degree_, r.time_cap_);
    const double inv = 1.0 / b0;
    std::size_t t = 0;
    while (t < terms.size()) {
      const int out = terms[t][0];
      double sum = a.c_[out];
      for (; t < terms.size() && terms[t][0] == out; ++t)
        if (terms[t][1] != 0) sum -= b.c_[terms[t][1]] * r.c_[terms[t][2]];
      r.c_[out] = sum * inv;
    }
    return r;
  }

  friend SpaceTimeJet operator*(double s, SpaceTimeJet a) {
    for (auto& x : a.c_) x *= s;
    return a;
  }
  friend SpaceTimeJet operator*(SpaceTimeJet a, double s) { return s * a; }
  friend SpaceTimeJet operator/(SpaceTimeJet a, double s) { return (1.0 / s) * a; }
  friend SpaceTimeJet operator+(SpaceTimeJet a, double s) {
    a.c_[0] += s;
    return a;
  }
  friend SpaceTimeJet operator+(double s, SpaceTimeJet a) { return a + s; }
  friend SpaceTimeJet operator-(SpaceTimeJet a, double s) {
    a.c_[0] -= s;
    return a;
  }
  friend SpaceTimeJet operator-(double s, SpaceTimeJet a) { return -a + s; }

 private:
  static int index(int j, int k) {
    const int s = j + k;
    return s * (s + 1) / 2 + k;
  }

  using Term = std::array<std::uint8_t, 3>;  // (out, left, right)

  // Index triples of the truncated Cauchy product for one (degree, cap).
  static const std::vector<Term>& convolution_terms(int degree, int cap) {
    static const auto tables = [] {
      std::array<std::array<std::vector<Term>, kMaxDegree + 1>, kMaxDegree + 1> all;
      for (int d = 0; d <= kMaxDegree; ++d)
        for (int c = 0; c <= d; ++c)
          for (int s = 0; s <= d; ++s)
            for (int k = 0; k <= std::min(s, c); ++k) {
              const int j = s - k;
              for (int ka = 0; ka <= k; ++ka)
                for (int ja = 0; ja <= j; ++ja)
                  all[d][c].push_back({static_cast<std::uint8_t>(index(j, k)), static_cast<std::uint8_t>(index(ja, ka)),
                                       static_cast<std::uint8_t>(index(j - ja, k - ka))});
            }
      return all;
    }();
    return tables[degree][std::min(cap, degree)];
  }

  void merge_shape(const SpaceTimeJet& b) {
    degree_ = std::min(degree_, b.degree_);
    time_cap_ = std::min(time_cap_, b.time_cap_);
  }

  std::array<double, kCapacity> c_{};
  int degree_ = 0;
  int time_cap_ = 0;
};

}  // namespace ader

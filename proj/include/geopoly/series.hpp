#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "geopoly/exact_core.hpp"
#include "geopoly/params.hpp"

namespace geopoly {

/// Truncated formal power series sum_{j <= order} c_j t^j with exact rational
/// coefficients. Binary operations truncate to the smaller operand order.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order = 0) : coeffs_(order + 1) {}
  explicit PowerSeries(std::vector<Rational> coeffs);

  static PowerSeries constant(const Rational& value, std::size_t order);
  /// The series t.
  static PowerSeries variable(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  const Rational& operator[](std::size_t j) const { return coeffs_[j]; }
  Rational& operator[](std::size_t j) { return coeffs_[j]; }

  /// Index of the first nonzero coefficient; order()+1 for the zero series.
  std::size_t valuation() const;
  bool is_zero() const { return valuation() > order(); }

  PowerSeries truncated(std::size_t order) const;

  /// n! [t^n], i.e. the n-th term of an exponential generating function.
  Rational egf_coefficient(std::size_t n) const;

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(const Rational& factor);

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const PowerSeries& a, const Rational& c);
PowerSeries operator*(const Rational& c, const PowerSeries& a);
PowerSeries operator+(const PowerSeries& a, const Rational& c);
PowerSeries operator-(const Rational& c, const PowerSeries& a);

/// Quotient a/b. The common factor t^v, v = valuation(b), is cancelled first,
/// so the result has order min(order(a), order(b)) - v. Throws
/// std::domain_error when b is zero or valuation(a) < valuation(b).
PowerSeries divide(const PowerSeries& a, const PowerSeries& b);

/// exp(a) for a with zero constant term.
PowerSeries exp_series(const PowerSeries& a);
/// log(a) for a with constant term 1.
PowerSeries log_series(const PowerSeries& a);
/// a^c = exp(c log a) for a with constant term 1.
PowerSeries pow_series(const PowerSeries& a, const Rational& c);

/// (1 + alpha t)^{c/alpha}; for alpha = 0 the exact limit e^{c t}.
PowerSeries binom_deform(const Rational& alpha, const Rational& c, std::size_t order);

/// ((1 + alpha t)^{beta/alpha} - 1) / beta, with the beta -> 0 limit
/// log(1 + alpha t)/alpha (or t when alpha = beta = 0).
PowerSeries stirling_kernel(const Rational& alpha, const Rational& beta, std::size_t order);

/// (1 / (1 - x((1+alpha t)^{beta/alpha} - 1)))^m (1+alpha t)^{r/alpha}; the
/// egf of the order-m geometric polynomials w_n^{(m)}(x; alpha, beta, r).
/// Any integer m is accepted (m <= 0 gives the negative-order family).
PowerSeries gf_w(const HsuShiueParams& params, int m, const Rational& x, std::size_t order);

/// (2 / ((1+alpha t)^{1/alpha} + 1))^s (1+alpha t)^{x/alpha}.
PowerSeries gf_degenerate_euler(int s, const Rational& alpha, const Rational& x, std::size_t order);

/// [(1/alpha) log(1+alpha t) / ((1+alpha t)^{1/alpha} - 1)] (1+alpha t)^{x/alpha};
/// alpha = 0 gives the classical t e^{xt} / (e^t - 1).
PowerSeries gf_bernoulli2_degenerate(const Rational& alpha, const Rational& x, std::size_t order);

/// t / ((1+alpha t)^{1/alpha} - 1) (1+alpha t)^{x/alpha}.
PowerSeries gf_carlitz_beta(const Rational& alpha, const Rational& x, std::size_t order);

/// n! [t^n] for n = 0..order.
std::vector<Rational> egf_values(const PowerSeries& series);

}  // namespace geopoly

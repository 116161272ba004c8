#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "geopoly/exact_core.hpp"
#include "geopoly/series.hpp"

namespace geopoly {

/// Dense univariate polynomial over Q; coefficient k multiplies x^k.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);

  static PolyQ monomial(std::size_t degree, const Rational& coeff = Rational(1));

  std::span<const Rational> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Zero beyond the degree.
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  Rational operator()(const Rational& x) const;
  /// Horner evaluation with a power series substituted for x.
  PowerSeries operator()(const PowerSeries& x) const;

  PolyQ derivative(unsigned times = 1) const;

  std::string to_string() const;

  friend bool operator==(const PolyQ&, const PolyQ&) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

PolyQ operator+(const PolyQ& a, const PolyQ& b);
PolyQ operator-(const PolyQ& a, const PolyQ& b);
PolyQ operator*(const PolyQ& a, const PolyQ& b);
PolyQ operator*(const PolyQ& a, const Rational& c);

/// Embeds the polynomial as a truncated series of the given order.
PowerSeries to_series(const PolyQ& p, std::size_t order);

}  // namespace geopoly

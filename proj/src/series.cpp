#include "geopoly/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace geopoly {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

PowerSeries PowerSeries::constant(const Rational& value, std::size_t order) {
  PowerSeries s(order);
  s[0] = value;
  return s;
}

PowerSeries PowerSeries::variable(std::size_t order) {
  PowerSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

std::size_t PowerSeries::valuation() const {
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) return j;
  }
  return coeffs_.size();
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  PowerSeries out(order);
  for (std::size_t j = 0; j <= std::min(order, this->order()); ++j) out[j] = coeffs_[j];
  return out;
}

Rational PowerSeries::egf_coefficient(std::size_t n) const {
  if (n > order()) throw std::out_of_range("egf_coefficient: index beyond truncation order");
  return coeffs_[n] * Rational(factorial(static_cast<unsigned>(n)));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& factor) {
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out = a;
  out += b;
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out = a;
  out -= b;
  return out;
}

PowerSeries operator-(const PowerSeries& a) { return a * Rational(-1); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  PowerSeries out(order);
  const std::size_t va = a.valuation();
  const std::size_t vb = b.valuation();
  for (std::size_t i = va; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = vb; i + j <= order; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

PowerSeries operator*(const PowerSeries& a, const Rational& c) {
  PowerSeries out = a;
  out *= c;
  return out;
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) { return a * c; }

PowerSeries operator+(const PowerSeries& a, const Rational& c) {
  PowerSeries out = a;
  out[0] += c;
  return out;
}

PowerSeries operator-(const Rational& c, const PowerSeries& a) {
  PowerSeries out = -a;
  out[0] += c;
  return out;
}

PowerSeries divide(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t v = b.valuation();
  if (v > b.order()) throw std::domain_error("divide: division by the zero series");
  if (a.valuation() < v) throw std::domain_error("divide: valuation of numerator below valuation of divisor");
  const std::size_t order = std::min(a.order(), b.order()) - v;
  PowerSeries q(order);
  const Rational& lead = b[v];
  for (std::size_t i = 0; i <= order; ++i) {
    Rational acc = a[i + v];
    for (std::size_t j = 1; j <= i; ++j) acc -= b[j + v] * q[i - j];
    q[i] = acc / lead;
  }
  return q;
}

PowerSeries exp_series(const PowerSeries& a) {
  if (a[0] != 0) throw std::domain_error("exp_series: argument must have zero constant term");
  const std::size_t order = a.order();
  PowerSeries g(order);
  g[0] = 1;
  // g' = a' g
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc(0);
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] != 0) acc += Rational(static_cast<long>(k)) * a[k] * g[n - k];
    }
    g[n] = acc / Rational(static_cast<long>(n));
  }
  return g;
}

PowerSeries log_series(const PowerSeries& a) {
  if (a[0] != 1) throw std::domain_error("log_series: argument must have constant term 1");
  const std::size_t order = a.order();
  PowerSeries h(order);
  // a h' = a'
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = Rational(static_cast<long>(n)) * a[n];
    for (std::size_t k = 1; k < n; ++k) {
      if (a[n - k] != 0) acc -= Rational(static_cast<long>(k)) * h[k] * a[n - k];
    }
    h[n] = acc / Rational(static_cast<long>(n));
  }
  return h;
}

PowerSeries pow_series(const PowerSeries& a, const Rational& c) {
  if (a[0] != 1) throw std::domain_error("pow_series: base must have constant term 1");
  if (c == 0) return PowerSeries::constant(Rational(1), a.order());
  return exp_series(log_series(a) * c);
}

PowerSeries binom_deform(const Rational& alpha, const Rational& c, std::size_t order) {
  if (alpha == 0) return exp_series(PowerSeries::variable(order) * c);
  PowerSeries base = PowerSeries::constant(Rational(1), order);
  if (order >= 1) base[1] = alpha;
  return pow_series(base, c / alpha);
}

PowerSeries stirling_kernel(const Rational& alpha, const Rational& beta, std::size_t order) {
  if (beta != 0) {
    PowerSeries d = binom_deform(alpha, beta, order);
    d[0] -= 1;
    return d * (Rational(1) / beta);
  }
  if (alpha == 0) return PowerSeries::variable(order);
  PowerSeries base = PowerSeries::constant(Rational(1), order);
  if (order >= 1) base[1] = alpha;
  return log_series(base) * (Rational(1) / alpha);
}

PowerSeries gf_w(const HsuShiueParams& params, int m, const Rational& x, std::size_t order) {
  PowerSeries u = binom_deform(params.alpha, params.beta, order);
  u[0] -= 1;
  const PowerSeries base = Rational(1) - u * x;
  return pow_series(base, Rational(-m)) * binom_deform(params.alpha, params.r, order);
}

PowerSeries gf_degenerate_euler(int s, const Rational& alpha, const Rational& x, std::size_t order) {
  const PowerSeries half = (binom_deform(alpha, Rational(1), order) + Rational(1)) * Rational(1, 2);
  return pow_series(half, Rational(-s)) * binom_deform(alpha, x, order);
}

namespace {

// (1+alpha t)^{1/alpha} - 1, or e^t - 1 at alpha = 0.
PowerSeries unit_kernel(const Rational& alpha, std::size_t order) {
  PowerSeries d = binom_deform(alpha, Rational(1), order);
  d[0] -= 1;
  return d;
}

}  // namespace

PowerSeries gf_bernoulli2_degenerate(const Rational& alpha, const Rational& x, std::size_t order) {
  // Numerator and denominator both have valuation 1; one extra term survives the shift.
  const std::size_t work = order + 1;
  PowerSeries numerator = stirling_kernel(alpha, Rational(0), work);
  const PowerSeries q = divide(numerator, unit_kernel(alpha, work));
  return q * binom_deform(alpha, x, order);
}

PowerSeries gf_carlitz_beta(const Rational& alpha, const Rational& x, std::size_t order) {
  const std::size_t work = order + 1;
  const PowerSeries q = divide(PowerSeries::variable(work), unit_kernel(alpha, work));
  return q * binom_deform(alpha, x, order);
}

std::vector<Rational> egf_values(const PowerSeries& series) {
  std::vector<Rational> out;
  out.reserve(series.order() + 1);
  for (std::size_t n = 0; n <= series.order(); ++n) out.push_back(series.egf_coefficient(n));
  return out;
}

}  // namespace geopoly

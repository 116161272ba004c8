#include "geopoly/poly.hpp"

#include <algorithm>

namespace geopoly {

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

PolyQ PolyQ::monomial(std::size_t degree, const Rational& coeff) {
  std::vector<Rational> c(degree + 1);
  c[degree] = coeff;
  return PolyQ(std::move(c));
}

void PolyQ::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyQ::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PowerSeries PolyQ::operator()(const PowerSeries& x) const {
  PowerSeries acc(x.order());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyQ PolyQ::derivative(unsigned times) const {
  if (times == 0) return *this;
  if (coeffs_.size() <= times) return PolyQ();
  std::vector<Rational> out(coeffs_.size() - times);
  for (std::size_t k = times; k < coeffs_.size(); ++k) {
    out[k - times] = coeffs_[k] * falling_factorial(Rational(static_cast<long>(k)), times);
  }
  return PolyQ(std::move(out));
}

std::string PolyQ::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + geopoly::to_string(coeffs_[k]) + ")";
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
  std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return PolyQ(std::move(c));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + b * Rational(-1); }

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return PolyQ(std::move(c));
}

PolyQ operator*(const PolyQ& a, const Rational& c) {
  std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : out) v *= c;
  return PolyQ(std::move(out));
}

PowerSeries to_series(const PolyQ& p, std::size_t order) {
  PowerSeries s(order);
  for (std::size_t k = 0; k <= order && k < p.coeffs().size(); ++k) s[k] = p.coeffs()[k];
  return s;
}

}  // namespace geopoly

#include "geopoly/exact_core.hpp"

#include <regex>
#include <stdexcept>

namespace geopoly {

Rational gen_factorial(const Rational& z, const Rational& alpha, unsigned n) {
  Rational result(1);
  Rational factor = z;
  for (unsigned i = 0; i < n; ++i) {
    result *= factor;
    factor -= alpha;
  }
  return result;
}

Rational rising_factorial(const Rational& x, unsigned n) { return gen_factorial(x, Rational(-1), n); }

Rational falling_factorial(const Rational& x, unsigned n) { return gen_factorial(x, Rational(1), n); }

Rational binomial_general(const Rational& s, unsigned k) {
  return falling_factorial(s, k) / Rational(factorial(k));
}

Integer factorial(unsigned n) {
  Integer result(1);
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

Rational ipow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("ipow: zero base with negative exponent");
    return Rational(1) / ipow(base, -exponent);
  }
  Rational result(1);
  Rational square = base;
  auto e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1u) result *= square;
    e >>= 1;
    if (e != 0) square *= square;
  }
  return result;
}

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(^\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*$)");
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) {
    throw std::invalid_argument("not a rational literal (expected p or p/q): '" + s + "'");
  }
  std::string num = m[1].str();
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  Integer numerator(num);
  Integer denominator(1);
  if (m[2].matched) {
    denominator = Integer(m[2].str());
    if (denominator == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  }
  return Rational(numerator, denominator);
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace geopoly

#pragma once

#include <mpfr.h>

#include <string>

#include "geopoly/exact_core.hpp"

namespace geopoly {

/// Binary floating-point number with an explicit per-value mantissa size.
/// Every operation rounds to nearest; a binary operation takes the larger of
/// its operands' precisions.
class BigFloat {
 public:
  explicit BigFloat(unsigned precision_bits);
  BigFloat(long value, unsigned precision_bits);
  BigFloat(const Rational& value, unsigned precision_bits);
  BigFloat(const Integer& value, unsigned precision_bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat pi(unsigned precision_bits);
  static BigFloat euler_gamma(unsigned precision_bits);
  static BigFloat log2(unsigned precision_bits);
  /// 2^exponent.
  static BigFloat exp2(long exponent, unsigned precision_bits);

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with the given number of significant digits.
  std::string to_string(int digits = 40) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat& operator+=(const Rational& rhs);
  BigFloat& operator-=(const Rational& rhs);
  BigFloat& operator*=(const Rational& rhs);
  BigFloat& operator/=(const Rational& rhs);
  BigFloat& operator*=(long rhs);
  BigFloat& operator/=(long rhs);

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.value_, b.value_) != 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

 private:
  mpfr_t value_;
};

BigFloat operator+(BigFloat a, const BigFloat& b);
BigFloat operator-(BigFloat a, const BigFloat& b);
BigFloat operator*(BigFloat a, const BigFloat& b);
BigFloat operator/(BigFloat a, const BigFloat& b);
BigFloat operator*(BigFloat a, const Rational& b);
BigFloat operator/(BigFloat a, const Rational& b);
BigFloat operator+(BigFloat a, const Rational& b);
BigFloat operator-(BigFloat a, const Rational& b);
BigFloat operator-(BigFloat a);

BigFloat abs(BigFloat x);
BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
/// x^n for integer n.
BigFloat pow(const BigFloat& x, long n);
/// x^{-s}, x > 0.
BigFloat inverse_power(const BigFloat& x, long s);
BigFloat max(const BigFloat& a, const BigFloat& b);

}  // namespace geopoly

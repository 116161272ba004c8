#include "geopoly/bigfloat.hpp"

#include <algorithm>
#include <vector>

namespace geopoly {

namespace {

mpq_srcptr raw(const Rational& q) { return q.backend().data(); }
mpz_srcptr raw(const Integer& z) { return z.backend().data(); }

// Raises the precision of `target` (preserving its value) to at least `bits`.
void widen(mpfr_ptr target, mpfr_prec_t bits) {
  if (mpfr_get_prec(target) < bits) mpfr_prec_round(target, bits, MPFR_RNDN);
}

}  // namespace

BigFloat::BigFloat(unsigned precision_bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, unsigned precision_bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, unsigned precision_bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_q(value_, raw(value), MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& value, unsigned precision_bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_z(value_, raw(value), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Steal the limbs; leave `other` as a valid 2-bit zero.
  *value_ = *other.value_;
  mpfr_init2(other.value_, MPFR_PREC_MIN);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::pi(unsigned precision_bits) {
  BigFloat out(precision_bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::euler_gamma(unsigned precision_bits) {
  BigFloat out(precision_bits);
  mpfr_const_euler(out.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::log2(unsigned precision_bits) {
  BigFloat out(precision_bits);
  mpfr_const_log2(out.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::exp2(long exponent, unsigned precision_bits) {
  BigFloat out(1, precision_bits);
  mpfr_mul_2si(out.value_, out.value_, exponent, MPFR_RNDN);
  return out;
}

std::string BigFloat::to_string(int digits) const {
  const int size = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, value_);
  std::vector<char> buffer(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*Re", digits - 1, value_);
  return std::string(buffer.data());
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  widen(value_, mpfr_get_prec(rhs.value_));
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  widen(value_, mpfr_get_prec(rhs.value_));
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  widen(value_, mpfr_get_prec(rhs.value_));
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  widen(value_, mpfr_get_prec(rhs.value_));
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator+=(const Rational& rhs) {
  mpfr_add_q(value_, value_, raw(rhs), MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const Rational& rhs) {
  mpfr_sub_q(value_, value_, raw(rhs), MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const Rational& rhs) {
  mpfr_mul_q(value_, value_, raw(rhs), MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const Rational& rhs) {
  mpfr_div_q(value_, value_, raw(rhs), MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
BigFloat operator*(BigFloat a, const Rational& b) { return a *= b; }
BigFloat operator/(BigFloat a, const Rational& b) { return a /= b; }
BigFloat operator+(BigFloat a, const Rational& b) { return a += b; }
BigFloat operator-(BigFloat a, const Rational& b) { return a -= b; }

BigFloat operator-(BigFloat a) {
  mpfr_neg(a.get(), a.get(), MPFR_RNDN);
  return a;
}

BigFloat abs(BigFloat x) {
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  return x;
}

BigFloat log(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat exp(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigFloat pow(const BigFloat& x, long n) {
  BigFloat out(x.precision());
  mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
  return out;
}

BigFloat inverse_power(const BigFloat& x, long s) { return pow(x, -s); }

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

}  // namespace geopoly

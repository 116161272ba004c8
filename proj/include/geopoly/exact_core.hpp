#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace geopoly {

using Integer = boost::multiprecision::mpz_int;

// GMP rationals are kept canonical (lowest terms, positive denominator) after
// every operation; dividing by zero throws std::overflow_error.
using Rational = boost::multiprecision::mpq_rational;

/// (z|alpha)_n = z (z - alpha) ... (z - (n-1) alpha), with (z|alpha)_0 = 1.
Rational gen_factorial(const Rational& z, const Rational& alpha, unsigned n);

/// <x>_n = x (x+1) ... (x+n-1).
Rational rising_factorial(const Rational& x, unsigned n);

/// (x)_n = x (x-1) ... (x-n+1).
Rational falling_factorial(const Rational& x, unsigned n);

/// Generalized binomial s (s-1) ... (s-k+1) / k! for rational s.
Rational binomial_general(const Rational& s, unsigned k);

Integer factorial(unsigned n);

/// Integer power; negative exponents require a nonzero base.
Rational ipow(const Rational& base, int exponent);

inline Rational sign_power(unsigned k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

/// Parses "p/q", "-p/q" or an integer. Decimal notation is rejected so that no
/// value silently loses precision. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace geopoly

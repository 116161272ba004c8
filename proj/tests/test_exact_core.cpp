#include <doctest.h>

#include <stdexcept>

#include "geopoly/exact_core.hpp"
#include "test_support.hpp"

using namespace geopoly;
using test::R;

TEST_CASE("generalized factorial examples") {
  CHECK(gen_factorial(R(17, 3), R(-2, 5), 0) == 1);
  CHECK(gen_factorial(5, 2, 3) == 15);
  CHECK(gen_factorial(4, 1, 2) == 12);
  CHECK(gen_factorial(4, 1, 2) == falling_factorial(4, 2));
  CHECK(gen_factorial(R(1, 2), 0, 3) == R(1, 8));
}

TEST_CASE("rising and falling factorial examples") {
  CHECK(rising_factorial(R(-7, 2), 0) == 1);
  CHECK(rising_factorial(3, 2) == 12);
  CHECK(rising_factorial(-2, 3) == 0);
  CHECK(rising_factorial(-2, 3) == -falling_factorial(2, 3));
  CHECK(falling_factorial(R(5, 4), 0) == 1);
  CHECK(falling_factorial(1, 2) == 0);
  CHECK(falling_factorial(R(7, 2), 2) == R(35, 4));
}

TEST_CASE("generalized binomial examples") {
  CHECK(binomial_general(R(-3, 7), 0) == 1);
  CHECK(binomial_general(R(5, 2), 2) == R(15, 8));
  CHECK(binomial_general(5, 3) * 6 == 60);
  CHECK(rising_factorial(3, 3) == 60);
  CHECK(binomial_general(-1, 4) == 1);
}

TEST_CASE("factorial and integer powers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(ipow(R(2, 3), 3) == R(8, 27));
  CHECK(ipow(R(2, 3), -2) == R(9, 4));
  CHECK(ipow(0, 0) == 1);
  CHECK_THROWS_AS(ipow(0, -1), std::domain_error);
  CHECK(sign_power(0) == 1);
  CHECK(sign_power(7) == -1);
}

TEST_CASE("generalized factorial satisfies its step recurrence") {
  auto s = test::sampler(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational z = s.rational();
    const Rational a = s.rational();
    const unsigned n = static_cast<unsigned>(s.integer(0, 20));
    CHECK(gen_factorial(z, a, n + 1) == gen_factorial(z, a, n) * (z - n * a));
  }
}

TEST_CASE("rising factorial of a negated argument") {
  auto s = test::sampler(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational x = s.rational();
    for (unsigned n = 0; n <= 20; ++n) CHECK(rising_factorial(-x, n) == sign_power(n) * falling_factorial(x, n));
  }
}

TEST_CASE("zero increment gives plain powers") {
  auto s = test::sampler(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational z = s.rational();
    for (unsigned n = 0; n <= 12; ++n) CHECK(gen_factorial(z, 0, n) == ipow(z, static_cast<int>(n)));
  }
}

TEST_CASE("rationals stay canonical") {
  const Rational a = R(6, 4);
  CHECK(numerator(a) == 3);
  CHECK(denominator(a) == 2);
  const Rational b = R(3, -6);
  CHECK(numerator(b) == -1);
  CHECK(denominator(b) == 2);
  const Rational c = R(1, 3) + R(1, 6);
  CHECK(c == R(1, 2));
  CHECK(denominator(c) == 2);
  CHECK_THROWS_AS(R(1) / R(0), std::overflow_error);
}

TEST_CASE("parsing and printing rationals") {
  CHECK(parse_rational("3/4") == R(3, 4));
  CHECK(parse_rational("-2") == -2);
  CHECK(parse_rational("-6/8") == R(-3, 4));
  CHECK(parse_rational("0") == 0);
  CHECK(to_string(R(-3, 4)) == "-3/4");
  CHECK(to_string(R(10, 5)) == "2");
  for (const char* bad : {"", "1.5", "1/0", "abc", "1/", "/2", "1e3", "--1", "3/-4"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);

  auto s = test::sampler(14);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational x = s.rational() / s.nonzero();
    CHECK(parse_rational(to_string(x)) == x);
  }
}

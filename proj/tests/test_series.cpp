#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "geopoly/families.hpp"
#include "geopoly/series.hpp"
#include "test_support.hpp"

using namespace geopoly;
using test::R;

namespace {

PowerSeries from(std::vector<Rational> c) { return PowerSeries(std::move(c)); }

/// Random series with zero constant term.
PowerSeries random_tail(RationalSampler& s, std::size_t order) {
  PowerSeries a(order);
  for (std::size_t j = 1; j <= order; ++j) a[j] = s.rational();
  return a;
}

}  // namespace

TEST_CASE("ring operations") {
  const auto t = PowerSeries::variable(4);
  const auto p = (PowerSeries::constant(1, 4) + t) * (PowerSeries::constant(1, 4) - t);
  CHECK(p == from({1, 0, -1, 0, 0}));
  CHECK((p * PowerSeries(4)).is_zero());
  CHECK((p - p).is_zero());
  CHECK((from({1, 2, 3}) * from({1, 1, 1, 1, 1})).order() == 2);
  CHECK(from({0, 0, 5}).valuation() == 2);
}

TEST_CASE("division") {
  const auto t = PowerSeries::variable(6);
  CHECK(divide(t, t) == PowerSeries::constant(1, 5));

  std::vector<Rational> log1p(7);
  for (unsigned j = 1; j <= 6; ++j) log1p[j] = sign_power(j + 1) / Rational(j);
  const auto q = divide(from(log1p), t);
  CHECK(q.order() == 5);
  for (unsigned j = 0; j <= 5; ++j) CHECK(q[j] == sign_power(j) / Rational(j + 1));

  // t / ((1 + t/2)^2 - 1) = 1 / (1 + t/4)
  const auto k = binom_deform(R(1, 2), 1, 6) - PowerSeries::constant(1, 6);
  const auto d = divide(t, k);
  CHECK(d[0] == 1);
  CHECK(d[1] == R(-1, 4));
  CHECK(d[2] == R(1, 16));

  CHECK_THROWS_AS(divide(t, PowerSeries(6)), std::domain_error);
  CHECK_THROWS_AS(divide(PowerSeries::constant(1, 6), t), std::domain_error);
}

TEST_CASE("exp, log and pow") {
  const auto t = PowerSeries::variable(8);
  const auto e = exp_series(t);
  for (unsigned j = 0; j <= 8; ++j) CHECK(e[j] == Rational(1) / Rational(factorial(j)));
  const auto l = log_series(PowerSeries::constant(1, 8) + t);
  CHECK(l[0] == 0);
  for (unsigned j = 1; j <= 8; ++j) CHECK(l[j] == sign_power(j + 1) / Rational(j));
  const auto root = pow_series(PowerSeries::constant(1, 8) + t, R(1, 2));
  CHECK(root[1] == R(1, 2));
  CHECK(root[2] == R(-1, 8));
  CHECK(root * root == (PowerSeries::constant(1, 8) + t));

  CHECK_THROWS_AS(exp_series(PowerSeries::constant(1, 4) + PowerSeries::variable(4)), std::domain_error);
  CHECK_THROWS_AS(log_series(PowerSeries::constant(2, 4)), std::domain_error);
  CHECK_THROWS_AS(pow_series(PowerSeries::constant(2, 4), 3), std::domain_error);
}

TEST_CASE("deformed binomial") {
  const auto a0 = binom_deform(0, 3, 6);
  for (unsigned j = 0; j <= 6; ++j) CHECK(a0[j] == ipow(3, static_cast<int>(j)) / Rational(factorial(j)));
  const auto a1 = binom_deform(1, R(5, 2), 6);
  for (unsigned j = 0; j <= 6; ++j) CHECK(a1[j] == falling_factorial(R(5, 2), j) / Rational(factorial(j)));
  const auto a2 = binom_deform(2, 1, 4);
  CHECK(a2[0] == 1);
  CHECK(a2[1] == 1);
  CHECK(a2[2] == R(-1, 2));

  auto s = test::sampler(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational alpha = s.rational();
    const Rational c = s.rational();
    const auto b = binom_deform(alpha, c, 10);
    for (unsigned j = 0; j <= 10; ++j) CHECK(b.egf_coefficient(j) == gen_factorial(c, alpha, j));
  }
}

TEST_CASE("generating function constructors") {
  auto s = test::sampler(32);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = s.params();
    const Rational x = s.rational();
    const int m = static_cast<int>(s.integer(-3, 4));
    const auto w = gf_w(p, m, x, 6);
    CHECK(w[0] == 1);
    CHECK(w.egf_coefficient(1) == p.r + m * p.beta * x);
    const auto at_minus_one = gf_w(p, m, -1, 6);
    for (unsigned n = 0; n <= 6; ++n)
      CHECK(at_minus_one.egf_coefficient(n) == gen_factorial(p.r - p.beta * m, p.alpha, n));

    const Rational alpha = s.rational();
    const int order = static_cast<int>(s.integer(0, 4));
    const auto eu = gf_degenerate_euler(order, alpha, x, 6);
    CHECK(eu[0] == 1);
    CHECK(eu[1] == x - Rational(order, 2));

    const auto b2 = gf_bernoulli2_degenerate(alpha, x, 6);
    CHECK(b2[0] == 1);
    CHECK(b2[1] == x - R(1, 2));

    const auto cb = gf_carlitz_beta(alpha, x, 6);
    CHECK(cb[0] == 1);
    CHECK(cb[1] == x + (alpha - 1) / 2);
  }
  CHECK(gf_degenerate_euler(1, 0, 0, 4).egf_coefficient(2) == 0);
  CHECK(gf_bernoulli2_degenerate(0, 0, 4).egf_coefficient(2) == R(1, 6));
}

TEST_CASE("classical limits of the degenerate generating functions") {
  for (const Rational& x : {R(0), R(1, 3), R(-5, 2)}) {
    const auto carlitz = egf_values(gf_carlitz_beta(0, x, 10));
    const auto b2 = egf_values(gf_bernoulli2_degenerate(0, x, 10));
    const auto eu = egf_values(gf_degenerate_euler(1, 0, x, 10));
    for (unsigned n = 0; n <= 10; ++n) {
      CHECK(carlitz[n] == bernoulli_poly(n)(x));
      CHECK(b2[n] == bernoulli_poly(n)(x));
      CHECK(eu[n] == euler_poly(n)(x));
    }
  }
}

TEST_CASE("exp and log are inverse") {
  auto s = test::sampler(33);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_tail(s, 16);
    CHECK(log_series(exp_series(a)) == a);
    const auto one_plus = PowerSeries::constant(1, 16) + a;
    CHECK(exp_series(log_series(one_plus)) == one_plus);
  }
}

TEST_CASE("powers add exponents") {
  auto s = test::sampler(34);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = PowerSeries::constant(1, 12) + random_tail(s, 12);
    const Rational c1 = s.rational();
    const Rational c2 = s.rational();
    CHECK(pow_series(f, c1) * pow_series(f, c2) == pow_series(f, c1 + c2));
    CHECK(pow_series(f, 2) == f * f);
  }
}

TEST_CASE("order-one generating function by division matches the explicit polynomial") {
  auto s = test::sampler(35);
  for (int trial = 0; trial < 6; ++trial) {
    const auto p = s.params();
    CHECK_MESSAGE(check_eq19(p, 10, s.rational()).passed(), p.describe());
  }
}

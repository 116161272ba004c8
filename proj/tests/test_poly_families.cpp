#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "geopoly/families.hpp"
#include "geopoly/poly.hpp"
#include "test_support.hpp"

using namespace geopoly;
using test::R;
using Beta = RationalSampler::Beta;

TEST_CASE("polynomial basics") {
  const PolyQ p({1, 2, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(PolyQ({0, 0}).is_zero());
  CHECK(PolyQ().degree() == -1);
  CHECK(p(R(1, 2)) == 2);
  CHECK((p * p) == PolyQ({1, 4, 4}));
  CHECK(PolyQ::monomial(3, 2).derivative() == PolyQ::monomial(2, 6));
  CHECK(PolyQ({0, 1, 6}).to_string() == "(1)x + (6)x^2");
}

TEST_CASE("exponential polynomials") {
  auto s = test::sampler(41);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = s.params(Beta::any);
    CHECK(exp_poly(0, p) == PolyQ({1}));
    CHECK(exp_poly(1, p) == PolyQ({p.r, 1}));
  }
  const auto bell3 = exp_poly(3, {0, 1, 0});
  CHECK(bell3 == PolyQ({0, 1, 3, 1}));
  CHECK(bell3(1) == 5);
  CHECK(bell3(1) == enumerate_oracle(EnumerationKind::set_partitions, 3));
}

TEST_CASE("geometric polynomials") {
  auto s = test::sampler(42);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = s.params(Beta::any);
    const int m = static_cast<int>(s.integer(-3, 5));
    CHECK(geometric_poly(0, m, p) == PolyQ({1}));
    CHECK(geometric_poly(1, m, p) == PolyQ({p.r, m * p.beta}));
  }
  const std::vector<Rational> fubini{1, 1, 3, 13, 75};
  for (unsigned n = 0; n < fubini.size(); ++n) {
    CHECK(geometric_poly(n, 1, {0, 1, 0})(1) == fubini[n]);
    CHECK(fubini[n] == enumerate_oracle(EnumerationKind::ordered_set_partitions, n));
  }
  CHECK(check_fubini(8).passed());
}

TEST_CASE("value at minus one") {
  CHECK(eval_minus_one(0, 3, {R(1, 2), 2, 1}) == 1);
  CHECK(eval_minus_one(2, 1, {1, 2, 3}) == 0);
  auto s = test::sampler(43);
  for (int trial = 0; trial < 8; ++trial) {
    const auto p = s.params(Beta::any);
    const int m = static_cast<int>(s.integer(-3, 5));
    CHECK(eval_minus_one(2, m, p) == (p.r - p.beta * m) * (p.r - p.beta * m - p.alpha));
    CHECK_MESSAGE(check_minus_one(10, m, p).passed(), p.describe());
  }
}

TEST_CASE("order shift recurrence") {
  const HsuShiueParams bell{0, 1, 0};
  const auto table = build_table(bell, 8);
  CHECK(spivey_step(table, 2, 2, 1, 1) == 75);
  CHECK(spivey_step(table, 3, 0, 2, R(1, 3)) == geometric_poly(3, 2, bell)(R(1, 3)));
  CHECK(spivey_step(table, 0, 3, 2, R(1, 3)) == geometric_poly(3, 2, bell)(R(1, 3)));

  auto s = test::sampler(44);
  for (int trial = 0; trial < 4; ++trial) {
    const auto p = s.params();
    CHECK_MESSAGE(check_spivey(p, 4, 4, static_cast<int>(s.integer(0, 3)), s.rational()).passed(), p.describe());
  }
  CHECK(check_spivey(bell, 3, 3, 1, 1, SpiveyWeight::rising_s_plus_one).status == CheckStatus::fail);
}

TEST_CASE("Bernoulli and Euler") {
  const auto b = bernoulli_numbers(6);
  CHECK(b[1] == R(-1, 2));
  CHECK(b[2] == R(1, 6));
  CHECK(b[5] == 0);
  CHECK(bernoulli_poly(2) == PolyQ({R(1, 6), -1, 1}));
  CHECK(euler_poly(0, 3) == PolyQ({1}));
  CHECK(euler_poly(2)(0) == 0);
  CHECK(euler_poly(1)(0) == R(-1, 2));
  CHECK(check_eq14(20).passed());
}

TEST_CASE("degenerate Euler and Bernoulli families") {
  auto s = test::sampler(45);
  for (int trial = 0; trial < 5; ++trial) {
    const Rational alpha = s.rational();
    const Rational r = s.rational();
    CHECK(degenerate_euler(0, 2, alpha, r) == 1);
    CHECK(degenerate_euler(1, 0, alpha, r) == r - R(1, 2));
    CHECK(degenerate_bernoulli2(0, alpha, r) == 1);
    CHECK(degenerate_bernoulli2(1, alpha, r) == r - R(1, 2));
    CHECK(carlitz_beta(0, alpha, r) == 1);
    CHECK(carlitz_beta(1, alpha, 0) == (alpha - 1) / 2);
    for (int order = 0; order <= 3; ++order) CHECK(check_degenerate_euler(10, order, alpha, r).passed());
    CHECK(check_degenerate_bernoulli2(10, alpha, r).passed());
    const Rational beta = s.nonzero();
    CHECK(check_whitney_euler(8, static_cast<int>(s.integer(0, 3)), beta, r).passed());
    CHECK(check_whitney_bernoulli(8, beta, r).passed());
  }
  for (unsigned n = 0; n <= 8; ++n) CHECK(carlitz_beta(n, 0, R(2, 3)) == bernoulli_poly(n)(R(2, 3)));
}

TEST_CASE("Carlitz difference identities") {
  CHECK(check_theorem3(8, 0, R(1, 2), 3).passed());
  CHECK(check_theorem3(2, 1, R(1, 2), 3).passed());
  CHECK(check_theorem3(8, 2, R(1, 3), 2).passed());
  CHECK(check_corollary2(8, 2, R(1, 3)).passed());
  CHECK(check_corollary3(8, R(1, 2), 0).passed());
  CHECK(check_corollary3(8, R(1, 3), R(1, 3)).passed());
  auto s = test::sampler(46);
  for (int trial = 0; trial < 4; ++trial) {
    const Rational alpha = s.rational();
    CHECK(check_theorem3(8, s.integer(0, 4), alpha, s.rational()).passed());
    CHECK(check_corollary2(8, static_cast<unsigned>(s.integer(1, 6)), alpha).passed());
    CHECK(check_corollary3(8, alpha, s.rational()).passed());
  }
}

TEST_CASE("Bernoulli shift with Whitney numbers") {
  const auto corrected = bernoulli_shift_sides(1, 1, 2, 1);
  CHECK(corrected.lhs == -1);
  CHECK(corrected.rhs == -1);
  const auto printed = bernoulli_shift_sides(1, 1, 2, 1, ExponentVariant::printed);
  CHECK(printed.lhs == -1);
  CHECK(printed.rhs == R(-1, 2));
  CHECK(check_theorem4(4, 1, 2, 1, ExponentVariant::printed).status == CheckStatus::fail);
  CHECK(check_theorem4(8, 0, 3, 1).passed());
  for (int sh = 0; sh <= 5; ++sh) {
    CHECK(check_theorem4(10, sh, 1, 0).passed());
    CHECK(check_theorem4(10, sh, 1, 0, ExponentVariant::printed).passed());
  }
  auto s = test::sampler(47);
  for (int trial = 0; trial < 5; ++trial) CHECK(check_theorem4(8, s.integer(0, 4), s.nonzero(), s.rational()).passed());
  CHECK(check_bernoulli_falling(10, R(-2, 3)).passed());
  for (unsigned r = 0; r <= 4; ++r) CHECK(check_corollary4(8, r).passed());
}

TEST_CASE("power sums over arithmetic progressions") {
  CHECK(howard_power_sum(0, 5, 3, 1) == 5);
  CHECK(howard_power_sum(1, 2, 2, 1) == 4);
  CHECK(direct_power_sum(1, 2, 2, 1) == 4);
  CHECK(howard_power_sum(1, 2, 2, 1, ExponentVariant::printed) == 2);
  CHECK(howard_power_sum(1, 1, 2, 1, ExponentVariant::printed) == R(1, 2));
  CHECK(direct_power_sum(1, 1, 2, 1) == 1);
  CHECK(check_corollary5(4, 3, 2, 1, ExponentVariant::printed).status == CheckStatus::fail);
  CHECK_THROWS_AS(howard_power_sum(2, 0, 1, 0), std::invalid_argument);
  auto s = test::sampler(48);
  for (int trial = 0; trial < 5; ++trial) CHECK(check_corollary5(8, 6, s.nonzero(), s.rational()).passed());
}

TEST_CASE("series identities over x") {
  CHECK(check_dobinski(0, {1, 1, 0}, 12).passed());
  CHECK(check_dobinski(5, {R(1, 2), 2, -1}, 24).passed());
  CHECK_THROWS_AS(check_dobinski(2, {1, 0, 1}, 8), std::invalid_argument);
  auto s = test::sampler(49);
  for (int trial = 0; trial < 4; ++trial) {
    const auto p = s.params();
    const Rational x = s.rational();
    const int m = static_cast<int>(s.integer(-3, 5));
    CHECK_MESSAGE(check_dobinski(static_cast<unsigned>(s.integer(0, 8)), p, 16).passed(), p.describe());
    CHECK_MESSAGE(check_gamma_rep7(8, static_cast<int>(s.integer(1, 4)), x, p).passed(), p.describe());
    CHECK_MESSAGE(check_gf_w(p, 10, m, x).passed(), p.describe());
    CHECK(check_eq36(12, x).passed());
  }
}

TEST_CASE("gamma representation at order one reduces to the plain geometric polynomial") {
  const HsuShiueParams p{R(1, 3), 2, -1};
  const auto table = build_table(p, 8);
  for (unsigned n = 0; n <= 8; ++n) {
    Rational expected = 0;
    for (unsigned k = 0; k <= n; ++k)
      expected += table(n, k) * Rational(factorial(k)) * ipow(p.beta, static_cast<int>(k)) * ipow(R(2, 5), static_cast<int>(k));
    CHECK(geometric_poly(table, n, 1)(R(2, 5)) == expected);
  }
}

TEST_CASE("barred preferential arrangements") {
  CHECK(geometric_poly(2, 2, {0, 1, 0})(1) == 8);
  for (unsigned sh = 0; sh <= 3; ++sh) {
    CHECK(check_barred_preferential(8, sh).passed());
    for (unsigned n = 0; n <= 6; ++n)
      CHECK(geometric_poly(n, static_cast<int>(sh) + 1, {0, 1, 0})(1) ==
            enumerate_oracle(EnumerationKind::barred_preferential, n, {sh}));
  }
}

#include <doctest.h>

#include <mpfr.h>

#include <stdexcept>

#include "geopoly/analytic.hpp"
#include "geopoly/stirling.hpp"
#include "test_support.hpp"

using namespace geopoly;
using test::R;

namespace {

EvalConfig bits(unsigned b) {
  EvalConfig cfg;
  cfg.precision_bits = b;
  return cfg;
}

bool close(const BigFloat& a, const BigFloat& b, unsigned digits = 30) {
  return abs(a - b) < test::ten_to_minus(digits, a.precision());
}

}  // namespace

TEST_CASE("zeta values against MPFR") {
  const auto cfg = bits(256);
  for (long s = 2; s <= 40; ++s) {
    BigFloat ref(cfg.working_bits());
    mpfr_zeta_ui(ref.get(), static_cast<unsigned long>(s), MPFR_RNDN);
    CHECK_MESSAGE(close(zeta_int(s, cfg), ref, 70), "s=" << s);
  }
  const auto pi2 = pow(pi(cfg), 2) / Rational(6);
  CHECK(close(zeta_int(2, cfg), pi2, 70));
  const auto table = zeta_table(12, cfg);
  for (long s = 2; s <= 12; ++s) {
    CHECK(close(table[s], zeta_int(s, cfg), 70));
    CHECK(close(hurwitz_zeta(s, 1, cfg), zeta_int(s, cfg), 70));
  }
}

TEST_CASE("digamma against MPFR and its recurrence") {
  const auto cfg = bits(256);
  auto s = test::sampler(61);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational a = s.positive();
    BigFloat ref(a, cfg.working_bits());
    mpfr_digamma(ref.get(), ref.get(), MPFR_RNDN);
    CHECK(close(digamma(a, cfg), ref, 70));
    const BigFloat step = digamma(a + 1, cfg) - digamma(a, cfg);
    CHECK(close(step, BigFloat(Rational(1) / a, cfg.working_bits()), 70));
  }
  CHECK(close(digamma(1, cfg), -gamma_euler(cfg), 70));
  CHECK(check_half_argument_relations(12, cfg).report.passed());
  for (const Rational& x : {R(1, 3), R(-1, 3), R(3, 4)}) CHECK(check_psi_taylor(x, cfg).report.passed());
}

TEST_CASE("domain errors and non-convergence") {
  const auto cfg = bits(128);
  CHECK_THROWS_AS(zeta_int(1, cfg), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(2, 0, cfg), std::domain_error);
  CHECK_THROWS_AS(digamma(R(-1, 2), cfg), std::domain_error);
  CHECK_THROWS_AS(eval_theorem5({0, 1, 0}, 2, 1, cfg), std::domain_error);
  CHECK_THROWS_AS(eval_dobinski_numeric(2, {0, -1, 0}, 1, cfg), std::domain_error);
  auto tight = cfg;
  tight.max_terms = 5;
  CHECK_THROWS_AS(eval_theorem5({0, 1, 0}, 2, R(3, 4), tight), NonConvergence);
  CHECK_THROWS_AS(eval_dobinski_numeric(3, {0, 1, 0}, 1, tight), NonConvergence);
}

TEST_CASE("zeta series with generalized Stirling numbers") {
  const auto cfg = bits(256);
  for (const Rational& x : {R(1, 3), R(-1, 2)}) CHECK(eval_theorem5({R(1, 2), 2, 1}, 0, x, cfg).report.passed());
  CHECK(eval_theorem5({R(1, 2), 2, 1}, 3, R(1, 2), cfg).report.passed());

  // n = 1 on (0,1,0): sum_k k zeta(k+1) x^k = x zeta(2, 1 - x)
  const auto one = eval_theorem5({0, 1, 0}, 1, R(1, 3), cfg);
  CHECK(one.report.passed());
  CHECK(close(one.lhs, hurwitz_zeta(2, R(2, 3), cfg) / Rational(3), 60));

  auto s = test::sampler(62);
  for (int trial = 0; trial < 4; ++trial) {
    const auto p = s.params();
    const auto check = eval_theorem5(p, static_cast<unsigned>(s.integer(0, 4)), s.inside_unit(), cfg);
    CHECK_MESSAGE(check.report.passed(), p.describe() << " " << check.report.witness);
    CHECK(close(check.lhs, check.rhs));
  }
}

TEST_CASE("half-weighted zeta power sums") {
  const auto cfg = bits(256);
  const auto l2 = log2(cfg);
  const auto z2 = zeta_int(2, cfg);
  const auto z3 = zeta_int(3, cfg);
  CHECK(close(eval_eq30_family(0, cfg).lhs, l2));
  CHECK(close(eval_eq30_family(1, cfg).lhs, l2 + z2 * R(3, 4)));
  CHECK(close(eval_eq30_family(2, cfg).lhs, l2 + z2 * R(9, 4) + z3 * R(14, 8)));
  for (unsigned n = 0; n <= 5; ++n) CHECK(eval_eq30_family(n, cfg).report.passed());
}

TEST_CASE("trigonometric series") {
  const auto cfg = bits(256);
  const HsuShiueParams p{1, 2, 3};
  const auto even = eval_eq17_18(TrigSeries::cosine_even, 1, p, cfg);
  CHECK(even.report.passed());
  CHECK(close(even.lhs, BigFloat(p.r, cfg.working_bits())));
  const auto even_j1 = eval_eq17_18(TrigSeries::cosine_even, 1, p, cfg, StartIndex::paper_j1);
  CHECK(even_j1.report.status == CheckStatus::fail);
  CHECK(even_j1.rhs.is_zero());
  const auto odd = eval_eq17_18(TrigSeries::sine_odd, 1, p, cfg);
  CHECK(odd.report.passed());
  CHECK(close(odd.lhs, BigFloat(p.beta, cfg.working_bits())));
  CHECK(eval_eq17_18(TrigSeries::sine_odd, 1, p, cfg, StartIndex::paper_j1).report.status == CheckStatus::fail);

  for (auto which : {TrigSeries::cosine_even, TrigSeries::sine_odd})
    for (unsigned n = 0; n <= 4; ++n) CHECK(eval_eq17_18(which, n, {0, 1, 0}, cfg).report.passed());
}

TEST_CASE("numeric exponential expansion") {
  const auto cfg = bits(256);
  const auto e = exp(BigFloat(1, cfg.working_bits()));
  const auto zero = eval_dobinski_numeric(0, {0, 1, 0}, 1, cfg);
  CHECK(zero.report.passed());
  CHECK(close(zero.lhs, e));
  const auto bell = eval_dobinski_numeric(3, {0, 1, 0}, 1, cfg);
  CHECK(bell.report.passed());
  const auto b3 = static_cast<long>(enumerate_oracle(EnumerationKind::set_partitions, 3));
  CHECK(close(bell.lhs, e * Rational(b3)));
  CHECK(eval_dobinski_numeric(4, {R(1, 2), 2, 1}, R(3, 2), cfg).report.passed());
}

TEST_CASE("doubling the precision shrinks the residual") {
  auto lo = bits(128);
  auto hi = bits(256);
  const HsuShiueParams p{R(1, 2), 2, 1};
  const auto t_lo = eval_theorem5(p, 3, R(1, 2), lo);
  const auto t_hi = eval_theorem5(p, 3, R(1, 2), hi);
  CHECK(t_hi.diff <= t_lo.diff);
  CHECK(t_hi.threshold < t_lo.threshold);
  const auto d_lo = eval_dobinski_numeric(3, p, 1, lo);
  const auto d_hi = eval_dobinski_numeric(3, p, 1, hi);
  CHECK(d_hi.diff <= d_lo.diff);
  CHECK(d_hi.report.passed());
  CHECK(lo.tolerance_exponent() == -96);
}

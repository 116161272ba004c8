#include "geopoly/families.hpp"

#include <stdexcept>
#include <string>

#include "geopoly/series.hpp"

namespace geopoly {

namespace {

Rational q(long v) { return Rational(v); }

std::string at_n(unsigned n) { return "n=" + std::to_string(n); }

HsuShiueParams beta_one(const Rational& alpha, const Rational& r) { return {alpha, Rational(1), r}; }

HsuShiueParams whitney(const Rational& beta, const Rational& r) {
  if (beta == 0) throw std::invalid_argument("r-Whitney numbers need beta != 0");
  return {Rational(0), beta, r};
}

std::vector<PolyQ> bernoulli_polys(unsigned n_max) {
  std::vector<PolyQ> out;
  out.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) out.push_back(bernoulli_poly(n));
  return out;
}

}  // namespace

PolyQ exp_poly(const StirlingTable& table, unsigned n) { return PolyQ(table.row(n)); }

PolyQ exp_poly(unsigned n, const HsuShiueParams& params) { return exp_poly(build_table(params, n), n); }

PolyQ geometric_poly(const StirlingTable& table, unsigned n, int m) {
  const auto& row = table.row(n);
  const Rational& beta = table.params().beta;
  std::vector<Rational> c(row.size());
  Rational weight(1);  // <m>_k beta^k
  for (unsigned k = 0; k < row.size(); ++k) {
    if (k > 0) weight *= (q(m) + q(k - 1)) * beta;
    c[k] = row[k] * weight;
  }
  return PolyQ(std::move(c));
}

PolyQ geometric_poly(unsigned n, int m, const HsuShiueParams& params) {
  return geometric_poly(build_table(params, n), n, m);
}

Rational eval_minus_one(unsigned n, int m, const HsuShiueParams& params) {
  return geometric_poly(n, m, params)(Rational(-1));
}

CheckReport check_minus_one(unsigned n_max, int m, const HsuShiueParams& params) {
  ExactCheck check("w_at_minus_one");
  check.param("params", params.describe()).param("m", m).param("n_max", n_max);
  const StirlingTable table = build_table(params, n_max);
  for (unsigned n = 0; n <= n_max; ++n) {
    check.expect_equal(at_n(n), geometric_poly(table, n, m)(Rational(-1)),
                       gen_factorial(params.r - params.beta * q(m), params.alpha, n));
  }
  return check.finish();
}

Rational spivey_step(const StirlingTable& table, unsigned n, unsigned m, int s, const Rational& x, SpiveyWeight weight) {
  const auto& p = table.params();
  const int shift = weight == SpiveyWeight::rising_s ? s : s + 1;
  Rational total(0);
  for (unsigned j = 0; j <= m; ++j) {
    const Rational smj = table(m, j);
    if (smj == 0) continue;
    const Rational outer = smj * rising_factorial(q(shift), j) * ipow(p.beta * x, static_cast<int>(j));
    const Rational base = q(j) * p.beta - q(m) * p.alpha;
    for (unsigned k = 0; k <= n; ++k) {
      const Rational binom = binomial_general(q(n), k);
      total += binom * outer * gen_factorial(base, p.alpha, n - k) * geometric_poly(table, k, s + static_cast<int>(j))(x);
    }
  }
  return total;
}

CheckReport check_spivey(const HsuShiueParams& params, unsigned n_max, unsigned m_max, int s, const Rational& x,
                         SpiveyWeight weight) {
  ExactCheck check(weight == SpiveyWeight::rising_s ? "spivey_recurrence" : "spivey_recurrence_typeset_weight");
  check.param("params", params.describe()).param("s", s).param("x", x).param("n_max", n_max).param("m_max", m_max);
  const StirlingTable table = build_table(params, n_max + m_max);
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned m = 0; m <= m_max; ++m) {
      check.expect_equal("(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")",
                         geometric_poly(table, n + m, s)(x), spivey_step(table, n, m, s, x, weight));
    }
  }
  return check.finish();
}

std::vector<Rational> bernoulli_numbers(unsigned n_max) {
  const std::size_t work = n_max + 1;
  PowerSeries denom = exp_series(PowerSeries::variable(work));
  denom[0] -= 1;
  return egf_values(divide(PowerSeries::variable(work), denom));
}

PolyQ bernoulli_poly(unsigned n) {
  const auto b = bernoulli_numbers(n);
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = binomial_general(q(n), k) * b[n - k];
  return PolyQ(std::move(c));
}

PolyQ euler_poly(unsigned n, int s) {
  const auto e0 = egf_values(gf_degenerate_euler(s, Rational(0), Rational(0), n));
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = binomial_general(q(n), k) * e0[n - k];
  return PolyQ(std::move(c));
}

Rational degenerate_euler(unsigned n, int s, const Rational& alpha, const Rational& r) {
  return geometric_poly(n, s + 1, beta_one(alpha, r))(Rational(-1, 2));
}

CheckReport check_degenerate_euler(unsigned n_max, int s, const Rational& alpha, const Rational& r) {
  ExactCheck check("degenerate_euler_explicit");
  check.param("s", s).param("alpha", alpha).param("r", r).param("n_max", n_max);
  const StirlingTable table = build_table(beta_one(alpha, r), n_max);
  const auto oracle = egf_values(gf_degenerate_euler(s + 1, alpha, r, n_max));
  for (unsigned n = 0; n <= n_max; ++n) {
    Rational sum(0);
    for (unsigned k = 0; k <= n; ++k) {
      sum += table(n, k) * sign_power(k) * rising_factorial(q(s + 1), k) / ipow(q(2), static_cast<int>(k));
    }
    check.expect_equal(at_n(n), sum, oracle[n]);
  }
  return check.finish();
}

CheckReport check_whitney_euler(unsigned n_max, int s, const Rational& beta, const Rational& r) {
  ExactCheck check("whitney_euler");
  check.param("s", s).param("beta", beta).param("r", r).param("n_max", n_max);
  const StirlingTable table = build_table(whitney(beta, r), n_max);
  for (unsigned n = 0; n <= n_max; ++n) {
    const Rational lhs = euler_poly(n, s)(r / beta) * ipow(beta, static_cast<int>(n));
    Rational rhs(0);
    for (unsigned k = 0; k <= n; ++k) {
      rhs += table(n, k) * sign_power(k) * rising_factorial(q(s), k) * ipow(beta / q(2), static_cast<int>(k));
    }
    check.expect_equal(at_n(n), lhs, rhs);
  }
  return check.finish();
}

Rational degenerate_bernoulli2(unsigned n, const Rational& alpha, const Rational& r) {
  const StirlingTable table = build_table(beta_one(alpha, r), n);
  Rational sum(0);
  for (unsigned k = 0; k <= n; ++k) sum += table(n, k) * sign_power(k) * Rational(factorial(k)) / q(k + 1);
  return sum;
}

CheckReport check_degenerate_bernoulli2(unsigned n_max, const Rational& alpha, const Rational& r) {
  ExactCheck check("degenerate_bernoulli2_explicit");
  check.param("alpha", alpha).param("r", r).param("n_max", n_max);
  const auto oracle = egf_values(gf_bernoulli2_degenerate(alpha, r, n_max));
  for (unsigned n = 0; n <= n_max; ++n) check.expect_equal(at_n(n), degenerate_bernoulli2(n, alpha, r), oracle[n]);
  return check.finish();
}

CheckReport check_whitney_bernoulli(unsigned n_max, const Rational& beta, const Rational& r) {
  ExactCheck check("whitney_bernoulli");
  check.param("beta", beta).param("r", r).param("n_max", n_max);
  const StirlingTable table = build_table(whitney(beta, r), n_max);
  for (unsigned n = 0; n <= n_max; ++n) {
    const Rational lhs = bernoulli_poly(n)(r / beta) * ipow(beta, static_cast<int>(n));
    Rational rhs(0);
    for (unsigned k = 0; k <= n; ++k) {
      rhs += table(n, k) * sign_power(k) * Rational(factorial(k)) * ipow(beta, static_cast<int>(k)) / q(k + 1);
    }
    check.expect_equal(at_n(n), lhs, rhs);
  }
  return check.finish();
}

Rational carlitz_beta(unsigned n, const Rational& alpha, const Rational& x) {
  return gf_carlitz_beta(alpha, x, n).egf_coefficient(n);
}

std::vector<Rational> carlitz_beta_values(unsigned n_max, const Rational& alpha, const Rational& x) {
  return egf_values(gf_carlitz_beta(alpha, x, n_max));
}

CheckReport check_eq14(unsigned n_max) {
  ExactCheck check("bernoulli_euler_stirling_sums");
  check.param("n_max", n_max);
  const StirlingTable table = build_table(specialize(StirlingFamily::stirling2), n_max);
  const auto b = bernoulli_numbers(n_max);
  const auto e0 = egf_values(gf_degenerate_euler(1, Rational(0), Rational(0), n_max));
  for (unsigned n = 0; n <= n_max; ++n) {
    Rational bsum(0);
    Rational esum(0);
    for (unsigned k = 0; k <= n; ++k) {
      const Rational term = table(n, k) * sign_power(k) * Rational(factorial(k));
      bsum += term / q(k + 1);
      esum += term / ipow(q(2), static_cast<int>(k));
    }
    check.expect_equal(at_n(n) + " B_n", bsum, b[n]);
    check.expect_equal(at_n(n) + " E_n(0)", esum, e0[n]);
  }
  return check.finish();
}

CheckReport check_theorem3(unsigned n_max, const Rational& s, const Rational& alpha, const Rational& r) {
  ExactCheck check("carlitz_difference");
  check.param("s", s).param("alpha", alpha).param("r", r).param("n_max", n_max);
  const StirlingTable table = build_table(beta_one(alpha, r), n_max);
  const auto at_r = carlitz_beta_values(n_max + 1, alpha, r);
  const auto at_r_minus_s = carlitz_beta_values(n_max + 1, alpha, r - s);
  const auto at_r_minus_1 = carlitz_beta_values(n_max + 1, alpha, r - 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    Rational sum(0);
    for (unsigned k = 0; k <= n; ++k) sum += table(n, k) * sign_power(k) * rising_factorial(s, k + 1) / q(k + 1);
    check.expect_equal(at_n(n), at_r[n + 1] - at_r_minus_s[n + 1], q(n + 1) * sum);
    check.expect_equal(at_n(n) + " s=1", at_r[n + 1] - at_r_minus_1[n + 1], q(n + 1) * gen_factorial(r - 1, alpha, n));
  }
  return check.finish();
}

CheckReport check_corollary2(unsigned n_max, unsigned r, const Rational& alpha) {
  ExactCheck check("generalized_falling_factorial_sums");
  check.param("r", r).param("alpha", alpha).param("n_max", n_max);
  const StirlingTable table = build_table(beta_one(alpha, q(r)), n_max);
  const auto at_r = carlitz_beta_values(n_max + 1, alpha, q(r));
  const auto at_0 = carlitz_beta_values(n_max + 1, alpha, Rational(0));
  for (unsigned n = 0; n <= n_max; ++n) {
    Rational direct(0);
    for (unsigned j = 0; j < r; ++j) direct += gen_factorial(q(j), alpha, n);
    Rational closed(0);
    for (unsigned k = 0; k <= n; ++k) closed += table(n, k) * sign_power(k) * rising_factorial(q(r), k + 1) / q(k + 1);
    check.expect_equal(at_n(n) + " closed form", closed, direct);
    check.expect_equal(at_n(n) + " carlitz difference", (at_r[n + 1] - at_0[n + 1]) / q(n + 1), direct);
  }
  return check.finish();
}

CheckReport check_corollary3(unsigned n_max, const Rational& alpha, const Rational& r) {
  ExactCheck check("carlitz_shifted_by_alpha");
  check.param("alpha", alpha).param("r", r).param("n_max", n_max);
  const StirlingTable table = build_table(beta_one(alpha, r), n_max);
  const auto lhs = carlitz_beta_values(n_max, alpha, r - alpha);
  for (unsigned n = 0; n <= n_max; ++n) {
    Rational sum(0);
    for (unsigned k = 0; k <= n; ++k) sum += table(n, k) * sign_power(k) * rising_factorial(alpha + 1, k) / q(k + 1);
    check.expect_equal(at_n(n), lhs[n], sum);
  }
  return check.finish();
}

BernoulliShift bernoulli_shift_sides(unsigned n, const Rational& s, const Rational& beta, const Rational& r,
                                     ExponentVariant variant) {
  const StirlingTable table = build_table(whitney(beta, r), n);
  const PolyQ b = bernoulli_poly(n + 1);
  const Rational x = r / beta;
  Rational sum(0);
  for (unsigned k = 0; k <= n; ++k) {
    const int e = static_cast<int>(n) - static_cast<int>(k) + (variant == ExponentVariant::printed ? 1 : 0);
    sum += table(n, k) * sign_power(k) * rising_factorial(s, k + 1) / (ipow(beta, e) * q(k + 1));
  }
  return {b(x) - b(x - s), q(n + 1) * sum};
}

CheckReport check_theorem4(unsigned n_max, const Rational& s, const Rational& beta, const Rational& r,
                           ExponentVariant variant) {
  ExactCheck check(variant == ExponentVariant::corrected ? "bernoulli_rational_shift" : "bernoulli_rational_shift_typeset");
  check.param("s", s).param("beta", beta).param("r", r).param("n_max", n_max);
  const StirlingTable table = build_table(whitney(beta, r), n_max);
  const auto bern = bernoulli_polys(n_max + 1);
  const Rational x = r / beta;
  for (unsigned n = 0; n <= n_max; ++n) {
    const Rational lhs = bern[n + 1](x) - bern[n + 1](x - s);
    Rational sum(0);
    for (unsigned k = 0; k <= n; ++k) {
      const int e = static_cast<int>(n) - static_cast<int>(k) + (variant == ExponentVariant::printed ? 1 : 0);
      sum += table(n, k) * sign_power(k) * rising_factorial(s, k + 1) / (ipow(beta, e) * q(k + 1));
    }
    check.expect_equal(at_n(n), lhs, q(n + 1) * sum);
  }
  return check.finish();
}

CheckReport check_bernoulli_falling(unsigned n_max, const Rational& x) {
  ExactCheck check("bernoulli_falling_factorial");
  check.param("x", x).param("n_max", n_max);
  const StirlingTable table = build_table(specialize(StirlingFamily::stirling2), n_max);
  const auto bern = bernoulli_polys(n_max + 1);
  const auto b = bernoulli_numbers(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    Rational rhs = b[n + 1];
    for (unsigned k = 0; k <= n; ++k) rhs += q(n + 1) / q(k + 1) * table(n, k) * falling_factorial(x, k + 1);
    check.expect_equal(at_n(n), bern[n + 1](x), rhs);
  }
  return check.finish();
}

CheckReport check_corollary4(unsigned n_max, unsigned r) {
  ExactCheck check("bernoulli_rising_factorial");
  check.param("r", r).param("n_max", n_max);
  const StirlingTable table = build_table(specialize(StirlingFamily::r_stirling, {.r = q(r)}), n_max);
  const auto bern = bernoulli_polys(n_max + 1);
  const auto b = bernoulli_numbers(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    Rational rhs = b[n + 1];
    for (unsigned k = 0; k <= n; ++k) {
      rhs += sign_power(k) * q(n + 1) / q(k + 1) * table(n, k) * rising_factorial(q(r), k + 1);
    }
    check.expect_equal(at_n(n), bern[n + 1](q(r)), rhs);
  }
  return check.finish();
}

Rational howard_power_sum(unsigned n, unsigned m, const Rational& beta, const Rational& r, ExponentVariant variant) {
  if (m == 0) throw std::invalid_argument("howard_power_sum: m must be positive");
  const StirlingTable table = build_table(whitney(beta, r), n);
  Rational sum(0);
  for (unsigned k = 0; k <= n; ++k) {
    const int g = static_cast<int>(k) - (variant == ExponentVariant::printed ? 1 : 0);
    sum += ipow(beta, g) / q(k + 1) * table(n, k) * falling_factorial(q(m), k + 1);
  }
  return sum;
}

Rational direct_power_sum(unsigned n, unsigned m, const Rational& beta, const Rational& r) {
  Rational sum(0);
  for (unsigned j = 0; j < m; ++j) sum += ipow(r + beta * q(j), static_cast<int>(n));
  return sum;
}

CheckReport check_corollary5(unsigned n_max, unsigned m_max, const Rational& beta, const Rational& r,
                             ExponentVariant variant) {
  ExactCheck check(variant == ExponentVariant::corrected ? "power_sum_closed_form" : "power_sum_closed_form_typeset");
  check.param("beta", beta).param("r", r).param("n_max", n_max).param("m_max", m_max);
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned m = 1; m <= m_max; ++m) {
      check.expect_equal("(n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")",
                         howard_power_sum(n, m, beta, r, variant), direct_power_sum(n, m, beta, r));
    }
  }
  return check.finish();
}

CheckReport check_dobinski(unsigned n, const HsuShiueParams& params, std::size_t order_x) {
  if (params.beta == 0) throw std::invalid_argument("check_dobinski: beta must be nonzero");
  ExactCheck check("dobinski_coefficients");
  check.param("params", params.describe()).param("n", n).param("order_x", static_cast<long long>(order_x));
  PowerSeries exp_part(order_x);
  for (std::size_t k = 0; k <= order_x; ++k) {
    exp_part[k] = Rational(1) / (ipow(params.beta, static_cast<int>(k)) * Rational(factorial(static_cast<unsigned>(k))));
  }
  const PowerSeries product = exp_part * to_series(exp_poly(n, params), order_x);
  for (std::size_t k = 0; k <= order_x; ++k) {
    const Rational expected = gen_factorial(q(static_cast<long>(k)) * params.beta + params.r, params.alpha, n) * exp_part[k];
    check.expect_equal("[x^" + std::to_string(k) + "]", product[k], expected);
  }
  return check.finish();
}

CheckReport check_gamma_rep7(unsigned n_max, int s, const Rational& x, const HsuShiueParams& params) {
  if (s < 1) throw std::invalid_argument("check_gamma_rep7: s must be >= 1");
  ExactCheck check("gamma_integral_representation");
  check.param("params", params.describe()).param("s", s).param("x", x).param("n_max", n_max);
  const StirlingTable table = build_table(params, n_max);
  const Integer gamma_s = factorial(static_cast<unsigned>(s - 1));
  // Gamma(s+k)/Gamma(s) from integer factorials.
  auto gamma_ratio = [&](unsigned k) { return Rational(factorial(static_cast<unsigned>(s) + k - 1), gamma_s); };

  for (unsigned n = 0; n <= n_max; ++n) {
    Rational integral(0);
    for (unsigned k = 0; k <= n; ++k) integral += table(n, k) * ipow(x * params.beta, static_cast<int>(k)) * gamma_ratio(k);
    check.expect_equal(at_n(n) + " moment form", integral, geometric_poly(table, n, s)(x));
  }

  // Integral against e^{-(1-y)t} as a power series in y, versus the binomial
  // series sum_j C(s-1+j, j) (r + j beta | alpha)_n y^j.
  constexpr std::size_t order = 12;
  const PowerSeries one_minus_y = PowerSeries::constant(Rational(1), order) - PowerSeries::variable(order);
  for (unsigned n = 0; n <= n_max; ++n) {
    PowerSeries lhs(order);
    PowerSeries y_power = PowerSeries::constant(Rational(1), order);
    for (unsigned k = 0; k <= n; ++k) {
      if (k > 0) y_power = y_power * PowerSeries::variable(order);
      const Rational c = table(n, k) * ipow(params.beta, static_cast<int>(k)) * gamma_ratio(k);
      lhs += y_power * pow_series(one_minus_y, -q(s + static_cast<int>(k))) * c;
    }
    for (std::size_t j = 0; j <= order; ++j) {
      const Rational rhs = binomial_general(q(s - 1 + static_cast<long>(j)), static_cast<unsigned>(j)) *
                           gen_factorial(params.r + q(static_cast<long>(j)) * params.beta, params.alpha, n);
      check.expect_equal(at_n(n) + " [y^" + std::to_string(j) + "]", lhs[j], rhs);
    }
  }
  return check.finish();
}

CheckReport check_gf_w(const HsuShiueParams& params, unsigned n_max, int m, const Rational& x) {
  ExactCheck check("geometric_gf_vs_explicit");
  check.param("params", params.describe()).param("m", m).param("x", x).param("n_max", n_max);
  const StirlingTable table = build_table(params, n_max);
  const auto gf = egf_values(gf_w(params, m, x, n_max));
  for (unsigned n = 0; n <= n_max; ++n) check.expect_equal(at_n(n), gf[n], geometric_poly(table, n, m)(x));
  return check.finish();
}

CheckReport check_eq19(const HsuShiueParams& params, unsigned n_max, const Rational& x) {
  ExactCheck check("geometric_gf_order_one");
  check.param("params", params.describe()).param("x", x).param("n_max", n_max);
  const StirlingTable table = build_table(params, n_max);
  PowerSeries u = binom_deform(params.alpha, params.beta, n_max);
  u[0] -= 1;
  const auto gf = egf_values(divide(binom_deform(params.alpha, params.r, n_max), Rational(1) - u * x));
  for (unsigned n = 0; n <= n_max; ++n) check.expect_equal(at_n(n), gf[n], geometric_poly(table, n, 1)(x));
  return check.finish();
}

CheckReport check_eq36(unsigned n_max, const Rational& x) {
  ExactCheck check("rising_falling_reflection");
  check.param("x", x).param("n_max", n_max);
  for (unsigned n = 0; n <= n_max; ++n) check.expect_equal(at_n(n), rising_factorial(-x, n), sign_power(n) * falling_factorial(x, n));
  return check.finish();
}

CheckReport check_fubini(unsigned n_max) {
  ExactCheck check("fubini_enumeration");
  check.param("n_max", n_max);
  const StirlingTable table = build_table(specialize(StirlingFamily::stirling2), n_max);
  for (unsigned n = 0; n <= n_max; ++n) {
    const auto count = enumerate_oracle(EnumerationKind::ordered_set_partitions, n);
    check.expect_equal(at_n(n), geometric_poly(table, n, 1)(Rational(1)), Rational(Integer(count)));
  }
  return check.finish();
}

CheckReport check_barred_preferential(unsigned n_max, unsigned s) {
  ExactCheck check("barred_preferential_enumeration");
  check.param("s", s).param("n_max", n_max);
  const StirlingTable table = build_table(specialize(StirlingFamily::stirling2), n_max);
  for (unsigned n = 0; n <= n_max; ++n) {
    const auto count = enumerate_oracle(EnumerationKind::barred_preferential, n, {s});
    check.expect_equal(at_n(n), geometric_poly(table, n, static_cast<int>(s) + 1)(Rational(1)), Rational(Integer(count)));
  }
  return check.finish();
}

}  // namespace geopoly

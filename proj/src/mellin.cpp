#include "geopoly/mellin.hpp"

#include <stdexcept>
#include <string>

#include "geopoly/families.hpp"
#include "geopoly/series.hpp"
#include "geopoly/stirling.hpp"

namespace geopoly {

GradedSeries::GradedSeries(HsuShiueParams params, std::vector<Rational> coeffs, unsigned applications)
    : params_(std::move(params)), coeffs_(std::move(coeffs)), applications_(applications) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

GradedSeries GradedSeries::embed(const HsuShiueParams& params, std::span<const Rational> coeffs) {
  return GradedSeries(params, std::vector<Rational>(coeffs.begin(), coeffs.end()), 0);
}

GradedSeries apply(const GradedSeries& gs, unsigned times) {
  const auto& p = gs.params_;
  if (p.beta == 0) throw std::domain_error("apply: the operator needs beta != 0");
  GradedSeries out = gs;
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) {
    if (out.coeffs_[k] == 0) continue;
    const Rational base = Rational(static_cast<long>(k)) * p.beta + p.r;
    for (unsigned j = 0; j < times; ++j) out.coeffs_[k] *= base - Rational(static_cast<long>(gs.applications_ + j)) * p.alpha;
  }
  out.applications_ += times;
  return out;
}

namespace {

std::string coeff_label(std::size_t k) { return "[x^" + std::to_string(k) + "]"; }

void compare_coefficients(ExactCheck& check, std::span<const Rational> lhs, std::span<const Rational> rhs, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const Rational a = k < lhs.size() ? lhs[k] : Rational(0);
    const Rational b = k < rhs.size() ? rhs[k] : Rational(0);
    check.expect_equal(coeff_label(k), a, b);
  }
}

PowerSeries exp_over_beta(const Rational& beta, std::size_t order) {
  PowerSeries e(order);
  for (std::size_t k = 0; k <= order; ++k) {
    e[k] = Rational(1) / (ipow(beta, static_cast<int>(k)) * Rational(factorial(static_cast<unsigned>(k))));
  }
  return e;
}

}  // namespace

CheckReport verify_eq1_poly(unsigned n, const PolyQ& f, const HsuShiueParams& params) {
  ExactCheck check("mellin_operator_polynomial");
  check.param("params", params.describe()).param("n", n).param("f", f.to_string());
  const GradedSeries lhs = apply(GradedSeries::embed(params, f.coeffs()), n);
  if (lhs.applications() != n) check.fail("operator application count drifted");

  const StirlingTable table = build_table(params, n);
  PolyQ rhs;
  for (unsigned k = 0; k <= n; ++k) {
    rhs = rhs + PolyQ::monomial(k, table(n, k) * ipow(params.beta, static_cast<int>(k))) * f.derivative(k);
  }
  const std::size_t count = std::max<std::size_t>(lhs.coeffs().size(), rhs.coeffs().size());
  compare_coefficients(check, lhs.coeffs(), rhs.coeffs(), count);
  return check.finish();
}

CheckReport verify_series_identity(SeriesIdentity id, unsigned n, int s, const HsuShiueParams& params, std::size_t order) {
  if (params.beta == 0) throw std::invalid_argument("verify_series_identity: beta must be nonzero");
  if (id == SeriesIdentity::eq21) s = 0;
  const bool negative_family = id == SeriesIdentity::eq38_operator || id == SeriesIdentity::eq38_binomial;
  if (s < 0 || (negative_family && s < 1)) throw std::invalid_argument("verify_series_identity: order parameter out of range");

  static constexpr const char* names[] = {"eq4_operator", "eq5", "eq21", "eq38_operator", "eq38_binomial"};
  ExactCheck check(std::string("series_identity_") + names[static_cast<int>(id)]);
  check.param("params", params.describe()).param("n", n).param("s", s).param("order", static_cast<long long>(order));

  const Rational s_q(s);
  const PowerSeries one = PowerSeries::constant(Rational(1), order);
  const PowerSeries x = PowerSeries::variable(order);
  const StirlingTable table = build_table(params, n);

  std::vector<Rational> lhs(order + 1);
  PowerSeries rhs(order);

  switch (id) {
    case SeriesIdentity::eq4_operator:
    case SeriesIdentity::eq5:
    case SeriesIdentity::eq21: {
      std::vector<Rational> f(order + 1);
      for (std::size_t k = 0; k <= order; ++k) f[k] = binomial_general(s_q + Rational(static_cast<long>(k)), static_cast<unsigned>(k));
      if (id == SeriesIdentity::eq4_operator) {
        const GradedSeries image = apply(GradedSeries::embed(params, f), n);
        lhs.assign(image.coeffs().begin(), image.coeffs().end());
      } else {
        for (std::size_t k = 0; k <= order; ++k) {
          lhs[k] = f[k] * gen_factorial(params.r + Rational(static_cast<long>(k)) * params.beta, params.alpha, n);
        }
      }
      const PowerSeries inv = pow_series(one - x, Rational(-1));
      const PolyQ w = geometric_poly(table, n, s + 1);
      rhs = pow_series(one - x, -(s_q + 1)) * w(x * inv);
      break;
    }
    case SeriesIdentity::eq38_operator: {
      std::vector<Rational> f(order + 1);
      for (std::size_t k = 0; k <= order; ++k) f[k] = sign_power(static_cast<unsigned>(k)) * binomial_general(s_q, static_cast<unsigned>(k));
      const GradedSeries image = apply(GradedSeries::embed(params, f), n);
      lhs.assign(image.coeffs().begin(), image.coeffs().end());
      const PowerSeries inv = pow_series(one - x, Rational(-1));
      rhs = pow_series(one - x, s_q) * geometric_poly(table, n, -s)(x * inv);
      break;
    }
    case SeriesIdentity::eq38_binomial: {
      for (std::size_t k = 0; k <= order; ++k) {
        lhs[k] = binomial_general(s_q, static_cast<unsigned>(k)) *
                 gen_factorial(params.r + Rational(static_cast<long>(k)) * params.beta, params.alpha, n);
      }
      const PowerSeries inv = pow_series(one + x, Rational(-1));
      rhs = pow_series(one + x, s_q) * geometric_poly(table, n, -s)(-(x * inv));
      break;
    }
  }
  compare_coefficients(check, lhs, rhs.coeffs(), order + 1);
  return check.finish();
}

CheckReport verify_eq15(unsigned n, const HsuShiueParams& params, std::size_t order) {
  if (params.beta == 0) throw std::invalid_argument("verify_eq15: beta must be nonzero");
  ExactCheck check("exponential_polynomial_operator_form");
  check.param("params", params.describe()).param("n", n).param("order", static_cast<long long>(order));
  const PowerSeries e = exp_over_beta(params.beta, order);
  const GradedSeries image = apply(GradedSeries::embed(params, e.coeffs()), n);
  const PowerSeries rhs = e * to_series(exp_poly(n, params), order);
  compare_coefficients(check, image.coeffs(), rhs.coeffs(), order + 1);
  return check.finish();
}

}  // namespace geopoly

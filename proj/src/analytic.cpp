#include "geopoly/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "geopoly/families.hpp"
#include "geopoly/stirling.hpp"

namespace geopoly {

namespace {

// Euler-Maclaurin and the digamma asymptotic series use B_2 .. B_{2 kMaxCorrections}.
constexpr unsigned kMaxCorrections = 80;

// Computed once; read-only afterwards, so concurrent callers are safe.
const std::vector<Rational>& bernoulli_cache() {
  static const std::vector<Rational> values = bernoulli_numbers(2 * kMaxCorrections + 2);
  return values;
}

Rational q(long v) { return Rational(v); }

long internal_target_exponent(const EvalConfig& cfg) { return -static_cast<long>(cfg.precision_bits) - 48; }

void require_positive(const Rational& a, const char* who) {
  if (a <= 0) throw std::domain_error(std::string(who) + ": argument must be positive");
}

// Upper bound for |(z | alpha)_n| when |z| <= c: (c + n |alpha|)^n.
Rational gen_factorial_bound(const Rational& c, const Rational& alpha, unsigned n) {
  return ipow(c + q(n) * abs(alpha), static_cast<int>(n));
}

struct Summed {
  BigFloat value;
  BigFloat absolute;
  unsigned terms;
};

// Sums term(k) for k = k0, k0+1, ... until tail(K), an upper bound for
// sum_{k >= K} |term(k)|, drops under `target`. Throws NonConvergence once
// max_terms terms have been used.
Summed sum_certified(unsigned k0, const std::function<BigFloat(unsigned)>& term,
                     const std::function<std::optional<BigFloat>(unsigned)>& tail, const BigFloat& target,
                     const EvalConfig& cfg) {
  const unsigned w = cfg.working_bits();
  Summed out{BigFloat(w), BigFloat(w), 0};
  for (unsigned k = k0;; ++k) {
    if (k > k0) {
      if (const auto bound = tail(k); bound && *bound <= target) return out;
    }
    if (out.terms >= cfg.max_terms) {
      throw NonConvergence("series did not certify its tail within " + std::to_string(cfg.max_terms) + " terms");
    }
    const BigFloat t = term(k);
    out.value += t;
    out.absolute += abs(t);
    ++out.terms;
  }
}

// b / (1 - rho) when rho < 1, doubled for rounding slack.
std::optional<BigFloat> geometric_tail(const BigFloat& b, const BigFloat& rho) {
  const BigFloat one(1, b.precision());
  if (!(rho < one)) return std::nullopt;
  BigFloat out = b / (one - rho);
  out *= 2L;
  return out;
}

// ((K+1)/K)^n, the growth bound for the polynomial factor.
BigFloat poly_ratio(unsigned K, unsigned n, unsigned bits) {
  return BigFloat(ipow(Rational(K + 1, K), static_cast<int>(n)), bits);
}

NumericCheck finish(std::string identity, std::vector<std::pair<std::string, std::string>> params, BigFloat lhs,
                    BigFloat rhs, const BigFloat& scale, unsigned terms, const EvalConfig& cfg) {
  const unsigned w = cfg.working_bits();
  NumericCheck out{CheckReport{}, std::move(lhs), std::move(rhs), BigFloat(w), BigFloat(w), terms};
  out.diff = abs(out.lhs - out.rhs);
  out.threshold = cfg.tail_tolerance() * max(BigFloat(1, w), scale);
  out.report.identity = std::move(identity);
  out.report.params = std::move(params);
  out.report.params.emplace_back("bits", std::to_string(cfg.precision_bits));
  out.report.status = out.diff <= out.threshold ? CheckStatus::pass : CheckStatus::fail;
  out.report.tolerance = "2^" + std::to_string(cfg.tolerance_exponent()) + " * max(1, scale), scale=" + scale.to_string(6);
  out.report.witness = "lhs=" + out.lhs.to_string(30) + " rhs=" + out.rhs.to_string(30) + " |diff|=" + out.diff.to_string(6);
  out.report.comparisons = 1;
  return out;
}

std::vector<std::pair<std::string, std::string>> describe(const HsuShiueParams& p, unsigned n) {
  return {{"params", p.describe()}, {"n", std::to_string(n)}};
}

}  // namespace

BigFloat gamma_euler(const EvalConfig& cfg) { return BigFloat::euler_gamma(cfg.working_bits()); }
BigFloat pi(const EvalConfig& cfg) { return BigFloat::pi(cfg.working_bits()); }
BigFloat log2(const EvalConfig& cfg) { return BigFloat::log2(cfg.working_bits()); }

BigFloat hurwitz_zeta(long s, const Rational& a, const EvalConfig& cfg) {
  if (s < 2) throw std::domain_error("hurwitz_zeta: s must be an integer >= 2");
  require_positive(a, "hurwitz_zeta");
  const unsigned w = cfg.working_bits();
  const auto& bern = bernoulli_cache();

  // All summands are positive, so a^{-s} bounds the result from below.
  const BigFloat a_f(a, w);
  const BigFloat target = inverse_power(a_f, s) * BigFloat::exp2(internal_target_exponent(cfg), w);

  // Direct terms until (N+a)/a is large enough that the corrections are tiny,
  // capped so that the correction series converges quickly for small s.
  const double a_d = a.convert_to<double>();
  const double need = static_cast<double>(cfg.precision_bits + 48);
  unsigned n_terms = 1;
  while (n_terms < w / 3 && static_cast<double>(s) * std::log2((n_terms + a_d) / a_d) < need) ++n_terms;

  for (int attempt = 0; attempt < 8; ++attempt, n_terms *= 2) {
    BigFloat sum(w);
    for (unsigned j = 0; j < n_terms; ++j) sum += inverse_power(BigFloat(a + q(j), w), s);

    const BigFloat X(a + q(n_terms), w);
    sum += inverse_power(X, s - 1) / q(s - 1);
    sum += inverse_power(X, s) / q(2);

    // T_i = B_{2i}/(2i)! s(s+1)...(s+2i-2) X^{-s-2i+1}. For a completely
    // monotone summand the remainder is bounded by the first omitted T_i.
    Rational poch = q(s);
    BigFloat x_pow = inverse_power(X, s + 1);
    const BigFloat x_inv2 = inverse_power(X, 2);
    BigFloat previous(w);
    bool converged = false;
    for (unsigned i = 1; i <= kMaxCorrections; ++i) {
      const Rational c = bern[2 * i] / Rational(factorial(2 * i)) * poch;
      BigFloat t = x_pow * c;
      if (abs(t) < target) {
        converged = true;
        break;
      }
      if (i > 1 && abs(t) > abs(previous)) break;
      sum += t;
      previous = t;
      poch *= q(s + 2 * i - 1) * q(s + 2 * i);
      x_pow *= x_inv2;
    }
    if (converged) return sum;
  }
  throw NonConvergence("hurwitz_zeta: Euler-Maclaurin corrections did not converge");
}

BigFloat zeta_int(long s, const EvalConfig& cfg) { return hurwitz_zeta(s, Rational(1), cfg); }

std::vector<BigFloat> zeta_table(long s_max, const EvalConfig& cfg) {
  std::vector<BigFloat> out;
  out.reserve(static_cast<std::size_t>(std::max(2L, s_max + 1)));
  out.emplace_back(cfg.working_bits());
  out.emplace_back(cfg.working_bits());
  for (long s = 2; s <= s_max; ++s) out.push_back(zeta_int(s, cfg));
  return out;
}

BigFloat digamma(const Rational& a, const EvalConfig& cfg) {
  require_positive(a, "digamma");
  const unsigned w = cfg.working_bits();
  const auto& bern = bernoulli_cache();
  unsigned shift = 0;
  while (a + q(shift) < q(w / 3)) ++shift;

  for (int attempt = 0; attempt < 8; ++attempt, shift = 2 * shift + 16) {
    BigFloat correction(w);
    for (unsigned j = 0; j < shift; ++j) correction += BigFloat(1, w) / BigFloat(a + q(j), w);

    // psi(x) ~ log x - 1/(2x) - sum_i B_{2i} / (2i x^{2i}); the error is
    // bounded by the first omitted term.
    const BigFloat x(a + q(shift), w);
    BigFloat value = log(x);
    value -= BigFloat(1, w) / (x * q(2));
    const BigFloat target = max(BigFloat(1, w), abs(value)) * BigFloat::exp2(internal_target_exponent(cfg), w);
    const BigFloat x_inv2 = inverse_power(x, 2);
    BigFloat x_pow = x_inv2;
    BigFloat previous(w);
    bool converged = false;
    for (unsigned i = 1; i <= kMaxCorrections; ++i) {
      BigFloat t = x_pow * (bern[2 * i] / q(2 * i));
      if (abs(t) < target) {
        converged = true;
        break;
      }
      if (i > 1 && abs(t) > abs(previous)) break;
      value -= t;
      previous = t;
      x_pow *= x_inv2;
    }
    if (converged) return value - correction;
  }
  throw NonConvergence("digamma: asymptotic series did not converge");
}

NumericCheck eval_theorem5(const HsuShiueParams& params, unsigned n, const Rational& x, const EvalConfig& cfg) {
  params.validate();
  if (abs(x) >= 1) throw std::domain_error("eval_theorem5: needs |x| < 1");
  const unsigned w = cfg.working_bits();
  const auto& [alpha, beta, r] = params;

  const BigFloat x_f(x, w);
  const BigFloat abs_x = abs(x_f);
  const Rational c0 = abs(r) + q(n) * abs(alpha);
  const BigFloat target = cfg.tail_tolerance() / q(256);

  const Summed lhs = sum_certified(
      1,
      [&](unsigned k) {
        const Rational g = gen_factorial(r + q(k) * beta, alpha, n) * ipow(x, static_cast<int>(k));
        return zeta_int(static_cast<long>(k) + 1, cfg) * g;
      },
      [&](unsigned K) -> std::optional<BigFloat> {
        const BigFloat b = BigFloat(gen_factorial_bound(c0 + q(K) * abs(beta), alpha, n), w) * pow(abs_x, K) * q(2);
        return geometric_tail(b, poly_ratio(K, n, w) * abs_x);
      },
      target, cfg);

  const Rational one_minus_x = Rational(1) - x;
  const StirlingTable table = build_table(params, n);
  BigFloat rhs = -(digamma(one_minus_x, cfg) + gamma_euler(cfg)) * gen_factorial(r, alpha, n);
  BigFloat scale = abs(rhs) + lhs.absolute;
  for (unsigned k = 1; k <= n; ++k) {
    const Rational c = table(n, k) * Rational(factorial(k)) * ipow(beta * x, static_cast<int>(k));
    if (c == 0) continue;
    const BigFloat t = hurwitz_zeta(static_cast<long>(k) + 1, one_minus_x, cfg) * c;
    rhs += t;
    scale += abs(t);
  }
  auto p = describe(params, n);
  p.emplace_back("x", to_string(x));
  return finish("zeta_generalized_stirling_series", std::move(p), lhs.value, rhs, scale, lhs.terms, cfg);
}

NumericCheck eval_eq30_family(unsigned n, const EvalConfig& cfg) {
  const unsigned w = cfg.working_bits();
  const BigFloat target = cfg.tail_tolerance() / q(256);
  const BigFloat half(Rational(1, 2), w);

  const Summed lhs = sum_certified(
      2,
      [&](unsigned k) {
        const Rational c = ipow(q(k), static_cast<int>(n)) / ipow(q(2), static_cast<int>(k));
        return zeta_int(k, cfg) * c;
      },
      [&](unsigned K) -> std::optional<BigFloat> {
        const BigFloat b(ipow(q(K), static_cast<int>(n)) / ipow(q(2), static_cast<int>(K)) * q(2), w);
        return geometric_tail(b, poly_ratio(K, n, w) * half);
      },
      target, cfg);

  const StirlingTable s2 = build_table(specialize(StirlingFamily::stirling2), n + 1);
  BigFloat rhs = log2(cfg);
  BigFloat scale = abs(rhs) + lhs.absolute;
  for (unsigned k = 1; k <= n; ++k) {
    const Rational c = s2(n + 1, k + 1) * Rational(factorial(k)) * (Rational(1) - ipow(q(2), -static_cast<int>(k) - 1));
    const BigFloat t = zeta_int(static_cast<long>(k) + 1, cfg) * c;
    rhs += t;
    scale += abs(t);
  }
  return finish("zeta_power_sum_half", {{"n", std::to_string(n)}}, lhs.value, rhs, scale, lhs.terms, cfg);
}

NumericCheck eval_eq17_18(TrigSeries which, unsigned n, const HsuShiueParams& params, const EvalConfig& cfg,
                          StartIndex start) {
  params.validate();
  const unsigned w = cfg.working_bits();
  const auto& [alpha, beta, r] = params;
  const bool odd = which == TrigSeries::sine_odd;
  const unsigned shift = odd ? 1 : 0;

  const BigFloat two_pi = pi(cfg) * q(2);
  const BigFloat two_pi_sq = two_pi * two_pi;
  const BigFloat target = cfg.tail_tolerance() / q(256);
  const Rational c0 = abs(r) + q(n) * abs(alpha);

  const Summed lhs = sum_certified(
      0,
      [&](unsigned k) {
        const unsigned m = 2 * k + shift;
        Rational c = gen_factorial(q(m) * beta + r, alpha, n) / Rational(factorial(m));
        if (k % 2 == 1) c = -c;
        return pow(two_pi_sq, k) * c;
      },
      [&](unsigned K) -> std::optional<BigFloat> {
        const unsigned m = 2 * K + shift;
        const BigFloat b = pow(two_pi_sq, K) * (gen_factorial_bound(c0 + q(m) * abs(beta), alpha, n) / Rational(factorial(m)));
        const BigFloat rho = poly_ratio(K, n, w) * two_pi_sq / (q(m + 1) * q(m + 2));
        return geometric_tail(b, rho);
      },
      target, cfg);

  const StirlingTable table = build_table(params, n);
  const BigFloat two_pi_beta_sq = two_pi_sq * (beta * beta);
  BigFloat rhs(w);
  BigFloat scale = lhs.absolute;
  for (unsigned j = start == StartIndex::paper_j1 ? 1 : 0; 2 * j + shift <= n; ++j) {
    Rational c = table(n, 2 * j + shift) * sign_power(j);
    if (odd) c *= beta;
    const BigFloat t = pow(two_pi_beta_sq, j) * c;
    rhs += t;
    scale += abs(t);
  }
  auto p = describe(params, n);
  p.emplace_back("start", start == StartIndex::paper_j1 ? "1" : "0");
  return finish(odd ? "odd_trigonometric_series" : "even_trigonometric_series", std::move(p), lhs.value, rhs, scale,
                lhs.terms, cfg);
}

NumericCheck eval_dobinski_numeric(unsigned n, const HsuShiueParams& params, const Rational& x, const EvalConfig& cfg) {
  params.validate();
  if (params.beta <= 0) throw std::domain_error("eval_dobinski_numeric: needs beta > 0");
  const unsigned w = cfg.working_bits();
  const auto& [alpha, beta, r] = params;
  const Rational ratio = x / beta;
  const BigFloat abs_ratio(abs(ratio), w);
  const BigFloat target = cfg.tail_tolerance() / q(256);
  const Rational c0 = abs(r) + q(n) * abs(alpha);

  const Summed lhs = sum_certified(
      0,
      [&](unsigned k) {
        const Rational c = gen_factorial(q(k) * beta + r, alpha, n) * ipow(ratio, static_cast<int>(k)) / Rational(factorial(k));
        return BigFloat(c, w);
      },
      [&](unsigned K) -> std::optional<BigFloat> {
        const BigFloat b(gen_factorial_bound(c0 + q(K) * beta, alpha, n) * ipow(abs(ratio), static_cast<int>(K)) /
                             Rational(factorial(K)),
                         w);
        return geometric_tail(b, poly_ratio(K, n, w) * abs_ratio / q(K + 1));
      },
      target, cfg);

  const Rational s_n = exp_poly(n, params)(x);
  const BigFloat rhs = exp(BigFloat(ratio, w)) * s_n;
  auto p = describe(params, n);
  p.emplace_back("x", to_string(x));
  return finish("dobinski_series", std::move(p), lhs.value, rhs, lhs.absolute + abs(rhs), lhs.terms, cfg);
}

NumericCheck check_psi_taylor(const Rational& x, const EvalConfig& cfg) {
  if (abs(x) >= 1) throw std::domain_error("check_psi_taylor: needs |x| < 1");
  const unsigned w = cfg.working_bits();
  const BigFloat abs_x(abs(x), w);
  const BigFloat target = cfg.tail_tolerance() / q(256);
  const Summed tail = sum_certified(
      1,
      [&](unsigned k) {
        Rational c = ipow(x, static_cast<int>(k));
        if (k % 2 == 0) c = -c;
        return zeta_int(static_cast<long>(k) + 1, cfg) * c;
      },
      [&](unsigned K) -> std::optional<BigFloat> { return geometric_tail(pow(abs_x, K) * q(2), abs_x); }, target, cfg);
  const BigFloat lhs = tail.value - gamma_euler(cfg);
  const BigFloat rhs = digamma(Rational(1) + x, cfg);
  return finish("digamma_taylor", {{"x", to_string(x)}}, lhs, rhs, tail.absolute + abs(rhs), tail.terms, cfg);
}

NumericCheck check_half_argument_relations(long s_max, const EvalConfig& cfg) {
  BigFloat lhs = digamma(Rational(1, 2), cfg);
  BigFloat rhs = -gamma_euler(cfg) - log2(cfg) * q(2);
  BigFloat scale = abs(lhs);
  // Fold every relation into one witness: keep the pair with the largest gap.
  BigFloat worst = abs(lhs - rhs);
  for (long s = 2; s <= s_max; ++s) {
    BigFloat a = hurwitz_zeta(s, Rational(1, 2), cfg);
    BigFloat b = zeta_int(s, cfg) * (ipow(q(2), static_cast<int>(s)) - 1);
    const BigFloat gap = abs(a - b);
    scale = max(scale, abs(a));
    if (gap > worst) {
      worst = gap;
      lhs = std::move(a);
      rhs = std::move(b);
    }
  }
  return finish("half_argument_relations", {{"s_max", std::to_string(s_max)}}, lhs, rhs, scale, 0, cfg);
}

}  // namespace geopoly

#pragma once

#include <cstddef>
#include <vector>

#include "geopoly/check_report.hpp"
#include "geopoly/exact_core.hpp"
#include "geopoly/params.hpp"
#include "geopoly/poly.hpp"
#include "geopoly/stirling.hpp"

namespace geopoly {

// ---------------------------------------------------------------------------
// Explicit polynomial families built from a Stirling table.

/// S_n(x) = sum_k S(n, k) x^k.
PolyQ exp_poly(const StirlingTable& table, unsigned n);
PolyQ exp_poly(unsigned n, const HsuShiueParams& params);

/// w_n^{(m)}(x) = sum_k S(n, k) <m>_k beta^k x^k for any integer order m.
/// m = 1 gives the generalized geometric polynomials; m = -s gives
/// sum_k S(n, k) (s)_k (-beta)^k x^k.
PolyQ geometric_poly(const StirlingTable& table, unsigned n, int m);
PolyQ geometric_poly(unsigned n, int m, const HsuShiueParams& params);

/// w_n^{(m)}(-1), which equals (r - beta m | alpha)_n.
Rational eval_minus_one(unsigned n, int m, const HsuShiueParams& params);
CheckReport check_minus_one(unsigned n_max, int m, const HsuShiueParams& params);

/// Weight attached to the inner order shift in the Spivey-type recurrence.
enum class SpiveyWeight {
  rising_s,           // <s>_j: w_{n+m}^{(s)} from w_k^{(s+j)}; holds identically
  rising_s_plus_one,  // <s+1>_j with the same orders, as typeset; kept as a regression
};

/// sum_k sum_j C(n,k) S(m,j) (j beta - m alpha | alpha)_{n-k} W_j beta^j w_k^{(s+j)}(x) x^j.
Rational spivey_step(const StirlingTable& table, unsigned n, unsigned m, int s, const Rational& x,
                     SpiveyWeight weight = SpiveyWeight::rising_s);
CheckReport check_spivey(const HsuShiueParams& params, unsigned n_max, unsigned m_max, int s, const Rational& x,
                         SpiveyWeight weight = SpiveyWeight::rising_s);

// ---------------------------------------------------------------------------
// Classical and degenerate Bernoulli / Euler families (values via generating
// functions).

/// B_0..B_{n_max}.
std::vector<Rational> bernoulli_numbers(unsigned n_max);
/// B_n(x).
PolyQ bernoulli_poly(unsigned n);
/// E_n^{(s)}(x).
PolyQ euler_poly(unsigned n, int s = 1);

/// Degenerate Euler value of order s+1 at r from the Stirling-sum formula
/// sum_k S(n, k; alpha, 1, r) (-1)^k <s+1>_k / 2^k.
Rational degenerate_euler(unsigned n, int s, const Rational& alpha, const Rational& r);
CheckReport check_degenerate_euler(unsigned n_max, int s, const Rational& alpha, const Rational& r);
/// alpha = 0 slice: E_n^{(s)}(r/beta) beta^n = sum_k W_{beta,r}(n,k) (-1)^k <s>_k beta^k / 2^k.
CheckReport check_whitney_euler(unsigned n_max, int s, const Rational& beta, const Rational& r);

/// B_n(r | alpha) = sum_k S(n, k; alpha, 1, r) (-1)^k k!/(k+1).
Rational degenerate_bernoulli2(unsigned n, const Rational& alpha, const Rational& r);
CheckReport check_degenerate_bernoulli2(unsigned n_max, const Rational& alpha, const Rational& r);
/// alpha = 0 slice: B_n(r/beta) beta^n = sum_k W_{beta,r}(n,k) (-1)^k k! beta^k/(k+1).
CheckReport check_whitney_bernoulli(unsigned n_max, const Rational& beta, const Rational& r);

/// Carlitz degenerate Bernoulli beta_n(alpha, x).
Rational carlitz_beta(unsigned n, const Rational& alpha, const Rational& x);
std::vector<Rational> carlitz_beta_values(unsigned n_max, const Rational& alpha, const Rational& x);

/// B_n and E_n(0) as alternating Stirling sums.
CheckReport check_eq14(unsigned n_max);

/// beta_{n+1}(alpha, r) - beta_{n+1}(alpha, r - s)
///   = (n+1) sum_k S(n,k;alpha,1,r) (-1)^k <s>_{k+1}/(k+1), for n <= n_max.
/// Also checks the s = 1 reduction (n+1)(r-1|alpha)_n.
CheckReport check_theorem3(unsigned n_max, const Rational& s, const Rational& alpha, const Rational& r);

/// sum_{j<r} (j|alpha)_n against the Stirling closed form and the Carlitz
/// difference [beta_{n+1}(alpha, r) - beta_{n+1}(alpha)]/(n+1).
CheckReport check_corollary2(unsigned n_max, unsigned r, const Rational& alpha);

/// beta_n(alpha, r - alpha) = sum_k S(n,k;alpha,1,r) (-1)^k <alpha+1>_k/(k+1).
CheckReport check_corollary3(unsigned n_max, const Rational& alpha, const Rational& r);

enum class ExponentVariant {
  corrected,  // exponent derived from the generating function
  printed,    // exponent as typeset; a must-fail regression
};

/// B_{n+1}(r/beta) - B_{n+1}(r/beta - s)
///   = (n+1) sum_k W_{beta,r}(n,k) (-1)^k <s>_{k+1} / (beta^{e} (k+1)),
/// e = n - k (corrected) or n + 1 - k (printed).
CheckReport check_theorem4(unsigned n_max, const Rational& s, const Rational& beta, const Rational& r,
                           ExponentVariant variant = ExponentVariant::corrected);
struct BernoulliShift {
  Rational lhs;
  Rational rhs;
};
/// Both sides of the identity above at a single n.
BernoulliShift bernoulli_shift_sides(unsigned n, const Rational& s, const Rational& beta, const Rational& r,
                                     ExponentVariant variant = ExponentVariant::corrected);
/// B_{n+1}(x) = B_{n+1} + sum_k (n+1)/(k+1) {n k} (x)_{k+1}.
CheckReport check_bernoulli_falling(unsigned n_max, const Rational& x);
/// B_{n+1}(r) = B_{n+1} + sum_k (-1)^k (n+1)/(k+1) {n+r k+r}_r <r>_{k+1}.
CheckReport check_corollary4(unsigned n_max, unsigned r);

/// sum_{j<m} (r + beta j)^n via sum_k beta^{g(k)}/(k+1) W_{beta,r}(n,k) (m)_{k+1},
/// g(k) = k (corrected) or k - 1 (printed).
Rational howard_power_sum(unsigned n, unsigned m, const Rational& beta, const Rational& r,
                          ExponentVariant variant = ExponentVariant::corrected);
Rational direct_power_sum(unsigned n, unsigned m, const Rational& beta, const Rational& r);
CheckReport check_corollary5(unsigned n_max, unsigned m_max, const Rational& beta, const Rational& r,
                             ExponentVariant variant = ExponentVariant::corrected);

// ---------------------------------------------------------------------------
// Series-level identities checked coefficientwise.

/// [x^k] of e^{x/beta} S_n(x) equals (k beta + r | alpha)_n / (beta^k k!), k <= order_x.
CheckReport check_dobinski(unsigned n, const HsuShiueParams& params, std::size_t order_x);

/// The gamma-integral representation of w_n^{(s)} with the integral discharged
/// as Gamma(s+k)/Gamma(s), plus its (1-x)-weighted form as a power series.
CheckReport check_gamma_rep7(unsigned n_max, int s, const Rational& x, const HsuShiueParams& params);

/// n! [t^n] of the order-m generating function against geometric_poly at x.
CheckReport check_gf_w(const HsuShiueParams& params, unsigned n_max, int m, const Rational& x);
/// Order-1 generating function built by series division, against w_n(x).
CheckReport check_eq19(const HsuShiueParams& params, unsigned n_max, const Rational& x);

/// <-x>_n = (-1)^n (x)_n for n <= n_max.
CheckReport check_eq36(unsigned n_max, const Rational& x);

/// w_n(1; 0,1,0) against enumerated ordered set partitions.
CheckReport check_fubini(unsigned n_max);
/// w_n^{(s+1)}(1; 0,1,0) against enumerated barred preferential arrangements.
CheckReport check_barred_preferential(unsigned n_max, unsigned s);

}  // namespace geopoly

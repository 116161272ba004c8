#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geopoly/bigfloat.hpp"
#include "geopoly/check_report.hpp"
#include "geopoly/exact_core.hpp"
#include "geopoly/params.hpp"

namespace geopoly {

struct EvalConfig {
  unsigned precision_bits = 256;
  /// log2 of the pass threshold; defaults to 32 - precision_bits.
  std::optional<long> tolerance_log2;
  unsigned max_terms = 10000;

  /// Internal precision: 64 guard bits on top of precision_bits.
  unsigned working_bits() const { return precision_bits + 64; }
  long tolerance_exponent() const { return tolerance_log2.value_or(32L - static_cast<long>(precision_bits)); }
  BigFloat tail_tolerance() const { return BigFloat::exp2(tolerance_exponent(), working_bits()); }
};

/// Thrown when an infinite sum cannot certify its tail within max_terms.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// zeta(s) for integer s >= 2 by Euler-Maclaurin summation.
BigFloat zeta_int(long s, const EvalConfig& cfg);
/// zeta(2..s_max), index i holds zeta(i); entries 0 and 1 are unused zeros.
std::vector<BigFloat> zeta_table(long s_max, const EvalConfig& cfg);
/// Hurwitz zeta sum_{j >= 0} (j + a)^{-s}, integer s >= 2, rational a > 0.
BigFloat hurwitz_zeta(long s, const Rational& a, const EvalConfig& cfg);
/// psi(a) for rational a > 0: upward recurrence, then the asymptotic series.
BigFloat digamma(const Rational& a, const EvalConfig& cfg);

BigFloat gamma_euler(const EvalConfig& cfg);
BigFloat pi(const EvalConfig& cfg);
BigFloat log2(const EvalConfig& cfg);

/// Numeric identity check: |lhs - rhs| <= threshold = tail_tolerance * scale,
/// scale = max(1, sum of absolute values of the terms that were combined).
struct NumericCheck {
  CheckReport report;
  BigFloat lhs;
  BigFloat rhs;
  BigFloat diff;
  BigFloat threshold;
  unsigned terms = 0;
};

/// sum_{k>=1} zeta(k+1) (r + k beta | alpha)_n x^k against
/// -(r|alpha)_n (psi(1-x) + gamma) + sum_{k=1}^n S(n,k) k! zeta(k+1, 1-x) (beta x)^k.
NumericCheck eval_theorem5(const HsuShiueParams& params, unsigned n, const Rational& x, const EvalConfig& cfg);

/// sum_{k>=2} zeta(k) k^n / 2^k against log 2 + sum_{k=1}^n {n+1 k+1} k! (1 - 2^{-k-1}) zeta(k+1).
NumericCheck eval_eq30_family(unsigned n, const EvalConfig& cfg);

enum class TrigSeries { cosine_even, sine_odd };
enum class StartIndex { paper_j1, derived_j0 };

/// Even series:  sum_k (2k beta + r|alpha)_n (-1)^k (2 pi)^{2k}/(2k)!
///                 vs sum_j S(n, 2j) (-1)^j (2 pi beta)^{2j}
/// Odd series:   sum_k ((2k+1) beta + r|alpha)_n (-1)^k (2 pi)^{2k}/(2k+1)!
///                 vs beta sum_j S(n, 2j+1) (-1)^j (2 pi beta)^{2j}
/// with j starting at 0 (derived) or 1 (as typeset).
NumericCheck eval_eq17_18(TrigSeries which, unsigned n, const HsuShiueParams& params, const EvalConfig& cfg,
                          StartIndex start = StartIndex::derived_j0);

/// sum_k (k beta + r|alpha)_n x^k / (beta^k k!) against e^{x/beta} S_n(x). Needs beta > 0.
NumericCheck eval_dobinski_numeric(unsigned n, const HsuShiueParams& params, const Rational& x, const EvalConfig& cfg);

/// Taylor series of psi(1+x) about 0 (|x| < 1) against digamma(1+x).
NumericCheck check_psi_taylor(const Rational& x, const EvalConfig& cfg);

/// psi(1/2) = -gamma - 2 log 2 and zeta(s, 1/2) = (2^s - 1) zeta(s) for s = 2..s_max.
NumericCheck check_half_argument_relations(long s_max, const EvalConfig& cfg);

}  // namespace geopoly

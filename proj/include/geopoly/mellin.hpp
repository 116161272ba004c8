#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "geopoly/check_report.hpp"
#include "geopoly/exact_core.hpp"
#include "geopoly/params.hpp"
#include "geopoly/poly.hpp"

namespace geopoly {

/// Series sum_k c_k x^{k + (r - m alpha)/beta}, where m counts how many times
/// the operator (beta x^{1 - alpha/beta} D) has been applied. The fractional
/// prefactor is carried by (params, applications), never by the coefficients.
class GradedSeries {
 public:
  GradedSeries(HsuShiueParams params, std::vector<Rational> coeffs, unsigned applications = 0);

  /// x^{r/beta} f(x) for the truncated f with the given coefficients.
  static GradedSeries embed(const HsuShiueParams& params, std::span<const Rational> coeffs);

  const HsuShiueParams& params() const { return params_; }
  unsigned applications() const { return applications_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  std::size_t order() const { return coeffs_.size() - 1; }

  friend GradedSeries apply(const GradedSeries& gs, unsigned times);

 private:
  HsuShiueParams params_;
  std::vector<Rational> coeffs_;
  unsigned applications_;
};

/// Applies the operator `times` more times. Term k picks up
/// prod_{j < times} (k beta + r - (m + j) alpha). Throws for beta = 0.
GradedSeries apply(const GradedSeries& gs, unsigned times);

/// Operator power on x^{r/beta} f against sum_k S(n,k) beta^k x^k f^{(k)}(x).
CheckReport verify_eq1_poly(unsigned n, const PolyQ& f, const HsuShiueParams& params);

enum class SeriesIdentity {
  eq4_operator,       // operator on x^{r/beta}(1-x)^{-(s+1)}
  eq5,                // sum C(s+k,k)(r+k beta|alpha)_n x^k = (1-x)^{-(s+1)} w^{(s+1)}(x/(1-x))
  eq21,               // eq5 with s = 0
  eq38_operator,      // operator on x^{r/beta}(1-x)^s
  eq38_binomial,      // sum C(s,k)(r+k beta|alpha)_n x^k = (1+x)^s w^{(-s)}(-x/(1+x))
};

/// Coefficientwise comparison up to x^order.
CheckReport verify_series_identity(SeriesIdentity id, unsigned n, int s, const HsuShiueParams& params, std::size_t order);

/// Operator route to the Dobinski-type expansion: the operator applied to
/// x^{r/beta} e^{x/beta} against e^{x/beta} S_n(x).
CheckReport verify_eq15(unsigned n, const HsuShiueParams& params, std::size_t order);

}  // namespace geopoly

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "geopoly/check_report.hpp"
#include "geopoly/exact_core.hpp"
#include "geopoly/params.hpp"

namespace geopoly {

/// Triangular table of S(n, k; alpha, beta, r) for 0 <= k <= n <= n_max.
///
/// S(n, k) is the coefficient of t^n/n! in
///   (1/k!) [((1+alpha t)^{beta/alpha} - 1)/beta]^k (1+alpha t)^{r/alpha},
/// and satisfies S(n+1, k) = S(n, k-1) + (k beta - n alpha + r) S(n, k).
class StirlingTable {
 public:
  /// Wraps precomputed rows; row n must hold n+1 entries.
  StirlingTable(HsuShiueParams params, std::vector<std::vector<Rational>> rows);

  const HsuShiueParams& params() const { return params_; }
  std::size_t n_max() const { return rows_.size() - 1; }

  /// Zero for k > n.
  Rational operator()(std::size_t n, std::size_t k) const;
  const std::vector<Rational>& row(std::size_t n) const { return rows_.at(n); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  HsuShiueParams params_;
  std::vector<std::vector<Rational>> rows_;
};

/// Fills the table by the triangular recurrence. Rejects (0, 0, 0).
StirlingTable build_table(const HsuShiueParams& params, std::size_t n_max);

/// Checks the recurrence and boundary invariants at every stored cell.
CheckReport check_recurrence(const StirlingTable& table);

/// Compares the table against n! [t^n] of the generating function for
/// n, k <= order. beta = 0 uses the limit kernel log(1+alpha t)/alpha.
CheckReport verify_against_gf(const StirlingTable& table, std::size_t order);

enum class StirlingFamily {
  stirling2,                   // {n k}
  stirling1_signed,            // s(n, k) = (-1)^{n-k} [n k]
  howard_degenerate_weighted,  // S_2(n, k, r | alpha)
  carlitz_degenerate,          // S_2(n, k | alpha)
  r_stirling,                  // {n+r k+r}_r
  whitney,                     // W_beta(n, k)
  r_whitney,                   // W_{beta, r}(n, k)
};

struct FamilyExtras {
  Rational alpha{0};
  Rational beta{1};
  Rational r{0};
};

/// Parameter triple whose table reproduces the named family:
///   stirling2 (0,1,0); stirling1_signed (1,0,0);
///   howard_degenerate_weighted (alpha,1,r); carlitz_degenerate (alpha,1,0);
///   r_stirling (0,1,r); whitney (0,beta,1); r_whitney (0,beta,r).
HsuShiueParams specialize(StirlingFamily family, const FamilyExtras& extras = {});
StirlingFamily parse_family(std::string_view name);

enum class EnumerationKind { set_partitions, ordered_set_partitions, barred_preferential, r_stirling_partitions };

/// Exhaustive counts, independent of every closed form:
///   set_partitions         aux = {} (all) or {k} (exactly k blocks)
///   ordered_set_partitions aux = {} (all) or {k}
///   barred_preferential    aux = {s}: ordered blocks interleaved with s bars
///   r_stirling_partitions  aux = {r, k}: partitions of n+r elements into k+r
///                          blocks with the first r elements in distinct blocks
/// n is capped at 10 (n + r at 12); larger sizes throw std::length_error.
std::uint64_t enumerate_oracle(EnumerationKind kind, unsigned n, const std::vector<unsigned>& aux = {});

}  // namespace geopoly

#include "geopoly/stirling.hpp"

#include <stdexcept>
#include <string>

#include "geopoly/series.hpp"

namespace geopoly {

StirlingTable::StirlingTable(HsuShiueParams params, std::vector<std::vector<Rational>> rows)
    : params_(std::move(params)), rows_(std::move(rows)) {
  params_.validate();
  if (rows_.empty()) throw std::invalid_argument("StirlingTable: at least row 0 is required");
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) throw std::invalid_argument("StirlingTable: row " + std::to_string(n) + " has wrong length");
  }
}

Rational StirlingTable::operator()(std::size_t n, std::size_t k) const {
  if (n >= rows_.size()) throw std::out_of_range("StirlingTable: row " + std::to_string(n) + " beyond n_max");
  if (k > n) return Rational(0);
  return rows_[n][k];
}

StirlingTable build_table(const HsuShiueParams& params, std::size_t n_max) {
  params.validate();
  std::vector<std::vector<Rational>> rows(n_max + 1);
  rows[0] = {Rational(1)};
  for (std::size_t n = 0; n < n_max; ++n) {
    const auto& prev = rows[n];
    auto& next = rows[n + 1];
    next.assign(n + 2, Rational(0));
    const Rational n_alpha = Rational(static_cast<long>(n)) * params.alpha;
    for (std::size_t k = 0; k <= n + 1; ++k) {
      Rational value = (k >= 1) ? prev[k - 1] : Rational(0);
      if (k <= n) value += (Rational(static_cast<long>(k)) * params.beta - n_alpha + params.r) * prev[k];
      next[k] = std::move(value);
    }
  }
  return StirlingTable(params, std::move(rows));
}

CheckReport check_recurrence(const StirlingTable& table) {
  const auto& p = table.params();
  ExactCheck check("stirling_recurrence");
  check.param("params", p.describe()).param("n_max", static_cast<long long>(table.n_max()));
  check.expect_equal("S(0,0)", table(0, 0), Rational(1));
  for (std::size_t n = 0; n <= table.n_max(); ++n) {
    const std::string at = "n=" + std::to_string(n);
    check.expect_equal(at + " S(n,n)", table(n, n), Rational(1));
    check.expect_equal(at + " S(n,0)", table(n, 0), gen_factorial(p.r, p.alpha, static_cast<unsigned>(n)));
    if (n == table.n_max()) break;
    for (std::size_t k = 0; k <= n + 1; ++k) {
      const Rational expected = (k >= 1 ? table(n, k - 1) : Rational(0)) +
                                (Rational(static_cast<long>(k)) * p.beta - Rational(static_cast<long>(n)) * p.alpha + p.r) *
                                    table(n, k);
      check.expect_equal("recurrence at (" + std::to_string(n + 1) + "," + std::to_string(k) + ")", table(n + 1, k), expected);
    }
  }
  return check.finish();
}

CheckReport verify_against_gf(const StirlingTable& table, std::size_t order) {
  if (order > table.n_max()) throw std::invalid_argument("verify_against_gf: order exceeds table n_max");
  const auto& p = table.params();
  ExactCheck check("stirling_table_vs_gf");
  check.param("params", p.describe()).param("order", static_cast<long long>(order));

  const PowerSeries kernel = stirling_kernel(p.alpha, p.beta, order);
  const PowerSeries weight = binom_deform(p.alpha, p.r, order);
  PowerSeries power = PowerSeries::constant(Rational(1), order);  // kernel^k / k!
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) power = power * kernel * Rational(1, static_cast<long>(k));
    const PowerSeries column = power * weight;
    for (std::size_t n = 0; n <= order; ++n) {
      check.expect_equal("(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")", table(n, k), column.egf_coefficient(n));
    }
  }
  return check.finish();
}

HsuShiueParams specialize(StirlingFamily family, const FamilyExtras& extras) {
  switch (family) {
    case StirlingFamily::stirling2: return {Rational(0), Rational(1), Rational(0)};
    case StirlingFamily::stirling1_signed: return {Rational(1), Rational(0), Rational(0)};
    case StirlingFamily::howard_degenerate_weighted: return {extras.alpha, Rational(1), extras.r};
    case StirlingFamily::carlitz_degenerate: return {extras.alpha, Rational(1), Rational(0)};
    case StirlingFamily::r_stirling: return {Rational(0), Rational(1), extras.r};
    case StirlingFamily::whitney: return {Rational(0), extras.beta, Rational(1)};
    case StirlingFamily::r_whitney: return {Rational(0), extras.beta, extras.r};
  }
  throw std::invalid_argument("specialize: unknown family");
}

StirlingFamily parse_family(std::string_view name) {
  if (name == "stirling2") return StirlingFamily::stirling2;
  if (name == "stirling1_signed") return StirlingFamily::stirling1_signed;
  if (name == "howard_degenerate_weighted") return StirlingFamily::howard_degenerate_weighted;
  if (name == "carlitz_degenerate") return StirlingFamily::carlitz_degenerate;
  if (name == "r_stirling") return StirlingFamily::r_stirling;
  if (name == "whitney") return StirlingFamily::whitney;
  if (name == "r_whitney") return StirlingFamily::r_whitney;
  throw std::invalid_argument("unknown Stirling family '" + std::string(name) + "'");
}

namespace {

constexpr unsigned kMaxEnumeration = 10;

// Restricted growth strings: element i joins an existing block or opens block `blocks`.
std::uint64_t count_rgs(unsigned i, unsigned size, unsigned blocks, int want_blocks) {
  if (i == size) return (want_blocks < 0 || static_cast<int>(blocks) == want_blocks) ? 1 : 0;
  if (want_blocks >= 0 && static_cast<int>(blocks) > want_blocks) return 0;
  std::uint64_t total = 0;
  for (unsigned b = 0; b <= blocks; ++b) total += count_rgs(i + 1, size, b == blocks ? blocks + 1 : blocks, want_blocks);
  return total;
}

// Ordered set partitions: peel off a nonempty first block, recurse on the rest.
std::uint64_t count_ordered(std::uint32_t mask, unsigned blocks, int want_blocks) {
  if (mask == 0) return (want_blocks < 0 || static_cast<int>(blocks) == want_blocks) ? 1 : 0;
  std::uint64_t total = 0;
  for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) total += count_ordered(mask ^ sub, blocks + 1, want_blocks);
  return total;
}

// Token sequences made of nonempty blocks and exactly `bars` bars.
std::uint64_t count_barred(std::uint32_t mask, unsigned bars) {
  std::uint64_t total = (mask == 0 && bars == 0) ? 1 : 0;
  if (bars > 0) total += count_barred(mask, bars - 1);
  for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) total += count_barred(mask ^ sub, bars);
  return total;
}

}  // namespace

std::uint64_t enumerate_oracle(EnumerationKind kind, unsigned n, const std::vector<unsigned>& aux) {
  if (n > kMaxEnumeration) throw std::length_error("enumerate_oracle: n = " + std::to_string(n) + " exceeds the enumeration cap of 10");
  const int want = aux.empty() ? -1 : static_cast<int>(aux[0]);
  switch (kind) {
    case EnumerationKind::set_partitions: return count_rgs(0, n, 0, want);
    case EnumerationKind::ordered_set_partitions: return count_ordered((1u << n) - 1u, 0, want);
    case EnumerationKind::barred_preferential: {
      if (aux.size() != 1) throw std::invalid_argument("barred_preferential needs aux = {s}");
      return count_barred((1u << n) - 1u, aux[0]);
    }
    case EnumerationKind::r_stirling_partitions: {
      if (aux.size() != 2) throw std::invalid_argument("r_stirling_partitions needs aux = {r, k}");
      const unsigned r = aux[0];
      if (n + r > kMaxEnumeration + 2) throw std::length_error("enumerate_oracle: n + r exceeds 12");
      // Elements 0..r-1 seed r distinct blocks; the remaining n elements are free.
      return count_rgs(r, n + r, r, static_cast<int>(aux[1] + r));
    }
  }
  throw std::invalid_argument("enumerate_oracle: unknown kind");
}

}  // namespace geopoly

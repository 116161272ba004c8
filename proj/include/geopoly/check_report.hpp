#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geopoly/exact_core.hpp"

namespace geopoly {

enum class CheckStatus { pass, fail, expected_fail_confirmed };

std::string_view to_string(CheckStatus status);

/// Outcome of verifying one identity over one parameter draw.
struct CheckReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  CheckStatus status = CheckStatus::pass;
  // First mismatch for exact checks; max |LHS - RHS| summary for numeric ones.
  std::string witness;
  // "exact", or the numeric threshold that was applied.
  std::string tolerance = "exact";
  std::size_t comparisons = 0;

  bool passed() const { return status == CheckStatus::pass; }
};

/// Accumulates exact rational comparisons and remembers the first mismatch.
class ExactCheck {
 public:
  explicit ExactCheck(std::string identity) { report_.identity = std::move(identity); }

  ExactCheck& param(std::string key, std::string value) {
    report_.params.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  ExactCheck& param(std::string key, const Rational& value) { return param(std::move(key), to_string(value)); }
  ExactCheck& param(std::string key, long long value) { return param(std::move(key), std::to_string(value)); }

  bool expect_equal(std::string_view where, const Rational& lhs, const Rational& rhs) {
    ++report_.comparisons;
    if (lhs == rhs) return true;
    if (report_.status == CheckStatus::pass) {
      report_.status = CheckStatus::fail;
      report_.witness = std::string(where) + ": lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
    }
    return false;
  }

  void fail(std::string witness) {
    ++report_.comparisons;
    if (report_.status == CheckStatus::pass) {
      report_.status = CheckStatus::fail;
      report_.witness = std::move(witness);
    }
  }

  bool ok() const { return report_.status == CheckStatus::pass; }

  CheckReport finish() const { return report_; }

 private:
  CheckReport report_;
};

}  // namespace geopoly

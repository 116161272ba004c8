#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "geopoly/check_report.hpp"
#include "geopoly/exact_core.hpp"
#include "geopoly/params.hpp"

namespace geopoly {

enum class IdentityId {
  EQ1,
  EQ3_VS_GF8,
  EQ4_OPERATOR,
  EQ5,
  EQ7_GAMMA,
  EQ10,
  EQ14,
  EQ15,
  EQ16_EXACT,
  EQ16_NUMERIC,
  EQ17,
  EQ18,
  EQ19,
  EQ21,
  EQ26,
  EQ27,
  EQ29,
  EQ30_FAMILY,
  EQ31,
  EQ32,
  EQ33,
  EQ34_THM2,
  EQ36,
  EQ37_CORRECTED,
  EQ37_PRINTED,
  EQ38,
  COR2,
  COR4,
  COR5_CORRECTED,
  COR5_PRINTED,
  SPIVEY,
  MINUS_ONE,
  BPA_NUMBERS,
  FUBINI,
  GF_VS_TABLE,
  EQ17_PRINTED,
  EQ18_PRINTED,
};

struct IdentityInfo {
  IdentityId id;
  std::string_view name;
  /// The identity being checked, written out.
  std::string_view statement;
  /// What the right-hand side is compared against.
  std::string_view oracle;
  /// Typeset variants that are known to be false; a confirmed failure is the
  /// expected outcome.
  bool expect_fail;
};

/// All registered identities in declaration order.
std::span<const IdentityInfo> registry();
const IdentityInfo& info(IdentityId id);
std::string_view to_string(IdentityId id);
/// Throws std::invalid_argument for an unknown name.
IdentityId parse_identity(std::string_view name);

/// Fixed-seed sampler over small rationals p/q with |p| <= 6, 1 <= q <= 4.
/// The engine's output sequence is fixed by the standard; integer draws use
/// rejection rather than std::uniform_int_distribution, whose mapping is
/// implementation-defined.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed);

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  Rational rational();
  Rational nonzero();
  Rational positive();
  /// |x| <= 3/4.
  Rational inside_unit();

  enum class Beta { any, nonzero, positive, not_one };
  /// Redraws until valid and the beta constraint holds.
  HsuShiueParams params(Beta beta = Beta::nonzero);

 private:
  std::mt19937_64 engine_;
};

enum class Profile { quick, full };

struct RunOptions {
  Profile profile = Profile::full;
  /// Negative control: perturbs one table entry before the GF_VS_TABLE comparison.
  bool corrupt_table = false;
};

/// Deterministic in (id, seed, samples, options). Each report carries the
/// identity name and the drawn parameters. Parameter-free identities return a
/// single report whatever `samples` is.
std::vector<CheckReport> run(IdentityId id, std::uint64_t seed, unsigned samples, const RunOptions& options = {});

struct IdentityRun {
  IdentityId id;
  std::vector<CheckReport> reports;
};

struct SuiteSummary {
  std::vector<IdentityRun> runs;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t expected_failures = 0;

  /// fail anywhere is unexpected: expected-fail ids map confirmed failures to
  /// expected_fail_confirmed and an unexpected pass to fail.
  bool ok() const { return failed == 0; }
};

/// Default sample count per identity for a profile.
unsigned default_samples(Profile profile);

SuiteSummary run_all(std::uint64_t seed, Profile profile, const RunOptions& options = {});
SuiteSummary summarize(std::vector<IdentityRun> runs);

nlohmann::ordered_json to_json(const CheckReport& report);
nlohmann::ordered_json to_json(const SuiteSummary& summary);

}  // namespace geopoly

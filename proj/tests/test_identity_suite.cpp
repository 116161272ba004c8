#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>

#include "geopoly/identity_suite.hpp"
#include "test_support.hpp"

using namespace geopoly;
using test::R;

TEST_CASE("registry") {
  const auto reg = registry();
  CHECK(reg.size() == 37);
  std::set<std::string> names;
  for (const auto& entry : reg) {
    names.insert(std::string(entry.name));
    CHECK(parse_identity(entry.name) == entry.id);
    CHECK(to_string(entry.id) == entry.name);
    CHECK(!entry.statement.empty());
    CHECK(!entry.oracle.empty());
    const bool printed = std::string(entry.name).ends_with("_PRINTED");
    CHECK(entry.expect_fail == printed);
  }
  CHECK(names.size() == reg.size());
  CHECK_THROWS_WITH_AS(parse_identity("NOPE"), "unknown identity id: NOPE", std::invalid_argument);
}

TEST_CASE("sampler ranges") {
  RationalSampler s(5);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational q = s.rational();
    CHECK(abs(numerator(q)) <= 6);
    CHECK(denominator(q) <= 4);
    CHECK(abs(s.inside_unit()) <= R(3, 4));
    CHECK(s.positive() > 0);
    CHECK(s.nonzero() != 0);
    const long i = s.integer(-2, 3);
    CHECK(i >= -2);
    CHECK(i <= 3);
    CHECK(s.params(RationalSampler::Beta::any).valid());
    CHECK(s.params(RationalSampler::Beta::positive).beta > 0);
    CHECK(s.params(RationalSampler::Beta::not_one).beta != 1);
  }
  RationalSampler a(9), b(9);
  for (int trial = 0; trial < 50; ++trial) CHECK(a.rational() == b.rational());
  CHECK_THROWS_AS(s.integer(3, 2), std::invalid_argument);
}

TEST_CASE("parameter-free identity") {
  const auto reports = run(IdentityId::EQ14, 1, 1);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].passed());
  CHECK(run(IdentityId::FUBINI, 1, 7).size() == 1);
}

TEST_CASE("typeset exponent is confirmed false with its witness") {
  const auto reports = run(IdentityId::EQ37_PRINTED, 1, 5);
  REQUIRE(reports.size() == 5);
  for (const auto& r : reports) CHECK(r.status == CheckStatus::expected_fail_confirmed);
  CHECK(reports[0].witness.find("lhs=-1 rhs=-1/2") != std::string::npos);
  const auto howard = run(IdentityId::COR5_PRINTED, 1, 3);
  for (const auto& r : howard) CHECK(r.status == CheckStatus::expected_fail_confirmed);
  CHECK(howard[0].witness.find("lhs=1/2 rhs=1") != std::string::npos);
  for (auto id : {IdentityId::EQ37_CORRECTED, IdentityId::COR5_CORRECTED})
    for (const auto& r : run(id, 1, 5)) CHECK(r.passed());
}

TEST_CASE("table against generating function, with a negative control") {
  const auto good = run(IdentityId::GF_VS_TABLE, 7, 20);
  REQUIRE(good.size() == 20);
  for (const auto& r : good) CHECK(r.passed());

  RunOptions corrupt;
  corrupt.corrupt_table = true;
  const auto bad = run(IdentityId::GF_VS_TABLE, 7, 3, corrupt);
  for (const auto& r : bad) {
    CHECK(r.status == CheckStatus::fail);
    CHECK(!r.witness.empty());
  }
}

TEST_CASE("every identity passes or fails as registered") {
  RunOptions quick;
  quick.profile = Profile::quick;
  for (const auto& entry : registry()) {
    const auto reports = run(entry.id, 3, 2, quick);
    REQUIRE(!reports.empty());
    for (const auto& r : reports) {
      const auto want = entry.expect_fail ? CheckStatus::expected_fail_confirmed : CheckStatus::pass;
      CHECK_MESSAGE(r.status == want, entry.name << ": " << r.witness);
      CHECK(r.identity == entry.name);
    }
  }
}

TEST_CASE("runs are deterministic") {
  RunOptions quick;
  quick.profile = Profile::quick;
  for (auto id : {IdentityId::EQ5, IdentityId::EQ16_NUMERIC, IdentityId::SPIVEY, IdentityId::EQ37_PRINTED}) {
    nlohmann::ordered_json a, b;
    for (const auto& r : run(id, 42, 3, quick)) a.push_back(to_json(r));
    for (const auto& r : run(id, 42, 3, quick)) b.push_back(to_json(r));
    CHECK(a.dump() == b.dump());
  }
  CHECK(to_json(run_all(4, Profile::quick)).dump() == to_json(run_all(4, Profile::quick)).dump());
}

TEST_CASE("report serialization") {
  const auto j = to_json(run(IdentityId::EQ29, 2, 1).at(0));
  for (const char* key : {"id", "params", "status", "witness", "tolerance", "comparisons"}) CHECK(j.contains(key));
  CHECK(j["id"] == "EQ29");
  CHECK(j["status"] == "pass");
  const auto summary = to_json(run_all(2, Profile::quick));
  CHECK(summary["ok"] == true);
  CHECK(summary["failed"] == 0);
  CHECK(summary["expected_fail_confirmed"].get<int>() > 0);
}

TEST_CASE("pass set does not depend on the seed") {
  const auto a = run_all(1, Profile::full);
  const auto b = run_all(2, Profile::full);
  CHECK(a.ok());
  CHECK(b.ok());
  REQUIRE(a.runs.size() == b.runs.size());
  for (std::size_t i = 0; i < a.runs.size(); ++i) {
    std::set<CheckStatus> sa, sb;
    for (const auto& r : a.runs[i].reports) sa.insert(r.status);
    for (const auto& r : b.runs[i].reports) sb.insert(r.status);
    CHECK_MESSAGE(sa == sb, to_string(a.runs[i].id));
  }
  CHECK(default_samples(Profile::full) > default_samples(Profile::quick));
}

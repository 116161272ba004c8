#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "geopoly/exact_core.hpp"

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + GEOPOLY_CLI_PATH + "' " + args + " 2>/dev/null";
  Outcome result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

nlohmann::json parse(const Outcome& o) { return nlohmann::json::parse(o.out); }

/// Every string that looks like a number must parse back as an exact rational.
void check_rationals(const nlohmann::json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (!s.empty() && s.find_first_not_of("-0123456789/") == std::string::npos)
      CHECK(geopoly::to_string(geopoly::parse_rational(s)) == s);
  } else if (j.is_structured()) {
    for (const auto& v : j) check_rationals(v);
  }
}

}  // namespace

TEST_CASE("stirling table") {
  const auto o = run_cli("stirling --alpha 0 --beta 1 --r 0 --nmax 4");
  REQUIRE(o.code == 0);
  const auto j = parse(o);
  CHECK(j["command"] == "stirling");
  CHECK(j["status"] == "ok");
  CHECK(j.contains("timing"));
  CHECK(j["result"]["rows"][4] == nlohmann::json::array({"0", "1", "7", "6", "1"}));
  check_rationals(j);

  const auto g = parse(run_cli("stirling --alpha 1/2 --beta 3 --r -2 --nmax 3"));
  CHECK(g["result"]["rows"][2][1] == "-3/2");
  check_rationals(g);

  const auto csv = run_cli("stirling --alpha 0 --beta 1 --r 0 --nmax 2 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.find("2,1,1") != std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "geopoly_cli_test.json";
  CHECK(run_cli("--no-timing stirling --alpha 0 --beta 1 --r 0 --nmax 3 --out '" + path.string() + "'").code == 0);
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(nlohmann::json::parse(body.str())["result"]["rows"][3][2] == "3");
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("stirling --alpha 0 --beta 0 --r 0 --nmax 3").code == 2);
  CHECK(run_cli("stirling --alpha 1.5 --beta 1 --r 0 --nmax 3").code == 2);
  CHECK(run_cli("stirling --alpha 1/0 --beta 1 --r 0 --nmax 3").code == 2);
  CHECK(run_cli("verify --id NOPE").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("series --id theorem5 --n 1 --x 1 --alpha 0 --beta 1 --r 0").code == 2);
  CHECK(run_cli("series --id zeta2k --n 0 --bits 32").code == 2);
  CHECK(run_cli("series --id zeta2k --n 0", "GEOPOLY_BITS=abc").code == 2);
}

TEST_CASE("polynomial evaluation") {
  const auto geom = parse(run_cli("poly --family geom --n 3 --alpha 0 --beta 1 --r 0 --at 1"));
  CHECK(geom["result"]["value"] == "13");
  check_rationals(geom);
  const auto zero = parse(run_cli("poly --family geom --n 0 --alpha 1/2 --beta 2 --r 1 --at 7/3"));
  CHECK(zero["result"]["value"] == "1");
  // order -2 at x = 0 leaves (r | alpha)_2
  const auto neg = parse(run_cli("poly --family geom --n 2 --order-m -2 --alpha 1 --beta 2 --r 3 --at 0"));
  CHECK(neg["result"]["value"] == "6");
  const auto bell = parse(run_cli("poly --family exp --n 3 --alpha 0 --beta 1 --r 0 --at 1"));
  CHECK(bell["result"]["value"] == "5");
}

TEST_CASE("numeric series") {
  const auto z = run_cli("series --id zeta2k --n 0");
  REQUIRE(z.code == 0);
  const auto zj = parse(z);
  CHECK(zj["status"] == "ok");
  CHECK(zj["result"]["pass"] == true);

  const auto even = parse(run_cli("series --id eq17 --n 1 --alpha 1 --beta 2 --r 3"));
  CHECK(even["result"]["pass"] == true);
  CHECK(std::stod(even["result"]["lhs"].get<std::string>()) == doctest::Approx(3.0));
  CHECK(std::stod(even["result"]["abs_diff"].get<std::string>()) < 1e-30);
  CHECK(run_cli("series --id eq17 --n 1 --alpha 1 --beta 2 --r 3 --start 1").code == 1);

  CHECK(run_cli("series --id theorem5 --n 2 --x 1/3 --alpha 1/2 --beta 2 --r 1").code == 0);
  CHECK(run_cli("series --id dobinski --n 3 --x 1 --alpha 0 --beta 1 --r 0").code == 0);

  const auto env = parse(run_cli("series --id zeta2k --n 1", "GEOPOLY_BITS=128"));
  CHECK(env["params"]["bits"] == 128);
}

TEST_CASE("verify") {
  const auto all = run_cli("verify --id all --seed 1");
  CHECK(all.code == 0);
  CHECK(parse(all)["result"]["ok"] == true);
  const auto full = run_cli("--no-timing verify --id all --profile full --seed 3");
  CHECK(full.code == 0);
  CHECK(parse(full)["result"]["failed"] == 0);
  const auto printed = run_cli("verify --id EQ37_PRINTED --seed 1 --samples 2");
  CHECK(printed.code == 0);
  CHECK(printed.out.find("expected_fail_confirmed") != std::string::npos);
}

TEST_CASE("output is byte-identical without timing") {
  for (const char* args : {"stirling --alpha 1/2 --beta 3 --r -2 --nmax 6", "verify --id SPIVEY --seed 5 --samples 2",
                           "series --id theorem5 --n 2 --x 1/3 --alpha 0 --beta 1 --r 1"}) {
    const auto a = run_cli(std::string("--no-timing ") + args);
    const auto b = run_cli(std::string("--no-timing ") + args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(!parse(a).contains("timing"));
  }
}

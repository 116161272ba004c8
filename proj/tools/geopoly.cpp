// Command-line front end: Stirling tables, polynomial families, numeric
// series checks and the identity suite. Output is one JSON document
// {"command", "params", "result", "status"} (CSV for tables on request).
// Exit codes: 0 success, 1 identity failure or tolerance exceeded, 2 bad input.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "geopoly/analytic.hpp"
#include "geopoly/exact_core.hpp"
#include "geopoly/families.hpp"
#include "geopoly/identity_suite.hpp"
#include "geopoly/params.hpp"
#include "geopoly/poly.hpp"
#include "geopoly/stirling.hpp"

namespace {

using geopoly::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Input errors that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_arg(const std::string& name, const std::string& text) {
  try {
    return geopoly::parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

unsigned default_bits() {
  const char* env = std::getenv("GEOPOLY_BITS");
  if (env == nullptr || *env == '\0') return 256;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("GEOPOLY_BITS is not a natural number: ") + env);
  }
}

struct ParamArgs {
  std::string alpha = "0";
  std::string beta = "1";
  std::string r = "0";

  void attach(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "alpha as p/q or an integer")->capture_default_str();
    cmd->add_option("--beta", beta, "beta as p/q or an integer")->capture_default_str();
    cmd->add_option("--r", r, "r as p/q or an integer")->capture_default_str();
  }

  geopoly::HsuShiueParams parse() const {
    geopoly::HsuShiueParams p{parse_arg("alpha", alpha), parse_arg("beta", beta), parse_arg("r", r)};
    if (!p.valid()) throw UsageError("(alpha, beta, r) = (0, 0, 0) is not allowed");
    return p;
  }
};

json params_json(const geopoly::HsuShiueParams& p) {
  return {{"alpha", geopoly::to_string(p.alpha)}, {"beta", geopoly::to_string(p.beta)}, {"r", geopoly::to_string(p.r)}};
}

json rationals_json(std::span<const Rational> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(geopoly::to_string(v));
  return out;
}

class Emitter {
 public:
  explicit Emitter(bool timing) : timing_(timing), start_(std::chrono::steady_clock::now()) {}

  void emit(std::ostream& os, const std::string& command, json params, json result, const std::string& status) const {
    json doc{{"command", command}, {"params", std::move(params)}, {"result", std::move(result)}, {"status", status}};
    if (timing_) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      doc["timing"] = {{"seconds", elapsed.count()}};
    }
    os << doc.dump(2) << '\n';
  }

 private:
  bool timing_;
  std::chrono::steady_clock::time_point start_;
};

// ---------------------------------------------------------------------------

struct StirlingCmd {
  ParamArgs params;
  unsigned nmax = 6;
  std::string format = "json";
  std::string out;

  int run(const Emitter& emitter) const {
    const auto p = params.parse();
    const auto table = geopoly::build_table(p, nmax);
    std::ofstream file;
    if (!out.empty()) {
      file.open(out);
      if (!file) throw UsageError("cannot open --out file: " + out);
    }
    std::ostream& os = out.empty() ? std::cout : file;
    if (format == "csv") {
      os << "n,k,value\n";
      for (std::size_t n = 0; n <= table.n_max(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) os << n << ',' << k << ',' << geopoly::to_string(table(n, k)) << '\n';
      }
      return kExitOk;
    }
    json rows = json::array();
    for (const auto& row : table.rows()) rows.push_back(rationals_json(row));
    json prm = params_json(p);
    prm["nmax"] = nmax;
    emitter.emit(os, "stirling", std::move(prm), {{"rows", std::move(rows)}}, "ok");
    return kExitOk;
  }
};

struct PolyCmd {
  ParamArgs params;
  std::string family = "geom";
  unsigned n = 0;
  int order_m = 1;
  std::optional<std::string> at;

  int run(const Emitter& emitter) const {
    const auto p = params.parse();
    const geopoly::PolyQ poly = family == "exp" ? geopoly::exp_poly(n, p) : geopoly::geometric_poly(n, order_m, p);
    json prm = params_json(p);
    prm["family"] = family;
    prm["n"] = n;
    if (family == "geom") prm["order_m"] = order_m;
    json result{{"coefficients", rationals_json(poly.coeffs())}, {"polynomial", poly.to_string()}};
    if (at) {
      const Rational x = parse_arg("at", *at);
      prm["at"] = geopoly::to_string(x);
      result["value"] = geopoly::to_string(poly(x));
    }
    emitter.emit(std::cout, "poly", std::move(prm), std::move(result), "ok");
    return kExitOk;
  }
};

struct SeriesCmd {
  ParamArgs params;
  std::string id;
  unsigned n = 0;
  std::optional<std::string> x;
  std::optional<unsigned> bits;
  unsigned start = 0;

  int run(const Emitter& emitter) const {
    geopoly::EvalConfig cfg;
    cfg.precision_bits = bits ? *bits : default_bits();
    if (cfg.precision_bits < 64 || cfg.precision_bits > 8192) throw UsageError("--bits must lie in [64, 8192]");

    json prm{{"id", id}, {"n", n}, {"bits", cfg.precision_bits}};
    auto need_x = [&]() {
      if (!x) throw UsageError("--x is required for --id " + id);
      const Rational v = parse_arg("x", *x);
      prm["x"] = geopoly::to_string(v);
      return v;
    };

    std::optional<geopoly::NumericCheck> check;
    try {
      if (id == "zeta2k") {
        check = geopoly::eval_eq30_family(n, cfg);
      } else {
        const auto p = params.parse();
        prm.update(params_json(p));
        if (id == "theorem5") {
          check = geopoly::eval_theorem5(p, n, need_x(), cfg);
        } else if (id == "dobinski") {
          check = geopoly::eval_dobinski_numeric(n, p, need_x(), cfg);
        } else {
          const auto which = id == "eq17" ? geopoly::TrigSeries::cosine_even : geopoly::TrigSeries::sine_odd;
          prm["start"] = start;
          check = geopoly::eval_eq17_18(which, n, p, cfg,
                                        start == 1 ? geopoly::StartIndex::paper_j1 : geopoly::StartIndex::derived_j0);
        }
      }
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }

    // Decimal strings carry about as many digits as the requested precision supports.
    const int digits = static_cast<int>(cfg.precision_bits * 0.30103);
    const bool pass = check->report.passed();
    json result{{"lhs", check->lhs.to_string(digits)},
                {"rhs", check->rhs.to_string(digits)},
                {"abs_diff", check->diff.to_string(6)},
                {"threshold", check->threshold.to_string(6)},
                {"tolerance", check->report.tolerance},
                {"pass", pass},
                {"terms", check->terms},
                {"decimal_digits", digits}};
    emitter.emit(std::cout, "series", std::move(prm), std::move(result), pass ? "ok" : "fail");
    return pass ? kExitOk : kExitFailure;
  }
};

struct VerifyCmd {
  std::string id = "all";
  std::uint64_t seed = 1;
  std::optional<unsigned> samples;
  std::string profile = "quick";

  int run(const Emitter& emitter) const {
    const auto prof = profile == "full" ? geopoly::Profile::full : geopoly::Profile::quick;
    const unsigned count = samples ? *samples : geopoly::default_samples(prof);
    geopoly::RunOptions options;
    options.profile = prof;

    geopoly::SuiteSummary summary;
    if (id == "all") {
      if (samples) {
        std::vector<geopoly::IdentityRun> runs;
        for (const auto& entry : geopoly::registry()) runs.push_back({entry.id, geopoly::run(entry.id, seed, count, options)});
        summary = geopoly::summarize(std::move(runs));
      } else {
        summary = geopoly::run_all(seed, prof);
      }
    } else {
      geopoly::IdentityId parsed{};
      try {
        parsed = geopoly::parse_identity(id);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      summary = geopoly::summarize({{parsed, geopoly::run(parsed, seed, count, options)}});
    }
    json prm{{"id", id}, {"seed", seed}, {"samples", count}, {"profile", profile}};
    emitter.emit(std::cout, "verify", std::move(prm), geopoly::to_json(summary), summary.ok() ? "ok" : "fail");
    return summary.ok() ? kExitOk : kExitFailure;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Stirling numbers, geometric polynomials and identity checks"};
  app.require_subcommand(1);
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "omit the timing field so identical runs are byte-identical");

  StirlingCmd stirling;
  auto* s_cmd = app.add_subcommand("stirling", "triangular table of S(n,k; alpha, beta, r)");
  stirling.params.attach(s_cmd);
  s_cmd->add_option("--nmax", stirling.nmax, "largest row index")->capture_default_str();
  s_cmd->add_option("--format", stirling.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  s_cmd->add_option("--out", stirling.out, "write to this file instead of stdout");

  PolyCmd poly;
  auto* p_cmd = app.add_subcommand("poly", "exponential or geometric polynomial");
  poly.params.attach(p_cmd);
  p_cmd->add_option("--family", poly.family, "exp or geom")->check(CLI::IsMember({"exp", "geom"}))->capture_default_str();
  p_cmd->add_option("--n", poly.n, "degree index")->capture_default_str();
  p_cmd->add_option("--order-m", poly.order_m, "order m of w_n^{(m)} (any integer)")->capture_default_str();
  p_cmd->add_option("--at", poly.at, "evaluate exactly at this rational");

  SeriesCmd series;
  auto* e_cmd = app.add_subcommand("series", "numeric series identity at a chosen precision");
  series.params.attach(e_cmd);
  e_cmd->add_option("--id", series.id, "theorem5, zeta2k, eq17, eq18 or dobinski")
      ->required()
      ->check(CLI::IsMember({"theorem5", "zeta2k", "eq17", "eq18", "dobinski"}));
  e_cmd->add_option("--n", series.n, "polynomial index n")->capture_default_str();
  e_cmd->add_option("--x", series.x, "argument x as p/q");
  e_cmd->add_option("--bits", series.bits, "precision in bits (default GEOPOLY_BITS or 256)");
  e_cmd->add_option("--start", series.start, "eq17/eq18 start index of the Stirling sum (0 or 1)")
      ->check(CLI::IsMember({0u, 1u}))
      ->capture_default_str();

  VerifyCmd verify;
  auto* v_cmd = app.add_subcommand("verify", "run registered identity checks");
  v_cmd->add_option("--id", verify.id, "identity id or all")->capture_default_str();
  v_cmd->add_option("--seed", verify.seed, "sampler seed")->capture_default_str();
  v_cmd->add_option("--samples", verify.samples, "parameter draws per identity");
  v_cmd->add_option("--profile", verify.profile, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Emitter emitter(!no_timing);
    if (app.got_subcommand(s_cmd)) return stirling.run(emitter);
    if (app.got_subcommand(p_cmd)) return poly.run(emitter);
    if (app.got_subcommand(e_cmd)) return series.run(emitter);
    return verify.run(emitter);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

// Command-line front end: exact value tables, generating-function
// coefficients, and the identity verification suite. All rationals cross the
// boundary as "num/den" strings; decimals appear only in abel-mode fields.
//
// Exit codes: 0 all checks pass, 1 at least one identity failure,
// 2 configuration or usage error.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "derange/combinatorics.hpp"
#include "derange/moments.hpp"
#include "derange/prob_family.hpp"
#include "derange/rational.hpp"
#include "derange/verify.hpp"

namespace {

using derange::EvalPoint;
using derange::MomentProfile;
using derange::ProbContext;
using derange::Rational;
using derange::VerificationReport;
using derange::VerifyOptions;
using ordered_json = nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct Emitter {
  std::string format;  // "json" or "csv"
  std::vector<std::string> columns;
  bool header_done = false;

  void emit(const std::vector<std::pair<std::string, ordered_json>>& fields) {
    if (format == "json") {
      ordered_json j;
      for (const auto& [k, v] : fields) j[k] = v;
      std::cout << j.dump() << "\n";
      return;
    }
    if (!header_done) {
      for (size_t i = 0; i < fields.size(); ++i)
        std::cout << (i ? "," : "") << fields[i].first;
      std::cout << "\n";
      header_done = true;
    }
    for (size_t i = 0; i < fields.size(); ++i) {
      const auto& v = fields[i].second;
      std::string cell = v.is_string() ? v.get<std::string>()
                         : v.is_boolean() ? (v.get<bool>() ? std::string("true") : std::string("false"))
                                          : v.dump();
      std::cout << (i ? "," : "") << csv_escape(cell);
    }
    std::cout << "\n";
  }
};

struct CliConfig {
  std::string family;
  std::string gf;
  std::string dist;
  std::string lambda;
  std::string x = "0";
  int r = -1;  // unset marker
  int n_max = 12;
  int samples = 3;
  unsigned long long seed = 42;
  std::string format = "json";
  bool exhaustive = false;
  std::string theorem = "all";
};

[[noreturn]] void usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(2);
}

MomentProfile need_dist(const CliConfig& cfg) {
  if (cfg.dist.empty()) usage_error("this family requires --dist");
  return MomentProfile::parse(cfg.dist);
}

Rational need_lambda(const CliConfig& cfg) {
  if (cfg.lambda.empty()) usage_error("this family requires --lambda");
  return Rational::from_string(cfg.lambda);
}

int need_r(const CliConfig& cfg, const char* what) {
  if (cfg.r < 0) usage_error(std::string("family ") + what + " requires --r");
  return cfg.r;
}

int run_table(const CliConfig& cfg) {
  const Rational x = Rational::from_string(cfg.x);
  const bool probabilistic = cfg.family == "d_prob" || cfg.family == "d_prob_r" ||
                             cfg.family == "D_prob" || cfg.family == "fubini_prob" ||
                             cfg.family == "bell_prob" || cfg.family == "euler_prob" ||
                             cfg.family == "stirling2_prob";
  const bool degenerate = probabilistic || cfg.family == "d_deg" || cfg.family == "D_deg" ||
                          cfg.family == "fubini_deg";
  if (!degenerate && cfg.family != "d_poly") usage_error("unknown family '" + cfg.family + "'");

  std::optional<MomentProfile> Y;
  Rational lambda(0);
  if (degenerate) lambda = need_lambda(cfg);
  std::optional<ProbContext> ctx;
  if (probabilistic) {
    Y = need_dist(cfg);
    ctx.emplace(*Y, lambda, std::max(cfg.n_max, 1));
  }
  int r = 0;
  if (cfg.family == "d_prob_r" || cfg.family == "stirling2_prob") r = need_r(cfg, cfg.family.c_str());

  Emitter em{cfg.format};
  for (int n = 0; n <= cfg.n_max; ++n) {
    Rational value(0);
    if (cfg.family == "d_poly") value = derange::derangement_poly(n, x);
    else if (cfg.family == "d_deg") value = derange::derangement_deg_poly(n, x, lambda);
    else if (cfg.family == "D_deg") value = derange::derangement2_deg_poly(n, x, lambda);
    else if (cfg.family == "fubini_deg") value = derange::fubini_deg(n, x, lambda);
    else if (cfg.family == "d_prob") value = derange::derange_prob(*ctx, n, x);
    else if (cfg.family == "d_prob_r") value = derange::derange_prob_r(*ctx, r, n);
    else if (cfg.family == "D_prob") value = derange::derange2_prob(*ctx, n, x);
    else if (cfg.family == "fubini_prob") value = derange::fubini_prob(*ctx, n, x);
    else if (cfg.family == "bell_prob") value = derange::bell_prob(*ctx, n, x);
    else if (cfg.family == "euler_prob") value = derange::euler_prob(*ctx, n);
    else if (cfg.family == "stirling2_prob")
      value = (r > n) ? Rational(0) : derange::stirling2_prob(*ctx, n, r);
    em.emit({{"family", cfg.family},
             {"dist", Y ? Y->descriptor() : ""},
             {"lambda", degenerate ? lambda.to_string() : ""},
             {"x", x.to_string()},
             {"r", r},
             {"n", n},
             {"value", value.to_string()}});
  }
  return 0;
}

int run_series(const CliConfig& cfg) {
  static const char* kIds[] = {"d_prob", "d_prob_r", "D_prob", "fubini_prob", "bell_prob",
                               "euler_prob", "d_deg", "D_deg", "fubini_deg"};
  bool known = false;
  for (const char* id : kIds) known = known || cfg.gf == id;
  if (!known) usage_error("unknown generating function '" + cfg.gf + "'");
  Rational lambda = need_lambda(cfg);
  if (lambda.is_zero())
    usage_error("lambda = 0 has no degenerate series; use the closed-form `table` command");
  const bool probabilistic = cfg.gf.find("_prob") != std::string::npos;
  EvalPoint pt{lambda, Rational::from_string(cfg.x),
               probabilistic ? need_dist(cfg) : MomentProfile::constant(Rational(1)),
               cfg.gf == "d_prob_r" ? need_r(cfg, "d_prob_r") : 0};
  derange::Series s = derange::gf_oracle(cfg.gf, pt, cfg.n_max);
  Emitter em{cfg.format};
  for (int n = 0; n <= cfg.n_max; ++n)
    em.emit({{"gf", cfg.gf},
             {"dist", probabilistic ? pt.Y.descriptor() : ""},
             {"lambda", lambda.to_string()},
             {"x", pt.x.to_string()},
             {"r", pt.r},
             {"n", n},
             {"coeff", s[n].to_string()}});
  return 0;
}

int run_verify(const CliConfig& cfg) {
  std::vector<std::string> ids;
  if (cfg.theorem == "all") ids = derange::theorem_ids();
  else ids.push_back(cfg.theorem);

  VerifyOptions opt;
  opt.exhaustive = cfg.exhaustive;
  if (const char* env = std::getenv("DERANGE_ABEL_DIGITS")) {
    try {
      int digits = std::stoi(env);
      if (digits < 10) throw std::invalid_argument("too small");
      opt.precision_digits = digits;
    } catch (const std::exception&) {
      usage_error("DERANGE_ABEL_DIGITS must be an integer >= 10");
    }
  }

  struct Task {
    std::string id;
    EvalPoint pt;
  };
  std::vector<Task> tasks;
  for (const auto& id : ids) {
    auto pts = derange::sample_points(cfg.seed, cfg.samples, id);
    for (auto& pt : pts) {
      if (!cfg.dist.empty()) pt.Y = MomentProfile::parse(cfg.dist);
      tasks.push_back({id, std::move(pt)});
    }
  }

  std::vector<std::vector<VerificationReport>> results(tasks.size());
  std::vector<std::string> task_errors(tasks.size());
  // Points are independent; fan out and merge in task order so the stream
  // stays byte-deterministic.
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(tasks.size()); ++i) {
    try {
      results[static_cast<size_t>(i)] =
          derange::verify_theorem(tasks[static_cast<size_t>(i)].id,
                                  tasks[static_cast<size_t>(i)].pt, cfg.n_max, opt);
    } catch (const derange::TheoremPreconditionError& e) {
      task_errors[static_cast<size_t>(i)] = e.what();
    } catch (const std::exception& e) {
      task_errors[static_cast<size_t>(i)] = std::string("internal error: ") + e.what();
    }
  }

  Emitter em{cfg.format};
  long checks = 0, passed = 0, failed = 0, config_errors = 0;
  std::map<std::string, std::vector<VerificationReport>> by_theorem;
  for (size_t i = 0; i < tasks.size(); ++i) {
    if (!task_errors[i].empty()) {
      ++config_errors;
      std::cerr << "config error [" << tasks[i].id << "]: " << task_errors[i] << "\n";
      continue;
    }
    for (const auto& rep : results[i]) {
      ++checks;
      rep.pass ? ++passed : ++failed;
      em.emit({{"theorem", rep.theorem_id},
               {"dist", rep.dist},
               {"lambda", rep.lambda.to_string()},
               {"x", rep.x.to_string()},
               {"r", rep.r},
               {"n", rep.n},
               {"mode", rep.mode},
               {"lhs", rep.lhs},
               {"rhs", rep.rhs},
               {"residual", rep.residual},
               {"pass", rep.pass},
               {"variant", rep.variant},
               {"note", rep.note}});
      by_theorem[rep.theorem_id].push_back(rep);
    }
  }
  for (const auto& [id, reps] : by_theorem) {
    std::string canon = derange::canonical_variant(id, reps);
    if (!canon.empty()) std::cerr << "theorem " << id << " canonical variant: " << canon << "\n";
  }
  std::cerr << "checks: " << checks << ", passed: " << passed << ", failed: " << failed
            << ", config-errors: " << config_errors << "\n";
  if (failed > 0) return 1;
  if (config_errors > 0) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact degenerate derangement-family computation and identity verification"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_common = [&cfg](CLI::App* cmd, bool with_order) {
    cmd->add_option("--dist", cfg.dist, "distribution descriptor (e.g. gamma:1,1)");
    cmd->add_option("--lambda", cfg.lambda, "degeneracy parameter, rational");
    cmd->add_option("--x", cfg.x, "polynomial argument, rational");
    cmd->add_option("--r", cfg.r, "shift index (d_prob_r); column k for stirling2_prob");
    cmd->add_option(with_order ? "--n,--nmax,--order" : "--nmax,--n", cfg.n_max,
                    "maximal index / truncation order");
    cmd->add_option("--format", cfg.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* table = app.add_subcommand("table", "exact value table (n, value) for a family");
  table->add_option("--family", cfg.family, "family id")->required();
  add_common(table, true);

  auto* series = app.add_subcommand("series", "generating-function coefficients (plain t^n)");
  series->add_option("--gf", cfg.gf, "generating function id")->required();
  add_common(series, true);

  auto* verify = app.add_subcommand("verify", "run the identity verification suite");
  verify->add_option("--theorem", cfg.theorem, "theorem id (2.1..2.13) or 'all'");
  verify->add_option("--samples", cfg.samples, "sample points per theorem")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "sample-point seed");
  verify->add_flag("--exhaustive", cfg.exhaustive,
                   "certify on a full (n+1)x(n+1) rational (x,lambda) grid");
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (table->parsed()) return run_table(cfg);
    if (series->parsed()) return run_series(cfg);
    if (verify->parsed()) {
      if (cfg.theorem != "all") {
        bool known = false;
        for (const auto& id : derange::theorem_ids()) known = known || id == cfg.theorem;
        if (!known) usage_error("unknown theorem id '" + cfg.theorem + "'");
      }
      return run_verify(cfg);
    }
  } catch (const derange::TheoremPreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

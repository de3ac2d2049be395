// Copyright 2026 The multop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "multop/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "multop/config.hpp"
#include "multop/errors.hpp"
#include "multop/report_json.hpp"
#include "multop/semigroup.hpp"
#include "multop/verify.hpp"

namespace multop {

namespace {

struct Options {
  std::string config;
  std::string out;
  std::string summary;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  bool force = false;
  std::string suite;
  bool inject_norm_fault = false;
};

class GenerationFailure : public Error {
 public:
  using Error::Error;
};

ProblemConfig load(const Options& o) {
  if (o.config.empty()) throw ConfigError("--config: a config file is required");
  ProblemConfig c = load_config(o.config);
  if (o.seed) c.task.seed = *o.seed;
  if (o.tol) c.task.tol = *o.tol;
  return c;
}

/// Evaluates u at every positive-weight atom so that a non-finite value is
/// reported before any analysis starts.
void require_finite(const SymbolFunction& u) {
  const MeasureSpace& space = *u.space();
  for (std::size_t i = 0; i < space.size(); ++i)
    if (space.positive(i)) u.eval_at(i);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("--out: cannot open " + path);
  file << text;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const ProblemConfig c = load(o);
  require_finite(c.symbol);
  AnalyzeOptions ao;
  ao.tol = c.task.tol;
  ao.eps_grid = c.task.eps_grid;
  Json j;
  j["norm"] = c.norm.describe();
  j["report"] = to_json(analyze(c.symbol, c.norm, ao));
  emit(j.dump(2) + "\n", o.out, out);
  return kExitOk;
}

int cmd_evolve(const Options& o, std::ostream& out) {
  const ProblemConfig c = load(o);
  require_finite(c.symbol);
  SemigroupReport report;
  report.generation = generation_check(c.symbol);
  if (!report.generation.generates_c0 && !o.force)
    throw GenerationFailure("generation check failed: " + report.generation.note + " (use --force to override)");
  report.integrated = integrated_semigroup_check(c.symbol);
  report.m = c.task.m.value_or(default_integration_degree(c.symbol.dim()));

  const VectorFunction x = initial_value(c);
  const Trajectory traj = solve_acp(c.symbol, x, c.task.t_grid);
  if (std::isfinite(report.integrated.w))
    report.stability = stability_bound(c.symbol, x, c.norm, c.task.t_grid);

  std::ostringstream csv;
  write_trajectory_csv(traj, csv);
  const std::string summary = to_json(report).dump(2) + "\n";
  emit(csv.str(), o.out, out);
  if (!o.summary.empty()) {
    emit(summary, o.summary, out);
  } else if (!o.out.empty()) {
    out << summary;
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteOptions so;
  so.inject_norm_fault = o.inject_norm_fault;
  std::vector<CheckResult> results;
  if (!o.suite.empty()) {
    if (o.suite != "builtin") throw ConfigError("--suite: unknown suite \"" + o.suite + "\"");
    so.seed = o.seed.value_or(0);
    results = run_builtin_suite(so);
  } else {
    const ProblemConfig c = load(o);
    require_finite(c.symbol);
    so.seed = c.task.seed;
    results = run_config_suite(c, so);
  }
  std::ostringstream text;
  write_results(results, text);
  emit(text.str(), o.out, out);
  for (const CheckResult& r : results)
    if (!r.passed) return kExitVerifyFailed;
  return kExitOk;
}

int cmd_laplace(const Options& o, std::ostream& out) {
  const ProblemConfig c = load(o);
  require_finite(c.symbol);
  const IntegratedCheck ic = integrated_semigroup_check(c.symbol);
  const int m = c.task.m.value_or(default_integration_degree(c.symbol.dim()));
  const Complex lambda = c.task.lambda.value_or(Complex(ic.w + 3.0, 0.0));
  Json j;
  j["integrated"] = to_json(ic);
  j["laplace"] = to_json(laplace_identity_check(c.symbol, lambda, m, c.task.t_max));
  emit(j.dump(2) + "\n", o.out, out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplication operators on function spaces and their semigroups", "multop"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t seed = 0;
  double tol = 0.0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "problem config (JSON)");
    sub->add_option("--out", o.out, "output file instead of stdout");
    sub->add_option("--seed", seed, "seed for randomized probes (default 0)");
    sub->add_option("--tol", tol, "decision tolerance")->check(CLI::PositiveNumber);
  };
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "analyze M_u and print a JSON report");
  CLI::App* evolve_cmd = app.add_subcommand("evolve", "solve v' = M_u v and write a CSV trajectory");
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the self-verification checks");
  CLI::App* laplace_cmd = app.add_subcommand("laplace", "check the Laplace identity for S_m");
  for (CLI::App* sub : {analyze_cmd, evolve_cmd, verify_cmd, laplace_cmd}) common(sub);
  evolve_cmd->add_flag("--force", o.force, "evolve even when the generation check fails");
  evolve_cmd->add_option("--summary", o.summary, "file for the summary JSON");
  verify_cmd->add_option("--suite", o.suite, "built-in suite name (\"builtin\")");
  verify_cmd->add_flag("--inject-norm-fault", o.inject_norm_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "multop: " << e.what() << "\n";
    return kExitConfigError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen->count("--seed")) o.seed = seed;
  if (chosen->count("--tol")) o.tol = tol;

  try {
    if (chosen == analyze_cmd) return cmd_analyze(o, out);
    if (chosen == evolve_cmd) return cmd_evolve(o, out);
    if (chosen == verify_cmd) return cmd_verify(o, out);
    return cmd_laplace(o, out);
  } catch (const GenerationFailure& e) {
    err << "multop: " << e.what() << "\n";
    return kExitGenerationFailed;
  } catch (const ConfigError& e) {
    err << "multop: config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const DomainError& e) {
    err << "multop: invalid input: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const NumericError& e) {
    err << "multop: numeric failure: " << e.what() << "\n";
    return kExitNumericError;
  }
}

}  // namespace multop

// Copyright 2026 The Fluctuverse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli_app.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fluctuverse/cosmology.hpp"
#include "fluctuverse/error.hpp"
#include "fluctuverse/evaluate.hpp"
#include "fluctuverse/parser.hpp"
#include "fluctuverse/relation.hpp"
#include "fluctuverse/report.hpp"

namespace fluctuverse::cli {
namespace {

struct RunConfig {
  std::string corpus_path;
  std::string constants_path;
  std::string format = "text";
  double tol_scale = 1.0;
  double t_end = 0.0;
  bool t_end_set = false;
  int steps = 100;
  std::string variant = "exact";
  std::string expression;
};

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::kJson;
  if (s == "csv") return OutputFormat::kCsv;
  return OutputFormat::kText;
}

ConstantsRegistry load_registry(const RunConfig& cfg) {
  std::string path = cfg.constants_path;
  if (path.empty()) {
    if (const char* env = std::getenv("FLUCTUVERSE_CONSTANTS"); env && *env) path = env;
  }
  return path.empty() ? ConstantsRegistry::defaults() : ConstantsRegistry::with_overrides_from_file(path);
}

std::vector<Relation> load_corpus(const RunConfig& cfg) {
  if (cfg.corpus_path.empty()) return parse_relation_file(embedded_corpus());
  std::ifstream in(cfg.corpus_path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open corpus file '" + cfg.corpus_path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_relation_file(ss.str());
}

bool all_passed(const std::vector<RelationResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const RelationResult& r) { return r.passed; });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const ConstantsRegistry reg = load_registry(cfg);
  const auto corpus = load_corpus(cfg);
  const auto results = check_corpus(corpus, reg, cfg.tol_scale);
  // Render into a buffer so a late failure never leaves partial rows behind.
  std::ostringstream buf;
  render_verify(buf, corpus, results, parse_format(cfg.format));
  out << buf.str();
  return all_passed(results) ? kExitOk : kExitCheckFailed;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const ConstantsRegistry reg = load_registry(cfg);
  CosmoParams params = CosmoParams::defaults(reg);
  params.variant = cfg.variant == "paper" ? CreationVariant::kPaperStated : CreationVariant::kExact;
  const CosmoModel model(reg, params);
  const double t_end = cfg.t_end_set ? cfg.t_end : model.present_epoch().t.value();
  if (!(t_end > 0.0)) throw Error(ErrorKind::kNegativeTime, "--t-end must be positive");
  const auto series = model.evolve(Quantity(t_end, Dimension::time()), cfg.steps);
  std::ostringstream buf;
  render_epochs(buf, series, parse_format(cfg.format) == OutputFormat::kJson ? OutputFormat::kJson
                                                                            : OutputFormat::kCsv);
  out << buf.str();
  return kExitOk;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const ConstantsRegistry reg = load_registry(cfg);
  const ExprPtr expr = parse_expr(cfg.expression);
  infer_dimension(*expr, reg);
  const Quantity q = evaluate(*expr, reg);
  if (parse_format(cfg.format) == OutputFormat::kJson) {
    out << "{\"value\": " << format_sig5(q.value()) << ", \"unit\": \"" << q.dim().to_unit_string() << "\"}\n";
  } else {
    out << to_string(q) << '\n';
  }
  return kExitOk;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  const ConstantsRegistry reg = load_registry(cfg);
  const auto corpus = load_corpus(cfg);
  const auto results = check_corpus(corpus, reg, cfg.tol_scale);
  const CosmoModel model(reg, CosmoParams::defaults(reg));
  std::ostringstream buf;
  render_report(buf, reg, corpus, results, model.present_epoch(), parse_format(cfg.format));
  out << buf.str();
  return all_passed(results) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Units-aware verification engine for fluctuational cosmology relations", "fluctuverse"};
  app.require_subcommand(1, 1);
  app.option_defaults()->always_capture_default();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--constants", cfg.constants_path, "Constants file overriding the embedded defaults");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_corpus = [&](CLI::App* sub) {
    sub->add_option("--corpus", cfg.corpus_path, "Relation corpus file (default: embedded corpus)");
    sub->add_option("--tol-scale", cfg.tol_scale, "Multiply every relation tolerance")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* verify = app.add_subcommand("verify", "Check every relation in the corpus");
  add_common(verify);
  add_corpus(verify);

  CLI::App* simulate = app.add_subcommand("simulate", "Integrate the particle-creation law");
  add_common(simulate);
  simulate->add_option_function<double>(
      "--t-end", [&](double v) { cfg.t_end = v; cfg.t_end_set = true; }, "End time in seconds");
  simulate->add_option("--steps", cfg.steps, "Number of RK4 steps (>= 2)");
  simulate->add_option("--variant", cfg.variant, "Closed form of the creation law")
      ->check(CLI::IsMember({"exact", "paper"}));

  CLI::App* eval = app.add_subcommand("eval", "Evaluate one expression");
  add_common(eval);
  eval->add_option("expression", cfg.expression, "Expression, e.g. \"sqrt(hbar*c/G)\"")->required();

  CLI::App* report = app.add_subcommand("report", "Emit the full verification report");
  add_common(report);
  add_corpus(report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fluctuverse: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(cfg, out);
    if (*simulate) {
      if (cfg.steps < 2) throw Error(ErrorKind::kInvalidSteps, "--steps must be at least 2");
      return cmd_simulate(cfg, out);
    }
    if (*eval) return cmd_eval(cfg, out);
    return cmd_report(cfg, out);
  } catch (const Error& e) {
    err << "fluctuverse: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "fluctuverse: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace fluctuverse::cli

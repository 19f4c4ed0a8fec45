// Copyright 2026 The evoharness Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "evo/cascade/cascade.hpp"
#include "evo/core/archive.hpp"
#include "evo/gateway/gateway.hpp"
#include "evo/gateway/http.hpp"
#include "evo/gateway/mock.hpp"
#include "evo/gateway/prompt.hpp"
#include "evo/gateway/transcript.hpp"
#include "evo/report/report.hpp"
#include "evo/search/engines.hpp"
#include "evo/search/hermite_opt.hpp"
#include "evo/stats/bootstrap.hpp"
#include "evo/stats/majority.hpp"
#include "evo/stats/pass_at_k.hpp"
#include "evo/verifiers/problems.hpp"

namespace {

namespace fs = std::filesystem;
using evo::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

std::string format_score(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string data_dir_from(const json& config) {
  if (config.contains("data_dir")) return config.at("data_dir");
  if (const char* env = std::getenv("EVO_DATA_DIR")) return env;
  return "data";
}

std::shared_ptr<evo::gateway::ChatBackend> make_backend(const json& spec) {
  std::string type = spec.value("type", "mock");
  if (type == "mock") {
    evo::gateway::MockBackend::Options opts;
    opts.seed = spec.value("seed", uint64_t{0});
    opts.include_hanging = spec.value("include_hanging", false);
    return std::make_shared<evo::gateway::MockBackend>(opts);
  }
  if (type == "replay") {
    return std::make_shared<evo::gateway::ReplayBackend>(
        spec.at("transcript").get<std::string>());
  }
  if (type == "record") {
    auto inner = make_backend(spec.at("inner"));
    return std::make_shared<evo::gateway::RecordingBackend>(
        inner, spec.at("transcript").get<std::string>());
  }
  if (type == "http") {
    return std::make_shared<evo::gateway::HttpBackend>(
        evo::gateway::HttpBackendConfig::from_json(spec));
  }
  throw UsageError("unknown backend type: " + type);
}

evo::sandbox::SandboxConfig sandbox_from(const json& config,
                                         const evo::ProblemSpec& problem) {
  evo::sandbox::SandboxConfig sb;
  sb.time_limit = problem.time_limit;
  if (config.contains("sandbox")) {
    const json& j = config.at("sandbox");
    sb.time_limit = j.value("time_limit", sb.time_limit);
    sb.worker_count = j.value("worker_count", sb.worker_count);
    sb.memory_limit_bytes =
        j.value("memory_limit_bytes", sb.memory_limit_bytes);
    sb.network_allowed = j.value("network_allowed", sb.network_allowed);
    sb.scratch_dir = j.value("scratch_dir", sb.scratch_dir);
    if (j.contains("interpreter")) {
      sb.interpreter_command =
          j.at("interpreter").get<std::vector<std::string>>();
    }
  }
  return sb;
}

int cmd_run(const std::string& problem_name, const std::string& engine,
            const std::string& config_path, double budget,
            const std::string& budget_unit, uint64_t seed,
            const std::string& out_path) {
  json config = load_json_file(config_path);
  const evo::ProblemSpec& problem = evo::verifiers::problem_by_name(problem_name);

  if (budget <= 0.0) {
    std::cout << "no solution (budget is zero)\n";
    return kExitDomain;
  }
  evo::BudgetLedger ledger(evo::budget_unit_from_string(budget_unit), budget);

  if (engine == "hermite-opt") {
    evo::search::HermiteOptConfig cfg;
    if (config.contains("hermite")) {
      const json& h = config.at("hermite");
      cfg.basis = evo::verifiers::hermite_basis_from_string(
          h.value("basis", "physicist"));
      cfg.order_k = h.value("k", cfg.order_k);
      cfg.restarts = h.value("restarts", cfg.restarts);
      cfg.iteration_budget = h.value("iteration_budget", cfg.iteration_budget);
      cfg.workers = h.value("workers", cfg.workers);
    }
    if (ledger.unit() == evo::BudgetUnit::evaluations) {
      cfg.restarts = std::min<double>(cfg.restarts, ledger.cap());
    }
    auto result = evo::search::optimize_hermite(cfg, seed);

    evo::ArchiveHeader header;
    header.problem = problem;
    header.engine = "hermite-opt";
    header.search_config = {{"basis", to_string(cfg.basis)},
                            {"k", cfg.order_k},
                            {"restarts", cfg.restarts},
                            {"iteration_budget", cfg.iteration_budget}};
    header.seed = seed;
    evo::ArchiveWriter writer(out_path, header);
    for (size_t r = 0; r < result.restart_scores.size(); ++r) {
      if (!std::isfinite(result.restart_scores[r])) continue;
      ledger.try_commit("restart-" + std::to_string(r), 1.0);
      evo::CandidateRecord rec;
      rec.id = "r" + std::to_string(r);
      rec.trial_index = int(r);
      json payload{
          {"coefficients", result.restart_candidates[r].coefficients},
          {"basis", to_string(result.restart_candidates[r].basis)}};
      rec.source_text = payload.dump();
      rec.created_at = double(r);
      evo::EvaluationOutcome o;
      o.status = evo::EvalStatus::success;
      o.score = result.restart_scores[r];
      o.solution = payload;
      rec.outcome = o;
      writer.append(rec);
    }
    if (!std::isfinite(result.best_score)) {
      std::cout << "no solution\n";
      return kExitDomain;
    }
    std::cout << "best score: " << format_score(result.best_score) << "\n";
    std::cout << "archive: " << out_path << "\n";
    return kExitOk;
  }

  auto backend = make_backend(config.value("backend", json{{"type", "mock"}}));
  evo::gateway::PriceTable prices =
      config.contains("price_table")
          ? evo::gateway::PriceTable::from_file(config.at("price_table"))
          : evo::gateway::PriceTable::mock_table();
  evo::gateway::GatewayConfig gw_cfg;
  if (config.contains("sampling")) {
    gw_cfg.default_params =
        evo::gateway::SamplingParams::from_json(config.at("sampling"));
  }
  evo::gateway::Gateway gateway(backend, prices, &ledger, gw_cfg);

  evo::search::EngineContext ctx;
  ctx.llm = &gateway;
  auto registry = evo::verifiers::VerifierRegistry::builtins();
  ctx.registry = &registry;
  ctx.sandbox = sandbox_from(config, problem);
  ctx.ledger = &ledger;
  ctx.archive_path = out_path;

  std::string backend_type =
      config.value("backend", json{{"type", "mock"}}).value("type", "mock");
  ctx.deterministic_timing = config.value(
      "deterministic_timing", backend_type == "mock" || backend_type == "replay");
  ctx.sandbox.record_wall_time = !ctx.deterministic_timing;

  std::string data_dir = data_dir_from(config);
  auto tmpl = evo::gateway::PromptTemplate::from_file(
      (fs::path(data_dir) / problem.prompt_template_path).string());
  char limit_buf[32];
  std::snprintf(limit_buf, sizeof(limit_buf), "%g", ctx.sandbox.time_limit);
  ctx.base_prompt = tmpl.render({{"max_execution_time", limit_buf}});

  fs::path header_path = fs::path(data_dir) / "prompts/scs_conditioning_header.txt";
  fs::path item_path = fs::path(data_dir) / "prompts/scs_conditioning_item.txt";
  if (fs::exists(header_path) && fs::exists(item_path)) {
    std::ifstream h(header_path), i(item_path);
    std::ostringstream hs, is;
    hs << h.rdbuf();
    is << i.rdbuf();
    ctx.conditioning_header = hs.str();
    while (!ctx.conditioning_header.empty() &&
           ctx.conditioning_header.back() == '\n') {
      ctx.conditioning_header.pop_back();
    }
    ctx.conditioning_item = is.str();
  }

  evo::RunArchive archive;
  if (engine == "iid") {
    evo::search::IidConfig cfg;
    if (config.contains("iid")) cfg = evo::search::IidConfig::from_json(config.at("iid"));
    if (config.contains("sampling")) cfg.params = gw_cfg.default_params;
    archive = evo::search::run_iid(problem, cfg, ctx, seed);
  } else if (engine == "scs") {
    evo::search::ScsConfig cfg;
    if (config.contains("scs")) cfg = evo::search::ScsConfig::from_json(config.at("scs"));
    if (config.contains("sampling")) cfg.params = gw_cfg.default_params;
    archive = evo::search::run_scs(problem, cfg, ctx, seed);
  } else {
    throw UsageError("unknown engine: " + engine);
  }

  auto best = evo::best_of(archive);
  std::cout << "candidates: " << archive.records.size() << "\n";
  std::cout << "spend: " << format_score(ledger.spent()) << " "
            << to_string(ledger.unit()) << "\n";
  std::cout << "archive: " << out_path << "\n";
  if (!best) {
    std::cout << "no solution\n";
    return kExitDomain;
  }
  std::cout << "best score: " << format_score(*best->outcome->score) << " ("
            << best->id << ")\n";
  return kExitOk;
}

int cmd_score(const std::string& problem_name,
              const std::string& solution_path) {
  const evo::ProblemSpec& problem = evo::verifiers::problem_by_name(problem_name);
  auto registry = evo::verifiers::VerifierRegistry::builtins();
  std::ifstream in(solution_path);
  if (!in) throw UsageError("cannot open solution file: " + solution_path);
  json payload;
  try {
    in >> payload;
  } catch (const json::exception& e) {
    std::cout << "schema mismatch: not valid JSON: " << e.what() << "\n";
    return kExitDomain;
  }
  try {
    auto result = registry.score(problem.verifier_id, payload);
    if (!result.valid) {
      std::cout << "invalid: " << result.reason << "\n";
      return kExitDomain;
    }
    std::cout << format_score(result.score) << "\n";
    return kExitOk;
  } catch (const evo::verifiers::SchemaError& e) {
    std::cout << "schema mismatch: " << e.what() << "\n";
    return kExitDomain;
  }
}

evo::stats::AnswerPool pool_from_json(const json& j) {
  evo::stats::AnswerPool pool;
  for (const auto& q : j.at("questions")) {
    pool.answers.push_back(q.at("answers").get<std::vector<std::string>>());
    pool.keys.push_back(q.at("key").get<std::string>());
  }
  return pool;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"budget-aware harness for LLM program search baselines"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run a search engine on a problem");
  std::string run_problem, run_engine = "iid", run_config, run_out = "archive.jsonl";
  std::string run_unit = "dollars";
  double run_budget = 20.0;
  uint64_t run_seed = 0;
  run->add_option("--problem", run_problem)->required();
  run->add_option("--engine", run_engine)
      ->check(CLI::IsMember({"iid", "scs", "hermite-opt"}));
  run->add_option("--config", run_config)->required();
  run->add_option("--budget", run_budget);
  run->add_option("--budget-unit", run_unit)
      ->check(CLI::IsMember({"dollars", "evaluations", "seconds"}));
  run->add_option("--seed", run_seed);
  run->add_option("--out", run_out);

  // score
  auto* score = app.add_subcommand("score", "verify and score a solution file");
  std::string score_problem, score_solution;
  score->add_option("--problem", score_problem)->required();
  score->add_option("--solution", score_solution)->required();

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "comparison statistics");
  stats_cmd->require_subcommand(1);

  auto* pak = stats_cmd->add_subcommand("pass-at-k", "analytic pass@k");
  int64_t pak_n = 0, pak_c = 0, pak_k = 0;
  pak->add_option("--n", pak_n)->required();
  pak->add_option("--c", pak_c)->required();
  pak->add_option("--k", pak_k)->required();

  auto* curve = stats_cmd->add_subcommand(
      "scs-curve", "match probability vs budget for trial sets");
  std::string curve_trials, curve_archive, curve_out;
  double curve_target = 0.0;
  bool curve_target_set = false;
  int curve_points = 50, curve_resamples = 0;
  std::string curve_unit = "dollars";
  uint64_t curve_seed = 0;
  curve->add_option("--trials", curve_trials, "trial-set fixture JSON");
  curve->add_option("--archive", curve_archive, "SCS run archive");
  curve->add_option("--target", curve_target)->each([&](const std::string&) {
    curve_target_set = true;
  });
  curve->add_option("--points", curve_points);
  curve->add_option("--resamples", curve_resamples,
                    "bootstrap resamples for CI columns (0 = none)");
  curve->add_option("--budget-unit", curve_unit);
  curve->add_option("--seed", curve_seed);
  curve->add_option("--out", curve_out);

  auto* poi = stats_cmd->add_subcommand("poi", "probability of improvement");
  std::string poi_csv, poi_a, poi_b, poi_pairing = "all_pairs";
  std::string poi_direction = "maximize";
  poi->add_option("--csv", poi_csv)->required();
  poi->add_option("--method-a", poi_a)->required();
  poi->add_option("--method-b", poi_b)->required();
  poi->add_option("--pairing", poi_pairing)
      ->check(CLI::IsMember({"all_pairs", "index_paired", "both"}));
  poi->add_option("--direction", poi_direction)
      ->check(CLI::IsMember({"maximize", "minimize"}));

  auto* pod = stats_cmd->add_subcommand("pod", "probability of dominance");
  std::string pod_csv, pod_mode = "exact", pod_direction = "maximize";
  int64_t pod_samples = 100000;
  uint64_t pod_seed = 0;
  pod->add_option("--csv", pod_csv)->required();
  pod->add_option("--mode", pod_mode)->check(CLI::IsMember({"exact", "mc"}));
  pod->add_option("--samples", pod_samples);
  pod->add_option("--seed", pod_seed);
  pod->add_option("--direction", pod_direction)
      ->check(CLI::IsMember({"maximize", "minimize"}));

  auto* maj = stats_cmd->add_subcommand("majority", "majority-vote accuracy");
  std::string maj_pool, maj_out;
  int maj_k = 5, maj_reps = 1, maj_resamples = 1000;
  uint64_t maj_seed = 0;
  maj->add_option("--pool", maj_pool)->required();
  maj->add_option("--k", maj_k);
  maj->add_option("--repetitions", maj_reps);
  maj->add_option("--resamples", maj_resamples);
  maj->add_option("--seed", maj_seed);
  maj->add_option("--out", maj_out, "write distribution CSV (value,cdf)");

  auto* eff = stats_cmd->add_subcommand("effective-size",
                                        "questions x repetitions floor check");
  int eff_questions = 0, eff_reps = 0;
  eff->add_option("--questions", eff_questions)->required();
  eff->add_option("--repetitions", eff_reps)->required();

  // report
  auto* report = app.add_subcommand("report", "tables and budget curves");
  std::vector<std::string> report_archives, report_csvs;
  std::string report_target, report_out_dir = "report";
  std::string report_unit = "dollars", report_curve_unit = "dollars";
  std::string report_cost_model = "average";
  double report_budget = 0.0;
  int report_points = 50, report_resamples = 1000;
  uint64_t report_seed = 0;
  report->add_option("--archive", report_archives,
                     "method=path, repeatable")->expected(-1);
  report->add_option("--scores", report_csvs,
                     "external CSV problem,method,score")->expected(-1);
  report->add_option("--target-method", report_target);
  report->add_option("--budget", report_budget, "best-of budget prefix cap");
  report->add_option("--budget-unit", report_unit);
  report->add_option("--curve-unit", report_curve_unit);
  report->add_option("--iid-cost-model", report_cost_model)
      ->check(CLI::IsMember({"average", "actual"}));
  report->add_option("--curve-points", report_points);
  report->add_option("--resamples", report_resamples);
  report->add_option("--seed", report_seed);
  report->add_option("--out-dir", report_out_dir);

  // cascade
  auto* cascade = app.add_subcommand("cascade", "staged candidate evaluation");
  std::string cas_input, cas_out, cas_direction = "maximize";
  std::string cas_levels = "3:0.25,10:0.25";
  int cas_pool = 5;
  uint64_t cas_seed = 0;
  cascade->add_option("--input", cas_input, "candidate sample pools JSON")
      ->required();
  cascade->add_option("--levels", cas_levels, "rep:threshold,rep:threshold");
  cascade->add_option("--pool-size", cas_pool);
  cascade->add_option("--seed", cas_seed);
  cascade->add_option("--direction", cas_direction)
      ->check(CLI::IsMember({"maximize", "minimize"}));
  cascade->add_option("--out", cas_out, "evaluation log CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*run) {
      return cmd_run(run_problem, run_engine, run_config, run_budget, run_unit,
                     run_seed, run_out);
    }
    if (*score) return cmd_score(score_problem, score_solution);

    if (*pak) {
      std::printf("%.10g\n", evo::stats::pass_at_k(pak_n, pak_c, pak_k));
      return kExitOk;
    }
    if (*curve) {
      (void)curve_target_set;
      evo::stats::BudgetedTrialSet set;
      double total = 0.0;
      if (!curve_trials.empty()) {
        json j = load_json_file(curve_trials);
        set.target = j.at("target").get<double>();
        set.direction =
            evo::direction_from_string(j.value("direction", "maximize"));
        for (const auto& t : j.at("trials")) {
          evo::stats::TrialCurve tc;
          for (const auto& c : t.at("costs")) {
            tc.generation_costs.push_back(c.get<double>());
            total += c.get<double>();
          }
          for (const auto& b : t.at("best")) {
            if (b.is_null()) {
              tc.generation_best.push_back(std::nullopt);
            } else {
              tc.generation_best.push_back(b.get<double>());
            }
          }
          set.trials.push_back(std::move(tc));
        }
      } else if (!curve_archive.empty()) {
        auto archive = evo::load_archive(curve_archive);
        set = evo::report::trials_from_archive(
            archive, evo::budget_unit_from_string(curve_unit), curve_target);
        for (const auto& t : set.trials) {
          for (double c : t.generation_costs) total += c;
        }
      } else {
        throw UsageError("scs-curve needs --trials or --archive");
      }
      if (curve_target_set) set.target = curve_target;

      std::ostream* out = &std::cout;
      std::ofstream file;
      if (!curve_out.empty()) {
        file.open(curve_out);
        out = &file;
      }
      bool with_ci = curve_resamples >= 100;
      *out << (with_ci ? "budget,probability,ci_lo,ci_hi"
                       : "budget,probability")
           << "\n";
      for (int i = 0; i < std::max(2, curve_points); ++i) {
        double b = total * double(i) / double(std::max(2, curve_points) - 1);
        double p = evo::stats::scs_match_probability(set, b);
        *out << std::to_string(b) << "," << std::to_string(p);
        if (with_ci) {
          auto ci = evo::stats::bootstrap_ci(
              [&](const std::vector<size_t>& draw) {
                evo::stats::BudgetedTrialSet resampled;
                resampled.target = set.target;
                resampled.direction = set.direction;
                for (size_t idx : draw) {
                  resampled.trials.push_back(set.trials[idx]);
                }
                return evo::stats::scs_match_probability(resampled, b);
              },
              set.trials.size(), curve_resamples, 0.95, curve_seed + i);
          *out << "," << std::to_string(std::min(ci.lo, p)) << ","
               << std::to_string(std::max(ci.hi, p));
        }
        *out << "\n";
      }
      return kExitOk;
    }
    if (*poi) {
      auto matrix = evo::report::score_matrix_from_csv(
          poi_csv, evo::direction_from_string(poi_direction));
      auto find = [&](const std::string& name) -> const std::vector<double>& {
        for (size_t i = 0; i < matrix.methods.size(); ++i) {
          if (matrix.methods[i] == name) return matrix.samples[i];
        }
        throw UsageError("method not in CSV: " + name);
      };
      const auto& a = find(poi_a);
      const auto& b = find(poi_b);
      if (poi_pairing == "all_pairs" || poi_pairing == "both") {
        std::printf("all_pairs,%.10g\n",
                    evo::stats::probability_of_improvement(
                        a, b, evo::stats::Pairing::all_pairs,
                        matrix.direction));
      }
      if (poi_pairing == "index_paired" || poi_pairing == "both") {
        std::printf("index_paired,%.10g\n",
                    evo::stats::probability_of_improvement(
                        a, b, evo::stats::Pairing::index_paired,
                        matrix.direction));
      }
      return kExitOk;
    }
    if (*pod) {
      auto matrix = evo::report::score_matrix_from_csv(
          pod_csv, evo::direction_from_string(pod_direction));
      std::printf("method,probability_of_dominance\n");
      for (size_t m = 0; m < matrix.methods.size(); ++m) {
        double p = pod_mode == "exact"
                       ? evo::stats::probability_of_dominance(matrix, m)
                       : evo::stats::probability_of_dominance_mc(
                             matrix, m, pod_samples, pod_seed);
        std::printf("%s,%.10g\n", matrix.methods[m].c_str(), p);
      }
      return kExitOk;
    }
    if (*maj) {
      auto pool = pool_from_json(load_json_file(maj_pool));
      auto dist = evo::stats::majority_accuracy_distribution(
          pool, maj_k, maj_reps, maj_resamples, maj_seed);
      auto eff_size = evo::stats::effective_set_size(
          int(pool.answers.size()), maj_reps);
      std::printf("mean,%.10g\n", dist.mean);
      std::printf("stddev,%.10g\n", dist.stddev);
      std::printf("q2.5,%.10g\n", dist.quantile(0.025));
      std::printf("q50,%.10g\n", dist.quantile(0.5));
      std::printf("q97.5,%.10g\n", dist.quantile(0.975));
      std::printf("effective_set_size,%lld%s\n",
                  static_cast<long long>(eff_size.size),
                  eff_size.flagged ? " (below 300-question floor)" : "");
      if (!maj_out.empty()) {
        std::ofstream out(maj_out);
        out << "value,cdf\n";
        for (size_t i = 0; i < dist.samples.size(); ++i) {
          out << dist.samples[i] << ","
              << double(i + 1) / double(dist.samples.size()) << "\n";
        }
      }
      return kExitOk;
    }
    if (*eff) {
      auto r = evo::stats::effective_set_size(eff_questions, eff_reps);
      std::printf("%lld%s\n", static_cast<long long>(r.size),
                  r.flagged ? " (below 300-question floor)" : "");
      return kExitOk;
    }
    if (*report) {
      evo::report::ReportOptions options;
      options.target_method = report_target;
      options.curve_unit = evo::budget_unit_from_string(report_curve_unit);
      options.iid_cost_model = report_cost_model == "actual"
                                   ? evo::report::IidCostModel::actual_costs
                                   : evo::report::IidCostModel::average_cost;
      options.curve_points = report_points;
      options.ci_resamples = report_resamples;
      options.seed = report_seed;
      if (report_budget > 0.0) {
        options.budget = evo::BudgetPrefix{
            evo::budget_unit_from_string(report_unit), report_budget};
      }
      std::vector<evo::report::LabeledArchive> archives;
      for (const auto& spec : report_archives) {
        size_t eq = spec.find('=');
        if (eq == std::string::npos) {
          throw UsageError("--archive expects method=path");
        }
        archives.push_back(
            {spec.substr(0, eq), evo::load_archive(spec.substr(eq + 1))});
      }
      std::vector<evo::report::ExternalScore> external;
      for (const auto& path : report_csvs) {
        auto rows = evo::report::external_scores_from_csv(path);
        external.insert(external.end(), rows.begin(), rows.end());
      }
      auto bundle = evo::report::build_report(archives, external, options);
      evo::report::write_report_files(bundle, report_out_dir);
      std::cout << evo::report::render_table(bundle);
      return kExitOk;
    }
    if (*cascade) {
      json input = load_json_file(cas_input);
      std::vector<std::string> ids;
      std::vector<std::vector<double>> pools;
      for (const auto& c : input.at("candidates")) {
        ids.push_back(c.value("id", std::to_string(ids.size())));
        pools.push_back(c.at("samples").get<std::vector<double>>());
      }
      evo::cascade::CascadeConfig cfg;
      cfg.levels.clear();
      std::stringstream levels(cas_levels);
      std::string part;
      while (std::getline(levels, part, ',')) {
        size_t colon = part.find(':');
        if (colon == std::string::npos) {
          throw UsageError("--levels expects rep:threshold pairs");
        }
        cfg.levels.push_back({std::stoi(part.substr(0, colon)),
                              std::stod(part.substr(colon + 1))});
      }
      cfg.incumbent_pool_size = cas_pool;
      cfg.direction = evo::direction_from_string(cas_direction);
      cfg.seed = cas_seed;

      // Deterministic draws: repetition r of level l reads on from the
      // candidate's pool; the pool must be big enough for all levels.
      std::vector<size_t> cursors(pools.size(), 0);
      std::mutex cursor_mu;
      auto evaluate = [&](size_t c, int reps, uint64_t) {
        std::lock_guard<std::mutex> lock(cursor_mu);
        if (cursors[c] + size_t(reps) > pools[c].size()) {
          throw std::runtime_error("sample pool exhausted for " + ids[c]);
        }
        std::vector<double> out(pools[c].begin() + cursors[c],
                                pools[c].begin() + cursors[c] + reps);
        cursors[c] += size_t(reps);
        return out;
      };
      auto outcome = evo::cascade::run_cascade(pools.size(), evaluate, cfg);
      std::printf("rank,candidate,dominance\n");
      for (size_t i = 0; i < outcome.ranking.size(); ++i) {
        std::printf("%zu,%s,%.10g\n", i + 1,
                    ids[outcome.ranking[i]].c_str(),
                    outcome.final_dominance[i]);
      }
      if (!cas_out.empty()) {
        std::ofstream out(cas_out);
        out << "candidate,level,scores\n";
        for (const auto& entry : outcome.log) {
          out << ids[entry.candidate] << "," << entry.level << ",";
          for (size_t i = 0; i < entry.scores.size(); ++i) {
            out << (i ? ";" : "") << entry.scores[i];
          }
          out << "\n";
        }
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "evo/report/report.hpp"

using namespace evo;
using namespace evo::report;

namespace {

namespace fs = std::filesystem;

ProblemSpec problem(const std::string& name, Direction direction) {
  ProblemSpec p;
  p.name = name;
  p.direction = direction;
  p.verifier_id = "circle_packing";
  p.solution_schema_id = "circle_packing";
  return p;
}

CandidateRecord record(int ordinal, int trial, int generation,
                       std::optional<double> score, double cost) {
  CandidateRecord r;
  char buf[16];
  std::snprintf(buf, sizeof(buf), "c%06d", ordinal);
  r.id = buf;
  r.trial_index = trial;
  r.generation_index = generation;
  r.source_text = "x";
  r.dollar_cost = cost;
  r.created_at = double(ordinal);
  EvaluationOutcome o;
  o.status = score ? EvalStatus::success : EvalStatus::runtime_error;
  o.score = score;
  o.wall_time = 1.0;
  r.outcome = o;
  return r;
}

RunArchive iid_archive(const std::string& problem_name,
                       const std::vector<std::optional<double>>& scores,
                       Direction direction = Direction::maximize,
                       double cost = 1.0) {
  RunArchive a;
  a.header.problem = problem(problem_name, direction);
  a.header.engine = "iid";
  for (size_t i = 0; i < scores.size(); ++i) {
    a.records.push_back(record(int(i), 0, 0, scores[i], cost));
  }
  return a;
}

}  // namespace

TEST_CASE("trials_from_archive groups generation costs and bests") {
  RunArchive a;
  a.header.problem = problem("p", Direction::maximize);
  a.header.engine = "scs";
  // trial 0: gen 0 has two records (one success), gen 1 all failed
  a.records.push_back(record(0, 0, 0, 1.5, 0.25));
  a.records.push_back(record(1, 0, 0, std::nullopt, 0.25));
  a.records.push_back(record(2, 0, 1, std::nullopt, 0.5));
  // trial 1: one generation, success
  a.records.push_back(record(3, 1, 0, 4.0, 1.0));

  auto set = trials_from_archive(a, BudgetUnit::dollars, 2.0);
  REQUIRE(set.trials.size() == 2);
  CHECK(set.trials[0].generation_costs ==
        std::vector<double>{0.5, 0.5});
  REQUIRE(set.trials[0].generation_best[0]);
  CHECK(*set.trials[0].generation_best[0] == 1.5);
  CHECK_FALSE(set.trials[0].generation_best[1]);
  CHECK(set.trials[1].generation_costs == std::vector<double>{1.0});

  auto evals = trials_from_archive(a, BudgetUnit::evaluations, 2.0);
  CHECK(evals.trials[0].generation_costs == std::vector<double>{2.0, 1.0});
}

TEST_CASE("iid budget curve is monotone with bracketing CIs") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> cost(0.2, 1.0);
  std::uniform_real_distribution<double> score(0.0, 2.0);
  for (int instance = 0; instance < 3; ++instance) {
    std::vector<std::optional<double>> scores;
    for (int i = 0; i < 30; ++i) {
      if (rng() % 4 == 0) {
        scores.push_back(std::nullopt);
      } else {
        scores.push_back(score(rng));
      }
    }
    auto archive = iid_archive("p", scores, Direction::maximize, cost(rng));
    ReportOptions options;
    options.curve_points = 12;
    options.ci_resamples = 200;
    options.seed = instance;
    auto curve = iid_budget_curve(archive, "m", 1.0, options);
    REQUIRE(curve.points.size() == 12);
    for (size_t i = 0; i < curve.points.size(); ++i) {
      const auto& pt = curve.points[i];
      CHECK(pt.ci_lo <= pt.probability);
      CHECK(pt.probability <= pt.ci_hi);
      if (i > 0) {
        CHECK(pt.budget >= curve.points[i - 1].budget);
        CHECK(pt.probability >= curve.points[i - 1].probability - 1e-12);
      }
    }
  }
}

TEST_CASE("iid curve supports both cost models") {
  // one expensive hit up front, cheap misses afterwards
  RunArchive a;
  a.header.problem = problem("p", Direction::maximize);
  a.header.engine = "iid";
  a.records.push_back(record(0, 0, 0, 5.0, 10.0));
  for (int i = 1; i < 10; ++i) {
    a.records.push_back(record(i, 0, 0, 0.1, 0.5));
  }
  ReportOptions options;
  options.curve_points = 6;
  options.ci_resamples = 150;

  options.iid_cost_model = IidCostModel::average_cost;
  auto averaged = iid_budget_curve(a, "m", 4.0, options);
  options.iid_cost_model = IidCostModel::actual_costs;
  auto actual = iid_budget_curve(a, "m", 4.0, options);
  // both monotone; the chronological model affords nothing before $10
  CHECK(actual.points[1].probability == 0.0);
  CHECK(averaged.points.back().probability ==
        doctest::Approx(actual.points.back().probability).epsilon(1e-9));
}

TEST_CASE("scs budget curve rises toward full budget") {
  RunArchive a;
  a.header.problem = problem("p", Direction::maximize);
  a.header.engine = "scs";
  int ordinal = 0;
  for (int trial = 0; trial < 3; ++trial) {
    for (int gen = 0; gen < 2; ++gen) {
      a.records.push_back(record(ordinal++, trial, gen,
                                 trial == 1 && gen == 1
                                     ? std::optional<double>(9.0)
                                     : std::optional<double>(1.0),
                                 1.0));
    }
  }
  ReportOptions options;
  options.curve_points = 8;
  options.ci_resamples = 150;
  auto curve = scs_budget_curve(a, "m", 8.0, options);
  CHECK(curve.points.front().probability == 0.0);
  CHECK(curve.points.back().probability == doctest::Approx(1.0));
  for (const auto& pt : curve.points) {
    CHECK(pt.ci_lo <= pt.probability);
    CHECK(pt.probability <= pt.ci_hi);
  }
}

TEST_CASE("build_report computes counts, ranks and traceable cells") {
  std::vector<LabeledArchive> archives;
  archives.push_back({"alpha", iid_archive("p1", {1.0, 3.0})});
  archives.push_back({"beta", iid_archive("p1", {2.0})});
  archives.push_back(
      {"alpha", iid_archive("p2", {0.5}, Direction::minimize)});
  archives.push_back(
      {"beta", iid_archive("p2", {0.4}, Direction::minimize)});

  ReportOptions options;
  auto bundle = build_report(archives, {}, options);

  REQUIRE(bundle.rows.size() == 2);
  CHECK(bundle.rows[0].cells.at("alpha").score == 3.0);
  CHECK(bundle.rows[0].cells.at("alpha").record_id == "c000001");
  CHECK(bundle.rows[0].cells.at("beta").score == 2.0);

  // alpha wins p1, beta wins p2: one match-or-exceed each
  CHECK(bundle.ge_counts.at("alpha").at("beta") == 1);
  CHECK(bundle.ge_counts.at("beta").at("alpha") == 1);
  CHECK(bundle.ge_denominator.at("alpha").at("beta") == 2);
  CHECK(bundle.average_rank.at("alpha") == doctest::Approx(1.5));
  CHECK(bundle.average_rank.at("beta") == doctest::Approx(1.5));
}

TEST_CASE("build_report splits tied ranks fractionally") {
  std::vector<LabeledArchive> archives;
  archives.push_back({"a", iid_archive("p", {2.0})});
  archives.push_back({"b", iid_archive("p", {2.0})});
  archives.push_back({"c", iid_archive("p", {1.0})});
  auto bundle = build_report(archives, {}, ReportOptions{});
  CHECK(bundle.average_rank.at("a") == doctest::Approx(1.5));
  CHECK(bundle.average_rank.at("b") == doctest::Approx(1.5));
  CHECK(bundle.average_rank.at("c") == doctest::Approx(3.0));
}

TEST_CASE("build_report rejects mixed directions and empty input") {
  std::vector<LabeledArchive> archives;
  archives.push_back({"a", iid_archive("p", {1.0}, Direction::maximize)});
  archives.push_back({"b", iid_archive("p", {1.0}, Direction::minimize)});
  CHECK_THROWS(build_report(archives, {}, ReportOptions{}));
  CHECK_THROWS(build_report({}, {}, ReportOptions{}));
}

TEST_CASE("build_report merges external scores and draws curves") {
  std::vector<LabeledArchive> archives;
  archives.push_back({"ours", iid_archive("p", {1.0, 2.0, 3.0})});
  std::vector<ExternalScore> external{{"p", "published", 2.5}};
  ReportOptions options;
  options.target_method = "published";
  options.curve_points = 5;
  options.ci_resamples = 150;
  auto bundle = build_report(archives, external, options);
  CHECK(bundle.rows[0].cells.at("published").score == 2.5);
  REQUIRE(bundle.curves.size() == 1);
  CHECK(bundle.curves[0].target == 2.5);
  CHECK(bundle.curves[0].points.size() == 5);

  // an external score for a problem no archive defines cannot resolve a
  // direction
  std::vector<ExternalScore> orphan{{"q", "published", 1.0}};
  CHECK_THROWS(build_report(archives, orphan, options));
}

TEST_CASE("budget prefix narrows the reported best") {
  std::vector<LabeledArchive> archives;
  archives.push_back({"a", iid_archive("p", {1.0, 9.0, 3.0})});
  ReportOptions options;
  options.budget = BudgetPrefix{BudgetUnit::dollars, 1.0};
  auto bundle = build_report(archives, {}, options);
  CHECK(bundle.rows[0].cells.at("a").score == 1.0);
}

TEST_CASE("render_table is deterministic and annotated") {
  std::vector<LabeledArchive> archives;
  archives.push_back({"a", iid_archive("p", {1.0, 3.0})});
  archives.push_back({"b", iid_archive("p", {2.0})});
  auto bundle = build_report(archives, {}, ReportOptions{});
  auto table1 = render_table(bundle);
  auto table2 = render_table(bundle);
  CHECK(table1 == table2);
  CHECK(table1.find("p (^)") != std::string::npos);
  CHECK(table1.find("3 *") != std::string::npos);
  CHECK(table1.find("# problems >= a") != std::string::npos);
  CHECK(table1.find("Average rank") != std::string::npos);
}

TEST_CASE("write_report_files emits table, bundle and curves") {
  std::vector<LabeledArchive> archives;
  archives.push_back({"a", iid_archive("p", {1.0, 3.0})});
  ReportOptions options;
  options.target_method = "a";
  options.curve_points = 4;
  options.ci_resamples = 150;
  auto bundle = build_report(archives, {}, options);

  auto dir = fs::temp_directory_path() / "evo_report_out";
  fs::remove_all(dir);
  write_report_files(bundle, dir.string());
  CHECK(fs::exists(dir / "table.txt"));
  CHECK(fs::exists(dir / "bundle.json"));
  CHECK(fs::exists(dir / "curves" / "a__p.csv"));

  std::ifstream csv(dir / "curves" / "a__p.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "budget,probability,ci_lo,ci_hi");
  fs::remove_all(dir);
}

TEST_CASE("score matrix CSV ingestion") {
  auto path = fs::temp_directory_path() / "evo_scores.csv";
  std::ofstream(path) << "method,run_index,score\n"
                         "a,0,1.5\n"
                         "a,1,2.5\n"
                         "b,0,2.0\n";
  auto m = score_matrix_from_csv(path.string(), Direction::maximize);
  REQUIRE(m.methods.size() == 2);
  CHECK(m.methods[0] == "a");
  CHECK(m.samples[0] == std::vector<double>{1.5, 2.5});
  CHECK(m.samples[1] == std::vector<double>{2.0});

  std::ofstream(path) << "wrong,header,here\n";
  CHECK_THROWS(score_matrix_from_csv(path.string(), Direction::maximize));
  fs::remove(path);
}

TEST_CASE("external scores CSV ingestion") {
  auto path = fs::temp_directory_path() / "evo_external.csv";
  std::ofstream(path) << "problem,method,score\n"
                         "p1,published,2.63598\n";
  auto rows = external_scores_from_csv(path.string());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].problem == "p1");
  CHECK(rows[0].method == "published");
  CHECK(rows[0].score == doctest::Approx(2.63598));
  fs::remove(path);
}

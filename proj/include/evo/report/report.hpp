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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evo/core/archive.hpp"
#include "evo/stats/dominance.hpp"
#include "evo/stats/scs_bootstrap.hpp"

namespace evo::report {

struct LabeledArchive {
  std::string method;
  RunArchive archive;
};

// External result rows (e.g. published bounds) merged into the tables.
struct ExternalScore {
  std::string problem;
  std::string method;
  double score = 0.0;
};

enum class IidCostModel {
  average_cost,  // budget / mean per-program cost, the usual simplification
  actual_costs,  // affordable chronological prefix
};

struct ReportOptions {
  std::optional<BudgetPrefix> budget;  // applied to every archive's best_of
  std::string target_method;           // reference method for curves
  BudgetUnit curve_unit = BudgetUnit::dollars;
  IidCostModel iid_cost_model = IidCostModel::average_cost;
  int curve_points = 50;
  int ci_resamples = 1000;
  uint64_t seed = 0;
};

struct BestEntry {
  bool present = false;
  double score = 0.0;
  std::string record_id;  // empty for external scores
};

struct ProblemRow {
  std::string problem;
  Direction direction = Direction::maximize;
  std::map<std::string, BestEntry> cells;  // by method
};

struct CurvePoint {
  double budget = 0.0;
  double probability = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
};

struct Curve {
  std::string method;
  std::string problem;
  std::string engine;
  double target = 0.0;
  std::vector<CurvePoint> points;
};

struct ReportBundle {
  std::vector<std::string> methods;  // column order
  std::vector<ProblemRow> rows;
  // ge_counts[m][ref] = problems where m matches or exceeds ref;
  // ge_denominator[m][ref] = problems where both are present.
  std::map<std::string, std::map<std::string, int>> ge_counts;
  std::map<std::string, std::map<std::string, int>> ge_denominator;
  std::map<std::string, double> average_rank;
  std::vector<Curve> curves;
};

ReportBundle build_report(const std::vector<LabeledArchive>& archives,
                          const std::vector<ExternalScore>& external,
                          const ReportOptions& options);

std::string render_table(const ReportBundle& bundle);
json bundle_to_json(const ReportBundle& bundle);

// Writes table.txt, bundle.json and one curves/<method>__<problem>.csv per
// curve (columns budget,probability,ci_lo,ci_hi).
void write_report_files(const ReportBundle& bundle, const std::string& out_dir);

// Match-or-exceed probability vs budget for an IID archive (pass@k over
// the affordable draw count) with bootstrap-over-programs CIs. The CI is
// widened to bracket the point estimate.
Curve iid_budget_curve(const RunArchive& archive, const std::string& method,
                       double target, const ReportOptions& options);

// Same for an SCS archive: recursive trial bootstrap, CIs over resampled
// trial sets.
Curve scs_budget_curve(const RunArchive& archive, const std::string& method,
                       double target, const ReportOptions& options);

// Per-trial generation costs and bests, in the given budget unit.
stats::BudgetedTrialSet trials_from_archive(const RunArchive& archive,
                                            BudgetUnit unit, double target);

// CSV ingestion.
// Score matrices: header "method,run_index,score".
stats::ScoreMatrix score_matrix_from_csv(const std::string& path,
                                         Direction direction);
// External report rows: header "problem,method,score".
std::vector<ExternalScore> external_scores_from_csv(const std::string& path);

}  // namespace evo::report

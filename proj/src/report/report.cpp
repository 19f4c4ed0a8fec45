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

#include "evo/report/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "evo/stats/bootstrap.hpp"
#include "evo/stats/pass_at_k.hpp"

namespace evo::report {

namespace fs = std::filesystem;

namespace {

std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt_full(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

std::vector<double> budget_grid(double max_budget, int points) {
  std::vector<double> grid;
  int n = std::max(2, points);
  for (int i = 0; i < n; ++i) {
    grid.push_back(max_budget * double(i) / double(n - 1));
  }
  return grid;
}

}  // namespace

stats::BudgetedTrialSet trials_from_archive(const RunArchive& archive,
                                            BudgetUnit unit, double target) {
  // Records carry (trial, generation); costs aggregate per generation.
  std::map<int, std::map<int, std::pair<double, std::optional<double>>>> acc;
  for (const auto& r : archive.records) {
    auto& cell = acc[r.trial_index][r.generation_index];
    cell.first += record_cost(r, unit);
    if (r.outcome && r.outcome->status == EvalStatus::success) {
      double s = *r.outcome->score;
      if (!cell.second ||
          better(s, *cell.second, archive.header.problem.direction)) {
        cell.second = s;
      }
    }
  }
  stats::BudgetedTrialSet set;
  set.target = target;
  set.direction = archive.header.problem.direction;
  for (const auto& [trial, gens] : acc) {
    stats::TrialCurve curve;
    for (const auto& [gen, cell] : gens) {
      curve.generation_costs.push_back(cell.first);
      curve.generation_best.push_back(cell.second);
    }
    set.trials.push_back(std::move(curve));
  }
  return set;
}

Curve iid_budget_curve(const RunArchive& archive, const std::string& method,
                       double target, const ReportOptions& options) {
  const Direction direction = archive.header.problem.direction;
  const auto& records = archive.records;
  if (records.empty()) throw std::invalid_argument("empty archive");
  const int64_t n = static_cast<int64_t>(records.size());

  std::vector<double> costs;
  std::vector<int> matches;
  double total = 0.0;
  for (const auto& r : records) {
    double c = record_cost(r, options.curve_unit);
    costs.push_back(c);
    total += c;
    bool hit = r.outcome && r.outcome->status == EvalStatus::success &&
               matches_or_exceeds(*r.outcome->score, target, direction);
    matches.push_back(hit ? 1 : 0);
  }

  auto affordable_count = [&](const std::vector<size_t>& order,
                              double budget) -> int64_t {
    if (options.iid_cost_model == IidCostModel::average_cost) {
      double sum = 0.0;
      for (size_t i : order) sum += costs[i];
      double avg = sum / double(order.size());
      if (avg <= 0.0) return n;
      return std::min<int64_t>(n, int64_t(budget / avg));
    }
    double sum = 0.0;
    int64_t k = 0;
    for (size_t i : order) {
      sum += costs[i];
      if (sum > budget) break;
      ++k;
    }
    return k;
  };

  auto probability = [&](const std::vector<size_t>& order,
                         double budget) -> double {
    int64_t c = 0;
    for (size_t i : order) c += matches[i];
    int64_t k = affordable_count(order, budget);
    if (k < 1 || c < 1) return 0.0;
    return stats::pass_at_k(n, c, std::min(k, n));
  };

  std::vector<size_t> identity(records.size());
  for (size_t i = 0; i < identity.size(); ++i) identity[i] = i;

  Curve curve;
  curve.method = method;
  curve.problem = archive.header.problem.name;
  curve.engine = archive.header.engine;
  curve.target = target;
  int point_index = 0;
  for (double b : budget_grid(total, options.curve_points)) {
    CurvePoint pt;
    pt.budget = b;
    pt.probability = probability(identity, b);
    auto ci = stats::bootstrap_ci(
        [&](const std::vector<size_t>& draw) { return probability(draw, b); },
        records.size(), options.ci_resamples, 0.95,
        options.seed + uint64_t(point_index));
    pt.ci_lo = std::min(ci.lo, pt.probability);
    pt.ci_hi = std::max(ci.hi, pt.probability);
    curve.points.push_back(pt);
    ++point_index;
  }
  return curve;
}

Curve scs_budget_curve(const RunArchive& archive, const std::string& method,
                       double target, const ReportOptions& options) {
  stats::BudgetedTrialSet set =
      trials_from_archive(archive, options.curve_unit, target);
  if (set.trials.empty()) throw std::invalid_argument("archive has no trials");

  double total = 0.0;
  for (const auto& t : set.trials) {
    for (double c : t.generation_costs) total += c;
  }

  Curve curve;
  curve.method = method;
  curve.problem = archive.header.problem.name;
  curve.engine = archive.header.engine;
  curve.target = target;
  int point_index = 0;
  for (double b : budget_grid(total, options.curve_points)) {
    CurvePoint pt;
    pt.budget = b;
    pt.probability = stats::scs_match_probability(set, b);
    auto ci = stats::bootstrap_ci(
        [&](const std::vector<size_t>& draw) {
          stats::BudgetedTrialSet resampled;
          resampled.target = set.target;
          resampled.direction = set.direction;
          for (size_t i : draw) resampled.trials.push_back(set.trials[i]);
          return stats::scs_match_probability(resampled, b);
        },
        set.trials.size(), options.ci_resamples, 0.95,
        options.seed + uint64_t(point_index));
    pt.ci_lo = std::min(ci.lo, pt.probability);
    pt.ci_hi = std::max(ci.hi, pt.probability);
    curve.points.push_back(pt);
    ++point_index;
  }
  return curve;
}

ReportBundle build_report(const std::vector<LabeledArchive>& archives,
                          const std::vector<ExternalScore>& external,
                          const ReportOptions& options) {
  if (archives.empty() && external.empty()) {
    throw std::invalid_argument("report needs at least one input");
  }

  ReportBundle bundle;
  std::map<std::string, ProblemRow> rows;
  std::vector<std::string> problem_order;

  auto method_column = [&](const std::string& m) {
    if (std::find(bundle.methods.begin(), bundle.methods.end(), m) ==
        bundle.methods.end()) {
      bundle.methods.push_back(m);
    }
  };
  auto row_for = [&](const std::string& problem,
                     Direction direction) -> ProblemRow& {
    auto it = rows.find(problem);
    if (it == rows.end()) {
      problem_order.push_back(problem);
      ProblemRow row;
      row.problem = problem;
      row.direction = direction;
      return rows.emplace(problem, std::move(row)).first->second;
    }
    if (it->second.direction != direction) {
      throw std::invalid_argument("mixed directions for problem " + problem);
    }
    return it->second;
  };

  for (const auto& [method, archive] : archives) {
    method_column(method);
    ProblemRow& row =
        row_for(archive.header.problem.name, archive.header.problem.direction);
    auto best = best_of(archive, options.budget);
    BestEntry entry;
    if (best) {
      entry.present = true;
      entry.score = *best->outcome->score;
      entry.record_id = best->id;
    }
    row.cells[method] = entry;
  }
  for (const auto& ext : external) {
    method_column(ext.method);
    // Direction must be derivable: an archive (or earlier external row)
    // for this problem decides; otherwise assume maximize is wrong too
    // often, so require it to exist.
    auto it = rows.find(ext.problem);
    if (it == rows.end()) {
      throw std::invalid_argument(
          "external score for unknown problem (no archive gives its "
          "direction): " +
          ext.problem);
    }
    BestEntry entry;
    entry.present = true;
    entry.score = ext.score;
    it->second.cells[ext.method] = entry;
  }

  for (const auto& p : problem_order) bundle.rows.push_back(rows[p]);

  // Pairwise match-or-exceed counts over shared problems.
  for (const auto& m : bundle.methods) {
    for (const auto& ref : bundle.methods) {
      if (m == ref) continue;
      int count = 0, denom = 0;
      for (const auto& row : bundle.rows) {
        auto a = row.cells.find(m);
        auto b = row.cells.find(ref);
        if (a == row.cells.end() || !a->second.present ||
            b == row.cells.end() || !b->second.present) {
          continue;
        }
        ++denom;
        if (matches_or_exceeds(a->second.score, b->second.score,
                               row.direction)) {
          ++count;
        }
      }
      bundle.ge_counts[m][ref] = count;
      bundle.ge_denominator[m][ref] = denom;
    }
  }

  // Fractional average ranks (tolerance-equal scores share the mean rank).
  std::map<std::string, std::pair<double, int>> rank_acc;
  for (const auto& row : bundle.rows) {
    std::vector<std::pair<double, std::string>> present;
    for (const auto& [m, cell] : row.cells) {
      if (cell.present) present.emplace_back(cell.score, m);
    }
    if (present.size() < 1) continue;
    std::stable_sort(present.begin(), present.end(),
                     [&](const auto& a, const auto& b) {
                       return better(a.first, b.first, row.direction);
                     });
    size_t i = 0;
    while (i < present.size()) {
      size_t j = i;
      while (j + 1 < present.size() &&
             equal_scores(present[j + 1].first, present[i].first)) {
        ++j;
      }
      double shared = (double(i) + double(j)) / 2.0 + 1.0;
      for (size_t t = i; t <= j; ++t) {
        auto& acc = rank_acc[present[t].second];
        acc.first += shared;
        acc.second += 1;
      }
      i = j + 1;
    }
  }
  for (const auto& [m, acc] : rank_acc) {
    bundle.average_rank[m] = acc.first / double(acc.second);
  }

  // Budget curves against the target method's per-problem scores.
  if (!options.target_method.empty()) {
    for (const auto& [method, archive] : archives) {
      const auto& row = rows.at(archive.header.problem.name);
      auto target_cell = row.cells.find(options.target_method);
      if (target_cell == row.cells.end() || !target_cell->second.present) {
        continue;
      }
      double target = target_cell->second.score;
      if (archive.header.engine == "scs") {
        bundle.curves.push_back(
            scs_budget_curve(archive, method, target, options));
      } else {
        bundle.curves.push_back(
            iid_budget_curve(archive, method, target, options));
      }
    }
  }
  return bundle;
}

std::string render_table(const ReportBundle& bundle) {
  std::ostringstream out;
  size_t name_width = 12;
  for (const auto& row : bundle.rows) {
    name_width = std::max(name_width, row.problem.size() + 4);
  }
  size_t col_width = 14;
  for (const auto& m : bundle.methods) {
    col_width = std::max(col_width, m.size() + 2);
  }

  auto pad = [](const std::string& s, size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
  };

  out << pad("Problem", name_width);
  for (const auto& m : bundle.methods) out << pad(m, col_width);
  out << "\n";

  for (const auto& row : bundle.rows) {
    // Best cell(s) per row get a trailing '*'.
    std::optional<double> best;
    for (const auto& [m, cell] : row.cells) {
      if (cell.present && (!best || better(cell.score, *best, row.direction))) {
        best = cell.score;
      }
    }
    std::string arrow = row.direction == Direction::maximize ? "(^)" : "(v)";
    out << pad(row.problem + " " + arrow, name_width);
    for (const auto& m : bundle.methods) {
      auto it = row.cells.find(m);
      if (it == row.cells.end() || !it->second.present) {
        out << pad("--", col_width);
        continue;
      }
      std::string cell = fmt6(it->second.score);
      if (best && equal_scores(it->second.score, *best)) cell += " *";
      out << pad(cell, col_width);
    }
    out << "\n";
  }

  for (const auto& ref : bundle.methods) {
    out << pad("# problems >= " + ref, name_width);
    for (const auto& m : bundle.methods) {
      if (m == ref) {
        out << pad("-", col_width);
        continue;
      }
      int c = bundle.ge_counts.count(m) && bundle.ge_counts.at(m).count(ref)
                  ? bundle.ge_counts.at(m).at(ref)
                  : 0;
      int d = bundle.ge_denominator.count(m) &&
                      bundle.ge_denominator.at(m).count(ref)
                  ? bundle.ge_denominator.at(m).at(ref)
                  : 0;
      out << pad(std::to_string(c) + "/" + std::to_string(d), col_width);
    }
    out << "\n";
  }

  out << pad("Average rank", name_width);
  for (const auto& m : bundle.methods) {
    auto it = bundle.average_rank.find(m);
    out << pad(it == bundle.average_rank.end() ? "--" : fmt6(it->second),
               col_width);
  }
  out << "\n";
  return out.str();
}

json bundle_to_json(const ReportBundle& bundle) {
  json rows = json::array();
  for (const auto& row : bundle.rows) {
    json cells = json::object();
    for (const auto& [m, cell] : row.cells) {
      if (!cell.present) continue;
      json c{{"score", cell.score}};
      if (!cell.record_id.empty()) c["record_id"] = cell.record_id;
      cells[m] = c;
    }
    rows.push_back({{"problem", row.problem},
                    {"direction", to_string(row.direction)},
                    {"cells", cells}});
  }
  json curves = json::array();
  for (const auto& c : bundle.curves) {
    json points = json::array();
    for (const auto& p : c.points) {
      points.push_back({{"budget", p.budget},
                        {"probability", p.probability},
                        {"ci_lo", p.ci_lo},
                        {"ci_hi", p.ci_hi}});
    }
    curves.push_back({{"method", c.method},
                      {"problem", c.problem},
                      {"engine", c.engine},
                      {"target", c.target},
                      {"points", points}});
  }
  return json{{"methods", bundle.methods},
              {"rows", rows},
              {"ge_counts", bundle.ge_counts},
              {"ge_denominator", bundle.ge_denominator},
              {"average_rank", bundle.average_rank},
              {"curves", curves}};
}

void write_report_files(const ReportBundle& bundle,
                        const std::string& out_dir) {
  fs::create_directories(out_dir);
  {
    std::ofstream table(fs::path(out_dir) / "table.txt");
    table << render_table(bundle);
  }
  {
    std::ofstream j(fs::path(out_dir) / "bundle.json");
    j << bundle_to_json(bundle).dump(2) << "\n";
  }
  if (!bundle.curves.empty()) {
    fs::create_directories(fs::path(out_dir) / "curves");
    for (const auto& c : bundle.curves) {
      std::ofstream csv(fs::path(out_dir) / "curves" /
                        (c.method + "__" + c.problem + ".csv"));
      csv << "budget,probability,ci_lo,ci_hi\n";
      for (const auto& p : c.points) {
        csv << fmt_full(p.budget) << "," << fmt_full(p.probability) << ","
            << fmt_full(p.ci_lo) << "," << fmt_full(p.ci_hi) << "\n";
      }
    }
  }
}

stats::ScoreMatrix score_matrix_from_csv(const std::string& path,
                                         Direction direction) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open CSV: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  auto header = split_csv_line(line);
  if (header.size() < 3 || header[0] != "method" || header[2] != "score") {
    throw std::invalid_argument("expected header method,run_index,score");
  }
  stats::ScoreMatrix m;
  m.direction = direction;
  std::map<std::string, size_t> index;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() < 3) throw std::invalid_argument("short CSV row");
    auto [it, inserted] = index.try_emplace(fields[0], m.methods.size());
    if (inserted) {
      m.methods.push_back(fields[0]);
      m.samples.emplace_back();
    }
    m.samples[it->second].push_back(std::stod(fields[2]));
  }
  m.validate();
  return m;
}

std::vector<ExternalScore> external_scores_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open CSV: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  auto header = split_csv_line(line);
  if (header.size() < 3 || header[0] != "problem" || header[1] != "method" ||
      header[2] != "score") {
    throw std::invalid_argument("expected header problem,method,score");
  }
  std::vector<ExternalScore> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() < 3) throw std::invalid_argument("short CSV row");
    rows.push_back({fields[0], fields[1], std::stod(fields[2])});
  }
  return rows;
}

}  // namespace evo::report

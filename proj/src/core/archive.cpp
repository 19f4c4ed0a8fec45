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

#include "evo/core/archive.hpp"

#include <cmath>
#include <limits>
#include <unordered_set>

namespace evo {

void ProblemSpec::validate() const {
  if (name.empty()) throw std::invalid_argument("problem name empty");
  if (!(time_limit > 0.0)) {
    throw std::invalid_argument("time_limit must be positive");
  }
  if (verifier_id.empty() || solution_schema_id.empty()) {
    throw std::invalid_argument("verifier_id / solution_schema_id required");
  }
}

std::string to_string(EvalStatus s) {
  switch (s) {
    case EvalStatus::success:
      return "success";
    case EvalStatus::parse_failure:
      return "parse_failure";
    case EvalStatus::runtime_error:
      return "runtime_error";
    case EvalStatus::timeout:
      return "timeout";
    case EvalStatus::invalid_solution:
      return "invalid_solution";
  }
  return "runtime_error";
}

EvalStatus eval_status_from_string(const std::string& s) {
  if (s == "success") return EvalStatus::success;
  if (s == "parse_failure") return EvalStatus::parse_failure;
  if (s == "runtime_error") return EvalStatus::runtime_error;
  if (s == "timeout") return EvalStatus::timeout;
  if (s == "invalid_solution") return EvalStatus::invalid_solution;
  throw std::invalid_argument("unknown evaluation status: " + s);
}

json to_json(const ProblemSpec& p) {
  json j{{"name", p.name},
         {"direction", to_string(p.direction)},
         {"verifier_id", p.verifier_id},
         {"solution_schema_id", p.solution_schema_id},
         {"time_limit", p.time_limit},
         {"prompt_template_path", p.prompt_template_path}};
  if (!p.reference_bounds.empty()) j["reference_bounds"] = p.reference_bounds;
  return j;
}

ProblemSpec problem_spec_from_json(const json& j) {
  ProblemSpec p;
  p.name = j.at("name").get<std::string>();
  p.direction = direction_from_string(j.at("direction").get<std::string>());
  p.verifier_id = j.at("verifier_id").get<std::string>();
  p.solution_schema_id = j.at("solution_schema_id").get<std::string>();
  p.time_limit = j.at("time_limit").get<double>();
  p.prompt_template_path = j.value("prompt_template_path", std::string());
  if (j.contains("reference_bounds")) {
    p.reference_bounds =
        j.at("reference_bounds").get<std::map<std::string, double>>();
  }
  p.validate();
  return p;
}

json to_json(const EvaluationOutcome& o) {
  json j{{"status", to_string(o.status)},
         {"stderr_excerpt", o.stderr_excerpt},
         {"wall_time", o.wall_time}};
  if (o.score) j["score"] = *o.score;
  if (o.solution) j["solution"] = *o.solution;
  return j;
}

EvaluationOutcome outcome_from_json(const json& j) {
  EvaluationOutcome o;
  o.status = eval_status_from_string(j.at("status").get<std::string>());
  if (j.contains("score")) o.score = j.at("score").get<double>();
  if (j.contains("solution")) o.solution = j.at("solution");
  o.stderr_excerpt = j.value("stderr_excerpt", std::string());
  o.wall_time = j.value("wall_time", 0.0);
  if (o.score.has_value() != (o.status == EvalStatus::success)) {
    throw ArchiveError("outcome score present iff status is success");
  }
  return o;
}

json to_json(const CandidateRecord& r) {
  json j{{"id", r.id},
         {"trial", r.trial_index},
         {"generation", r.generation_index},
         {"parents", r.parent_ids},
         {"source", r.source_text},
         {"prompt_digest", r.prompt_digest},
         {"tokens_in", r.tokens_in},
         {"tokens_out", r.tokens_out},
         {"thinking_tokens", r.thinking_tokens},
         {"dollar_cost", r.dollar_cost},
         {"created_at", r.created_at}};
  if (r.outcome) j["outcome"] = to_json(*r.outcome);
  return j;
}

CandidateRecord candidate_record_from_json(const json& j) {
  CandidateRecord r;
  r.id = j.at("id").get<std::string>();
  r.trial_index = j.at("trial").get<int>();
  r.generation_index = j.at("generation").get<int>();
  r.parent_ids = j.at("parents").get<std::vector<std::string>>();
  r.source_text = j.at("source").get<std::string>();
  r.prompt_digest = j.value("prompt_digest", std::string());
  r.tokens_in = j.value("tokens_in", int64_t{0});
  r.tokens_out = j.value("tokens_out", int64_t{0});
  r.thinking_tokens = j.value("thinking_tokens", int64_t{0});
  r.dollar_cost = j.value("dollar_cost", 0.0);
  r.created_at = j.value("created_at", 0.0);
  if (j.contains("outcome")) r.outcome = outcome_from_json(j.at("outcome"));
  if (r.trial_index < 0 || r.generation_index < 0 || r.dollar_cost < 0.0) {
    throw ArchiveError("record " + r.id + " has negative index or cost");
  }
  return r;
}

json to_json(const ArchiveHeader& h) {
  return json{{"schema_version", h.schema_version},
              {"kind", "run_archive"},
              {"problem", to_json(h.problem)},
              {"engine", h.engine},
              {"search_config", h.search_config},
              {"seed", h.seed},
              {"price_table_digest", h.price_table_digest}};
}

ArchiveHeader archive_header_from_json(const json& j) {
  if (!j.contains("schema_version")) {
    throw ArchiveError("archive header missing schema_version");
  }
  ArchiveHeader h;
  h.schema_version = j.at("schema_version").get<int>();
  if (h.schema_version != kArchiveSchemaVersion) {
    throw ArchiveError("unsupported archive schema version");
  }
  h.problem = problem_spec_from_json(j.at("problem"));
  h.engine = j.value("engine", std::string());
  h.search_config = j.value("search_config", json::object());
  h.seed = j.value("seed", uint64_t{0});
  h.price_table_digest = j.value("price_table_digest", std::string());
  return h;
}

double record_cost(const CandidateRecord& r, BudgetUnit unit) {
  switch (unit) {
    case BudgetUnit::dollars:
      return r.dollar_cost;
    case BudgetUnit::evaluations:
      return r.outcome ? 1.0 : 0.0;
    case BudgetUnit::wall_clock_seconds:
      return r.outcome ? r.outcome->wall_time : 0.0;
  }
  return 0.0;
}

std::optional<CandidateRecord> best_of(
    const RunArchive& archive,
    const std::optional<BudgetPrefix>& budget_prefix) {
  std::optional<CandidateRecord> best;
  double cumulative = 0.0;
  for (const auto& r : archive.records) {
    if (budget_prefix) {
      cumulative += record_cost(r, budget_prefix->unit);
      if (cumulative > budget_prefix->cap) break;
    }
    if (!r.outcome || r.outcome->status != EvalStatus::success) continue;
    if (!r.outcome->score) {
      throw ArchiveError("success record " + r.id + " without score");
    }
    if (!best ||
        better(*r.outcome->score, *best->outcome->score,
               archive.header.problem.direction)) {
      best = r;
    }
  }
  return best;
}

std::vector<double> best_so_far_curve(const RunArchive& archive) {
  std::vector<double> curve;
  curve.reserve(archive.records.size());
  double best = std::numeric_limits<double>::quiet_NaN();
  for (const auto& r : archive.records) {
    if (r.outcome && r.outcome->status == EvalStatus::success) {
      double s = r.outcome->score.value();
      if (std::isnan(best) ||
          better(s, best, archive.header.problem.direction)) {
        best = s;
      }
    }
    curve.push_back(best);
  }
  return curve;
}

ArchiveWriter::ArchiveWriter(const std::string& path,
                             const ArchiveHeader& header)
    : path_(path), out_(path, std::ios::trunc) {
  if (!out_) throw ArchiveError("cannot open archive for writing: " + path);
  out_ << to_json(header).dump() << "\n";
  out_.flush();
  if (!out_) throw ArchiveError("archive header write failed: " + path);
}

void ArchiveWriter::append(const CandidateRecord& record) {
  std::lock_guard<std::mutex> lock(mu_);
  out_ << to_json(record).dump() << "\n";
  out_.flush();
  if (!out_) throw ArchiveError("archive append failed: " + path_);
}

RunArchive load_archive(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArchiveError("cannot open archive: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ArchiveError("empty archive: " + path);

  RunArchive archive;
  try {
    archive.header = archive_header_from_json(json::parse(line));
  } catch (const json::exception& e) {
    throw ArchiveError("corrupt archive header: " + std::string(e.what()));
  }

  std::unordered_set<std::string> seen_ids;
  double last_created = -std::numeric_limits<double>::infinity();
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    CandidateRecord r;
    try {
      r = candidate_record_from_json(json::parse(line));
    } catch (const json::exception& e) {
      throw ArchiveError("corrupt archive record at line " +
                         std::to_string(line_no) + ": " + e.what());
    }
    if (!seen_ids.insert(r.id).second) {
      throw ArchiveError("duplicate record id: " + r.id);
    }
    if (r.created_at < last_created) {
      throw ArchiveError("records out of creation order at line " +
                         std::to_string(line_no));
    }
    last_created = r.created_at;
    archive.records.push_back(std::move(r));
  }
  return archive;
}

}  // namespace evo

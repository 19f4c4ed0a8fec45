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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "evo/core/score.hpp"

namespace evo {

using json = nlohmann::json;

// One bounds problem: which verifier scores it, which payload schema the
// candidate must emit, and how candidates are prompted.
struct ProblemSpec {
  std::string name;
  Direction direction = Direction::maximize;
  std::string verifier_id;
  std::string solution_schema_id;
  double time_limit = 300.0;  // seconds per candidate evaluation
  std::string prompt_template_path;
  std::map<std::string, double> reference_bounds;  // reporting only

  void validate() const;
};

enum class EvalStatus {
  success,
  parse_failure,
  runtime_error,
  timeout,
  invalid_solution,
};

std::string to_string(EvalStatus s);
EvalStatus eval_status_from_string(const std::string& s);

struct EvaluationOutcome {
  EvalStatus status = EvalStatus::runtime_error;
  std::optional<double> score;     // present iff status == success
  std::optional<json> solution;    // raw payload as parsed
  std::string stderr_excerpt;
  double wall_time = 0.0;
};

struct CandidateRecord {
  std::string id;
  int trial_index = 0;
  int generation_index = 0;
  std::vector<std::string> parent_ids;
  std::string source_text;
  std::string prompt_digest;
  int64_t tokens_in = 0;
  int64_t tokens_out = 0;
  int64_t thinking_tokens = 0;
  double dollar_cost = 0.0;
  double created_at = 0.0;
  std::optional<EvaluationOutcome> outcome;
};

json to_json(const ProblemSpec& p);
ProblemSpec problem_spec_from_json(const json& j);
json to_json(const EvaluationOutcome& o);
EvaluationOutcome outcome_from_json(const json& j);
json to_json(const CandidateRecord& r);
CandidateRecord candidate_record_from_json(const json& j);

}  // namespace evo

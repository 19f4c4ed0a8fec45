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
#include <functional>
#include <string>
#include <vector>

#include "evo/core/score.hpp"

namespace evo::cascade {

struct CascadeLevel {
  int repetitions = 0;
  double promotion_threshold = 0.25;  // dominance needed to advance
};

struct CascadeConfig {
  // Cheap screen then expensive confirmation, mirroring 3-evaluation
  // selection vs 10-evaluation re-evaluation.
  std::vector<CascadeLevel> levels = {{3, 0.25}, {10, 0.25}};
  int incumbent_pool_size = 5;
  Direction direction = Direction::maximize;
  uint64_t seed = 0;
  int workers = 1;

  void validate() const;  // >= 2 levels, strictly increasing repetitions
};

// One score sample per repetition; the seed makes stochastic evaluators
// reproducible per (candidate, level).
using EvaluateFn = std::function<std::vector<double>(
    size_t candidate, int repetitions, uint64_t seed)>;

struct CascadeEvalLog {
  size_t candidate = 0;
  int level = 0;
  std::vector<double> scores;
};

struct CascadeDrop {
  size_t candidate = 0;
  int level = 0;
  std::string reason;
};

struct CascadeOutcome {
  // Final-level survivors ranked by probability of dominance, best first.
  std::vector<size_t> ranking;
  std::vector<double> final_dominance;  // aligned with ranking
  std::vector<CascadeEvalLog> log;      // every evaluation, with its level
  std::vector<CascadeDrop> dropped;     // evaluator failures
  int64_t total_evaluations = 0;

  size_t selected() const { return ranking.at(0); }
};

// Evaluates every surviving candidate at each level's repetition count.
// Below the final level a candidate advances when it sits in the incumbent
// pool (the current top incumbent_pool_size by mean score) or its
// probability of dominance against that pool reaches the level's
// threshold. The last level ranks survivors by dominance against the other
// finalists.
CascadeOutcome run_cascade(size_t candidate_count, const EvaluateFn& evaluate,
                           const CascadeConfig& config);

}  // namespace evo::cascade

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

#include <optional>
#include <string>
#include <vector>

#include "evo/search/engines.hpp"

namespace evo::search::internal {

// Budget admission for one candidate. Dollar budgets are gated inside the
// gateway; evaluation counts commit up front; wall-clock reserves the time
// limit and settles to the measured time.
struct Gate {
  bool allowed = true;
  std::optional<size_t> wall_reservation;
};

std::string candidate_id(uint64_t ordinal);
double now_unix_seconds();
Gate gate_candidate(BudgetLedger* ledger, const std::string& id,
                    double time_limit);
void settle_wall(BudgetLedger* ledger, const Gate& gate,
                 const EvaluationOutcome& outcome, double time_limit);
void evaluate_chunk(std::vector<CandidateRecord>& chunk,
                    const std::vector<Gate>& gates, const ProblemSpec& problem,
                    EngineContext& ctx, ArchiveWriter& writer,
                    RunArchive& archive);

}  // namespace evo::search::internal

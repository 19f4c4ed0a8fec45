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

#include <string>

#include "evo/core/archive.hpp"
#include "evo/gateway/gateway.hpp"
#include "evo/sandbox/sandbox.hpp"
#include "evo/verifiers/registry.hpp"

namespace evo::search {

// Plumbing shared by the LLM-driven engines. The gateway must be
// constructed over the same ledger so dollar budgets gate generation.
struct EngineContext {
  gateway::Gateway* llm = nullptr;
  const verifiers::VerifierRegistry* registry = nullptr;
  sandbox::SandboxConfig sandbox;
  BudgetLedger* ledger = nullptr;
  std::string archive_path;
  std::string base_prompt;

  // Conditioning scaffold appended by SCS around parent programs.
  std::string conditioning_header =
      "Here are previous programs and their scores:";
  std::string conditioning_item =
      "Program (score ${score}):\n```python\n${program}\n```\n";

  // Logical timestamps and zeroed wall times, for byte-identical archives
  // from seeded offline runs.
  bool deterministic_timing = false;
};

struct IidConfig {
  int total_samples = 2000;
  gateway::SamplingParams params;

  void validate() const;
  json to_json() const;
  static IidConfig from_json(const json& j);
};

struct ScsConfig {
  int programs_per_generation = 20;
  int generations_per_trial = 10;
  int trials = 6;
  int conditioning_count = 3;
  gateway::SamplingParams params;

  void validate() const;
  json to_json() const;
  static ScsConfig from_json(const json& j);
};

// Samples up to total_samples independent candidates from the base prompt,
// evaluating each; stops cleanly when the budget gate rejects a candidate.
RunArchive run_iid(const ProblemSpec& problem, const IidConfig& cfg,
                   EngineContext& ctx, uint64_t seed);

// Trials of generations: generation 0 uses the base prompt; later
// generations condition each candidate on conditioning_count uniformly
// chosen successes of the immediately previous generation (fewer successes
// than that falls back to the base prompt). No fitness-based selection.
RunArchive run_scs(const ProblemSpec& problem, const ScsConfig& cfg,
                   EngineContext& ctx, uint64_t seed);

}  // namespace evo::search

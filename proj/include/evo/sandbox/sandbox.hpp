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
#include <vector>

#include "evo/core/types.hpp"
#include "evo/verifiers/registry.hpp"

namespace evo::sandbox {

// Harness-side failure (scratch I/O, fork), retried once and never
// recorded as a candidate outcome.
struct InfrastructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SandboxConfig {
  // argv template; {source_path} is replaced with the candidate file.
  std::vector<std::string> interpreter_command = {"python3", "{source_path}"};
  double time_limit = 300.0;                          // seconds
  int64_t memory_limit_bytes = 4LL * 1024 * 1024 * 1024;
  int worker_count = 1;
  bool network_allowed = false;
  std::string scratch_dir = "/tmp";
  // When false, outcomes carry wall_time 0 so archives from seeded offline
  // runs are byte-identical across reruns.
  bool record_wall_time = true;
};

// Python footer appended to candidate source: calls the problem's entry
// function and serializes the payload to $EVO_SOLUTION_PATH.
std::string serialization_footer(const std::string& schema_id);

// Runs the candidate source in an isolated subprocess (own process group,
// memory limit, optional network namespace), parses the payload it wrote
// and recomputes the score with the registered verifier. Statuses:
// nonzero exit -> runtime_error, wall limit hit (process tree killed) ->
// timeout, missing/garbled payload -> parse_failure, verifier rejection ->
// invalid_solution, else success.
EvaluationOutcome evaluate(const std::string& source_text,
                           const ProblemSpec& problem,
                           const SandboxConfig& config,
                           const verifiers::VerifierRegistry& registry);

// Positionally aligned outcomes, up to worker_count evaluations at a time.
std::vector<EvaluationOutcome> evaluate_batch(
    const std::vector<std::string>& sources, const ProblemSpec& problem,
    const SandboxConfig& config, const verifiers::VerifierRegistry& registry);

}  // namespace evo::sandbox

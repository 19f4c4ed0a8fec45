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
#include <vector>

#include "evo/verifiers/hermite.hpp"

namespace evo::search {

struct HermiteOptConfig {
  verifiers::HermiteBasis basis = verifiers::HermiteBasis::physicist;
  int order_k = 3;            // series truncated at alpha_k
  int restarts = 64;
  int iteration_budget = 400; // pattern-search sweeps per restart
  int workers = 0;            // 0 -> hardware concurrency

  void validate() const;
};

struct HermiteOptResult {
  verifiers::HermiteCandidate best;
  double best_score = 0.0;
  // Per-restart best scores, for archiving and budget curves.
  std::vector<double> restart_scores;
  std::vector<verifiers::HermiteCandidate> restart_candidates;
};

// Random-restart pattern search over the p(0) = 0 hyperplane, minimizing
// the uncertainty score. Steps start at 0.5 per coordinate direction,
// halve on sweeps without improvement, and stop at 1e-7. With
// iteration_budget 0 the (projected) initial sample is returned unchanged.
HermiteOptResult optimize_hermite(const HermiteOptConfig& cfg, uint64_t seed);

}  // namespace evo::search

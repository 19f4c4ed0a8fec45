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

#include "evo/verifiers/registry.hpp"

namespace evo::verifiers {

// Equal-norm integer vectors encoding sphere centers tangent to a common
// sphere. Validity is checked in exact integer arithmetic.
struct KissingConfiguration {
  std::vector<std::vector<int64_t>> vectors;
};

// Valid iff: no zero vector, all squared norms equal (= s), all vectors
// distinct, and 2*(u . v) <= s for every pair (pairwise angle >= 60 deg).
// Score is the vector count.
VerifierResult score_kissing(const KissingConfiguration& config);

KissingConfiguration kissing_from_payload(const json& payload, int dimension);

VerifierRegistry::Entry kissing_verifier(const std::string& id, int dimension);

}  // namespace evo::verifiers

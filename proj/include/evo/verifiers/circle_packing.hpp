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

#include "evo/verifiers/registry.hpp"

namespace evo::verifiers {

struct Circle {
  double x = 0.0;
  double y = 0.0;
  double r = 0.0;
};

struct CirclePacking {
  std::vector<Circle> circles;
};

// Disjointness and containment in the unit square. Overlap is strict
// (tangent circles pass) and boundary contact is allowed. Throws
// std::invalid_argument on non-finite input.
bool verify_circles(const CirclePacking& packing);

// Full scoring: validity with a human-readable rejection reason, score is
// the sum of radii. Rejects non-finite values and non-positive radii.
VerifierResult score_circle_packing(const CirclePacking& packing);

CirclePacking circle_packing_from_payload(const json& payload);

// Registry entry; expected_count > 0 pins the number of circles.
VerifierRegistry::Entry circle_packing_verifier(const std::string& id,
                                                int expected_count);

}  // namespace evo::verifiers

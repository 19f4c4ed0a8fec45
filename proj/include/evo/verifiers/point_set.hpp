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

#include <vector>

#include "evo/verifiers/registry.hpp"

namespace evo::verifiers {

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

struct PointSet2D {
  std::vector<Point2D> points;
};

// (max pairwise distance) / (min pairwise distance); lower is better.
// Throws InvalidSolutionError on duplicates or non-finite coordinates.
double max_min_ratio(const PointSet2D& points);

// Minimum triangle area over all point triples; points must lie in the
// canonical unit-area triangle (0,0), (1,0), (0,2). Containment is tested
// by the sign of the barycentric coordinates, boundary included.
// Throws InvalidSolutionError on a point outside the triangle.
double heilbronn_min_area(const PointSet2D& points);

PointSet2D point_set_from_payload(const json& payload);

VerifierRegistry::Entry max_min_ratio_verifier(const std::string& id,
                                               int expected_count);
VerifierRegistry::Entry heilbronn_verifier(const std::string& id,
                                           int expected_count);

}  // namespace evo::verifiers

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

#include "evo/verifiers/circle_packing.hpp"

#include <cmath>

namespace evo::verifiers {

namespace {

bool packing_finite(const CirclePacking& p) {
  for (const auto& c : p.circles) {
    if (!std::isfinite(c.x) || !std::isfinite(c.y) || !std::isfinite(c.r)) {
      return false;
    }
  }
  return true;
}

// Empty reason means valid.
std::string first_violation(const CirclePacking& p) {
  const auto& cs = p.circles;
  for (size_t i = 0; i < cs.size(); ++i) {
    for (size_t j = i + 1; j < cs.size(); ++j) {
      double dx = cs[i].x - cs[j].x;
      double dy = cs[i].y - cs[j].y;
      double center_distance = std::sqrt(dx * dx + dy * dy);
      if (center_distance < cs[i].r + cs[j].r) {
        return "overlap(" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  }
  for (size_t i = 0; i < cs.size(); ++i) {
    const auto& c = cs[i];
    if (c.x - c.r < 0.0 || c.y - c.r < 0.0 || c.x + c.r > 1.0 ||
        c.y + c.r > 1.0) {
      return "outside(" + std::to_string(i) + ")";
    }
  }
  return "";
}

}  // namespace

bool verify_circles(const CirclePacking& packing) {
  if (packing.circles.empty()) {
    throw std::invalid_argument("empty packing");
  }
  if (!packing_finite(packing)) {
    throw std::invalid_argument("non-finite circle value");
  }
  return first_violation(packing).empty();
}

VerifierResult score_circle_packing(const CirclePacking& packing) {
  if (packing.circles.empty()) {
    return VerifierResult::invalid("empty packing");
  }
  if (!packing_finite(packing)) {
    return VerifierResult::invalid("non-finite value");
  }
  for (size_t i = 0; i < packing.circles.size(); ++i) {
    if (!(packing.circles[i].r > 0.0)) {
      return VerifierResult::invalid("nonpositive_radius(" + std::to_string(i) +
                                     ")");
    }
  }
  std::string reason = first_violation(packing);
  if (!reason.empty()) return VerifierResult::invalid(reason);
  double sum = 0.0;
  for (const auto& c : packing.circles) sum += c.r;
  return VerifierResult::ok(sum);
}

CirclePacking circle_packing_from_payload(const json& payload) {
  if (!payload.is_object() || !payload.contains("circles") ||
      !payload.at("circles").is_array()) {
    throw SchemaError("expected object with \"circles\" array");
  }
  CirclePacking packing;
  for (const auto& row : payload.at("circles")) {
    if (!row.is_array() || row.size() != 3 || !row[0].is_number() ||
        !row[1].is_number() || !row[2].is_number()) {
      throw SchemaError("each circle must be a [x, y, r] numeric triple");
    }
    packing.circles.push_back(
        {row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
  }
  return packing;
}

VerifierRegistry::Entry circle_packing_verifier(const std::string& id,
                                                int expected_count) {
  return {id, "circle_packing", [expected_count](const json& payload) {
            CirclePacking packing = circle_packing_from_payload(payload);
            if (expected_count > 0 &&
                packing.circles.size() != static_cast<size_t>(expected_count)) {
              return VerifierResult::invalid(
                  "expected " + std::to_string(expected_count) +
                  " circles, got " + std::to_string(packing.circles.size()));
            }
            return score_circle_packing(packing);
          }};
}

}  // namespace evo::verifiers

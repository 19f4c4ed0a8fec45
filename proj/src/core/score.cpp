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

#include "evo/core/score.hpp"

#include <cmath>

namespace evo {

std::string to_string(Direction d) {
  return d == Direction::maximize ? "maximize" : "minimize";
}

Direction direction_from_string(const std::string& s) {
  if (s == "maximize") return Direction::maximize;
  if (s == "minimize") return Direction::minimize;
  throw std::invalid_argument("unknown direction: " + s);
}

namespace {
void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    throw InvalidScoreError(std::string("non-finite score for ") + name);
  }
}
}  // namespace

bool equal_scores(double a, double b) {
  require_finite(a, "a");
  require_finite(b, "b");
  return std::abs(a - b) <= kScoreAtol + kScoreRtol * std::abs(b);
}

bool better(double a, double b, Direction direction) {
  if (equal_scores(a, b)) return false;
  return direction == Direction::maximize ? a > b : a < b;
}

bool matches_or_exceeds(double a, double b, Direction direction) {
  return equal_scores(a, b) || better(a, b, direction);
}

}  // namespace evo

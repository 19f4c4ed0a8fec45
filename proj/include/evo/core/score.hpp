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

#include <stdexcept>
#include <string>

namespace evo {

enum class Direction { maximize, minimize };

std::string to_string(Direction d);
Direction direction_from_string(const std::string& s);

struct InvalidScoreError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Result-equality tolerance used when comparing bounds. Two scores count as
// the same result if |a - b| <= atol + rtol * |b|.
inline constexpr double kScoreAtol = 1e-8;
inline constexpr double kScoreRtol = 1e-5;

// Throws InvalidScoreError on non-finite input.
bool equal_scores(double a, double b);

// True when `a` is a strictly better bound than `b` in the given direction.
// Scores within tolerance of each other are never "better".
bool better(double a, double b, Direction direction);

// better(a, b) || equal_scores(a, b): the "matches or exceeds" test.
bool matches_or_exceeds(double a, double b, Direction direction);

}  // namespace evo

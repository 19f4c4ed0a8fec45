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

#include "evo/gateway/mock.hpp"

#include <algorithm>
#include <cstdio>

#include "evo/core/hash.hpp"

namespace evo::gateway {

namespace {

enum class MockProblem { circles, ratio_points, heilbronn_points, kissing,
                         uncertainty, uncertainty_improved, unknown };

MockProblem detect_problem(const std::string& prompt) {
  if (prompt.find("pack_circles") != std::string::npos) {
    return MockProblem::circles;
  }
  if (prompt.find("find_kissing_vectors") != std::string::npos) {
    return MockProblem::kissing;
  }
  if (prompt.find("find_coefficients") != std::string::npos) {
    return prompt.find("probabilist") != std::string::npos
               ? MockProblem::uncertainty_improved
               : MockProblem::uncertainty;
  }
  if (prompt.find("place_points") != std::string::npos) {
    return prompt.find("16 distinct points") != std::string::npos
               ? MockProblem::ratio_points
               : MockProblem::heilbronn_points;
  }
  return MockProblem::unknown;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

const char* kFailing = R"(def solve():
    raise ValueError("search diverged")

solve()
)";

// Writes a schema-violating payload and exits before any footer runs.
const char* kMalformed = R"(import json, os

with open(os.environ["EVO_SOLUTION_PATH"], "w") as f:
    f.write('{"circles": [[0.5, 0.5]]}')
raise SystemExit(0)
)";

const char* kHanging = R"(import time

def pack_circles():
    return [], [], 0.0

time.sleep(3600)
)";

std::string circles_weak(double strength) {
  // 26 tangent-ish circles in a row; radii backed off so float rounding
  // cannot flip the strict overlap test.
  double r = 0.003 + 0.012 * strength;
  return "def pack_circles():\n"
         "    spacing = " + format_double(r) + "\n"
         "    radius = spacing * 0.995\n"
         "    centers = [(spacing + 2.0 * spacing * i, 0.5) for i in range(26)]\n"
         "    radii = [radius] * 26\n"
         "    return centers, radii, sum(radii)\n";
}

const char* kCirclesStrong = R"(def pack_circles():
    centers = []
    for i in range(5):
        for j in range(5):
            centers.append((0.1 + 0.2 * i, 0.1 + 0.2 * j))
    radii = [0.1] * 25
    centers.append((0.2, 0.2))
    radii.append(0.1 * (2.0 ** 0.5 - 1.0) - 1e-9)
    return centers, radii, sum(radii)
)";

const char* kCirclesInvalid = R"(def pack_circles():
    centers = [(0.5, 0.5)] * 26
    radii = [0.05] * 26
    return centers, radii, sum(radii)
)";

std::string ratio_weak(double strength) {
  double jitter = 0.05 + 0.2 * strength;
  return "def place_points():\n"
         "    jitter = " + format_double(jitter) + "\n"
         "    points = []\n"
         "    for i in range(4):\n"
         "        for j in range(4):\n"
         "            dx = jitter if (i + j) % 2 == 0 else 0.0\n"
         "            points.append((float(i) + dx, float(j)))\n"
         "    return points\n";
}

const char* kRatioStrong = R"(def place_points():
    return [(float(i), float(j)) for i in range(4) for j in range(4)]
)";

const char* kRatioInvalid = R"(def place_points():
    return [(0.0, 0.0)] * 16
)";

std::string heilbronn_weak(double strength) {
  double squeeze = 0.02 + 0.3 * strength;
  return "def place_points():\n"
         "    s = " + format_double(squeeze) + "\n"
         "    pts = [(0.02, 0.02), (0.96, 0.02), (0.02, 1.92),\n"
         "           (0.49, 0.02), (0.02, 0.96), (0.48, 0.96),\n"
         "           (0.24, 0.49), (0.70, 0.25), (0.24, 1.35),\n"
         "           (0.45, 0.50), (0.10, 1.60)]\n"
         "    return [(x * (1.0 - s) + 0.2 * s, y * (1.0 - s) + 0.2 * s)\n"
         "            for x, y in pts]\n";
}

const char* kHeilbronnStrong = R"(def place_points():
    return [(0.02, 0.02), (0.96, 0.02), (0.02, 1.92),
            (0.49, 0.02), (0.02, 0.96), (0.48, 0.96),
            (0.24, 0.49), (0.70, 0.25), (0.24, 1.35),
            (0.45, 0.50), (0.10, 1.60)]
)";

const char* kHeilbronnInvalid = R"(def place_points():
    pts = [(0.5, 1.6)] + [(0.1 * i, 0.05) for i in range(10)]
    return pts
)";

std::string kissing_weak(double strength) {
  int pairs = 4 + int(strength * 7.0);  // 4..11 axis pairs
  return "def find_kissing_vectors():\n"
         "    pairs = " + std::to_string(std::min(pairs, 11)) + "\n"
         "    vectors = []\n"
         "    for i in range(pairs):\n"
         "        plus = [0] * 11\n"
         "        plus[i] = 1\n"
         "        minus = [0] * 11\n"
         "        minus[i] = -1\n"
         "        vectors.append(plus)\n"
         "        vectors.append(minus)\n"
         "    return vectors\n";
}

const char* kKissingStrong = R"(import itertools

def find_kissing_vectors():
    vectors = []
    for i, j in itertools.combinations(range(11), 2):
        for si in (1, -1):
            for sj in (1, -1):
                v = [0] * 11
                v[i] = si
                v[j] = sj
                vectors.append(v)
    return vectors
)";

const char* kKissingInvalid = R"(def find_kissing_vectors():
    e0 = [1] + [0] * 10
    return [e0, e0]
)";

std::string uncertainty_weak(const char* basis) {
  // alpha_0 chosen so p(0) = 0; the series reduces to a multiple of
  // t^2 (t^2 - 3), scoring 3 / (2 pi).
  std::string b4_at_zero = basis[0] == 'p' && basis[1] == 'h' ? "12.0" : "0.75";
  return std::string("def find_coefficients():\n") +
         "    coeffs = [-" + b4_at_zero + ", 1.0]\n"
         "    return coeffs, \"" + basis + "\"\n";
}

std::string uncertainty_strong(const char* basis) {
  std::string b8_at_zero =
      basis[0] == 'p' && basis[1] == 'h' ? "1680.0" : "6.5625";
  return std::string("def find_coefficients():\n") +
         "    coeffs = [-" + b8_at_zero + ", 0.0, 1.0]\n"
         "    return coeffs, \"" + basis + "\"\n";
}

std::string uncertainty_invalid(const char* basis) {
  return std::string("def find_coefficients():\n") +
         "    return [1.0, 1.0], \"" + basis + "\"\n";
}

}  // namespace

std::string MockBackend::canned_source(const std::string& prompt,
                                       MockTier tier, uint64_t variation) {
  double strength = double(variation % 1000) / 999.0;
  MockProblem problem = detect_problem(prompt);

  switch (tier) {
    case MockTier::failing:
      return kFailing;
    case MockTier::malformed:
      return kMalformed;
    case MockTier::hanging:
      return kHanging;
    default:
      break;
  }

  switch (problem) {
    case MockProblem::circles:
      if (tier == MockTier::invalid) return kCirclesInvalid;
      return tier == MockTier::strong ? kCirclesStrong
                                      : circles_weak(strength);
    case MockProblem::ratio_points:
      if (tier == MockTier::invalid) return kRatioInvalid;
      return tier == MockTier::strong ? kRatioStrong : ratio_weak(strength);
    case MockProblem::heilbronn_points:
      if (tier == MockTier::invalid) return kHeilbronnInvalid;
      return tier == MockTier::strong ? kHeilbronnStrong
                                      : heilbronn_weak(strength);
    case MockProblem::kissing:
      if (tier == MockTier::invalid) return kKissingInvalid;
      return tier == MockTier::strong ? kKissingStrong
                                      : kissing_weak(strength);
    case MockProblem::uncertainty:
      if (tier == MockTier::invalid) return uncertainty_invalid("physicist");
      // Scores are minimized: the H4-based series beats the H8-based one.
      return tier == MockTier::strong ? uncertainty_weak("physicist")
                                      : uncertainty_strong("physicist");
    case MockProblem::uncertainty_improved:
      if (tier == MockTier::invalid) return uncertainty_invalid("probabilist");
      return tier == MockTier::strong ? uncertainty_weak("probabilist")
                                      : uncertainty_strong("probabilist");
    case MockProblem::unknown:
      return kFailing;
  }
  return kFailing;
}

BackendResponse MockBackend::complete(const std::string& prompt,
                                      const SamplingParams& params,
                                      const CallContext& ctx) {
  int now = ++in_flight_;
  int seen = max_in_flight_.load();
  while (now > seen && !max_in_flight_.compare_exchange_weak(seen, now)) {
  }

  uint64_t digest = fnv1a64(prompt);
  uint64_t index;
  if (ctx.ordinal) {
    index = *ctx.ordinal;
  } else {
    std::lock_guard<std::mutex> lock(mu_);
    index = fallback_index_[digest]++;
  }

  uint64_t h = fnv1a64_mix(fnv1a64_mix(options_.seed, digest), index);
  MockTier tier;
  if (!options_.scripted.empty()) {
    tier = options_.scripted[index % options_.scripted.size()];
  } else {
    uint64_t roll = h % 100;
    if (roll < 10) {
      tier = MockTier::failing;
    } else if (roll < 18) {
      tier = MockTier::malformed;
    } else if (roll < 26) {
      tier = MockTier::invalid;
    } else if (options_.include_hanging && roll < 30) {
      tier = MockTier::hanging;
    } else if (roll < 75) {
      tier = MockTier::weak;
    } else {
      tier = MockTier::strong;
    }
  }

  std::string source = canned_source(prompt, tier, h >> 8);
  BackendResponse resp;
  resp.text = "Considering the constraints, a direct construction works "
              "well here.\n\n```python\n" + source + "```\n";
  resp.usage.tokens_in = static_cast<int64_t>(prompt.size() / 4);
  resp.usage.tokens_out = static_cast<int64_t>(resp.text.size() / 4);
  resp.usage.thinking_tokens =
      std::min<int64_t>(params.thinking_budget_tokens, 128);

  --in_flight_;
  return resp;
}

}  // namespace evo::gateway

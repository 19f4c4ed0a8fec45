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
#include <span>
#include <string>
#include <vector>

#include "evo/core/score.hpp"

namespace evo::stats {

struct ScoreMatrix {
  std::vector<std::string> methods;
  std::vector<std::vector<double>> samples;  // samples[m] = scores of method m
  Direction direction = Direction::maximize;

  void validate() const;  // >= 1 finite sample per method
};

// Exact probability as an integer fraction, so sum-to-1 across focus
// methods can be checked without rounding. denominator =
// lcm(1..M) * prod_m N_m.
struct ExactFraction {
  uint64_t numerator = 0;
  uint64_t denominator = 1;
  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
};

// Probability that a random draw of the focus method beats one random draw
// of every other method, averaging over all index tuples. A draw tied with
// the joint maximum gets credit 1/(size of the tied top set). Ties are
// exact score equality, keeping the statistic rank-invariant.
ExactFraction probability_of_dominance_exact(const ScoreMatrix& scores,
                                             size_t focus);
double probability_of_dominance(const ScoreMatrix& scores, size_t focus);

// Monte Carlo estimate over `samples` uniformly drawn index tuples.
double probability_of_dominance_mc(const ScoreMatrix& scores, size_t focus,
                                   int64_t samples, uint64_t seed);

enum class Pairing { all_pairs, index_paired };

// P(A > B) with ties counted 1/2. all_pairs averages over every (i, j)
// pair (dominance at M = 2); index_paired averages S(a_i, b_i) over the
// shared index and requires equal sample counts.
double probability_of_improvement(std::span<const double> a,
                                  std::span<const double> b, Pairing pairing,
                                  Direction direction);

}  // namespace evo::stats

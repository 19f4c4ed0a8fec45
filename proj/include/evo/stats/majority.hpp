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
#include <random>
#include <string>
#include <vector>

namespace evo::stats {

// Per-question pools of sampled answers plus the correct answer key.
struct AnswerPool {
  std::vector<std::vector<std::string>> answers;
  std::vector<std::string> keys;

  void validate() const;  // >= 1 sample per question, keys aligned
};

// Most prevalent answer; ties resolved uniformly at random.
std::string majority_vote(const std::vector<std::string>& answers,
                          std::mt19937_64& rng);

struct AccuracyDistribution {
  std::vector<double> samples;  // sorted ascending
  double mean = 0.0;
  double stddev = 0.0;
  double quantile(double q) const;
};

// Bootstrap distribution of majority-vote@k accuracy: per resample, each
// question is answered `repetitions` times by drawing k answers with
// replacement from its pool and majority-voting; accuracy is averaged over
// questions x repetitions.
AccuracyDistribution majority_accuracy_distribution(const AnswerPool& pool,
                                                    int k, int repetitions,
                                                    int resamples,
                                                    uint64_t seed);

struct EffectiveSetSize {
  int64_t size = 0;
  bool flagged = false;  // below the 300-question reporting floor
};

EffectiveSetSize effective_set_size(int questions, int repetitions);

}  // namespace evo::stats

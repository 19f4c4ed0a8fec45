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

#include "evo/stats/majority.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace evo::stats {

void AnswerPool::validate() const {
  if (answers.empty()) throw std::invalid_argument("empty answer pool");
  if (keys.size() != answers.size()) {
    throw std::invalid_argument("keys do not align with questions");
  }
  for (const auto& q : answers) {
    if (q.empty()) throw std::invalid_argument("question with no samples");
  }
}

std::string majority_vote(const std::vector<std::string>& answers,
                          std::mt19937_64& rng) {
  if (answers.empty()) throw std::invalid_argument("empty answer list");
  std::map<std::string, int> counts;
  for (const auto& a : answers) ++counts[a];
  int best = 0;
  for (const auto& [_, c] : counts) best = std::max(best, c);
  std::vector<const std::string*> modal;
  for (const auto& [a, c] : counts) {
    if (c == best) modal.push_back(&a);
  }
  if (modal.size() == 1) return *modal[0];
  std::uniform_int_distribution<size_t> pick(0, modal.size() - 1);
  return *modal[pick(rng)];
}

double AccuracyDistribution::quantile(double q) const {
  if (samples.empty()) throw std::logic_error("empty distribution");
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("quantile out of range");
  double h = q * static_cast<double>(samples.size() - 1);
  size_t lo = static_cast<size_t>(std::floor(h));
  if (lo + 1 >= samples.size()) return samples.back();
  double frac = h - static_cast<double>(lo);
  return samples[lo] + frac * (samples[lo + 1] - samples[lo]);
}

AccuracyDistribution majority_accuracy_distribution(const AnswerPool& pool,
                                                    int k, int repetitions,
                                                    int resamples,
                                                    uint64_t seed) {
  pool.validate();
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (resamples < 1) throw std::invalid_argument("resamples must be >= 1");
  for (const auto& q : pool.answers) {
    if (q.size() < static_cast<size_t>(k)) {
      throw std::invalid_argument("question pool smaller than k");
    }
  }

  std::mt19937_64 rng(seed);
  AccuracyDistribution dist;
  dist.samples.reserve(resamples);
  std::vector<std::string> ballot(k);
  const double total_votes =
      static_cast<double>(pool.answers.size()) * repetitions;

  for (int r = 0; r < resamples; ++r) {
    double correct = 0.0;
    for (size_t q = 0; q < pool.answers.size(); ++q) {
      const auto& samples = pool.answers[q];
      std::uniform_int_distribution<size_t> pick(0, samples.size() - 1);
      for (int rep = 0; rep < repetitions; ++rep) {
        for (int i = 0; i < k; ++i) ballot[i] = samples[pick(rng)];
        if (majority_vote(ballot, rng) == pool.keys[q]) correct += 1.0;
      }
    }
    dist.samples.push_back(correct / total_votes);
  }

  std::sort(dist.samples.begin(), dist.samples.end());
  double sum = 0.0;
  for (double s : dist.samples) sum += s;
  dist.mean = sum / dist.samples.size();
  double var = 0.0;
  for (double s : dist.samples) var += (s - dist.mean) * (s - dist.mean);
  dist.stddev = dist.samples.size() > 1
                    ? std::sqrt(var / (dist.samples.size() - 1))
                    : 0.0;
  return dist;
}

EffectiveSetSize effective_set_size(int questions, int repetitions) {
  if (questions < 1 || repetitions < 1) {
    throw std::invalid_argument("questions and repetitions must be >= 1");
  }
  EffectiveSetSize out;
  out.size = static_cast<int64_t>(questions) * repetitions;
  out.flagged = out.size < 300;
  return out;
}

}  // namespace evo::stats

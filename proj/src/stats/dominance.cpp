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

#include "evo/stats/dominance.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace evo::stats {

void ScoreMatrix::validate() const {
  if (samples.empty()) throw std::invalid_argument("no methods");
  if (!methods.empty() && methods.size() != samples.size()) {
    throw std::invalid_argument("method labels do not match sample lists");
  }
  for (const auto& list : samples) {
    if (list.empty()) throw std::invalid_argument("method with no samples");
    for (double s : list) {
      if (!std::isfinite(s)) throw std::invalid_argument("non-finite score");
    }
  }
}

namespace {

// Direction-normalized copy: larger is always better afterwards.
std::vector<std::vector<double>> normalized(const ScoreMatrix& scores) {
  std::vector<std::vector<double>> out = scores.samples;
  if (scores.direction == Direction::minimize) {
    for (auto& list : out) {
      for (auto& v : list) v = -v;
    }
  }
  return out;
}

// Size of the tied top set if the focus draw is at the joint maximum,
// 0 otherwise.
int top_set_size(const std::vector<std::vector<double>>& draws,
                 const std::vector<size_t>& idx, size_t focus) {
  double max_all = draws[0][idx[0]];
  for (size_t m = 1; m < draws.size(); ++m) {
    max_all = std::max(max_all, draws[m][idx[m]]);
  }
  if (draws[focus][idx[focus]] != max_all) return 0;
  int ties = 0;
  for (size_t m = 0; m < draws.size(); ++m) {
    if (draws[m][idx[m]] == max_all) ++ties;
  }
  return ties;
}

}  // namespace

ExactFraction probability_of_dominance_exact(const ScoreMatrix& scores,
                                             size_t focus) {
  scores.validate();
  const size_t M = scores.samples.size();
  if (M < 2) throw std::invalid_argument("need at least 2 methods");
  if (focus >= M) throw std::invalid_argument("focus index out of range");

  uint64_t tuples = 1;
  for (const auto& list : scores.samples) {
    tuples *= list.size();
    if (tuples > 50'000'000ULL) {
      throw std::invalid_argument(
          "exact dominance too large; use the Monte Carlo mode");
    }
  }
  uint64_t credit_unit = 1;
  for (size_t m = 1; m <= M; ++m) {
    credit_unit = std::lcm(credit_unit, static_cast<uint64_t>(m));
  }

  auto draws = normalized(scores);
  std::vector<size_t> idx(M, 0);
  uint64_t numerator = 0;
  while (true) {
    int ties = top_set_size(draws, idx, focus);
    if (ties > 0) numerator += credit_unit / static_cast<uint64_t>(ties);
    // odometer over index tuples
    size_t m = 0;
    for (; m < M; ++m) {
      if (++idx[m] < draws[m].size()) break;
      idx[m] = 0;
    }
    if (m == M) break;
  }
  return {numerator, credit_unit * tuples};
}

double probability_of_dominance(const ScoreMatrix& scores, size_t focus) {
  return probability_of_dominance_exact(scores, focus).value();
}

double probability_of_dominance_mc(const ScoreMatrix& scores, size_t focus,
                                   int64_t samples, uint64_t seed) {
  scores.validate();
  const size_t M = scores.samples.size();
  if (M < 2) throw std::invalid_argument("need at least 2 methods");
  if (focus >= M) throw std::invalid_argument("focus index out of range");
  if (samples < 1) throw std::invalid_argument("need >= 1 sample");

  auto draws = normalized(scores);
  std::mt19937_64 rng(seed);
  std::vector<std::uniform_int_distribution<size_t>> pick;
  pick.reserve(M);
  for (const auto& list : draws) {
    pick.emplace_back(size_t{0}, list.size() - 1);
  }

  std::vector<size_t> idx(M);
  double credit = 0.0;
  for (int64_t s = 0; s < samples; ++s) {
    for (size_t m = 0; m < M; ++m) idx[m] = pick[m](rng);
    int ties = top_set_size(draws, idx, focus);
    if (ties > 0) credit += 1.0 / ties;
  }
  return credit / static_cast<double>(samples);
}

double probability_of_improvement(std::span<const double> a,
                                  std::span<const double> b, Pairing pairing,
                                  Direction direction) {
  if (a.empty() || b.empty()) throw std::invalid_argument("empty sample list");
  if (pairing == Pairing::all_pairs) {
    ScoreMatrix m;
    m.samples = {std::vector<double>(a.begin(), a.end()),
                 std::vector<double>(b.begin(), b.end())};
    m.direction = direction;
    return probability_of_dominance(m, 0);
  }
  if (a.size() != b.size()) {
    throw std::invalid_argument("index_paired requires equal sample counts");
  }
  double sign = direction == Direction::maximize ? 1.0 : -1.0;
  double total = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double x = sign * a[i], y = sign * b[i];
    if (x > y) {
      total += 1.0;
    } else if (x == y) {
      total += 0.5;
    }
  }
  return total / static_cast<double>(a.size());
}

}  // namespace evo::stats

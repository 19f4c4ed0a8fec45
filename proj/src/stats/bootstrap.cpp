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

#include "evo/stats/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace evo::stats {

double quantile_linear(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of empty set");
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("quantile out of range");
  std::sort(values.begin(), values.end());
  if (values.size() == 1) return values[0];
  double h = q * static_cast<double>(values.size() - 1);
  size_t lo = static_cast<size_t>(std::floor(h));
  if (lo + 1 >= values.size()) return values.back();
  double frac = h - static_cast<double>(lo);
  return values[lo] + frac * (values[lo + 1] - values[lo]);
}

BootstrapCi bootstrap_ci(
    const std::function<double(const std::vector<size_t>&)>& estimator,
    size_t space_size, int resamples, double level, uint64_t seed) {
  if (space_size == 0) throw std::invalid_argument("empty resample space");
  if (resamples < 100) throw std::invalid_argument("need >= 100 resamples");
  if (!(level > 0.0 && level < 1.0)) {
    throw std::invalid_argument("level must be in (0, 1)");
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, space_size - 1);
  std::vector<double> stats;
  stats.reserve(resamples);
  std::vector<size_t> draw(space_size);
  for (int r = 0; r < resamples; ++r) {
    for (auto& idx : draw) idx = pick(rng);
    stats.push_back(estimator(draw));
  }

  double tail = (1.0 - level) / 2.0;
  BootstrapCi ci;
  ci.lo = quantile_linear(stats, tail);
  ci.hi = quantile_linear(stats, 1.0 - tail);
  ci.degenerate = (space_size == 1);
  return ci;
}

}  // namespace evo::stats

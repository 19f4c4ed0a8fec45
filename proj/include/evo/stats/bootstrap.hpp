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
#include <functional>
#include <vector>

namespace evo::stats {

// Empirical quantile with linear interpolation between order statistics.
// `values` need not be sorted.
double quantile_linear(std::vector<double> values, double q);

struct BootstrapCi {
  double lo = 0.0;
  double hi = 0.0;
  bool degenerate = false;  // single-element resample space
};

// Percentile bootstrap: draw `space_size` indices with replacement, re-run
// the estimator on the draw, and take the (1-level)/2 and 1-(1-level)/2
// quantiles of the resampled statistics. Asymmetric by construction.
// Requires resamples >= 100.
BootstrapCi bootstrap_ci(
    const std::function<double(const std::vector<size_t>&)>& estimator,
    size_t space_size, int resamples, double level, uint64_t seed);

}  // namespace evo::stats

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

#include "evo/stats/pass_at_k.hpp"

#include <stdexcept>

namespace evo::stats {

double pass_at_k(int64_t n, int64_t c, int64_t k) {
  if (c < 0 || c > n) throw std::invalid_argument("require 0 <= c <= n");
  if (k < 1 || k > n) throw std::invalid_argument("require 1 <= k <= n");
  if (c == 0) return 0.0;
  if (k > n - c) return 1.0;  // every k-subset hits a qualifying sample
  // C(n-c, k) / C(n, k) = prod_{i=0}^{k-1} (n - c - i) / (n - i)
  double miss = 1.0;
  for (int64_t i = 0; i < k; ++i) {
    miss *= static_cast<double>(n - c - i) / static_cast<double>(n - i);
  }
  return 1.0 - miss;
}

}  // namespace evo::stats

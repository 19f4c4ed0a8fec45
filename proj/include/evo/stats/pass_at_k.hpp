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

namespace evo::stats {

// Probability that a uniform k-subset of n samples contains at least one of
// the c qualifying ones: 1 - C(n-c, k) / C(n, k), computed as a telescoping
// product so it stays exact-to-double for n up to 10^6.
// Preconditions: 0 <= c <= n, 1 <= k <= n; throws std::invalid_argument.
double pass_at_k(int64_t n, int64_t c, int64_t k);

}  // namespace evo::stats

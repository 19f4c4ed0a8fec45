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

#include "evo/stats/scs_bootstrap.hpp"

namespace evo::stats {

double scs_match_probability(const BudgetedTrialSet& set, double budget) {
  if (budget < 0.0) throw std::invalid_argument("budget must be >= 0");
  for (const auto& t : set.trials) {
    for (double c : t.generation_costs) {
      if (!(c > 0.0)) throw std::invalid_argument("generation costs must be > 0");
    }
  }
  ScsMatchRecursion<double> rec(set.trials, set.target, set.direction);
  return rec.probability(budget);
}

}  // namespace evo::stats

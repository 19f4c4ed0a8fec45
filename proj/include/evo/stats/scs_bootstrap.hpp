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

#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "evo/core/score.hpp"

namespace evo::stats {

// One trial of a sequential search: per-generation spend and the best
// verified score each generation produced (nullopt when none succeeded).
template <typename Cost>
struct BasicTrialCurve {
  std::vector<Cost> generation_costs;
  std::vector<std::optional<double>> generation_best;
};

using TrialCurve = BasicTrialCurve<double>;

struct BudgetedTrialSet {
  std::vector<TrialCurve> trials;
  double target = 0.0;
  Direction direction = Direction::maximize;
};

// Probability of matching or exceeding the target when spending a budget
// trial by trial: pick uniformly among the trials whose first generation is
// affordable, search the affordable generation prefix, and when the whole
// trial fits, continue recursively into the remaining trials with the
// leftover budget. Trials with no affordable generation drop out of the
// average; an empty affordable set yields 0.
//
// Num carries both budgets and probabilities: double in production, an
// exact rational in oracle tests. The remaining budget is fully determined
// by which trials were consumed, so memoization keys on the trial subset.
template <typename Num>
class ScsMatchRecursion {
 public:
  ScsMatchRecursion(const std::vector<BasicTrialCurve<Num>>& trials,
                    double target, Direction direction)
      : trials_(trials), target_(target), direction_(direction) {
    if (trials.size() > 63) {
      throw std::invalid_argument("at most 63 trials supported");
    }
    for (const auto& t : trials) {
      if (t.generation_costs.empty() ||
          t.generation_costs.size() != t.generation_best.size()) {
        throw std::invalid_argument("malformed trial curve");
      }
    }
  }

  Num probability(Num budget) {
    memo_.clear();
    uint64_t all = trials_.empty() ? 0 : (uint64_t{1} << trials_.size()) - 1;
    return solve(all, budget);
  }

 private:
  bool prefix_matches(const BasicTrialCurve<Num>& trial, Num remaining,
                      bool* fully_affordable, Num* total_cost) const {
    Num cumulative{};
    bool any = false;
    std::optional<double> best;
    size_t g = 0;
    for (; g < trial.generation_costs.size(); ++g) {
      cumulative = cumulative + trial.generation_costs[g];
      if (remaining < cumulative) break;
      any = true;
      const auto& s = trial.generation_best[g];
      if (s && (!best || better(*s, *best, direction_))) best = s;
    }
    *fully_affordable = (g == trial.generation_costs.size());
    Num total{};
    for (const auto& c : trial.generation_costs) total = total + c;
    *total_cost = total;
    if (!any || !best) return false;
    return matches_or_exceeds(*best, target_, direction_);
  }

  Num solve(uint64_t mask, Num remaining) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;

    Num sum{};
    int affordable = 0;
    for (size_t t = 0; t < trials_.size(); ++t) {
      if (!(mask & (uint64_t{1} << t))) continue;
      const auto& trial = trials_[t];
      Num first = trial.generation_costs[0];
      if (remaining < first) continue;  // no affordable generation
      ++affordable;
      bool full = false;
      Num total{};
      bool matched = prefix_matches(trial, remaining, &full, &total);
      Num term = matched ? Num(1) : Num(0);
      if (full && !matched) {
        Num rest = solve(mask & ~(uint64_t{1} << t), remaining - total);
        if (term < rest) term = rest;
      }
      sum = sum + term;
    }
    Num result = affordable == 0 ? Num(0) : sum / Num(affordable);
    memo_.emplace(mask, result);
    return result;
  }

  const std::vector<BasicTrialCurve<Num>>& trials_;
  double target_;
  Direction direction_;
  std::unordered_map<uint64_t, Num> memo_;
};

// Production entry point over double-valued budgets.
double scs_match_probability(const BudgetedTrialSet& set, double budget);

}  // namespace evo::stats

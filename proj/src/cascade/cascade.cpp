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

#include "evo/cascade/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>

#include "evo/core/hash.hpp"
#include "evo/core/parallel.hpp"
#include "evo/stats/dominance.hpp"

namespace evo::cascade {

void CascadeConfig::validate() const {
  if (levels.size() < 2) throw std::invalid_argument("need at least 2 levels");
  for (size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].repetitions < 1) {
      throw std::invalid_argument("repetitions must be >= 1");
    }
    if (i > 0 && levels[i].repetitions <= levels[i - 1].repetitions) {
      throw std::invalid_argument("repetitions must strictly increase");
    }
    if (levels[i].promotion_threshold < 0.0 ||
        levels[i].promotion_threshold > 1.0) {
      throw std::invalid_argument("promotion threshold must be in [0, 1]");
    }
  }
  if (incumbent_pool_size < 1) {
    throw std::invalid_argument("incumbent pool size must be >= 1");
  }
}

namespace {

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / double(v.size());
}

// Dominance of `candidate` against `others`, exact when cheap, Monte Carlo
// otherwise. Deterministic either way.
double dominance_against(const std::vector<double>& candidate,
                         const std::vector<std::vector<double>>& others,
                         Direction direction, uint64_t seed) {
  stats::ScoreMatrix m;
  m.direction = direction;
  m.samples.push_back(candidate);
  double tuples = double(candidate.size());
  for (const auto& o : others) {
    m.samples.push_back(o);
    tuples *= double(o.size());
  }
  if (m.samples.size() < 2) return 1.0;  // nothing to beat
  if (tuples <= 2.0e6) {
    return stats::probability_of_dominance(m, 0);
  }
  return stats::probability_of_dominance_mc(m, 0, 200000, seed);
}

}  // namespace

CascadeOutcome run_cascade(size_t candidate_count, const EvaluateFn& evaluate,
                           const CascadeConfig& config) {
  config.validate();
  if (candidate_count == 0) {
    throw std::invalid_argument("need at least one candidate");
  }

  CascadeOutcome outcome;
  std::vector<size_t> survivors(candidate_count);
  for (size_t i = 0; i < candidate_count; ++i) survivors[i] = i;

  std::map<size_t, std::vector<double>> level_scores;

  for (size_t level = 0; level < config.levels.size(); ++level) {
    const CascadeLevel& lvl = config.levels[level];

    level_scores.clear();
    std::vector<std::optional<std::string>> failures(survivors.size());
    std::vector<std::vector<double>> scores(survivors.size());
    parallel_for(survivors.size(), config.workers, [&](size_t i) {
      size_t c = survivors[i];
      uint64_t eval_seed =
          fnv1a64_mix(fnv1a64_mix(config.seed, uint64_t(level)), uint64_t(c));
      try {
        scores[i] = evaluate(c, lvl.repetitions, eval_seed);
        if (scores[i].size() != size_t(lvl.repetitions)) {
          throw std::runtime_error("evaluator returned wrong sample count");
        }
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    });

    std::vector<size_t> evaluated;
    for (size_t i = 0; i < survivors.size(); ++i) {
      size_t c = survivors[i];
      if (failures[i]) {
        outcome.dropped.push_back({c, int(level), *failures[i]});
        continue;
      }
      outcome.log.push_back({c, int(level), scores[i]});
      outcome.total_evaluations += lvl.repetitions;
      level_scores[c] = std::move(scores[i]);
      evaluated.push_back(c);
    }
    if (evaluated.empty()) {
      throw std::runtime_error("every candidate failed at level " +
                               std::to_string(level));
    }

    const double sign = config.direction == Direction::maximize ? 1.0 : -1.0;
    std::vector<size_t> by_mean = evaluated;
    std::stable_sort(by_mean.begin(), by_mean.end(),
                     [&](size_t a, size_t b) {
                       return sign * mean_of(level_scores[a]) >
                              sign * mean_of(level_scores[b]);
                     });

    if (level + 1 == config.levels.size()) {
      // Final ranking by dominance against the other finalists.
      std::vector<std::pair<double, size_t>> ranked;
      for (size_t c : evaluated) {
        std::vector<std::vector<double>> others;
        for (size_t o : evaluated) {
          if (o != c) others.push_back(level_scores[o]);
        }
        double pod = dominance_against(level_scores[c], others,
                                       config.direction,
                                       fnv1a64_mix(config.seed, c));
        ranked.emplace_back(pod, c);
      }
      std::stable_sort(ranked.begin(), ranked.end(), [&](const auto& a,
                                                         const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return sign * mean_of(level_scores[a.second]) >
               sign * mean_of(level_scores[b.second]);
      });
      for (const auto& [pod, c] : ranked) {
        outcome.ranking.push_back(c);
        outcome.final_dominance.push_back(pod);
      }
      return outcome;
    }

    size_t pool_size =
        std::min<size_t>(config.incumbent_pool_size, by_mean.size());
    std::vector<size_t> pool(by_mean.begin(), by_mean.begin() + pool_size);

    std::vector<size_t> next;
    for (size_t c : evaluated) {
      bool is_incumbent =
          std::find(pool.begin(), pool.end(), c) != pool.end();
      if (is_incumbent) {
        next.push_back(c);
        continue;
      }
      std::vector<std::vector<double>> pool_scores;
      for (size_t p : pool) pool_scores.push_back(level_scores[p]);
      double pod = dominance_against(level_scores[c], pool_scores,
                                     config.direction,
                                     fnv1a64_mix(config.seed, c ^ level));
      if (pod >= lvl.promotion_threshold) next.push_back(c);
    }
    survivors = std::move(next);
  }
  throw std::logic_error("cascade loop ended without a final level");
}

}  // namespace evo::cascade

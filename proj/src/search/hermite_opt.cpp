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

#include "evo/search/hermite_opt.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "evo/core/hash.hpp"
#include "evo/core/parallel.hpp"

namespace evo::search {

void HermiteOptConfig::validate() const {
  if (order_k < 1) throw std::invalid_argument("order_k must be >= 1");
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (iteration_budget < 0) {
    throw std::invalid_argument("iteration_budget must be >= 0");
  }
}

namespace {

constexpr double kInvalidScore = std::numeric_limits<double>::infinity();

// The search runs in gamma_n = alpha_n * B_{4n}(0) coordinates: the root
// constraint becomes sum(gamma) = 0 and the coordinates share a common
// scale (raw alphas differ by many orders of magnitude across orders).
struct GammaSpace {
  std::vector<double> basis_at_zero;

  std::vector<double> to_alpha(const std::vector<double>& gamma) const {
    std::vector<double> alpha(gamma.size());
    for (size_t i = 0; i < gamma.size(); ++i) {
      alpha[i] = gamma[i] / basis_at_zero[i];
    }
    return alpha;
  }
};

void project_sum_zero(std::vector<double>& gamma) {
  double mean = 0.0;
  for (double g : gamma) mean += g;
  mean /= double(gamma.size());
  for (double& g : gamma) g -= mean;
}

void normalize(std::vector<double>& v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (double& x : v) x /= norm;
  }
}

double try_score(const GammaSpace& space, const std::vector<double>& gamma,
                 verifiers::HermiteBasis basis) {
  verifiers::HermiteCandidate c{space.to_alpha(gamma), basis};
  try {
    return verifiers::score_uncertainty(c);
  } catch (const verifiers::InvalidSolutionError&) {
    return kInvalidScore;
  }
}

// Cheap screening score steering the inner loop; accepted moves are
// re-checked with the full-precision score.
double try_screen(const GammaSpace& space, const std::vector<double>& gamma,
                  verifiers::HermiteBasis basis) {
  verifiers::HermiteCandidate c{space.to_alpha(gamma), basis};
  try {
    return verifiers::score_uncertainty_screen(c);
  } catch (const verifiers::InvalidSolutionError&) {
    return kInvalidScore;
  }
}

struct RestartOutcome {
  std::vector<double> gamma;
  double score = kInvalidScore;
};

RestartOutcome run_restart(const HermiteOptConfig& cfg,
                           const GammaSpace& space,
                           const std::vector<std::vector<double>>& directions,
                           uint64_t restart_seed) {
  std::mt19937_64 rng(restart_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const size_t dims = space.basis_at_zero.size();

  std::vector<double> gamma(dims);
  double screen = kInvalidScore;
  for (int attempt = 0; attempt < 64 && !std::isfinite(screen); ++attempt) {
    for (double& g : gamma) g = gauss(rng);
    project_sum_zero(gamma);
    normalize(gamma);
    screen = try_screen(space, gamma, cfg.basis);
    if (!std::isfinite(screen)) {
      // A negative leading tail flips sign under negation.
      for (double& g : gamma) g = -g;
      screen = try_screen(space, gamma, cfg.basis);
    }
  }
  double exact = try_score(space, gamma, cfg.basis);
  if (!std::isfinite(exact)) return {gamma, kInvalidScore};

  // Pattern search over projected coordinate directions plus refreshed
  // random hyperplane directions (narrow curved valleys stall pure
  // coordinate moves). A successful direction is marched with a growing
  // step; the step halves on a failed sweep and restarts from 0.5 once
  // the floor is hit while budget remains. Marches run on the screening
  // score and land only if the full-precision score agrees.
  std::vector<std::vector<double>> dirs = directions;
  dirs.resize(directions.size() + dims);

  double step = 0.5;
  std::vector<double> probe(dims);
  std::vector<double> walked(dims);
  for (int sweep = 0; sweep < cfg.iteration_budget; ++sweep) {
    if (step < 1e-7) step = 0.5;
    for (size_t extra = directions.size(); extra < dirs.size(); ++extra) {
      auto& d = dirs[extra];
      d.resize(dims);
      for (double& x : d) x = gauss(rng);
      project_sum_zero(d);
      normalize(d);
    }

    bool improved = false;
    for (const auto& dir : dirs) {
      for (double sign : {1.0, -1.0}) {
        double march = step;
        double walked_screen = screen;
        bool moved = false;
        walked = gamma;
        while (true) {
          for (size_t i = 0; i < dims; ++i) {
            probe[i] = walked[i] + sign * march * dir[i];
          }
          project_sum_zero(probe);
          normalize(probe);
          double s = try_screen(space, probe, cfg.basis);
          if (s < walked_screen) {
            walked = probe;
            walked_screen = s;
            moved = true;
            march *= 2.0;
          } else {
            break;
          }
        }
        if (moved) {
          double confirmed = try_score(space, walked, cfg.basis);
          if (confirmed < exact) {
            gamma = walked;
            screen = walked_screen;
            exact = confirmed;
            improved = true;
            break;  // resweep from the new point
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return {gamma, exact};
}

}  // namespace

HermiteOptResult optimize_hermite(const HermiteOptConfig& cfg, uint64_t seed) {
  cfg.validate();
  const size_t dims = size_t(cfg.order_k) + 1;
  GammaSpace space{verifiers::hermite_constraint_row(cfg.basis, cfg.order_k)};

  // Coordinate directions projected onto the sum-zero hyperplane.
  std::vector<std::vector<double>> directions;
  for (size_t i = 0; i < dims; ++i) {
    std::vector<double> e(dims, 0.0);
    e[i] = 1.0;
    project_sum_zero(e);
    normalize(e);
    directions.push_back(std::move(e));
  }

  std::vector<RestartOutcome> outcomes(cfg.restarts);
  int workers = cfg.workers > 0
                    ? cfg.workers
                    : std::max(1u, std::thread::hardware_concurrency());
  parallel_for(cfg.restarts, workers, [&](size_t r) {
    uint64_t restart_seed = fnv1a64_mix(seed, uint64_t(r));
    outcomes[r] = run_restart(cfg, space, directions, restart_seed);
  });

  HermiteOptResult result;
  result.best_score = kInvalidScore;
  for (const auto& out : outcomes) {
    verifiers::HermiteCandidate candidate{space.to_alpha(out.gamma),
                                          cfg.basis};
    result.restart_scores.push_back(out.score);
    result.restart_candidates.push_back(candidate);
    if (out.score < result.best_score) {
      result.best_score = out.score;
      result.best = candidate;
    }
  }
  if (!std::isfinite(result.best_score)) {
    result.best = result.restart_candidates.back();
  }
  return result;
}

}  // namespace evo::search

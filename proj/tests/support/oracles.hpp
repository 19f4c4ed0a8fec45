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

// Test-only independent oracles. These must stay decoupled from the
// implementation paths they check.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "evo/core/score.hpp"
#include "evo/stats/scs_bootstrap.hpp"
#include "evo/verifiers/circle_packing.hpp"

namespace evo::testing {

// Exact rational on int64 with gcd normalization; enough range for
// enumeration oracles over small fixtures.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  Rational() = default;
  Rational(int64_t n) : num(n), den(1) {}
  Rational(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator/(Rational a, Rational b) {
    return Rational(a.num * b.den, a.den * b.num);
  }
  friend bool operator<(Rational a, Rational b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator==(Rational a, Rational b) {
    return a.num == b.num && a.den == b.den;
  }
  double value() const { return double(num) / double(den); }
};

// Brute-force oracle for the SCS budget recursion: walk every permutation
// of the trials, skipping trials whose first generation no longer fits,
// stopping inside the first partially affordable trial, and succeeding if
// any visited affordable prefix matches the target. Returns the exact
// fraction of achieving permutations.
inline Rational scs_enumeration_oracle(
    const std::vector<stats::BasicTrialCurve<Rational>>& trials, double target,
    Direction direction, Rational budget) {
  std::vector<size_t> order(trials.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;

  int64_t achieved = 0;
  int64_t total = 0;
  do {
    ++total;
    Rational remaining = budget;
    bool hit = false;
    for (size_t t : order) {
      const auto& trial = trials[t];
      if (remaining < trial.generation_costs[0]) continue;  // never picked
      Rational cumulative;
      bool full = true;
      std::optional<double> best;
      for (size_t g = 0; g < trial.generation_costs.size(); ++g) {
        cumulative = cumulative + trial.generation_costs[g];
        if (remaining < cumulative) {
          full = false;
          break;
        }
        const auto& s = trial.generation_best[g];
        if (s && (!best || better(*s, *best, direction))) best = s;
      }
      if (best && matches_or_exceeds(*best, target, direction)) hit = true;
      if (!full) break;  // budget exhausted mid-trial
      Rational spent;
      for (const auto& c : trial.generation_costs) spent = spent + c;
      remaining = remaining - spent;
    }
    if (hit) ++achieved;
  } while (std::next_permutation(order.begin(), order.end()));

  return Rational(achieved, total);
}

// Independent disjointness/containment check over squared distances (the
// implementation under test compares square roots).
inline bool circles_valid_oracle(const verifiers::CirclePacking& p) {
  const auto& cs = p.circles;
  for (size_t i = 0; i < cs.size(); ++i) {
    for (size_t j = 0; j < cs.size(); ++j) {
      if (j <= i) continue;
      double dx = cs[i].x - cs[j].x;
      double dy = cs[i].y - cs[j].y;
      double sum = cs[i].r + cs[j].r;
      if (dx * dx + dy * dy < sum * sum) return false;
    }
  }
  for (const auto& c : cs) {
    if (c.x < c.r || c.y < c.r || c.x > 1.0 - c.r || c.y > 1.0 - c.r) {
      return false;
    }
  }
  return true;
}

// Random packings for the agreement check: valid by construction, then
// optionally broken by inflating a radius or shoving a circle outside.
inline verifiers::CirclePacking random_packing(std::mt19937_64& rng,
                                               bool make_invalid) {
  std::uniform_int_distribution<int> count(2, 12);
  std::uniform_real_distribution<double> coord(0.08, 0.92);
  std::uniform_real_distribution<double> shrink(0.35, 0.95);
  int n = count(rng);
  verifiers::CirclePacking p;
  for (int i = 0; i < n; ++i) {
    p.circles.push_back({coord(rng), coord(rng), 0.0});
  }
  for (int i = 0; i < n; ++i) {
    double limit = std::min({p.circles[i].x, p.circles[i].y,
                             1.0 - p.circles[i].x, 1.0 - p.circles[i].y});
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      double dx = p.circles[i].x - p.circles[j].x;
      double dy = p.circles[i].y - p.circles[j].y;
      limit = std::min(limit, 0.5 * std::sqrt(dx * dx + dy * dy));
    }
    p.circles[i].r = std::max(1e-4, limit * shrink(rng));
  }
  if (make_invalid) {
    std::uniform_int_distribution<int> which(0, n - 1);
    int i = which(rng);
    if (rng() % 2 == 0) {
      p.circles[i].r *= 4.0;  // overlap or boundary breach
    } else {
      p.circles[i].x += 1.0;  // clearly outside
    }
  }
  return p;
}

// P(majority of k iid Bernoulli(p) votes is correct), ties split 1/2.
// Wrong votes all share one answer, matching the two-answer pools used in
// the tests.
inline double binomial_majority_oracle(double p, int k) {
  std::vector<double> log_fact(k + 1, 0.0);
  for (int i = 1; i <= k; ++i) log_fact[i] = log_fact[i - 1] + std::log(i);
  double total = 0.0;
  for (int j = 0; j <= k; ++j) {
    double log_binom = log_fact[k] - log_fact[j] - log_fact[k - j];
    double prob = std::exp(log_binom + j * std::log(p) +
                           (k - j) * std::log1p(-p));
    if (2 * j > k) {
      total += prob;
    } else if (2 * j == k) {
      total += 0.5 * prob;
    }
  }
  return total;
}

}  // namespace evo::testing

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

#include <doctest.h>

#include <random>

#include "evo/stats/bootstrap.hpp"
#include "evo/stats/dominance.hpp"
#include "evo/stats/majority.hpp"
#include "evo/stats/pass_at_k.hpp"
#include "evo/stats/scs_bootstrap.hpp"
#include "support/oracles.hpp"

using namespace evo;
using namespace evo::stats;
using evo::testing::Rational;

TEST_CASE("pass_at_k closed-form values") {
  CHECK(pass_at_k(2000, 0, 100) == 0.0);
  CHECK(pass_at_k(4, 1, 4) == 1.0);
  // enumeration: of the C(4,2)=6 pairs, 3 contain the single hit
  CHECK(pass_at_k(4, 1, 2) == doctest::Approx(0.5));
  CHECK_THROWS(pass_at_k(4, 5, 1));
  CHECK_THROWS(pass_at_k(4, -1, 1));
  CHECK_THROWS(pass_at_k(4, 1, 0));
  CHECK_THROWS(pass_at_k(4, 1, 5));
}

TEST_CASE("pass_at_k monotonicity") {
  for (int64_t n : {10, 50, 200}) {
    for (int64_t c = 0; c <= n; c += n / 5) {
      double prev = 0.0;
      for (int64_t k = 1; k <= n; k += std::max<int64_t>(1, n / 7)) {
        double p = pass_at_k(n, c, k);
        CHECK(p >= prev - 1e-15);  // non-decreasing in k
        prev = p;
      }
    }
  }
  // non-decreasing in c, non-increasing in n
  CHECK(pass_at_k(100, 10, 5) >= pass_at_k(100, 5, 5));
  CHECK(pass_at_k(200, 5, 5) <= pass_at_k(100, 5, 5));
}

TEST_CASE("pass_at_k big-n stability") {
  double p = pass_at_k(1000000, 3, 1000);
  CHECK(p > 0.0);
  CHECK(p < 1.0);
  CHECK(p == doctest::Approx(1.0 - std::pow(1.0 - 3.0 / 1000000.0, 1000))
                 .epsilon(1e-3));
}

namespace {

BudgetedTrialSet simple_set(std::vector<TrialCurve> trials, double target,
                            Direction dir = Direction::maximize) {
  BudgetedTrialSet set;
  set.trials = std::move(trials);
  set.target = target;
  set.direction = dir;
  return set;
}

}  // namespace

TEST_CASE("scs_match_probability hand-enumerated cases") {
  // one trial fully affordable and achieving
  auto one = simple_set({TrialCurve{{1.0, 1.0}, {2.0, 5.0}}}, 4.0);
  CHECK(scs_match_probability(one, 2.0) == doctest::Approx(1.0));

  // two equal-cost trials, one achieving, budget covers exactly one
  auto two = simple_set({TrialCurve{{1.0}, {5.0}}, TrialCurve{{1.0}, {1.0}}},
                        4.0);
  CHECK(scs_match_probability(two, 1.0) == doctest::Approx(0.5));

  // three trials, budget covers any two, exactly one achieving -> 2/3
  auto three = simple_set({TrialCurve{{1.0}, {5.0}}, TrialCurve{{1.0}, {1.0}},
                           TrialCurve{{1.0}, {0.0}}},
                          4.0);
  CHECK(scs_match_probability(three, 2.0) == doctest::Approx(2.0 / 3.0));

  // no affordable trial
  CHECK(scs_match_probability(three, 0.5) == 0.0);
  CHECK_THROWS(scs_match_probability(three, -1.0));
}

TEST_CASE("scs_match_probability uses the affordable generation prefix") {
  // trial achieves only in generation 2; budget covers one generation
  auto set = simple_set(
      {TrialCurve{{1.0, 1.0, 1.0}, {0.0, std::nullopt, 9.0}}}, 5.0);
  CHECK(scs_match_probability(set, 1.0) == 0.0);
  CHECK(scs_match_probability(set, 2.0) == 0.0);
  CHECK(scs_match_probability(set, 3.0) == doctest::Approx(1.0));

  // minimize direction flips the indicator
  auto min_set = simple_set({TrialCurve{{1.0}, {0.3482}}}, 0.3521,
                            Direction::minimize);
  CHECK(scs_match_probability(min_set, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("scs recursion agrees exactly with permutation enumeration") {
  std::mt19937_64 rng(77);
  for (int instance = 0; instance < 25; ++instance) {
    int n_trials = 2 + int(rng() % 4);  // up to 5
    std::vector<stats::BasicTrialCurve<Rational>> trials;
    for (int t = 0; t < n_trials; ++t) {
      stats::BasicTrialCurve<Rational> trial;
      for (int g = 0; g < 3; ++g) {
        trial.generation_costs.push_back(Rational(1 + int64_t(rng() % 4)));
        if (rng() % 4 == 0) {
          trial.generation_best.push_back(std::nullopt);
        } else {
          trial.generation_best.push_back(double(rng() % 10));
        }
      }
      trials.push_back(std::move(trial));
    }
    double target = double(rng() % 10);
    Rational budget(int64_t(rng() % 25));

    ScsMatchRecursion<Rational> recursion(trials, target,
                                          Direction::maximize);
    Rational via_recursion = recursion.probability(budget);
    Rational via_enumeration = testing::scs_enumeration_oracle(
        trials, target, Direction::maximize, budget);
    CHECK(via_recursion == via_enumeration);
  }
}

TEST_CASE("bootstrap_ci on constant data collapses to a point") {
  auto ci = bootstrap_ci(
      [](const std::vector<size_t>&) { return 3.25; }, 50, 200, 0.95, 1);
  CHECK(ci.lo == 3.25);
  CHECK(ci.hi == 3.25);
  CHECK_FALSE(ci.degenerate);

  auto single = bootstrap_ci(
      [](const std::vector<size_t>&) { return 1.0; }, 1, 200, 0.95, 1);
  CHECK(single.degenerate);
  CHECK(single.lo == single.hi);
}

TEST_CASE("bootstrap_ci nests like its quantiles") {
  std::vector<double> data;
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss(10.0, 2.0);
  for (int i = 0; i < 40; ++i) data.push_back(gauss(rng));
  auto mean_of = [&](const std::vector<size_t>& draw) {
    double s = 0.0;
    for (size_t i : draw) s += data[i];
    return s / double(draw.size());
  };
  // same seed, same resample stream: the inner interval sits inside
  auto wide = bootstrap_ci(mean_of, data.size(), 500, 0.95, 9);
  auto narrow = bootstrap_ci(mean_of, data.size(), 500, 0.5, 9);
  CHECK(wide.lo <= narrow.lo);
  CHECK(narrow.hi <= wide.hi);
}

TEST_CASE("bootstrap_ci width shrinks with sample size") {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto width_for = [&](size_t n) {
    std::vector<double> data;
    for (size_t i = 0; i < n; ++i) data.push_back(gauss(rng));
    auto mean_of = [&](const std::vector<size_t>& draw) {
      double s = 0.0;
      for (size_t i : draw) s += data[i];
      return s / double(draw.size());
    };
    auto ci = bootstrap_ci(mean_of, n, 400, 0.95, 3);
    return ci.hi - ci.lo;
  };
  CHECK(width_for(1000) < width_for(10));
}

TEST_CASE("bootstrap_ci validates inputs") {
  auto id = [](const std::vector<size_t>&) { return 0.0; };
  CHECK_THROWS(bootstrap_ci(id, 0, 200, 0.95, 1));
  CHECK_THROWS(bootstrap_ci(id, 10, 99, 0.95, 1));
  CHECK_THROWS(bootstrap_ci(id, 10, 200, 1.5, 1));
}

TEST_CASE("dominance on constant methods") {
  ScoreMatrix m;
  m.samples = {{3.0, 3.0}, {2.0, 2.0}, {1.0, 1.0}};
  m.direction = Direction::maximize;
  CHECK(probability_of_dominance(m, 0) == 1.0);
  CHECK(probability_of_dominance(m, 1) == 0.0);
  CHECK(probability_of_dominance(m, 2) == 0.0);

  ScoreMatrix tie;
  tie.samples = {{5.0}, {5.0}, {5.0}, {5.0}};
  for (size_t f = 0; f < 4; ++f) {
    CHECK(probability_of_dominance(tie, f) == doctest::Approx(0.25));
  }
}

TEST_CASE("dominance enumerates tuples with tie splitting") {
  ScoreMatrix m;
  m.samples = {{1.0, 0.0}, {0.0, 1.0}};
  m.direction = Direction::maximize;
  // 4 tuples: S = 1, 1/2, 1/2, 0
  CHECK(probability_of_dominance(m, 0) == doctest::Approx(0.5));
  CHECK(probability_of_dominance(m, 1) == doctest::Approx(0.5));
}

TEST_CASE("dominance sums to one exactly across focus methods") {
  std::mt19937_64 rng(13);
  for (int instance = 0; instance < 20; ++instance) {
    size_t M = 2 + rng() % 3;
    ScoreMatrix m;
    m.direction = rng() % 2 ? Direction::maximize : Direction::minimize;
    for (size_t i = 0; i < M; ++i) {
      std::vector<double> s;
      size_t N = 1 + rng() % 6;
      for (size_t j = 0; j < N; ++j) s.push_back(double(rng() % 5));
      m.samples.push_back(std::move(s));
    }
    uint64_t num_total = 0;
    uint64_t den = 0;
    for (size_t f = 0; f < M; ++f) {
      auto frac = probability_of_dominance_exact(m, f);
      num_total += frac.numerator;
      den = frac.denominator;
    }
    CHECK(num_total == den);
  }
}

TEST_CASE("dominance is rank invariant under monotone transforms") {
  std::mt19937_64 rng(21);
  for (int instance = 0; instance < 10; ++instance) {
    ScoreMatrix m;
    m.direction = Direction::maximize;
    for (int i = 0; i < 3; ++i) {
      std::vector<double> s;
      for (int j = 0; j < 4; ++j) s.push_back(double(rng() % 7));
      m.samples.push_back(std::move(s));
    }
    ScoreMatrix cubed = m;
    for (auto& list : cubed.samples) {
      for (auto& v : list) v = v * v * v + 1.0;  // strictly increasing on ints
    }
    for (size_t f = 0; f < 3; ++f) {
      CHECK(probability_of_dominance(m, f) ==
            probability_of_dominance(cubed, f));
    }
  }
}

TEST_CASE("dominance Monte Carlo tracks exact mode") {
  ScoreMatrix m;
  m.samples = {{1.0, 2.0, 3.0}, {2.0, 2.0, 2.0}, {0.0, 4.0, 1.0}};
  m.direction = Direction::maximize;
  for (size_t f = 0; f < 3; ++f) {
    double exact = probability_of_dominance(m, f);
    double mc = probability_of_dominance_mc(m, f, 200000, 99);
    double se = std::sqrt(std::max(exact * (1 - exact), 1e-6) / 200000.0);
    CHECK(std::abs(mc - exact) <= 3.0 * se + 1e-3);
  }
}

TEST_CASE("dominance input validation") {
  ScoreMatrix one;
  one.samples = {{1.0}};
  CHECK_THROWS(probability_of_dominance(one, 0));
  ScoreMatrix m;
  m.samples = {{1.0}, {2.0}};
  CHECK_THROWS(probability_of_dominance(m, 2));
  ScoreMatrix empty;
  empty.samples = {{1.0}, {}};
  CHECK_THROWS(probability_of_dominance(empty, 0));
}

TEST_CASE("probability of improvement pairings") {
  std::vector<double> same{1.0, 2.0, 3.0};
  CHECK(probability_of_improvement(same, same, Pairing::all_pairs,
                                   Direction::maximize) ==
        doctest::Approx(0.5));
  CHECK(probability_of_improvement(same, same, Pairing::index_paired,
                                   Direction::maximize) ==
        doctest::Approx(0.5));

  std::vector<double> a{1.0, 2.0}, b{0.0, 0.0};
  CHECK(probability_of_improvement(a, b, Pairing::all_pairs,
                                   Direction::maximize) == 1.0);
  CHECK(probability_of_improvement(a, b, Pairing::index_paired,
                                   Direction::maximize) == 1.0);

  std::vector<double> c{0.0};
  CHECK_THROWS(probability_of_improvement(a, c, Pairing::index_paired,
                                          Direction::maximize));

  // all-pairs complements sum to one, exactly as fractions
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) {
    ScoreMatrix m;
    for (int j = 0; j < 2; ++j) {
      std::vector<double> s;
      for (int k = 0; k < 5; ++k) s.push_back(double(rng() % 4));
      m.samples.push_back(std::move(s));
    }
    auto ab = probability_of_dominance_exact(m, 0);
    auto ba = probability_of_dominance_exact(m, 1);
    CHECK(ab.numerator + ba.numerator == ab.denominator);
  }
}

TEST_CASE("majority_vote returns the mode, ties uniform") {
  std::mt19937_64 rng(1);
  CHECK(majority_vote({"42", "42", "7"}, rng) == "42");
  CHECK_THROWS(majority_vote({}, rng));

  int first = 0;
  for (int i = 0; i < 2000; ++i) {
    if (majority_vote({"a", "b"}, rng) == "a") ++first;
  }
  CHECK(first > 850);
  CHECK(first < 1150);
}

TEST_CASE("majority accuracy distribution basics") {
  AnswerPool sure;
  sure.answers = {{"42", "42", "42", "42", "42"}};
  sure.keys = {"42"};
  auto dist = majority_accuracy_distribution(sure, 3, 1, 200, 4);
  CHECK(dist.mean == doctest::Approx(1.0));

  // k=2 with a split pool: every ballot ties, coin-flip accuracy
  AnswerPool split;
  split.answers = {{"right", "wrong"}};
  split.keys = {"right"};
  auto coin = majority_accuracy_distribution(split, 2, 10, 3000, 4);
  CHECK(coin.mean == doctest::Approx(0.5).epsilon(0.05));

  CHECK_THROWS(majority_accuracy_distribution(split, 3, 1, 100, 4));
  CHECK_THROWS(majority_accuracy_distribution(split, 0, 1, 100, 4));
}

TEST_CASE("majority distribution matches the binomial oracle") {
  // pool with exactly 70/100 correct answers; drawing with replacement is
  // a Bernoulli(0.7) vote
  AnswerPool pool;
  for (int q = 0; q < 5; ++q) {
    std::vector<std::string> answers;
    for (int i = 0; i < 70; ++i) answers.push_back("A");
    for (int i = 0; i < 30; ++i) answers.push_back("B");
    pool.answers.push_back(std::move(answers));
    pool.keys.push_back("A");
  }
  auto dist = majority_accuracy_distribution(pool, 5, 2, 4000, 8);
  CHECK(dist.mean ==
        doctest::Approx(testing::binomial_majority_oracle(0.7, 5))
            .epsilon(0.02));
  CHECK(dist.quantile(0.0) <= dist.quantile(0.5));
  CHECK(dist.quantile(0.5) <= dist.quantile(1.0));
}

TEST_CASE("effective_set_size flags below the 300 floor") {
  auto ok = effective_set_size(30, 10);
  CHECK(ok.size == 300);
  CHECK_FALSE(ok.flagged);

  auto low = effective_set_size(30, 3);
  CHECK(low.size == 90);
  CHECK(low.flagged);

  auto tiny = effective_set_size(1, 1);
  CHECK(tiny.size == 1);
  CHECK(tiny.flagged);

  CHECK_THROWS(effective_set_size(0, 5));
}

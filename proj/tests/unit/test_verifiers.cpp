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

#include <cmath>
#include <numbers>
#include <random>

#include "evo/verifiers/circle_packing.hpp"
#include "evo/verifiers/hermite.hpp"
#include "evo/verifiers/kissing.hpp"
#include "evo/verifiers/point_set.hpp"
#include "evo/verifiers/problems.hpp"
#include "evo/verifiers/registry.hpp"
#include "support/oracles.hpp"

using namespace evo;
using namespace evo::verifiers;

TEST_CASE("verify_circles basics") {
  CHECK(verify_circles({{{0.5, 0.5, 0.5}}}));
  CHECK(score_circle_packing({{{0.5, 0.5, 0.5}}}).score == doctest::Approx(0.5));
  CHECK_FALSE(verify_circles({{{0.5, 0.5, 0.6}}}));
  // tangent circles pass: distance equals the radii sum exactly
  CirclePacking tangent{{{0.25, 0.5, 0.25}, {0.75, 0.5, 0.25}}};
  CHECK(verify_circles(tangent));
  CHECK(score_circle_packing(tangent).score == doctest::Approx(0.5));
}

TEST_CASE("circle scoring rejections carry reasons") {
  auto overlap = score_circle_packing({{{0.4, 0.5, 0.2}, {0.6, 0.5, 0.2}}});
  CHECK_FALSE(overlap.valid);
  CHECK(overlap.reason == "overlap(0,1)");

  auto outside = score_circle_packing({{{0.05, 0.5, 0.2}}});
  CHECK_FALSE(outside.valid);
  CHECK(outside.reason == "outside(0)");

  auto nonfinite = score_circle_packing({{{0.5, std::nan(""), 0.1}}});
  CHECK_FALSE(nonfinite.valid);
  CHECK_THROWS(verify_circles({{{0.5, std::nan(""), 0.1}}}));

  auto zero_r = score_circle_packing({{{0.5, 0.5, 0.0}}});
  CHECK_FALSE(zero_r.valid);
}

TEST_CASE("verify_circles agrees with an independent oracle on random configs") {
  std::mt19937_64 rng(2024);
  int disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    auto packing = testing::random_packing(rng, i % 2 == 1);
    if (verify_circles(packing) != testing::circles_valid_oracle(packing)) {
      ++disagreements;
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("max_min_ratio basics") {
  PointSet2D equilateral{{{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2}}};
  CHECK(max_min_ratio(equilateral) == doctest::Approx(1.0));
  PointSet2D square{{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}};
  CHECK(max_min_ratio(square) == doctest::Approx(std::sqrt(2.0)));
  PointSet2D dup{{{0.1, 0.2}, {0.1, 0.2}}};
  CHECK_THROWS_AS(max_min_ratio(dup), InvalidSolutionError);
  CHECK_THROWS_AS(max_min_ratio(PointSet2D{{{0.0, 0.0}}}),
                  InvalidSolutionError);
}

TEST_CASE("max_min_ratio is invariant under rigid motions and scaling") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    PointSet2D ps;
    for (int i = 0; i < 8; ++i) ps.points.push_back({coord(rng), coord(rng)});
    double base;
    try {
      base = max_min_ratio(ps);
    } catch (const InvalidSolutionError&) {
      continue;
    }

    double angle = coord(rng), dx = coord(rng), dy = coord(rng);
    double s = 0.25 + std::abs(coord(rng));
    PointSet2D moved;
    for (const auto& p : ps.points) {
      double rx = std::cos(angle) * p.x - std::sin(angle) * p.y;
      double ry = std::sin(angle) * p.x + std::cos(angle) * p.y;
      moved.points.push_back({s * rx + dx, s * ry + dy});
    }
    CHECK(max_min_ratio(moved) ==
          doctest::Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("heilbronn scoring on the canonical container") {
  PointSet2D vertices{{{0.0, 0.0}, {1.0, 0.0}, {0.0, 2.0}}};
  CHECK(heilbronn_min_area(vertices) == doctest::Approx(1.0));

  PointSet2D with_collinear{
      {{0.0, 0.0}, {0.5, 0.0}, {1.0, 0.0}, {0.2, 1.0}}};
  CHECK(heilbronn_min_area(with_collinear) == doctest::Approx(0.0));

  PointSet2D outside{{{0.0, 0.0}, {1.0, 0.0}, {0.9, 0.9}}};
  CHECK_THROWS_AS(heilbronn_min_area(outside), InvalidSolutionError);
}

TEST_CASE("heilbronn is permutation invariant and duplicates zero it") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PointSet2D ps;
  for (int i = 0; i < 7; ++i) {
    double a = u(rng), b = u(rng);
    if (a + b > 1.0) {
      a = 1.0 - a;
      b = 1.0 - b;
    }
    // barycentric point strictly inside (0,0),(1,0),(0,2)
    ps.points.push_back({a, 2.0 * b});
  }
  double base = heilbronn_min_area(ps);

  PointSet2D shuffled = ps;
  std::shuffle(shuffled.points.begin(), shuffled.points.end(), rng);
  CHECK(heilbronn_min_area(shuffled) == doctest::Approx(base));

  PointSet2D with_dup = ps;
  with_dup.points.push_back(ps.points[3]);
  CHECK(heilbronn_min_area(with_dup) == doctest::Approx(0.0));
}

namespace {

KissingConfiguration unit_axes() {
  KissingConfiguration config;
  for (int i = 0; i < 11; ++i) {
    for (int sign : {1, -1}) {
      std::vector<int64_t> v(11, 0);
      v[i] = sign;
      config.vectors.push_back(v);
    }
  }
  return config;
}

}  // namespace

TEST_CASE("kissing accepts the axis configuration with score 22") {
  auto result = score_kissing(unit_axes());
  CHECK(result.valid);
  CHECK(result.score == 22.0);
}

TEST_CASE("kissing rejects duplicates, zero vectors and unequal norms") {
  std::vector<int64_t> e0(11, 0);
  e0[0] = 1;
  CHECK_FALSE(score_kissing({{e0, e0}}).valid);

  CHECK_FALSE(score_kissing({{std::vector<int64_t>(11, 0)}}).valid);

  std::vector<int64_t> e1(11, 0);
  e1[1] = 2;
  CHECK_FALSE(score_kissing({{e0, e1}}).valid);

  // norm-9 pair at dot 6: 2*6 > 9, closer than 60 degrees
  std::vector<int64_t> a(11, 0), b(11, 0);
  a[0] = 3;
  b[0] = 2;
  b[1] = 2;
  b[2] = 1;
  CHECK_FALSE(score_kissing({{a, b}}).valid);
}

TEST_CASE("kissing validity survives coordinate permutation and sign flips") {
  // D11-style vectors: (+-1, +-1, 0, ...) in two coordinates
  KissingConfiguration config;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          std::vector<int64_t> v(11, 0);
          v[i] = si;
          v[j] = sj;
          config.vectors.push_back(v);
        }
      }
    }
  }
  auto base = score_kissing(config);
  CHECK(base.valid);

  std::mt19937_64 rng(3);
  std::vector<size_t> perm(11);
  for (size_t i = 0; i < 11; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> flips(11);
  for (auto& f : flips) f = rng() % 2 ? 1 : -1;

  KissingConfiguration mapped;
  for (const auto& v : config.vectors) {
    std::vector<int64_t> w(11);
    for (size_t i = 0; i < 11; ++i) w[i] = flips[i] * v[perm[i]];
    mapped.vectors.push_back(w);
  }
  auto result = score_kissing(mapped);
  CHECK(result.valid);
  CHECK(result.score == base.score);
}

TEST_CASE("uncertainty rejects the zero series") {
  CHECK_THROWS_AS(
      score_uncertainty({{0.0, 0.0, 0.0, 0.0}, HermiteBasis::physicist}),
      InvalidSolutionError);
  CHECK_THROWS_AS(score_uncertainty({{}, HermiteBasis::physicist}),
                  InvalidSolutionError);
}

TEST_CASE("uncertainty scores the H4 series at 3/(2 pi)") {
  // alpha = (-12, 1): p = H4 - 12 = 16 t^2 (t^2 - 3), outermost crossing
  // at t^2 = 3.
  double expected = 3.0 / (2.0 * std::numbers::pi);
  CHECK(score_uncertainty({{-12.0, 1.0}, HermiteBasis::physicist}) ==
        doctest::Approx(expected).epsilon(1e-12));
  // probabilist form of the same function: He4 - 0.75
  CHECK(score_uncertainty({{-0.75, 1.0}, HermiteBasis::probabilist}) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("uncertainty auto-repairs small constraint drift and rejects large") {
  double expected = 3.0 / (2.0 * std::numbers::pi);
  // |p(0)| = 1e-7 * scale: repairable
  CHECK(score_uncertainty({{-12.0 + 12e-7, 1.0}, HermiteBasis::physicist}) ==
        doctest::Approx(expected).epsilon(1e-6));
  // |p(0)| ~ 0.1 * scale: rejected
  CHECK_THROWS_AS(
      score_uncertainty({{-11.0, 1.0}, HermiteBasis::physicist}),
      InvalidSolutionError);
}

TEST_CASE("uncertainty score is invariant under positive scaling") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto row = hermite_constraint_row(HermiteBasis::physicist, 3);
  int checked = 0;
  for (int trial = 0; trial < 20 && checked < 8; ++trial) {
    std::vector<double> gamma(4);
    for (auto& g : gamma) g = gauss(rng);
    double mean = (gamma[0] + gamma[1] + gamma[2] + gamma[3]) / 4.0;
    std::vector<double> alpha(4);
    for (int i = 0; i < 4; ++i) alpha[i] = (gamma[i] - mean) / row[i];
    double base;
    try {
      base = score_uncertainty({alpha, HermiteBasis::physicist});
    } catch (const InvalidSolutionError&) {
      continue;
    }
    ++checked;
    for (double lambda : {2.0, 3.0, 0.5, 10.0}) {
      std::vector<double> scaled(alpha);
      for (auto& a : scaled) a *= lambda;
      CHECK(score_uncertainty({scaled, HermiteBasis::physicist}) ==
            doctest::Approx(base).epsilon(1e-9));
    }
    // negating flips the tail sign, which the score rejects
    std::vector<double> negated(alpha);
    for (auto& a : negated) a = -a;
    CHECK_THROWS_AS(score_uncertainty({negated, HermiteBasis::physicist}),
                    InvalidSolutionError);
  }
  CHECK(checked > 0);
}

TEST_CASE("physicist space embeds into the probabilist space") {
  // He_n = H_n / 2^n, so alpha_n H_{4n} = (alpha_n 2^{4n}) He_{4n}; padding
  // with zeros keeps the same series.
  std::mt19937_64 rng(23);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto row = hermite_constraint_row(HermiteBasis::physicist, 3);
  int checked = 0;
  for (int trial = 0; trial < 30 && checked < 10; ++trial) {
    std::vector<double> gamma(4);
    for (auto& g : gamma) g = gauss(rng);
    double mean = (gamma[0] + gamma[1] + gamma[2] + gamma[3]) / 4.0;
    std::vector<double> alpha(4);
    for (int i = 0; i < 4; ++i) alpha[i] = (gamma[i] - mean) / row[i];
    double base;
    try {
      base = score_uncertainty({alpha, HermiteBasis::physicist});
    } catch (const InvalidSolutionError&) {
      continue;
    }
    ++checked;
    std::vector<double> beta(8, 0.0);
    for (int n = 0; n < 4; ++n) beta[n] = alpha[n] * std::pow(2.0, 4 * n);
    CHECK(score_uncertainty({beta, HermiteBasis::probabilist}) ==
          doctest::Approx(base).epsilon(1e-9));
  }
  CHECK(checked > 0);
}

TEST_CASE("uncertainty root matches a dense sign scan") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (auto basis : {HermiteBasis::physicist, HermiteBasis::probabilist}) {
    int k = basis == HermiteBasis::physicist ? 3 : 7;
    auto row = hermite_constraint_row(basis, k);
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 6; ++trial) {
      std::vector<double> gamma(k + 1);
      double mean = 0.0;
      for (auto& g : gamma) {
        g = gauss(rng);
        mean += g;
      }
      mean /= double(k + 1);
      std::vector<double> alpha(k + 1);
      for (int i = 0; i <= k; ++i) alpha[i] = (gamma[i] - mean) / row[i];

      HermiteCandidate c{alpha, basis};
      double score;
      try {
        score = score_uncertainty(c);
      } catch (const InvalidSolutionError&) {
        continue;
      }
      ++checked;
      double r_impl = std::sqrt(score * 2.0 * std::numbers::pi);

      auto mono = hermite_series_monomials(c);
      auto eval = [&](double t) {
        double acc = 0.0;
        for (size_t i = mono.size(); i-- > 0;) acc = acc * t + mono[i];
        return acc;
      };
      const double t_max = 20.0;
      REQUIRE(eval(t_max) > 0.0);
      double r_scan = 0.0;
      for (double t = 1e-4; t <= t_max; t += 1e-4) {
        if (eval(t) < 0.0) r_scan = t;
      }
      CHECK(std::abs(r_impl - r_scan) <= 2e-4);
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("registry dispatch equals a direct verifier call") {
  auto registry = VerifierRegistry::builtins();
  json payload{{"circles", {{0.5, 0.5, 0.5}}}};
  auto via_registry = registry.score("circle_packing", payload);
  auto direct = score_circle_packing(circle_packing_from_payload(payload));
  CHECK(via_registry.valid == direct.valid);
  CHECK(via_registry.score == direct.score);
}

TEST_CASE("registry rejects duplicates and unknown ids") {
  auto registry = VerifierRegistry::builtins();
  CHECK_THROWS_AS(registry.add(circle_packing_verifier("circle_packing", 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(registry.at("nonexistent"), UnknownVerifierError);
  CHECK(registry.contains("kissing"));
}

TEST_CASE("payload schema violations throw SchemaError") {
  auto registry = VerifierRegistry::builtins();
  CHECK_THROWS_AS(registry.score("circle_packing", json{{"points", 1}}),
                  SchemaError);
  CHECK_THROWS_AS(
      registry.score("circle_packing", json{{"circles", {{0.5, 0.5}}}}),
      SchemaError);
  CHECK_THROWS_AS(registry.score("points_missing", json{}),
                  UnknownVerifierError);
  CHECK_THROWS_AS(
      registry.score("kissing", json{{"vectors", {{1.5, 0, 0, 0, 0, 0, 0, 0,
                                                   0, 0, 0}}}}),
      SchemaError);
  CHECK_THROWS_AS(
      registry.score("uncertainty", json{{"coefficients", {1.0}}}),
      SchemaError);  // missing basis
}

TEST_CASE("uncertainty formulations pin basis and order") {
  auto registry = VerifierRegistry::builtins();
  json wrong_basis{{"coefficients", {-0.75, 1.0}}, {"basis", "probabilist"}};
  auto r1 = registry.score("uncertainty", wrong_basis);
  CHECK_FALSE(r1.valid);

  json too_many{{"coefficients", {0, 1, 2, 3, 4, 5}}, {"basis", "physicist"}};
  auto r2 = registry.score("uncertainty", too_many);
  CHECK_FALSE(r2.valid);

  json ok{{"coefficients", {-0.75, 1.0}}, {"basis", "probabilist"}};
  auto r3 = registry.score("uncertainty_improved", ok);
  CHECK(r3.valid);
}

TEST_CASE("builtin problems are registered and consistent") {
  auto registry = VerifierRegistry::builtins();
  for (const auto& [name, problem] : builtin_problems()) {
    CHECK_NOTHROW(problem.validate());
    CHECK(registry.contains(problem.verifier_id));
    CHECK(registry.at(problem.verifier_id).schema_id ==
          problem.solution_schema_id);
  }
  CHECK(problem_by_name("circle_packing").direction == Direction::maximize);
  CHECK(problem_by_name("uncertainty").direction == Direction::minimize);
  CHECK_THROWS(problem_by_name("nonexistent"));
}

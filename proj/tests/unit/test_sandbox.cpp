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

#include <signal.h>

#include <chrono>
#include <filesystem>
#include <fstream>

#include "evo/sandbox/sandbox.hpp"
#include "evo/verifiers/registry.hpp"

using namespace evo;
using namespace evo::sandbox;

namespace {

namespace fs = std::filesystem;

ProblemSpec circle_problem() {
  ProblemSpec p;
  p.name = "circle_packing";
  p.direction = Direction::maximize;
  p.verifier_id = "circle_packing";
  p.solution_schema_id = "circle_packing";
  p.time_limit = 10.0;
  return p;
}

SandboxConfig fast_config() {
  SandboxConfig cfg;
  cfg.time_limit = 10.0;
  cfg.worker_count = 2;
  return cfg;
}

const char* kInscribed = R"(def pack_circles():
    return [(0.5, 0.5)], [0.5], 0.5
)";

}  // namespace

TEST_CASE("evaluate runs a valid candidate to success") {
  auto registry = verifiers::VerifierRegistry::builtins();
  auto outcome = evaluate(kInscribed, circle_problem(), fast_config(),
                          registry);
  CHECK(outcome.status == EvalStatus::success);
  REQUIRE(outcome.score);
  CHECK(*outcome.score == doctest::Approx(0.5));
  REQUIRE(outcome.solution);
  CHECK(outcome.wall_time > 0.0);
}

TEST_CASE("evaluate maps verifier rejection to invalid_solution") {
  auto registry = verifiers::VerifierRegistry::builtins();
  const char* too_big = R"(def pack_circles():
    return [(0.5, 0.5)], [0.6], 0.6
)";
  auto outcome = evaluate(too_big, circle_problem(), fast_config(), registry);
  CHECK(outcome.status == EvalStatus::invalid_solution);
  CHECK_FALSE(outcome.score);
  CHECK(outcome.stderr_excerpt.find("outside(0)") != std::string::npos);
}

TEST_CASE("evaluate maps exceptions to runtime_error with stderr excerpt") {
  auto registry = verifiers::VerifierRegistry::builtins();
  const char* boom = R"(def pack_circles():
    raise ValueError("search diverged")
)";
  auto outcome = evaluate(boom, circle_problem(), fast_config(), registry);
  CHECK(outcome.status == EvalStatus::runtime_error);
  CHECK(outcome.stderr_excerpt.find("search diverged") != std::string::npos);
}

TEST_CASE("evaluate maps schema-breaking payloads to parse_failure") {
  auto registry = verifiers::VerifierRegistry::builtins();
  const char* wrong_shape = R"(import json, os
with open(os.environ["EVO_SOLUTION_PATH"], "w") as f:
    f.write('{"circles": [[0.5, 0.5]]}')
raise SystemExit(0)
)";
  auto outcome =
      evaluate(wrong_shape, circle_problem(), fast_config(), registry);
  CHECK(outcome.status == EvalStatus::parse_failure);

  const char* not_json = R"(import os
with open(os.environ["EVO_SOLUTION_PATH"], "w") as f:
    f.write("certainly not json")
raise SystemExit(0)
)";
  outcome = evaluate(not_json, circle_problem(), fast_config(), registry);
  CHECK(outcome.status == EvalStatus::parse_failure);

  // clean exit without writing any payload
  const char* silent = "x = 1\n";
  outcome = evaluate(silent, circle_problem(), fast_config(), registry);
  CHECK(outcome.status == EvalStatus::parse_failure);
}

TEST_CASE("evaluate kills over-limit candidates as timeout") {
  auto registry = verifiers::VerifierRegistry::builtins();
  auto cfg = fast_config();
  cfg.time_limit = 1.0;
  const char* spin = R"(def pack_circles():
    return [], [], 0.0
while True:
    pass
)";
  auto start = std::chrono::steady_clock::now();
  auto outcome = evaluate(spin, circle_problem(), cfg, registry);
  double elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  CHECK(outcome.status == EvalStatus::timeout);
  CHECK_FALSE(outcome.score);
  CHECK(outcome.wall_time >= 1.0);
  CHECK(elapsed < 5.0);
}

TEST_CASE("timeout kill reaps the candidate's process tree") {
  auto registry = verifiers::VerifierRegistry::builtins();
  auto cfg = fast_config();
  cfg.time_limit = 1.0;

  std::string pid_path =
      (fs::temp_directory_path() / "evo_orphan_pid.txt").string();
  fs::remove(pid_path);
  std::string source =
      "import subprocess, time\n"
      "child = subprocess.Popen([\"sleep\", \"300\"])\n"
      "with open(\"" + pid_path + "\", \"w\") as f:\n"
      "    f.write(str(child.pid))\n"
      "time.sleep(300)\n";

  auto outcome = evaluate(source, circle_problem(), cfg, registry);
  CHECK(outcome.status == EvalStatus::timeout);

  std::ifstream pid_in(pid_path);
  REQUIRE(pid_in);
  pid_t child_pid = 0;
  pid_in >> child_pid;
  REQUIRE(child_pid > 0);
  // after the group kill the spawned child must be gone
  CHECK(kill(child_pid, 0) == -1);
  fs::remove(pid_path);
}

TEST_CASE("scratch directories are removed after evaluation") {
  auto registry = verifiers::VerifierRegistry::builtins();
  auto cfg = fast_config();
  std::string scratch =
      (fs::temp_directory_path() / "evo_scratch_test").string();
  fs::create_directories(scratch);
  cfg.scratch_dir = scratch;

  evaluate(kInscribed, circle_problem(), cfg, registry);
  int leftovers = 0;
  for (const auto& entry : fs::directory_iterator(scratch)) {
    (void)entry;
    ++leftovers;
  }
  CHECK(leftovers == 0);
  fs::remove_all(scratch);
}

TEST_CASE("record_wall_time=false zeroes the timing field") {
  auto registry = verifiers::VerifierRegistry::builtins();
  auto cfg = fast_config();
  cfg.record_wall_time = false;
  auto outcome = evaluate(kInscribed, circle_problem(), cfg, registry);
  CHECK(outcome.status == EvalStatus::success);
  CHECK(outcome.wall_time == 0.0);
}

TEST_CASE("empty source is rejected up front") {
  auto registry = verifiers::VerifierRegistry::builtins();
  CHECK_THROWS_AS(evaluate("", circle_problem(), fast_config(), registry),
                  std::invalid_argument);
}

TEST_CASE("batch evaluation matches sequential results") {
  auto registry = verifiers::VerifierRegistry::builtins();
  auto cfg = fast_config();
  std::vector<std::string> sources = {
      kInscribed,
      "def pack_circles():\n    return [(0.25, 0.5), (0.75, 0.5)], "
      "[0.25, 0.25], 0.5\n",
      "def pack_circles():\n    raise RuntimeError('no')\n",
      "def pack_circles():\n    return [(0.5, 0.5)], [0.7], 0.7\n",
  };
  auto batch = evaluate_batch(sources, circle_problem(), cfg, registry);
  REQUIRE(batch.size() == 4);
  CHECK(batch[0].status == EvalStatus::success);
  CHECK(*batch[0].score == doctest::Approx(0.5));
  CHECK(batch[1].status == EvalStatus::success);
  CHECK(*batch[1].score == doctest::Approx(0.5));
  CHECK(batch[2].status == EvalStatus::runtime_error);
  CHECK(batch[3].status == EvalStatus::invalid_solution);

  for (size_t i = 0; i < sources.size(); ++i) {
    auto solo = evaluate(sources[i], circle_problem(), cfg, registry);
    CHECK(solo.status == batch[i].status);
    if (solo.score) CHECK(*solo.score == doctest::Approx(*batch[i].score));
  }

  CHECK(evaluate_batch({}, circle_problem(), cfg, registry).empty());
}

TEST_CASE("one hanging candidate does not stall the batch") {
  auto registry = verifiers::VerifierRegistry::builtins();
  auto cfg = fast_config();
  cfg.time_limit = 1.5;
  cfg.worker_count = 2;
  std::vector<std::string> sources = {
      "import time\ntime.sleep(60)\n",
      kInscribed,
      kInscribed,
      kInscribed,
  };
  auto start = std::chrono::steady_clock::now();
  auto batch = evaluate_batch(sources, circle_problem(), cfg, registry);
  double elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  CHECK(batch[0].status == EvalStatus::timeout);
  CHECK(batch[1].status == EvalStatus::success);
  // well under the sum of limits (4 * 1.5s)
  CHECK(elapsed < 4.5);
}

TEST_CASE("footers exist for every builtin schema") {
  for (const char* schema :
       {"circle_packing", "points", "kissing", "uncertainty"}) {
    auto footer = serialization_footer(schema);
    CHECK(footer.find("EVO_SOLUTION_PATH") != std::string::npos);
  }
  CHECK_THROWS(serialization_footer("nonexistent"));
}

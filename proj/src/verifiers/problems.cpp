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

#include "evo/verifiers/problems.hpp"

#include <stdexcept>

namespace evo::verifiers {

namespace {

std::map<std::string, ProblemSpec> make_problems() {
  std::map<std::string, ProblemSpec> m;

  ProblemSpec circle;
  circle.name = "circle_packing";
  circle.direction = Direction::maximize;
  circle.verifier_id = "circle_packing";
  circle.solution_schema_id = "circle_packing";
  circle.time_limit = 300.0;
  circle.prompt_template_path = "prompts/circle_packing_minimal.md";
  circle.reference_bounds = {{"alphaevolve", 2.63586},
                             {"shinkaevolve", 2.63598},
                             {"iid_rs", 2.632},
                             {"scs", 2.63590}};
  m.emplace(circle.name, circle);

  ProblemSpec ratio;
  ratio.name = "max_min_ratio";
  ratio.direction = Direction::minimize;
  ratio.verifier_id = "max_min_ratio";
  ratio.solution_schema_id = "points";
  ratio.time_limit = 300.0;
  ratio.prompt_template_path = "prompts/max_min_ratio_minimal.md";
  ratio.reference_bounds = {{"alphaevolve", 12.88926},
                            {"shinkaevolve", 12.88923},
                            {"iid_rs", 12.88923},
                            {"scs", 12.88923}};
  m.emplace(ratio.name, ratio);

  ProblemSpec heil;
  heil.name = "heilbronn";
  heil.direction = Direction::maximize;
  heil.verifier_id = "heilbronn";
  heil.solution_schema_id = "points";
  heil.time_limit = 300.0;
  heil.prompt_template_path = "prompts/heilbronn_minimal.md";
  heil.reference_bounds = {{"alphaevolve", 0.0365},
                           {"shinkaevolve", 0.0356},
                           {"iid_rs", 0.0334},
                           {"scs", 0.0365}};
  m.emplace(heil.name, heil);

  ProblemSpec kiss;
  kiss.name = "kissing";
  kiss.direction = Direction::maximize;
  kiss.verifier_id = "kissing";
  kiss.solution_schema_id = "kissing";
  kiss.time_limit = 300.0;
  kiss.prompt_template_path = "prompts/kissing_minimal.md";
  kiss.reference_bounds = {{"alphaevolve", 593.0},
                           {"shinkaevolve", 402.0},
                           {"iid_rs", 438.0},
                           {"scs", 438.0}};
  m.emplace(kiss.name, kiss);

  ProblemSpec uncert;
  uncert.name = "uncertainty";
  uncert.direction = Direction::minimize;
  uncert.verifier_id = "uncertainty";
  uncert.solution_schema_id = "uncertainty";
  uncert.time_limit = 300.0;
  uncert.prompt_template_path = "prompts/uncertainty_minimal.md";
  uncert.reference_bounds = {{"alphaevolve", 0.3521},
                             {"shinkaevolve", 0.3521},
                             {"iid_rs", 0.3521},
                             {"scs", 0.3521},
                             {"prior_numeric", 0.3523}};
  m.emplace(uncert.name, uncert);

  ProblemSpec improved;
  improved.name = "uncertainty_improved";
  improved.direction = Direction::minimize;
  improved.verifier_id = "uncertainty_improved";
  improved.solution_schema_id = "uncertainty";
  improved.time_limit = 300.0;
  improved.prompt_template_path = "prompts/uncertainty_improved_minimal.md";
  improved.reference_bounds = {{"all_methods", 0.3482}};
  m.emplace(improved.name, improved);

  return m;
}

}  // namespace

const std::map<std::string, ProblemSpec>& builtin_problems() {
  static const std::map<std::string, ProblemSpec> problems = make_problems();
  return problems;
}

const ProblemSpec& problem_by_name(const std::string& name) {
  const auto& m = builtin_problems();
  auto it = m.find(name);
  if (it == m.end()) {
    throw std::invalid_argument("unknown problem: " + name);
  }
  return it->second;
}

}  // namespace evo::verifiers

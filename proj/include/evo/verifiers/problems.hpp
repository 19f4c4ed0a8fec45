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

#include <map>
#include <string>

#include "evo/core/types.hpp"

namespace evo::verifiers {

// Problem definitions for the natively scored bounds problems, keyed by
// name. Prompt template paths are relative to the data directory.
const std::map<std::string, ProblemSpec>& builtin_problems();

const ProblemSpec& problem_by_name(const std::string& name);

}  // namespace evo::verifiers

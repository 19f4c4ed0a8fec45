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
#include <stdexcept>
#include <string>
#include <vector>

namespace evo::gateway {

struct RenderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text with ${variable} placeholders. Rendering substitutes every
// placeholder exactly and leaves the rest of the text untouched; an unbound
// placeholder or missing required variable fails with its name.
struct PromptTemplate {
  std::string text;
  std::vector<std::string> required_variables;

  std::string render(const std::map<std::string, std::string>& bindings) const;

  static PromptTemplate from_file(const std::string& path);
};

}  // namespace evo::gateway

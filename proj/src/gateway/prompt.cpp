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

#include "evo/gateway/prompt.hpp"

#include <fstream>
#include <sstream>

namespace evo::gateway {

std::string PromptTemplate::render(
    const std::map<std::string, std::string>& bindings) const {
  for (const auto& var : required_variables) {
    if (!bindings.count(var)) {
      throw RenderError("required variable unbound: " + var);
    }
  }

  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    size_t open = text.find("${", pos);
    if (open == std::string::npos) {
      out.append(text, pos, std::string::npos);
      break;
    }
    size_t close = text.find('}', open + 2);
    if (close == std::string::npos) {
      out.append(text, pos, std::string::npos);
      break;
    }
    out.append(text, pos, open - pos);
    std::string name = text.substr(open + 2, close - open - 2);
    auto it = bindings.find(name);
    if (it == bindings.end()) {
      throw RenderError("unbound template variable: " + name);
    }
    out += it->second;
    pos = close + 1;
  }
  return out;
}

PromptTemplate PromptTemplate::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RenderError("cannot open prompt template: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  PromptTemplate t;
  t.text = buf.str();

  // Every placeholder present in the file is required.
  size_t pos = 0;
  while (true) {
    size_t open = t.text.find("${", pos);
    if (open == std::string::npos) break;
    size_t close = t.text.find('}', open + 2);
    if (close == std::string::npos) break;
    std::string name = t.text.substr(open + 2, close - open - 2);
    bool seen = false;
    for (const auto& v : t.required_variables) seen = seen || v == name;
    if (!seen) t.required_variables.push_back(name);
    pos = close + 1;
  }
  return t;
}

}  // namespace evo::gateway

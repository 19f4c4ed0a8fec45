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

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "evo/core/types.hpp"

namespace evo::verifiers {

// Payload is structurally wrong for the schema (missing keys, wrong arity,
// non-numeric entries). Maps to parse_failure in evaluation outcomes.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Payload parses but fails the problem's mathematical validity checks.
struct InvalidSolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownVerifierError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifierResult {
  bool valid = false;
  double score = 0.0;
  std::string reason;  // set when invalid

  static VerifierResult ok(double score) { return {true, score, ""}; }
  static VerifierResult invalid(std::string reason) {
    return {false, 0.0, std::move(reason)};
  }
};

// Scores a schema-conforming payload. Throws SchemaError when the payload
// does not match the schema at all.
using ScoreFn = std::function<VerifierResult(const json& payload)>;

class VerifierRegistry {
 public:
  struct Entry {
    std::string id;
    std::string schema_id;
    ScoreFn score;
  };

  // Throws std::invalid_argument on duplicate id.
  void add(Entry entry);
  bool contains(const std::string& id) const;
  const Entry& at(const std::string& id) const;  // throws UnknownVerifierError

  VerifierResult score(const std::string& id, const json& payload) const;

  // All verifiers for the problems this harness scores natively.
  static VerifierRegistry builtins();

 private:
  std::map<std::string, Entry> entries_;
};

}  // namespace evo::verifiers

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

#include "evo/verifiers/registry.hpp"

#include "evo/verifiers/circle_packing.hpp"
#include "evo/verifiers/hermite.hpp"
#include "evo/verifiers/kissing.hpp"
#include "evo/verifiers/point_set.hpp"

namespace evo::verifiers {

void VerifierRegistry::add(Entry entry) {
  if (entries_.count(entry.id)) {
    throw std::invalid_argument("verifier id already registered: " + entry.id);
  }
  entries_.emplace(entry.id, std::move(entry));
}

bool VerifierRegistry::contains(const std::string& id) const {
  return entries_.count(id) > 0;
}

const VerifierRegistry::Entry& VerifierRegistry::at(
    const std::string& id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) {
    throw UnknownVerifierError("unknown verifier: " + id);
  }
  return it->second;
}

VerifierResult VerifierRegistry::score(const std::string& id,
                                       const json& payload) const {
  return at(id).score(payload);
}

VerifierRegistry VerifierRegistry::builtins() {
  VerifierRegistry r;
  // Solution sizes are not pinned: a valid packing or point set of any
  // size is a (possibly weak) bound. The uncertainty formulations do pin
  // basis and order, since those define the search space.
  r.add(circle_packing_verifier("circle_packing", 0));
  r.add(max_min_ratio_verifier("max_min_ratio", 0));
  r.add(heilbronn_verifier("heilbronn", 0));
  r.add(kissing_verifier("kissing", 11));
  r.add(uncertainty_verifier("uncertainty", HermiteBasis::physicist, 3));
  r.add(uncertainty_verifier("uncertainty_improved", HermiteBasis::probabilist,
                             7));
  return r;
}

}  // namespace evo::verifiers

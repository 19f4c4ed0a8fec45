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

#include "evo/verifiers/kissing.hpp"

#include <cmath>
#include <set>

namespace evo::verifiers {

namespace {

__int128 dot(const std::vector<int64_t>& u, const std::vector<int64_t>& v) {
  __int128 acc = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    acc += static_cast<__int128>(u[i]) * static_cast<__int128>(v[i]);
  }
  return acc;
}

}  // namespace

VerifierResult score_kissing(const KissingConfiguration& config) {
  const auto& vs = config.vectors;
  if (vs.empty()) return VerifierResult::invalid("no vectors");

  const size_t dim = vs[0].size();
  __int128 norm = 0;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != dim) {
      return VerifierResult::invalid("inconsistent dimension at vector " +
                                     std::to_string(i));
    }
    __int128 n = dot(vs[i], vs[i]);
    if (n == 0) {
      return VerifierResult::invalid("zero vector at " + std::to_string(i));
    }
    if (i == 0) {
      norm = n;
    } else if (n != norm) {
      return VerifierResult::invalid("unequal squared norm at vector " +
                                     std::to_string(i));
    }
  }

  std::set<std::vector<int64_t>> distinct(vs.begin(), vs.end());
  if (distinct.size() != vs.size()) {
    return VerifierResult::invalid("duplicate vector");
  }

  for (size_t i = 0; i < vs.size(); ++i) {
    for (size_t j = i + 1; j < vs.size(); ++j) {
      if (2 * dot(vs[i], vs[j]) > norm) {
        return VerifierResult::invalid("pair (" + std::to_string(i) + "," +
                                       std::to_string(j) +
                                       ") closer than 60 degrees");
      }
    }
  }
  return VerifierResult::ok(static_cast<double>(vs.size()));
}

KissingConfiguration kissing_from_payload(const json& payload, int dimension) {
  if (!payload.is_object() || !payload.contains("vectors") ||
      !payload.at("vectors").is_array()) {
    throw SchemaError("expected object with \"vectors\" array");
  }
  KissingConfiguration config;
  for (const auto& row : payload.at("vectors")) {
    if (!row.is_array() ||
        (dimension > 0 && row.size() != static_cast<size_t>(dimension))) {
      throw SchemaError("each vector must have " + std::to_string(dimension) +
                        " integer entries");
    }
    std::vector<int64_t> v;
    v.reserve(row.size());
    for (const auto& entry : row) {
      if (entry.is_number_integer()) {
        v.push_back(entry.get<int64_t>());
      } else if (entry.is_number_float()) {
        double d = entry.get<double>();
        if (d != std::rint(d) || std::abs(d) > 9.0e15) {
          throw SchemaError("vector entries must be integers");
        }
        v.push_back(static_cast<int64_t>(d));
      } else {
        throw SchemaError("vector entries must be integers");
      }
    }
    config.vectors.push_back(std::move(v));
  }
  return config;
}

VerifierRegistry::Entry kissing_verifier(const std::string& id,
                                         int dimension) {
  return {id, "kissing", [dimension](const json& payload) {
            return score_kissing(kissing_from_payload(payload, dimension));
          }};
}

}  // namespace evo::verifiers

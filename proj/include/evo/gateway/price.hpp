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

#include "evo/gateway/backend.hpp"

namespace evo::gateway {

struct ModelPrice {
  double input = 0.0;     // dollars per input token
  double output = 0.0;    // dollars per output token
  double thinking = 0.0;  // dollars per thinking token
};

class PriceTable {
 public:
  PriceTable() = default;

  void set(const std::string& model, ModelPrice price);
  const ModelPrice& at(const std::string& model) const;  // throws if missing
  bool contains(const std::string& model) const;

  double cost(const std::string& model, const TokenUsage& usage) const;

  // Stable digest of the table contents, stored in archive headers.
  std::string digest() const;

  nlohmann::json to_json() const;
  static PriceTable from_json(const nlohmann::json& j);
  static PriceTable from_file(const std::string& path);

  // Free-of-charge table for the deterministic mock model.
  static PriceTable mock_table();

 private:
  std::map<std::string, ModelPrice> prices_;
};

}  // namespace evo::gateway

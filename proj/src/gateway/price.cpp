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

#include "evo/gateway/price.hpp"

#include <fstream>
#include <stdexcept>

#include "evo/core/hash.hpp"

namespace evo::gateway {

void PriceTable::set(const std::string& model, ModelPrice price) {
  if (price.input < 0.0 || price.output < 0.0 || price.thinking < 0.0) {
    throw std::invalid_argument("negative token price for " + model);
  }
  prices_[model] = price;
}

const ModelPrice& PriceTable::at(const std::string& model) const {
  auto it = prices_.find(model);
  if (it == prices_.end()) {
    throw std::invalid_argument("no price entry for model: " + model);
  }
  return it->second;
}

bool PriceTable::contains(const std::string& model) const {
  return prices_.count(model) > 0;
}

double PriceTable::cost(const std::string& model,
                        const TokenUsage& usage) const {
  const ModelPrice& p = at(model);
  return usage.tokens_in * p.input + usage.tokens_out * p.output +
         usage.thinking_tokens * p.thinking;
}

std::string PriceTable::digest() const { return digest_of(to_json().dump()); }

nlohmann::json PriceTable::to_json() const {
  nlohmann::json models = nlohmann::json::object();
  for (const auto& [name, p] : prices_) {
    models[name] = {
        {"input", p.input}, {"output", p.output}, {"thinking", p.thinking}};
  }
  return nlohmann::json{{"models", models}};
}

PriceTable PriceTable::from_json(const nlohmann::json& j) {
  PriceTable t;
  for (const auto& [name, p] : j.at("models").items()) {
    t.set(name, ModelPrice{p.at("input").get<double>(),
                           p.at("output").get<double>(),
                           p.at("thinking").get<double>()});
  }
  return t;
}

PriceTable PriceTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open price table: " + path);
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

PriceTable PriceTable::mock_table() {
  PriceTable t;
  // Realistic per-token prices so budget accounting in offline runs
  // exercises the same paths as live ones.
  t.set("mock-pro", ModelPrice{1.25e-6, 1.0e-5, 1.0e-5});
  return t;
}

}  // namespace evo::gateway

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

#include <memory>
#include <semaphore>

#include "evo/core/budget.hpp"
#include "evo/gateway/backend.hpp"
#include "evo/gateway/price.hpp"

namespace evo::gateway {

struct GatewayConfig {
  SamplingParams default_params;
  int max_in_flight = 4;
  int retry_attempts = 3;
  double retry_base_delay_seconds = 0.25;
};

struct Completion {
  enum class Status { ok, budget_exhausted };
  Status status = Status::ok;
  std::string program_text;   // extracted code block
  std::string response_text;  // raw model output
  std::string prompt_digest;
  TokenUsage usage;
  double dollar_cost = 0.0;
};

// Chat client with cost accounting. For dollar-unit ledgers a worst-case
// reservation is taken before the request goes out (so the cap is never
// exceeded) and settled to the actual token cost before the result is
// released; a reservation that does not fit returns budget_exhausted
// without sending anything. Transport failures are retried with
// exponential backoff before surfacing as ProviderError.
class Gateway {
 public:
  Gateway(std::shared_ptr<ChatBackend> backend, PriceTable prices,
          BudgetLedger* ledger, GatewayConfig config = {});

  Completion complete(const std::string& prompt);
  Completion complete(const std::string& prompt, const SamplingParams& params,
                      const CallContext& ctx = {});

  const PriceTable& prices() const { return prices_; }
  const std::string model() const { return backend_->model(); }

  // Last fenced code block in the response, or the whole response when no
  // fence is present.
  static std::string extract_code(const std::string& response);

 private:
  double worst_case_cost(const std::string& prompt,
                         const SamplingParams& params) const;

  std::shared_ptr<ChatBackend> backend_;
  PriceTable prices_;
  BudgetLedger* ledger_;
  GatewayConfig config_;
  std::counting_semaphore<1 << 20> slots_;
};

}  // namespace evo::gateway

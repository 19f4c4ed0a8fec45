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

#include "evo/gateway/gateway.hpp"

#include <chrono>
#include <thread>

#include "evo/core/hash.hpp"

namespace evo::gateway {

Gateway::Gateway(std::shared_ptr<ChatBackend> backend, PriceTable prices,
                 BudgetLedger* ledger, GatewayConfig config)
    : backend_(std::move(backend)),
      prices_(std::move(prices)),
      ledger_(ledger),
      config_(config),
      slots_(config.max_in_flight) {
  if (config.max_in_flight < 1) {
    throw std::invalid_argument("max_in_flight must be >= 1");
  }
  if (!prices_.contains(backend_->model())) {
    throw std::invalid_argument("price table has no entry for model " +
                                backend_->model());
  }
}

double Gateway::worst_case_cost(const std::string& prompt,
                                const SamplingParams& params) const {
  const ModelPrice& p = prices_.at(backend_->model());
  // Input tokens are bounded by the prompt byte count; output and thinking
  // by the sampling caps.
  return static_cast<double>(prompt.size()) * p.input +
         static_cast<double>(params.max_output_tokens) * p.output +
         static_cast<double>(params.thinking_budget_tokens) * p.thinking;
}

Completion Gateway::complete(const std::string& prompt) {
  return complete(prompt, config_.default_params, {});
}

Completion Gateway::complete(const std::string& prompt,
                             const SamplingParams& params,
                             const CallContext& ctx) {
  params.validate();

  Completion out;
  out.prompt_digest = digest_of(prompt);
  std::string item = ctx.item_id.empty() ? "llm:" + out.prompt_digest
                                         : ctx.item_id;

  std::optional<size_t> reservation;
  if (ledger_ && ledger_->unit() == BudgetUnit::dollars) {
    reservation = ledger_->try_reserve(item, worst_case_cost(prompt, params));
    if (!reservation) {
      out.status = Completion::Status::budget_exhausted;
      return out;
    }
  }

  slots_.acquire();
  BackendResponse resp;
  try {
    std::string last_error;
    bool done = false;
    for (int attempt = 0; attempt < config_.retry_attempts && !done;
         ++attempt) {
      try {
        resp = backend_->complete(prompt, params, ctx);
        done = true;
      } catch (const TransportError& e) {
        last_error = e.what();
        if (attempt + 1 < config_.retry_attempts) {
          auto delay = std::chrono::duration<double>(
              config_.retry_base_delay_seconds * double(1 << attempt));
          std::this_thread::sleep_for(delay);
        }
      }
    }
    if (!done) {
      throw ProviderError("transport failed after " +
                          std::to_string(config_.retry_attempts) +
                          " attempts: " + last_error);
    }
  } catch (...) {
    slots_.release();
    if (reservation) ledger_->cancel(*reservation);
    throw;
  }
  slots_.release();

  out.response_text = resp.text;
  out.program_text = extract_code(resp.text);
  out.usage = resp.usage;
  out.dollar_cost = prices_.cost(backend_->model(), resp.usage);
  if (reservation) ledger_->settle(*reservation, out.dollar_cost);
  return out;
}

std::string Gateway::extract_code(const std::string& response) {
  // Collect fence positions; blocks are consecutive pairs. Models often
  // restate snippets, so the last complete block wins.
  std::vector<size_t> fences;
  size_t pos = 0;
  while ((pos = response.find("```", pos)) != std::string::npos) {
    fences.push_back(pos);
    pos += 3;
  }
  if (fences.size() < 2) return response;
  size_t open = fences[fences.size() - (fences.size() % 2 == 0 ? 2 : 3)];
  size_t close = fences[fences.size() - (fences.size() % 2 == 0 ? 1 : 2)];

  size_t content_start = response.find('\n', open + 3);
  if (content_start == std::string::npos || content_start > close) {
    // Opening fence with no language line inside the block.
    content_start = open + 3;
  } else {
    content_start += 1;
  }
  if (content_start >= close) return "";
  return response.substr(content_start, close - content_start);
}

}  // namespace evo::gateway

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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace evo::gateway {

struct SamplingParams {
  double temperature = 0.8;
  double top_p = 0.95;
  int64_t thinking_budget_tokens = 1024;
  int64_t max_output_tokens = 16384;

  void validate() const;
  nlohmann::json to_json() const;
  static SamplingParams from_json(const nlohmann::json& j);
};

struct TokenUsage {
  int64_t tokens_in = 0;
  int64_t tokens_out = 0;
  int64_t thinking_tokens = 0;
};

// Context threaded through by callers that need deterministic behavior:
// `ordinal` identifies the call within a run (mock responses and
// record/replay keys include it), `item_id` labels ledger entries.
struct CallContext {
  std::optional<uint64_t> ordinal;
  std::string item_id;
};

struct BackendResponse {
  std::string text;
  TokenUsage usage;
};

// Transient failure (connection refused, 5xx); the gateway retries these.
struct TransportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Final provider-side failure.
struct ProviderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Replay backend asked for a prompt that is not in the transcript.
struct TranscriptMissError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  virtual BackendResponse complete(const std::string& prompt,
                                   const SamplingParams& params,
                                   const CallContext& ctx) = 0;
  virtual std::string model() const = 0;
};

}  // namespace evo::gateway

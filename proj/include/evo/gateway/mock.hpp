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

#include <atomic>
#include <map>
#include <mutex>
#include <vector>

#include "evo/gateway/backend.hpp"

namespace evo::gateway {

// Canned candidate tiers. Each tier exercises one evaluation status path:
// failing -> runtime_error, malformed -> parse_failure, invalid ->
// invalid_solution, hanging -> timeout, weak/strong -> success with
// lower/higher scores (weak strength varies with the call hash).
enum class MockTier { failing, malformed, invalid, hanging, weak, strong };

// Deterministic offline stand-in for a chat model: the response is a pure
// function of (seed, prompt digest, call index). The problem is recognized
// from entry-point markers in the prompt and the reply carries a fenced
// Python block implementing that problem's interface.
class MockBackend : public ChatBackend {
 public:
  struct Options {
    uint64_t seed = 0;
    // When non-empty, tier for call index i is scripted[i % size] instead
    // of hash-weighted. Lets tests pin exact status sequences.
    std::vector<MockTier> scripted;
    bool include_hanging = false;  // adds timeout candidates to the mix
  };

  explicit MockBackend(Options options) : options_(std::move(options)) {}

  BackendResponse complete(const std::string& prompt,
                           const SamplingParams& params,
                           const CallContext& ctx) override;
  std::string model() const override { return "mock-pro"; }

  // Concurrency instrumentation for gateway tests.
  int max_in_flight_seen() const { return max_in_flight_.load(); }

  static std::string canned_source(const std::string& prompt, MockTier tier,
                                   uint64_t variation);

 private:
  Options options_;
  std::atomic<int> in_flight_{0};
  std::atomic<int> max_in_flight_{0};
  std::mutex mu_;
  std::map<uint64_t, uint64_t> fallback_index_;  // per-digest call counter
};

}  // namespace evo::gateway

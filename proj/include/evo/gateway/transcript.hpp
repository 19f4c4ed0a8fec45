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
#include <memory>
#include <mutex>
#include <vector>

#include "evo/gateway/backend.hpp"

namespace evo::gateway {

// One recorded exchange. Keyed by (prompt digest, sequence); the sequence
// is the caller's ordinal when given, else a per-digest counter.
struct TranscriptEntry {
  std::string prompt_digest;
  uint64_t sequence = 0;
  std::string model;
  SamplingParams params;
  std::string response_text;
  TokenUsage usage;
};

std::vector<TranscriptEntry> load_transcript(const std::string& path);

// Wraps a live backend and appends every exchange to a JSONL transcript.
class RecordingBackend : public ChatBackend {
 public:
  RecordingBackend(std::shared_ptr<ChatBackend> inner, std::string path);
  BackendResponse complete(const std::string& prompt,
                           const SamplingParams& params,
                           const CallContext& ctx) override;
  std::string model() const override { return inner_->model(); }

 private:
  std::shared_ptr<ChatBackend> inner_;
  std::string path_;
  std::mutex mu_;
  std::map<std::string, uint64_t> next_sequence_;
};

// Serves recorded responses; a prompt/sequence pair that was never
// recorded raises TranscriptMissError.
class ReplayBackend : public ChatBackend {
 public:
  explicit ReplayBackend(const std::string& path);
  BackendResponse complete(const std::string& prompt,
                           const SamplingParams& params,
                           const CallContext& ctx) override;
  std::string model() const override { return model_; }

 private:
  std::map<std::pair<std::string, uint64_t>, TranscriptEntry> entries_;
  std::string model_;
  std::mutex mu_;
  std::map<std::string, uint64_t> next_sequence_;
};

}  // namespace evo::gateway

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

#include "evo/gateway/transcript.hpp"

#include <fstream>

#include "evo/core/hash.hpp"

namespace evo::gateway {

void SamplingParams::validate() const {
  if (temperature < 0.0) throw std::invalid_argument("temperature < 0");
  if (!(top_p > 0.0 && top_p <= 1.0)) {
    throw std::invalid_argument("top_p must be in (0, 1]");
  }
  if (thinking_budget_tokens < 0) {
    throw std::invalid_argument("thinking budget < 0");
  }
  if (max_output_tokens < 1) {
    throw std::invalid_argument("max output tokens < 1");
  }
}

nlohmann::json SamplingParams::to_json() const {
  return {{"temperature", temperature},
          {"top_p", top_p},
          {"thinking_budget_tokens", thinking_budget_tokens},
          {"max_output_tokens", max_output_tokens}};
}

SamplingParams SamplingParams::from_json(const nlohmann::json& j) {
  SamplingParams p;
  p.temperature = j.value("temperature", p.temperature);
  p.top_p = j.value("top_p", p.top_p);
  p.thinking_budget_tokens =
      j.value("thinking_budget_tokens", p.thinking_budget_tokens);
  p.max_output_tokens = j.value("max_output_tokens", p.max_output_tokens);
  p.validate();
  return p;
}

namespace {

nlohmann::json entry_to_json(const TranscriptEntry& e) {
  return {{"prompt_digest", e.prompt_digest},
          {"sequence", e.sequence},
          {"model", e.model},
          {"params", e.params.to_json()},
          {"response_text", e.response_text},
          {"tokens_in", e.usage.tokens_in},
          {"tokens_out", e.usage.tokens_out},
          {"thinking_tokens", e.usage.thinking_tokens}};
}

TranscriptEntry entry_from_json(const nlohmann::json& j) {
  TranscriptEntry e;
  e.prompt_digest = j.at("prompt_digest").get<std::string>();
  e.sequence = j.at("sequence").get<uint64_t>();
  e.model = j.at("model").get<std::string>();
  e.params = SamplingParams::from_json(j.at("params"));
  e.response_text = j.at("response_text").get<std::string>();
  e.usage.tokens_in = j.at("tokens_in").get<int64_t>();
  e.usage.tokens_out = j.at("tokens_out").get<int64_t>();
  e.usage.thinking_tokens = j.at("thinking_tokens").get<int64_t>();
  return e;
}

}  // namespace

std::vector<TranscriptEntry> load_transcript(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open transcript: " + path);
  std::vector<TranscriptEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    entries.push_back(entry_from_json(nlohmann::json::parse(line)));
  }
  return entries;
}

RecordingBackend::RecordingBackend(std::shared_ptr<ChatBackend> inner,
                                   std::string path)
    : inner_(std::move(inner)), path_(std::move(path)) {
  std::ofstream out(path_, std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot open transcript: " + path_);
}

BackendResponse RecordingBackend::complete(const std::string& prompt,
                                           const SamplingParams& params,
                                           const CallContext& ctx) {
  BackendResponse resp = inner_->complete(prompt, params, ctx);
  TranscriptEntry e;
  e.prompt_digest = digest_of(prompt);
  e.model = inner_->model();
  e.params = params;
  e.response_text = resp.text;
  e.usage = resp.usage;
  {
    std::lock_guard<std::mutex> lock(mu_);
    e.sequence = ctx.ordinal ? *ctx.ordinal : next_sequence_[e.prompt_digest]++;
    std::ofstream out(path_, std::ios::app);
    out << entry_to_json(e).dump() << "\n";
    if (!out) throw std::runtime_error("transcript append failed: " + path_);
  }
  return resp;
}

ReplayBackend::ReplayBackend(const std::string& path) {
  for (auto& e : load_transcript(path)) {
    model_ = e.model;
    entries_.emplace(std::make_pair(e.prompt_digest, e.sequence),
                     std::move(e));
  }
  if (model_.empty()) model_ = "replay";
}

BackendResponse ReplayBackend::complete(const std::string& prompt,
                                        const SamplingParams& /*params*/,
                                        const CallContext& ctx) {
  std::string digest = digest_of(prompt);
  uint64_t sequence;
  {
    std::lock_guard<std::mutex> lock(mu_);
    sequence = ctx.ordinal ? *ctx.ordinal : next_sequence_[digest]++;
  }
  auto it = entries_.find({digest, sequence});
  if (it == entries_.end()) {
    throw TranscriptMissError("no transcript entry for prompt digest " +
                              digest + " sequence " +
                              std::to_string(sequence));
  }
  return {it->second.response_text, it->second.usage};
}

}  // namespace evo::gateway

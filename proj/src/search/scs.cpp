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

#include <cstdio>
#include <random>

#include "evo/core/hash.hpp"
#include "evo/gateway/prompt.hpp"
#include "evo/search/engines.hpp"
#include "evo/search/internal.hpp"

namespace evo::search {

void ScsConfig::validate() const {
  if (programs_per_generation < 1 || generations_per_trial < 1 || trials < 1 ||
      conditioning_count < 1) {
    throw std::invalid_argument("SCS config fields must be >= 1");
  }
  if (conditioning_count > programs_per_generation) {
    throw std::invalid_argument(
        "conditioning_count must be <= programs_per_generation");
  }
  params.validate();
}

json ScsConfig::to_json() const {
  return {{"programs_per_generation", programs_per_generation},
          {"generations_per_trial", generations_per_trial},
          {"trials", trials},
          {"conditioning_count", conditioning_count},
          {"params", params.to_json()}};
}

ScsConfig ScsConfig::from_json(const json& j) {
  ScsConfig c;
  c.programs_per_generation =
      j.value("programs_per_generation", c.programs_per_generation);
  c.generations_per_trial =
      j.value("generations_per_trial", c.generations_per_trial);
  c.trials = j.value("trials", c.trials);
  c.conditioning_count = j.value("conditioning_count", c.conditioning_count);
  if (j.contains("params")) {
    c.params = gateway::SamplingParams::from_json(j.at("params"));
  }
  c.validate();
  return c;
}

namespace {

std::string format_score(double score) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.10g", score);
  return buf;
}

// Uniform draw of `want` distinct indices from [0, available), in sampled
// order (partial Fisher-Yates).
std::vector<size_t> sample_distinct(std::mt19937_64& rng, size_t available,
                                    size_t want) {
  std::vector<size_t> idx(available);
  for (size_t i = 0; i < available; ++i) idx[i] = i;
  for (size_t i = 0; i < want; ++i) {
    std::uniform_int_distribution<size_t> pick(i, available - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  idx.resize(want);
  return idx;
}

std::string conditioned_prompt(const EngineContext& ctx,
                               const std::vector<const CandidateRecord*>&
                                   parents) {
  gateway::PromptTemplate item;
  item.text = ctx.conditioning_item;
  std::string prompt = ctx.base_prompt;
  prompt += "\n\n";
  prompt += ctx.conditioning_header;
  prompt += "\n\n";
  for (const auto* parent : parents) {
    prompt += item.render({{"program", parent->source_text},
                           {"score", format_score(*parent->outcome->score)}});
    prompt += "\n";
  }
  return prompt;
}

}  // namespace

RunArchive run_scs(const ProblemSpec& problem, const ScsConfig& cfg,
                   EngineContext& ctx, uint64_t seed) {
  using namespace internal;
  problem.validate();
  cfg.validate();
  if (!ctx.llm || !ctx.registry || ctx.archive_path.empty() ||
      ctx.base_prompt.empty()) {
    throw std::invalid_argument("engine context incomplete");
  }

  ArchiveHeader header;
  header.problem = problem;
  header.engine = "scs";
  header.search_config = cfg.to_json();
  header.seed = seed;
  header.price_table_digest = ctx.llm->prices().digest();
  ArchiveWriter writer(ctx.archive_path, header);

  RunArchive archive;
  archive.header = header;

  uint64_t ordinal = 0;
  bool exhausted = false;

  for (int trial = 0; trial < cfg.trials && !exhausted; ++trial) {
    // Independent restart: the conditioning chain never crosses trials.
    std::vector<CandidateRecord> prev_successes;
    for (int gen = 0; gen < cfg.generations_per_trial && !exhausted; ++gen) {
      std::vector<CandidateRecord> chunk;
      std::vector<Gate> gates;
      for (int slot = 0; slot < cfg.programs_per_generation; ++slot) {
        std::string id = candidate_id(ordinal);
        Gate gate = gate_candidate(ctx.ledger, id, ctx.sandbox.time_limit);
        if (!gate.allowed) {
          exhausted = true;
          break;
        }

        std::string prompt = ctx.base_prompt;
        std::vector<std::string> parent_ids;
        if (gen > 0 &&
            prev_successes.size() >=
                static_cast<size_t>(cfg.conditioning_count)) {
          uint64_t h = fnv1a64_mix(
              fnv1a64_mix(fnv1a64_mix(seed, uint64_t(trial)), uint64_t(gen)),
              uint64_t(slot));
          std::mt19937_64 rng(h);
          auto picks = sample_distinct(rng, prev_successes.size(),
                                       cfg.conditioning_count);
          std::vector<const CandidateRecord*> parents;
          for (size_t p : picks) {
            parents.push_back(&prev_successes[p]);
            parent_ids.push_back(prev_successes[p].id);
          }
          prompt = conditioned_prompt(ctx, parents);
        }

        gateway::CallContext call;
        call.ordinal = ordinal;
        call.item_id = id;
        auto comp = ctx.llm->complete(prompt, cfg.params, call);
        if (comp.status == gateway::Completion::Status::budget_exhausted) {
          exhausted = true;
          break;
        }

        CandidateRecord rec;
        rec.id = id;
        rec.trial_index = trial;
        rec.generation_index = gen;
        rec.parent_ids = parent_ids;
        rec.source_text = comp.program_text;
        rec.prompt_digest = comp.prompt_digest;
        rec.tokens_in = comp.usage.tokens_in;
        rec.tokens_out = comp.usage.tokens_out;
        rec.thinking_tokens = comp.usage.thinking_tokens;
        rec.dollar_cost = comp.dollar_cost;
        rec.created_at = ctx.deterministic_timing ? double(ordinal)
                                                  : now_unix_seconds();
        chunk.push_back(std::move(rec));
        gates.push_back(gate);
        ++ordinal;
      }

      evaluate_chunk(chunk, gates, problem, ctx, writer, archive);

      prev_successes.clear();
      for (const auto& rec : chunk) {
        if (rec.outcome && rec.outcome->status == EvalStatus::success) {
          prev_successes.push_back(rec);
        }
      }
    }
  }
  return archive;
}

}  // namespace evo::search

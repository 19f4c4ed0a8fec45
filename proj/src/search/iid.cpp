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

#include <chrono>
#include <cstdio>

#include "evo/search/engines.hpp"
#include "evo/search/internal.hpp"

namespace evo::search {

void IidConfig::validate() const {
  if (total_samples < 1) throw std::invalid_argument("total_samples >= 1");
  params.validate();
}

json IidConfig::to_json() const {
  return {{"total_samples", total_samples}, {"params", params.to_json()}};
}

IidConfig IidConfig::from_json(const json& j) {
  IidConfig c;
  c.total_samples = j.value("total_samples", c.total_samples);
  if (j.contains("params")) {
    c.params = gateway::SamplingParams::from_json(j.at("params"));
  }
  c.validate();
  return c;
}

namespace internal {

std::string candidate_id(uint64_t ordinal) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "c%06llu",
                static_cast<unsigned long long>(ordinal));
  return buf;
}

double now_unix_seconds() {
  return std::chrono::duration<double>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

Gate gate_candidate(BudgetLedger* ledger, const std::string& id,
                    double time_limit) {
  Gate g;
  if (!ledger) return g;
  switch (ledger->unit()) {
    case BudgetUnit::dollars:
      return g;  // the gateway reserves per request
    case BudgetUnit::evaluations:
      g.allowed = ledger->try_commit(id, 1.0);
      return g;
    case BudgetUnit::wall_clock_seconds:
      g.wall_reservation = ledger->try_reserve(id, time_limit);
      g.allowed = g.wall_reservation.has_value();
      return g;
  }
  return g;
}

void settle_wall(BudgetLedger* ledger, const Gate& gate,
                 const EvaluationOutcome& outcome, double time_limit) {
  if (!ledger || !gate.wall_reservation) return;
  double actual = std::min(outcome.wall_time, time_limit);
  ledger->settle(*gate.wall_reservation, actual);
}

void evaluate_chunk(std::vector<CandidateRecord>& chunk,
                    const std::vector<Gate>& gates,
                    const ProblemSpec& problem, EngineContext& ctx,
                    ArchiveWriter& writer, RunArchive& archive) {
  std::vector<std::string> sources;
  sources.reserve(chunk.size());
  for (const auto& rec : chunk) sources.push_back(rec.source_text);
  auto outcomes =
      sandbox::evaluate_batch(sources, problem, ctx.sandbox, *ctx.registry);
  for (size_t i = 0; i < chunk.size(); ++i) {
    chunk[i].outcome = outcomes[i];
    settle_wall(ctx.ledger, gates[i], outcomes[i], ctx.sandbox.time_limit);
    writer.append(chunk[i]);
    archive.records.push_back(chunk[i]);
  }
}

}  // namespace internal

RunArchive run_iid(const ProblemSpec& problem, const IidConfig& cfg,
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
  header.engine = "iid";
  header.search_config = cfg.to_json();
  header.seed = seed;
  header.price_table_digest = ctx.llm->prices().digest();
  ArchiveWriter writer(ctx.archive_path, header);

  RunArchive archive;
  archive.header = header;

  const size_t chunk_size = std::max(1, ctx.sandbox.worker_count);
  std::vector<CandidateRecord> chunk;
  std::vector<Gate> gates;
  uint64_t ordinal = 0;
  bool exhausted = false;

  while (!exhausted && ordinal < static_cast<uint64_t>(cfg.total_samples)) {
    chunk.clear();
    gates.clear();
    while (chunk.size() < chunk_size &&
           ordinal < static_cast<uint64_t>(cfg.total_samples)) {
      std::string id = candidate_id(ordinal);
      Gate gate = gate_candidate(ctx.ledger, id, ctx.sandbox.time_limit);
      if (!gate.allowed) {
        exhausted = true;
        break;
      }
      gateway::CallContext call;
      call.ordinal = ordinal;
      call.item_id = id;
      auto comp = ctx.llm->complete(ctx.base_prompt, cfg.params, call);
      if (comp.status == gateway::Completion::Status::budget_exhausted) {
        exhausted = true;
        break;
      }
      CandidateRecord rec;
      rec.id = id;
      rec.trial_index = 0;
      rec.generation_index = 0;
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
  }
  return archive;
}

}  // namespace evo::search

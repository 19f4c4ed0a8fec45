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

#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "evo/core/budget.hpp"
#include "evo/core/types.hpp"

namespace evo {

struct ArchiveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kArchiveSchemaVersion = 1;

struct ArchiveHeader {
  int schema_version = kArchiveSchemaVersion;
  ProblemSpec problem;
  std::string engine;       // "iid", "scs", "hermite-opt", ...
  json search_config;       // engine configuration as written
  uint64_t seed = 0;
  std::string price_table_digest;
};

json to_json(const ArchiveHeader& h);
ArchiveHeader archive_header_from_json(const json& j);

// In-memory view of a run: header plus the append-only record sequence.
struct RunArchive {
  ArchiveHeader header;
  std::vector<CandidateRecord> records;
};

// Budget prefix for best_of: consider only the chronological prefix of
// records whose cumulative spend in `unit` stays within `cap`.
struct BudgetPrefix {
  BudgetUnit unit = BudgetUnit::dollars;
  double cap = 0.0;
};

// Spend attributed to one record under the given unit.
double record_cost(const CandidateRecord& r, BudgetUnit unit);

// Best success-status record within the (optional) budget prefix.
// Ties (tolerance-equal scores) go to the earliest record.
std::optional<CandidateRecord> best_of(
    const RunArchive& archive,
    const std::optional<BudgetPrefix>& budget_prefix = std::nullopt);

// Best score after each record (NaN until the first success); used to
// check that a reloaded archive reproduces the same search trace.
std::vector<double> best_so_far_curve(const RunArchive& archive);

// Line-delimited on-disk form: header object on the first line, then one
// record object per line. Appends are flushed per record so a crashed run
// leaves a loadable prefix.
class ArchiveWriter {
 public:
  ArchiveWriter(const std::string& path, const ArchiveHeader& header);
  void append(const CandidateRecord& record);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream out_;
  std::mutex mu_;
};

RunArchive load_archive(const std::string& path);

}  // namespace evo

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
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace evo {

enum class BudgetUnit { dollars, evaluations, wall_clock_seconds };

std::string to_string(BudgetUnit u);
BudgetUnit budget_unit_from_string(const std::string& s);

// Spend tracker with a hard cap. The sum of committed amounts never exceeds
// the cap: work whose worst-case cost does not fit is rejected before it
// starts. Costs that are only known afterwards (LLM token usage, wall time)
// go through reserve/settle, where the reservation is a worst-case bound
// and settling replaces it with the actual amount.
class BudgetLedger {
 public:
  struct Entry {
    std::string item_id;
    double amount = 0.0;
  };

  BudgetLedger(BudgetUnit unit, double cap);

  BudgetUnit unit() const { return unit_; }
  double cap() const { return cap_; }

  // Commits a known amount. Returns false (and records nothing) if the
  // entry would push the total past the cap.
  bool try_commit(const std::string& item_id, double amount);

  // Reserves a worst-case amount; returns the reservation handle, or
  // nullopt when the reservation would exceed the cap.
  std::optional<size_t> try_reserve(const std::string& item_id,
                                    double worst_case);

  // Replaces a reservation with the actual amount. Throws if the actual
  // exceeds the reserved worst case (that would break the cap guarantee).
  void settle(size_t reservation, double actual);

  // Drops a reservation without spending (e.g. the request failed).
  void cancel(size_t reservation);

  double spent() const;
  double remaining() const;
  std::vector<Entry> entries() const;

 private:
  BudgetUnit unit_;
  double cap_;
  mutable std::mutex mu_;
  std::vector<Entry> entries_;
  std::vector<bool> pending_;  // true while entry is an unsettled reservation
  double total_ = 0.0;
};

}  // namespace evo

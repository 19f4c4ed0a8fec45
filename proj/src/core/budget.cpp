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

#include "evo/core/budget.hpp"

#include <stdexcept>

namespace evo {

std::string to_string(BudgetUnit u) {
  switch (u) {
    case BudgetUnit::dollars:
      return "dollars";
    case BudgetUnit::evaluations:
      return "evaluations";
    case BudgetUnit::wall_clock_seconds:
      return "wall_clock_seconds";
  }
  return "dollars";
}

BudgetUnit budget_unit_from_string(const std::string& s) {
  if (s == "dollars") return BudgetUnit::dollars;
  if (s == "evaluations") return BudgetUnit::evaluations;
  if (s == "wall_clock_seconds" || s == "seconds") {
    return BudgetUnit::wall_clock_seconds;
  }
  throw std::invalid_argument("unknown budget unit: " + s);
}

BudgetLedger::BudgetLedger(BudgetUnit unit, double cap)
    : unit_(unit), cap_(cap) {
  if (!(cap > 0.0)) {
    throw std::invalid_argument("budget cap must be positive");
  }
}

bool BudgetLedger::try_commit(const std::string& item_id, double amount) {
  if (amount < 0.0) throw std::invalid_argument("negative budget amount");
  std::lock_guard<std::mutex> lock(mu_);
  if (total_ + amount > cap_) return false;
  entries_.push_back({item_id, amount});
  pending_.push_back(false);
  total_ += amount;
  return true;
}

std::optional<size_t> BudgetLedger::try_reserve(const std::string& item_id,
                                                double worst_case) {
  if (worst_case < 0.0) throw std::invalid_argument("negative reservation");
  std::lock_guard<std::mutex> lock(mu_);
  if (total_ + worst_case > cap_) return std::nullopt;
  entries_.push_back({item_id, worst_case});
  pending_.push_back(true);
  total_ += worst_case;
  return entries_.size() - 1;
}

void BudgetLedger::settle(size_t reservation, double actual) {
  std::lock_guard<std::mutex> lock(mu_);
  if (reservation >= entries_.size() || !pending_[reservation]) {
    throw std::logic_error("settle on unknown or settled reservation");
  }
  if (actual < 0.0) throw std::invalid_argument("negative settlement");
  double reserved = entries_[reservation].amount;
  if (actual > reserved + 1e-12) {
    throw std::logic_error("actual cost exceeds reserved worst case");
  }
  total_ += actual - reserved;
  entries_[reservation].amount = actual;
  pending_[reservation] = false;
}

void BudgetLedger::cancel(size_t reservation) {
  std::lock_guard<std::mutex> lock(mu_);
  if (reservation >= entries_.size() || !pending_[reservation]) {
    throw std::logic_error("cancel on unknown or settled reservation");
  }
  total_ -= entries_[reservation].amount;
  entries_[reservation].amount = 0.0;
  pending_[reservation] = false;
}

double BudgetLedger::spent() const {
  std::lock_guard<std::mutex> lock(mu_);
  return total_;
}

double BudgetLedger::remaining() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cap_ - total_;
}

std::vector<BudgetLedger::Entry> BudgetLedger::entries() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_;
}

}  // namespace evo

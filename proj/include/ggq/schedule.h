// Copyright 2026 The GGQ Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GGQ_SCHEDULE_H_
#define GGQ_SCHEDULE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ggq/counters.h"
#include "ggq/program.h"
#include "ggq/qggm_oracle.h"

namespace ggq {

struct SubroutineBudget {
  enum class Mode { kQuery, kDepth };

  Mode mode = Mode::kQuery;
  // q (quantum group operations) or d (parallel layers).
  std::size_t limit = 0;
  std::optional<MemoryPolicy> memory;

  static SubroutineBudget Query(std::size_t q,
                                std::optional<MemoryPolicy> memory = {});
  static SubroutineBudget Depth(std::size_t d);
};

std::string ToString(SubroutineBudget::Mode mode);

// Subroutines U_1..U_T are the program segments ending at each forced
// measurement; the steps after the last one form the classical stage
// A_{T+1}. The step list is the declared, non-adaptive query sequence.
struct HybridSchedule {
  Program program;
  std::vector<SubroutineBudget> budgets;

  std::size_t subroutine_count() const { return budgets.size(); }

  // Throws ConfigError when the budgets do not match the forced
  // measurements, when the final stage contains quantum group operations,
  // or when a query-bounded stage uses parallel operations.
  void Validate() const;
};

// Per-stage accounting handed to backends at each stage boundary.
struct StageReport {
  std::size_t index = 0;
  bool final_stage = false;
  OpCounters counters;
  const SubroutineBudget* budget = nullptr;
};

}  // namespace ggq

#endif  // GGQ_SCHEDULE_H_

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

#include "ggq/schedule.h"

#include "ggq/errors.h"

namespace ggq {

SubroutineBudget SubroutineBudget::Query(std::size_t q,
                                         std::optional<MemoryPolicy> memory) {
  return SubroutineBudget{Mode::kQuery, q, memory};
}

SubroutineBudget SubroutineBudget::Depth(std::size_t d) {
  return SubroutineBudget{Mode::kDepth, d, std::nullopt};
}

std::string ToString(SubroutineBudget::Mode mode) {
  return mode == SubroutineBudget::Mode::kQuery ? "query" : "depth";
}

void HybridSchedule::Validate() const {
  const std::size_t forced = program.CountSteps(StepKind::kForcedMeasurement);
  if (forced != budgets.size()) {
    throw ConfigError("schedule declares " + std::to_string(budgets.size()) +
                      " budgets for " + std::to_string(forced) +
                      " subroutines");
  }
  std::size_t stage = 0;
  for (const Step& s : program.steps) {
    if (s.kind == StepKind::kForcedMeasurement) {
      ++stage;
      continue;
    }
    if (s.kind != StepKind::kGroupOp) continue;
    if (stage == budgets.size()) {
      throw ConfigError("final classical stage contains a quantum operation");
    }
    const SubroutineBudget& b = budgets[stage];
    if (b.mode == SubroutineBudget::Mode::kQuery && s.width != 1) {
      throw ConfigError("query-bounded subroutines use width-1 operations");
    }
    if (b.memory && !b.memory->enabled) {
      throw ConfigError("memory policy attached but not enabled");
    }
  }
}

}  // namespace ggq

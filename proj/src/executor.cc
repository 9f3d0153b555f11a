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

#include "ggq/executor.h"

namespace ggq {

QggmBackend::QggmBackend(std::uint64_t order)
    : combine_(ModularCombine(order)) {}

void QggmBackend::GroupOp(StateVector& state, const Step& step,
                          const MemoryPolicy& policy) {
  const std::vector<std::size_t> regs = FirstRegisters(step.width);
  if (policy.enabled) CheckQuantumQuery(policy, state, regs, step.qracm);
  ApplyGroupOperation(state, regs, combine_);
}

void QggmBackend::Equality(StateVector& state, const Step& step) {
  ApplyEqualityOperation(state, FirstRegisters(step.width));
}

void QggmBackend::ClassicalOp(StateVector& state, const QueryTriple& triple,
                              std::size_t query, const MemoryPolicy& policy) {
  if (policy.enabled) {
    CheckPolicy(policy, QueryKind::kClassicalOp, {&triple, 1}, {});
  }
  const std::size_t reg[] = {query};
  ApplyGroupOperation(state, reg, combine_);
}

static_assert(OracleBackend<QggmBackend>);

}  // namespace ggq

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

#include "ggq/group_oracle.h"

#include <algorithm>
#include <string>

#include "ggq/errors.h"

namespace ggq {

GgmOracle::GgmOracle(GroupSpec spec, std::span<const Residue> inputs)
    : spec_(spec), input_count_(inputs.size()), high_water_(inputs.size()) {
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!spec_.Contains(inputs[i])) {
      throw DomainError("input " + std::to_string(i + 1) + " = " +
                        std::to_string(inputs[i]) + " is outside Z_" +
                        std::to_string(spec_.order()));
    }
    table_[i + 1] = inputs[i];
  }
}

void GgmOracle::CheckIndex(Index i) {
  if (i == 0) throw DomainError("table indices start at 1");
}

Residue GgmOracle::Read(Index i) const {
  auto it = table_.find(i);
  return it == table_.end() ? 0 : it->second;
}

void GgmOracle::GroupOp(bool subtract, Index i, Index j, Index k) {
  CheckIndex(i);
  CheckIndex(j);
  CheckIndex(k);
  Residue a = Read(i), b = Read(j);
  table_[k] = subtract ? spec_.Sub(a, b) : spec_.Add(a, b);
  high_water_ = std::max({high_water_, i, j, k});
  ++counters_.classical_ops;
}

bool GgmOracle::Equal(Index i, Index j) {
  CheckIndex(i);
  CheckIndex(j);
  ++counters_.equality_queries;
  return Read(i) == Read(j);
}

Residue GgmOracle::Output(Index i) const {
  CheckIndex(i);
  return Read(i);
}

}  // namespace ggq

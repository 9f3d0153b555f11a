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

#ifndef GGQ_GROUP_ORACLE_H_
#define GGQ_GROUP_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>

#include "ggq/counters.h"
#include "ggq/group.h"

namespace ggq {

// 1-based table index.
using Index = std::uint64_t;

// Classical generic group oracle. The table maps every positive index to an
// element of Z_N; untouched indices read as the identity.
class GgmOracle {
 public:
  // Inputs land at indices 1..m. Throws DomainError on out-of-range inputs.
  GgmOracle(GroupSpec spec, std::span<const Residue> inputs);

  // T(k) := T(i) + (-1)^b T(j). Indices may coincide.
  void GroupOp(bool subtract, Index i, Index j, Index k);

  // Free: increments only equality_queries.
  bool Equal(Index i, Index j);

  // Output channel (and referee access). Not a query.
  Residue Output(Index i) const;

  // One past the largest index ever written or read as input.
  Index NextFreeIndex() const { return high_water_ + 1; }

  const GroupSpec& spec() const { return spec_; }
  std::size_t input_count() const { return input_count_; }
  const OpCounters& counters() const { return counters_; }
  const std::map<Index, Residue>& entries() const { return table_; }

 private:
  Residue Read(Index i) const;
  static void CheckIndex(Index i);

  GroupSpec spec_;
  std::map<Index, Residue> table_;
  std::size_t input_count_;
  Index high_water_;
  OpCounters counters_;
};

}  // namespace ggq

#endif  // GGQ_GROUP_ORACLE_H_

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

#ifndef GGQ_COUNTERS_H_
#define GGQ_COUNTERS_H_

#include <algorithm>
#include <cstdint>

namespace ggq {

// Oracle query counts. Equality queries are recorded but never enter a
// complexity total.
struct OpCounters {
  std::uint64_t classical_ops = 0;
  std::uint64_t quantum_ops = 0;
  std::uint64_t quantum_depth = 0;
  std::uint64_t equality_queries = 0;
  std::uint64_t parallel_width_max = 0;

  std::uint64_t group_ops() const { return classical_ops + quantum_ops; }

  OpCounters& operator+=(const OpCounters& o) {
    classical_ops += o.classical_ops;
    quantum_ops += o.quantum_ops;
    quantum_depth += o.quantum_depth;
    equality_queries += o.equality_queries;
    parallel_width_max = std::max(parallel_width_max, o.parallel_width_max);
    return *this;
  }

  friend OpCounters operator+(OpCounters a, const OpCounters& b) {
    a += b;
    return a;
  }
  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

}  // namespace ggq

#endif  // GGQ_COUNTERS_H_

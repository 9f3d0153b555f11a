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

#include <cmath>

#include "ggq/algorithms.h"
#include "ggq/errors.h"

namespace ggq {

BsgsResult Bsgs(const DlInstance& instance) {
  GgmOracle oracle = instance.MakeOracle();
  return Bsgs(oracle);
}

BsgsResult Bsgs(GgmOracle& oracle) {
  const std::uint64_t n = oracle.spec().order();
  std::uint64_t m = static_cast<std::uint64_t>(std::ceil(std::sqrt(n)));
  while (m * m < n) ++m;
  Index next = oracle.NextFreeIndex();
  const Index zero = next++;
  auto add = [&](bool subtract, Index a, Index b) {
    const Index k = next++;
    oracle.GroupOp(subtract, a, b, k);
    return k;
  };
  // baby[j] holds j*g.
  std::vector<Index> baby = {zero, 1};
  while (baby.size() < m) baby.push_back(add(false, baby.back(), 1));
  Index gamma = 2;
  Index giant = 0;
  for (std::uint64_t i = 0; i < m; ++i) {
    for (std::uint64_t j = 0; j < baby.size(); ++j) {
      if (oracle.Equal(gamma, baby[j])) {
        return BsgsResult{(i * m + j) % n, oracle.counters()};
      }
    }
    if (i + 1 == m) break;
    if (giant == 0) giant = add(false, baby.back(), 1);
    gamma = add(true, gamma, giant);
  }
  throw InvariantError("baby-step giant-step found no logarithm");
}

}  // namespace ggq

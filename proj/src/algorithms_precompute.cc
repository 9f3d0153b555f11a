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

#include <utility>

#include "ggq/algorithms.h"
#include "ggq/errors.h"

namespace ggq {

std::vector<Residue> DlInstance::Inputs() const {
  return {spec.Reduce(static_cast<std::int64_t>(g % spec.order())),
          spec.Mul(x, g)};
}

GgmOracle DlInstance::MakeOracle() const {
  const std::vector<Residue> in = Inputs();
  return GgmOracle(spec, in);
}

std::vector<Residue> MdlInstance::Inputs() const {
  std::vector<Residue> in = {g % spec.order()};
  for (Residue x : xs) in.push_back(spec.Mul(x, g));
  return in;
}

GgmOracle MdlInstance::MakeOracle() const {
  const std::vector<Residue> in = Inputs();
  return GgmOracle(spec, in);
}

Index PrecomputedPowers::Slot(int side, std::size_t i, std::size_t k) const {
  if (side < 0 || side > 1 || i >= n_p_ || k < 1 || k >= p_) {
    throw DomainError("no such precomputed element");
  }
  return slots_[side][i * (p_ - 1) + (k - 1)];
}

std::vector<Index> PrecomputedPowers::DigitSlots(int side,
                                                 std::size_t i) const {
  std::vector<Index> out;
  for (std::size_t k = 1; k < p_; ++k) out.push_back(Slot(side, i, k));
  return out;
}

PrecomputedPowers BuildPrecomputed(GgmOracle& oracle, std::size_t p) {
  if (p < 2) throw DomainError("base p must be at least 2");
  if (oracle.input_count() < 2) {
    throw DomainError("precomputation needs g and xg at indices 1 and 2");
  }
  const GroupSpec& spec = oracle.spec();
  PrecomputedPowers pre;
  pre.p_ = p;
  pre.n_p_ = static_cast<std::size_t>(CeilLog(p, spec.order()));
  Index next = oracle.NextFreeIndex();
  std::vector<Residue> coeff_of(next, 0);
  std::vector<int> side_of(next, 0);
  auto add = [&](Index a, Index b, int side, Residue c) {
    const Index k = next++;
    oracle.GroupOp(false, a, b, k);
    pre.ops_ += 1;
    coeff_of.push_back(c);
    side_of.push_back(side);
    return k;
  };
  for (int side = 0; side < 2; ++side) {
    std::vector<Index>& s = pre.slots_[side];
    const Index base = static_cast<Index>(side + 1);
    coeff_of[base] = 1;
    side_of[base] = side;
    Residue power = 1;
    for (std::size_t i = 0; i < pre.n_p_; ++i) {
      if (i == 0) {
        s.push_back(base);
      } else {
        power = spec.Mul(power, p);
        s.push_back(add(s[(i - 1) * (p - 1) + (p - 2)], s[(i - 1) * (p - 1)],
                        side, power));
      }
      for (std::size_t k = 2; k < p; ++k) {
        s.push_back(add(s.back(), s[i * (p - 1)], side, spec.Mul(power, k)));
      }
    }
  }
  for (Index idx = 1; idx < next; ++idx) {
    std::vector<Residue> c(3, 0);
    c[1 + side_of[idx]] = coeff_of[idx];
    pre.forms_.push_back(LinearForm::FromCoefficients(std::move(c), spec));
  }
  return pre;
}

std::uint32_t Digit(std::uint64_t a, std::size_t p, std::size_t i) {
  for (std::size_t k = 0; k < i; ++k) a /= p;
  return static_cast<std::uint32_t>(a % p);
}

std::uint64_t TreeCapacity(std::size_t depth) {
  std::vector<std::uint64_t> g(depth + 1, 0);
  for (std::size_t d = 1; d <= depth; ++d) {
    for (std::size_t l = 1; l <= d; ++l) {
      g[d] += std::max<std::uint64_t>(1, std::min(g[l - 1], g[d - l]));
    }
  }
  return g[depth];
}

std::size_t TreeDepth(std::size_t leaves) {
  std::size_t d = 0;
  while (TreeCapacity(d) < leaves) ++d;
  return d;
}

}  // namespace ggq

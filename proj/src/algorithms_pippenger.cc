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

#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

#include "ggq/algorithms.h"
#include "ggq/errors.h"

namespace ggq {
namespace {

constexpr std::uint64_t kInfinity = std::numeric_limits<std::uint64_t>::max();

std::uint64_t WindowDigit(std::uint64_t e, std::size_t lo, std::size_t c) {
  return (e >> lo) & ((std::uint64_t{1} << c) - 1);
}

// Bucket fills plus the running-sum aggregation of one window. The first
// assignment to a bucket, to R and to S aliases an existing index.
std::pair<std::uint64_t, bool> WindowCost(
    std::span<const std::uint64_t> exponents, std::size_t lo, std::size_t c) {
  std::map<std::uint64_t, int> buckets;
  std::uint64_t ops = 0;
  for (std::uint64_t e : exponents) {
    const std::uint64_t d = WindowDigit(e, lo, c);
    if (d == 0) continue;
    if (buckets[d]++ > 0) ++ops;
  }
  if (buckets.empty()) return {0, false};
  bool r = false;
  bool s = false;
  for (std::uint64_t b = buckets.rbegin()->first; b >= 1; --b) {
    if (buckets.contains(b)) {
      if (r) ++ops;
      r = true;
    }
    if (r) {
      if (s) ++ops;
      s = true;
    }
  }
  return {ops, true};
}

struct Plan {
  // Windows as (lo, width), most significant first.
  std::vector<std::pair<std::size_t, std::size_t>> windows;
  std::uint64_t ops = 0;
};

Plan PlanWindows(std::span<const std::uint64_t> exponents) {
  std::uint64_t top = 0;
  for (std::uint64_t e : exponents) top = std::max(top, e);
  Plan plan;
  if (top == 0) return plan;
  const std::size_t bits = static_cast<std::size_t>(std::bit_width(top));
  // cost[hi][acc] covers bits [0, hi) given whether the accumulator holds a
  // value.
  std::vector<std::array<std::uint64_t, 2>> cost(bits + 1,
                                                 {kInfinity, kInfinity});
  std::vector<std::array<std::size_t, 2>> choice(bits + 1, {0, 0});
  cost[0] = {0, 0};
  for (std::size_t hi = 1; hi <= bits; ++hi) {
    for (int acc = 0; acc < 2; ++acc) {
      for (std::size_t c = 1; c <= hi; ++c) {
        const std::size_t lo = hi - c;
        auto [ops, nonempty] = WindowCost(exponents, lo, c);
        if (acc) ops += c;
        if (nonempty && acc) ops += 1;
        const int next = (acc || nonempty) ? 1 : 0;
        const std::uint64_t total = ops + cost[lo][next];
        if (total < cost[hi][acc]) {
          cost[hi][acc] = total;
          choice[hi][acc] = c;
        }
      }
    }
  }
  plan.ops = cost[bits][0];
  std::size_t hi = bits;
  int acc = 0;
  while (hi > 0) {
    const std::size_t c = choice[hi][acc];
    const std::size_t lo = hi - c;
    plan.windows.emplace_back(lo, c);
    if (WindowCost(exponents, lo, c).second) acc = 1;
    hi = lo;
  }
  return plan;
}

}  // namespace

std::uint64_t PippengerCost(std::span<const std::uint64_t> exponents) {
  return PlanWindows(exponents).ops;
}

double PippengerBound(std::size_t m, std::uint64_t max_exponent) {
  const double lb = std::log2(static_cast<double>(max_exponent));
  const double x = static_cast<double>(m) * lb;
  const double l = x > 0 ? std::log2(x) : 0.0;
  if (l <= 0) return std::numeric_limits<double>::infinity();
  return 2.0 * (lb + static_cast<double>(m) * lb / l);
}

MultiexpResult PippengerMultiexp(GgmOracle& oracle,
                                 std::span<const Index> bases,
                                 std::span<const std::uint64_t> exponents) {
  if (bases.size() != exponents.size()) {
    throw DomainError("one exponent per base");
  }
  const Plan plan = PlanWindows(exponents);
  MultiexpResult result;
  Index next = oracle.NextFreeIndex();
  auto add = [&](Index a, Index b) {
    const Index k = next++;
    oracle.GroupOp(false, a, b, k);
    ++result.ops;
    return k;
  };
  std::optional<Index> acc;
  for (const auto& [lo, c] : plan.windows) {
    if (acc) {
      for (std::size_t k = 0; k < c; ++k) acc = add(*acc, *acc);
    }
    std::map<std::uint64_t, Index> buckets;
    for (std::size_t i = 0; i < bases.size(); ++i) {
      const std::uint64_t d = WindowDigit(exponents[i], lo, c);
      if (d == 0) continue;
      auto it = buckets.find(d);
      if (it == buckets.end()) {
        buckets.emplace(d, bases[i]);
      } else {
        it->second = add(it->second, bases[i]);
      }
    }
    if (buckets.empty()) continue;
    std::optional<Index> r;
    std::optional<Index> s;
    for (std::uint64_t b = buckets.rbegin()->first; b >= 1; --b) {
      if (auto it = buckets.find(b); it != buckets.end()) {
        r = r ? add(*r, it->second) : it->second;
      }
      if (r) s = s ? add(*s, *r) : *r;
    }
    acc = acc ? add(*acc, *s) : *s;
  }
  result.index = acc ? *acc : next;
  if (result.ops != plan.ops) {
    throw InvariantError("multi-exponentiation cost disagrees with its plan");
  }
  return result;
}

}  // namespace ggq

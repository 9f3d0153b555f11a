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

#include "ggq/group.h"

#include <string>

#include "ggq/errors.h"

namespace ggq {
namespace {

using u128 = unsigned __int128;

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t PowMod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = MulMod(r, a, m);
    a = MulMod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact below 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int CeilLog(std::uint64_t base, std::uint64_t n) {
  if (base < 2) throw DomainError("CeilLog: base must be at least 2");
  int k = 1;
  u128 power = base;
  while (power < n) {
    power *= base;
    ++k;
  }
  return k;
}

GroupSpec::GroupSpec(std::uint64_t order)
    : order_(order), is_prime_(IsPrime(order)) {
  if (order < 2) throw DomainError("group order must be at least 2");
  if (order > kMaxOrder) throw DomainError("group order exceeds 2^32");
}

GroupSpec GroupSpec::Prime(std::uint64_t order) {
  GroupSpec spec(order);
  if (!spec.is_prime()) {
    throw DomainError("group order " + std::to_string(order) + " is not prime");
  }
  return spec;
}

Residue GroupSpec::Reduce(std::int64_t v) const {
  auto n = static_cast<std::int64_t>(order_);
  std::int64_t r = v % n;
  return static_cast<Residue>(r < 0 ? r + n : r);
}

Residue GroupSpec::Inverse(Residue a) const {
  std::int64_t old_r = static_cast<std::int64_t>(a % order_);
  std::int64_t r = static_cast<std::int64_t>(order_);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw DomainError(std::to_string(a) + " is not invertible mod " +
                      std::to_string(order_));
  }
  return Reduce(old_s);
}

}  // namespace ggq

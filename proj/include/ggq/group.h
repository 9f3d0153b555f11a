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

#ifndef GGQ_GROUP_H_
#define GGQ_GROUP_H_

#include <cstdint>

namespace ggq {

// Group elements are written additively: g^x is identified with x in Z_N.
using Residue = std::uint64_t;

// Deterministic primality test, exact for every 64-bit input.
bool IsPrime(std::uint64_t n);

// Smallest k >= 1 with base^k >= n. Requires base >= 2.
int CeilLog(std::uint64_t base, std::uint64_t n);

// Order of the cyclic group and the arithmetic of Z_N.
class GroupSpec {
 public:
  // Orders are limited to 32 bits so products fit in 64-bit words.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;

  explicit GroupSpec(std::uint64_t order);

  // Throws DomainError when `order` is composite.
  static GroupSpec Prime(std::uint64_t order);

  std::uint64_t order() const { return order_; }
  bool is_prime() const { return is_prime_; }

  Residue Reduce(std::int64_t v) const;
  Residue Add(Residue a, Residue b) const { return (a + b) % order_; }
  Residue Sub(Residue a, Residue b) const {
    return (a + order_ - b % order_) % order_;
  }
  Residue Neg(Residue a) const { return (order_ - a % order_) % order_; }
  Residue Mul(Residue a, Residue b) const {
    return (a % order_) * (b % order_) % order_;
  }
  // Throws DomainError when gcd(a, N) != 1.
  Residue Inverse(Residue a) const;
  bool Contains(Residue a) const { return a < order_; }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::uint64_t order_;
  bool is_prime_;
};

}  // namespace ggq

#endif  // GGQ_GROUP_H_

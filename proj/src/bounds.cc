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

#include "ggq/bounds.h"

#include <cmath>
#include <numbers>

#include "ggq/errors.h"

namespace ggq {
namespace {

BigInt Pow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

BigInt PowOfTwo(std::uint64_t exp) {
  if (exp > (std::uint64_t{1} << 24))
    throw SizeError("bound exponent too large");
  return BigInt(1) << static_cast<unsigned>(exp);
}

// 2^{2^d}(m+Q+1)^{2^d}.
BigInt DepthCore(std::uint64_t m, std::uint64_t ops, std::uint64_t d) {
  if (d > 24) throw SizeError("depth too large for an exact bound");
  const std::uint64_t e = std::uint64_t{1} << d;
  return PowOfTwo(e) * Pow(m + ops + 1, e);
}

// 2^{q+1}(m+Q+1)^{2q}.
BigInt QueryCore(std::uint64_t m, std::uint64_t ops, std::uint64_t q) {
  return PowOfTwo(q + 1) * Pow(m + ops + 1, 2 * q);
}

BigInt MemoryCore(std::uint64_t t, std::uint64_t r, std::uint64_t q) {
  const std::uint64_t base = t == 0 ? 1 : 2 * t * (t - 1 + r) + 1;
  return 2 * Pow(base, q);
}

}  // namespace

BigInt BasicSimulationBound(std::uint64_t d, std::uint64_t m) {
  return PowOfTwo((d + 1) * m);
}

BigInt QuerySubroutineBound(std::uint64_t m, std::uint64_t ops,
                            std::uint64_t q) {
  return ops + QueryCore(m, ops, q);
}

BigInt DepthLemmaBound(std::uint64_t m, std::uint64_t ops, std::uint64_t d) {
  return DepthCore(m, ops, d);
}

BigInt DepthSubroutineBound(std::uint64_t m, std::uint64_t ops,
                            std::uint64_t d) {
  return ops + DepthCore(m, ops, d);
}

BigInt MemorySubroutineBound(std::uint64_t classical_ops, std::uint64_t t,
                             std::uint64_t r, std::uint64_t q) {
  return classical_ops + MemoryCore(t, r, q);
}

BigInt HybridQueryBound(std::uint64_t ops, std::uint64_t subroutines,
                        std::uint64_t m, std::uint64_t q) {
  return ops + subroutines * QueryCore(m, ops, q);
}

BigInt HybridDepthBound(std::uint64_t ops, std::uint64_t subroutines,
                        std::uint64_t m, std::uint64_t d) {
  return ops + subroutines * DepthCore(m, ops, d);
}

BigInt HybridMemoryBound(std::uint64_t classical_ops, std::uint64_t subroutines,
                         std::uint64_t t, std::uint64_t r, std::uint64_t q) {
  return classical_ops + subroutines * MemoryCore(t, r, q);
}

double QggmDlBound(std::uint64_t d, std::uint64_t order) {
  return std::ldexp(1.0, static_cast<int>(4 * d)) / static_cast<double>(order);
}

double QggmCdhBound(std::uint64_t d, std::uint64_t order) {
  return std::ldexp(1.0, static_cast<int>(8 * d)) / static_cast<double>(order);
}

double GgmDlBound(std::uint64_t ops, std::uint64_t order) {
  const double q = static_cast<double>(ops);
  return q * q / static_cast<double>(order);
}

double GgmMdlBound(std::uint64_t ops, std::uint64_t m, std::uint64_t order) {
  if (m == 0) throw DomainError("m-MDL needs m >= 1");
  const double s = static_cast<double>(ops + m + 1);
  const double base =
      std::numbers::e * s * s /
      (2.0 * static_cast<double>(m) * static_cast<double>(order));
  return std::pow(base, static_cast<double>(m));
}

std::string ToString(const BigInt& v) { return v.str(); }

}  // namespace ggq

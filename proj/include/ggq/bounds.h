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

#ifndef GGQ_BOUNDS_H_
#define GGQ_BOUNDS_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace ggq {

using BigInt = boost::multiprecision::cpp_int;

// Operation-count bounds for the classical simulators. All are exact
// integers.

// 2^{(d+1)m}.
BigInt BasicSimulationBound(std::uint64_t d, std::uint64_t m);
// Q + 2^{q+1}(m+Q+1)^{2q}.
BigInt QuerySubroutineBound(std::uint64_t m, std::uint64_t ops,
                            std::uint64_t q);
// 2^{2^d}(m+Q+1)^{2^d}.
BigInt DepthLemmaBound(std::uint64_t m, std::uint64_t ops, std::uint64_t d);
// Q + 2^{2^d}(m+Q+1)^{2^d}.
BigInt DepthSubroutineBound(std::uint64_t m, std::uint64_t ops,
                            std::uint64_t d);
// C + 2(2t(t-1+r)+1)^q.
BigInt MemorySubroutineBound(std::uint64_t classical_ops, std::uint64_t t,
                             std::uint64_t r, std::uint64_t q);
// Q + T 2^{q+1}(m+Q+1)^{2q}.
BigInt HybridQueryBound(std::uint64_t ops, std::uint64_t subroutines,
                        std::uint64_t m, std::uint64_t q);
// Q + T 2^{2^d}(m+Q+1)^{2^d}.
BigInt HybridDepthBound(std::uint64_t ops, std::uint64_t subroutines,
                        std::uint64_t m, std::uint64_t d);
// C + 2T(2t(t-1+r)+1)^q.
BigInt HybridMemoryBound(std::uint64_t classical_ops, std::uint64_t subroutines,
                         std::uint64_t t, std::uint64_t r, std::uint64_t q);

// Advantage bounds, without hidden constants.

// 2^{4d}/N.
double QggmDlBound(std::uint64_t d, std::uint64_t order);
// 2^{8d}/N.
double QggmCdhBound(std::uint64_t d, std::uint64_t order);
// Q^2/N.
double GgmDlBound(std::uint64_t ops, std::uint64_t order);
// (e(Q+m+1)^2/(2mN))^m.
double GgmMdlBound(std::uint64_t ops, std::uint64_t m, std::uint64_t order);

std::string ToString(const BigInt& v);

}  // namespace ggq

#endif  // GGQ_BOUNDS_H_

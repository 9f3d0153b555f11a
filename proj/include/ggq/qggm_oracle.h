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

#ifndef GGQ_QGGM_ORACLE_H_
#define GGQ_QGGM_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ggq/counters.h"
#include "ggq/group_oracle.h"
#include "ggq/rng.h"
#include "ggq/state_vector.h"

namespace ggq {

struct QueryTriple {
  std::uint32_t b = 0;
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  friend auto operator<=>(const QueryTriple&, const QueryTriple&) = default;
};

QueryTriple ReadQuery(const RegisterLayout& layout, const Config& c,
                      std::size_t k);

// Branch-wise validity of a parallel group operation: every target i_k must
// differ from every other target and from every control j_k' (including its
// own). A single triple is valid iff i != j.
bool ParallelQueryValid(std::span<const QueryTriple> triples);

// New value of x_i given (x_i, x_j, b). The QGGM uses Z_N arithmetic; the
// dequantizer substitutes its label table.
using CombineFn =
    std::function<std::uint32_t(std::uint32_t, std::uint32_t, bool)>;

CombineFn ModularCombine(std::uint64_t order);

// The group-operation unitary over query registers `registers` (0-based).
// Invalid branches pass through unchanged.
void ApplyGroupOperation(StateVector& state,
                         std::span<const std::size_t> registers,
                         const CombineFn& combine);

// b_k ^= [x_{i_k} = x_{j_k}] for each listed register.
void ApplyEqualityOperation(StateVector& state,
                            std::span<const std::size_t> registers);

std::vector<std::size_t> FirstRegisters(std::size_t width);

struct MemoryPolicy {
  std::size_t t = 0;
  std::size_t r = 0;
  bool enabled = false;

  // Throws DomainError unless t >= 1.
  static MemoryPolicy Bounded(std::size_t t, std::size_t r);
};

enum class MemoryOption {
  kQuantumSlots = 1,      // i, j <= t in every branch
  kQuantumClassical = 2,  // i <= t, j > t drawn from the QRACM set J
  kClassicalSlots = 3,    // measured i, j > t
  kMeasuredQuantum = 4,   // measured operation touching a slot <= t
};

std::string ToString(MemoryOption option);

enum class QueryKind {
  kQuantumOp,
  kParallelOp,
  kEquality,
  kParallelEquality,
  kClassicalOp,
};

std::string ToString(QueryKind kind);

// Classifies a query under `policy`. `triples` lists the (b, i, j) values of
// every branch (one entry per branch and register); `qracm` is the declared
// classical index set. Throws PolicyError naming the violated option.
MemoryOption CheckPolicy(const MemoryPolicy& policy, QueryKind kind,
                         std::span<const QueryTriple> triples,
                         std::span<const Index> qracm);

// Collects the triples of `registers` over the support of `state` and checks
// them with CheckPolicy.
MemoryOption CheckQuantumQuery(const MemoryPolicy& policy,
                               const StateVector& state,
                               std::span<const std::size_t> registers,
                               std::span<const Index> qracm);

struct QueryRecord {
  QueryKind kind = QueryKind::kQuantumOp;
  std::size_t width = 1;
  std::uint64_t depth_layer = 0;
  std::size_t stage = 0;
  std::optional<QueryTriple> measured;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> operands;
};

// A QGGM run driven call by call. Each method mirrors one query type.
class QggmSession {
 public:
  struct ClassicalOpResult {
    QueryTriple triple;
    std::optional<std::pair<Residue, Residue>> operands;
    double probability = 1.0;
  };

  explicit QggmSession(StateVector state, MemoryPolicy policy = {},
                       std::uint64_t seed = 0);

  void GroupOp(std::span<const Index> qracm = {});
  void Equality();
  void ParallelGroupOp(std::size_t width, std::span<const Index> qracm = {});
  void ParallelEquality(std::size_t width);
  // Measures Q_{query}; when i != j also measures T_i and T_j; then applies
  // the group operation.
  ClassicalOpResult ClassicalGroupOp(std::size_t query = 0);

  StateVector& state() { return state_; }
  const StateVector& state() const { return state_; }
  const OpCounters& counters() const { return counters_; }
  const std::vector<QueryRecord>& transcript() const { return transcript_; }
  Rng& rng() { return rng_; }

 private:
  void CheckWidth(std::size_t width) const;

  StateVector state_;
  MemoryPolicy policy_;
  Rng rng_;
  CombineFn combine_;
  OpCounters counters_;
  std::vector<QueryRecord> transcript_;
};

}  // namespace ggq

#endif  // GGQ_QGGM_ORACLE_H_

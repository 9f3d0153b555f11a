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

#include "ggq/qggm_oracle.h"

#include <algorithm>
#include <set>

#include "ggq/errors.h"

namespace ggq {

QueryTriple ReadQuery(const RegisterLayout& layout, const Config& c,
                      std::size_t k) {
  return {c[layout.QueryCell(k, QueryField::kSign)],
          c[layout.QueryCell(k, QueryField::kTarget)],
          c[layout.QueryCell(k, QueryField::kControl)]};
}

bool ParallelQueryValid(std::span<const QueryTriple> triples) {
  for (std::size_t k = 0; k < triples.size(); ++k) {
    for (std::size_t k2 = 0; k2 < triples.size(); ++k2) {
      if (triples[k].i == triples[k2].j) return false;
      if (k != k2 && triples[k].i == triples[k2].i) return false;
    }
  }
  return true;
}

CombineFn ModularCombine(std::uint64_t order) {
  return [order](std::uint32_t a, std::uint32_t b, bool subtract) {
    std::uint64_t r = subtract ? (a + order - b) % order : (a + b) % order;
    return static_cast<std::uint32_t>(r);
  };
}

std::vector<std::size_t> FirstRegisters(std::size_t width) {
  std::vector<std::size_t> regs(width);
  for (std::size_t k = 0; k < width; ++k) regs[k] = k;
  return regs;
}

void ApplyGroupOperation(StateVector& state,
                         std::span<const std::size_t> registers,
                         const CombineFn& combine) {
  const RegisterLayout& layout = state.layout();
  std::vector<QueryTriple> triples(registers.size());
  std::vector<std::uint32_t> results(registers.size());
  state.MapConfigs([&](Config& c) {
    for (std::size_t k = 0; k < registers.size(); ++k) {
      triples[k] = ReadQuery(layout, c, registers[k]);
    }
    if (!ParallelQueryValid(triples)) return;
    for (std::size_t k = 0; k < triples.size(); ++k) {
      const QueryTriple& q = triples[k];
      if (q.i == 0 || q.j == 0) {
        throw DomainError("group operation references table index 0");
      }
      results[k] =
          combine(c[layout.TableCell(q.i)], c[layout.TableCell(q.j)], q.b != 0);
    }
    for (std::size_t k = 0; k < triples.size(); ++k) {
      c[layout.TableCell(triples[k].i)] = results[k];
    }
  });
}

void ApplyEqualityOperation(StateVector& state,
                            std::span<const std::size_t> registers) {
  const RegisterLayout& layout = state.layout();
  state.MapConfigs([&](Config& c) {
    for (std::size_t k : registers) {
      const QueryTriple q = ReadQuery(layout, c, k);
      bool equal = true;
      if (q.i != q.j) {
        if (q.i == 0 || q.j == 0) {
          throw DomainError("equality query references table index 0");
        }
        equal = c[layout.TableCell(q.i)] == c[layout.TableCell(q.j)];
      }
      if (equal) c[layout.QueryCell(k, QueryField::kSign)] ^= 1;
    }
  });
}

MemoryPolicy MemoryPolicy::Bounded(std::size_t t, std::size_t r) {
  if (t < 1) throw DomainError("memory policy needs t >= 1");
  return MemoryPolicy{t, r, true};
}

std::string ToString(MemoryOption option) {
  switch (option) {
    case MemoryOption::kQuantumSlots:
      return "option 1 (quantum registers)";
    case MemoryOption::kQuantumClassical:
      return "option 2 (quantum-classical via QRACM)";
    case MemoryOption::kClassicalSlots:
      return "option 3 (classical registers)";
    case MemoryOption::kMeasuredQuantum:
      return "measured operation on quantum registers";
  }
  return "unknown";
}

std::string ToString(QueryKind kind) {
  switch (kind) {
    case QueryKind::kQuantumOp:
      return "quantum_op";
    case QueryKind::kParallelOp:
      return "parallel_op";
    case QueryKind::kEquality:
      return "equality";
    case QueryKind::kParallelEquality:
      return "parallel_equality";
    case QueryKind::kClassicalOp:
      return "classical_op";
  }
  return "unknown";
}

MemoryOption CheckPolicy(const MemoryPolicy& policy, QueryKind kind,
                         std::span<const QueryTriple> triples,
                         std::span<const Index> qracm) {
  if (!policy.enabled) throw DomainError("memory policy is not enabled");
  const std::size_t t = policy.t;

  if (kind == QueryKind::kClassicalOp) {
    for (const QueryTriple& q : triples) {
      if (q.i != q.j && (q.i <= t || q.j <= t)) {
        return MemoryOption::kMeasuredQuantum;
      }
    }
    return MemoryOption::kClassicalSlots;
  }
  if (kind == QueryKind::kEquality || kind == QueryKind::kParallelEquality) {
    return MemoryOption::kQuantumSlots;
  }

  if (qracm.size() > policy.r) {
    throw PolicyError("QRACM set of size " + std::to_string(qracm.size()) +
                      " exceeds capacity r = " + std::to_string(policy.r));
  }
  std::set<Index> allowed(qracm.begin(), qracm.end());
  for (Index j : allowed) {
    if (j <= t) {
      throw PolicyError("QRACM index " + std::to_string(j) +
                        " is not a classical slot (must exceed t)");
    }
  }
  MemoryOption option = MemoryOption::kQuantumSlots;
  for (const QueryTriple& q : triples) {
    if (q.i == q.j) continue;
    if (q.i > t) {
      throw PolicyError(ToString(MemoryOption::kQuantumSlots) + " and " +
                        ToString(MemoryOption::kQuantumClassical) +
                        " violated: target index " + std::to_string(q.i) +
                        " is a classical slot");
    }
    if (q.j > t) {
      if (!allowed.contains(q.j)) {
        throw PolicyError(ToString(MemoryOption::kQuantumClassical) +
                          " violated: control index " + std::to_string(q.j) +
                          " lies outside the declared QRACM set");
      }
      option = MemoryOption::kQuantumClassical;
    }
  }
  return option;
}

MemoryOption CheckQuantumQuery(const MemoryPolicy& policy,
                               const StateVector& state,
                               std::span<const std::size_t> registers,
                               std::span<const Index> qracm) {
  std::set<QueryTriple> triples;
  for (const auto& [c, amp] : state.amplitudes()) {
    for (std::size_t k : registers) {
      triples.insert(ReadQuery(state.layout(), c, k));
    }
  }
  std::vector<QueryTriple> list(triples.begin(), triples.end());
  const QueryKind kind =
      registers.size() == 1 ? QueryKind::kQuantumOp : QueryKind::kParallelOp;
  return CheckPolicy(policy, kind, list, qracm);
}

QggmSession::QggmSession(StateVector state, MemoryPolicy policy,
                         std::uint64_t seed)
    : state_(std::move(state)),
      policy_(policy),
      rng_(seed),
      combine_(ModularCombine(state_.layout().order())) {}

void QggmSession::CheckWidth(std::size_t width) const {
  if (width < 1 || width > state_.layout().width()) {
    throw DomainError("parallel width outside 1..K");
  }
}

void QggmSession::GroupOp(std::span<const Index> qracm) {
  ParallelGroupOp(1, qracm);
}

void QggmSession::Equality() { ParallelEquality(1); }

void QggmSession::ParallelGroupOp(std::size_t width,
                                  std::span<const Index> qracm) {
  CheckWidth(width);
  const std::vector<std::size_t> regs = FirstRegisters(width);
  if (policy_.enabled) CheckQuantumQuery(policy_, state_, regs, qracm);
  ApplyGroupOperation(state_, regs, combine_);
  counters_.quantum_ops += width;
  counters_.quantum_depth += 1;
  counters_.parallel_width_max =
      std::max<std::uint64_t>(counters_.parallel_width_max, width);
  transcript_.push_back(
      {width == 1 ? QueryKind::kQuantumOp : QueryKind::kParallelOp,
       width,
       counters_.quantum_depth,
       0,
       {},
       {}});
}

void QggmSession::ParallelEquality(std::size_t width) {
  CheckWidth(width);
  ApplyEqualityOperation(state_, FirstRegisters(width));
  counters_.equality_queries += width;
  transcript_.push_back(
      {width == 1 ? QueryKind::kEquality : QueryKind::kParallelEquality,
       width,
       counters_.quantum_depth,
       0,
       {},
       {}});
}

QggmSession::ClassicalOpResult QggmSession::ClassicalGroupOp(
    std::size_t query) {
  const RegisterLayout& layout = state_.layout();
  ClassicalOpResult result;
  StateVector::Branch q = state_.Measure(layout.QueryCells(query), rng_);
  state_ = std::move(q.state);
  result.triple = {q.outcome[0], q.outcome[1], q.outcome[2]};
  result.probability = q.probability;
  QueryRecord record{QueryKind::kClassicalOp, 1, counters_.quantum_depth, 0,
                     result.triple,           {}};
  if (result.triple.i != result.triple.j) {
    if (result.triple.i == 0 || result.triple.j == 0) {
      throw DomainError("classical operation references table index 0");
    }
    if (policy_.enabled) {
      CheckPolicy(policy_, QueryKind::kClassicalOp, {&result.triple, 1}, {});
    }
    const std::vector<std::size_t> cells = {layout.TableCell(result.triple.i),
                                            layout.TableCell(result.triple.j)};
    StateVector::Branch t = state_.Measure(cells, rng_);
    state_ = std::move(t.state);
    result.probability *= t.probability;
    result.operands =
        std::make_pair(Residue{t.outcome[0]}, Residue{t.outcome[1]});
    record.operands = std::make_pair(t.outcome[0], t.outcome[1]);
    const std::size_t reg[] = {query};
    ApplyGroupOperation(state_, reg, combine_);
  }
  counters_.classical_ops += 1;
  transcript_.push_back(record);
  return result;
}

}  // namespace ggq

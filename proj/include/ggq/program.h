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

#ifndef GGQ_PROGRAM_H_
#define GGQ_PROGRAM_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ggq/group_oracle.h"
#include "ggq/local_unitary.h"
#include "ggq/qggm_oracle.h"
#include "ggq/state_vector.h"

namespace ggq {

enum class StepKind {
  kUnitary,
  kPermutation,
  kGroupOp,
  kEquality,
  kClassicalGroupOp,
  kForcedMeasurement,
};

// One instruction of a generic quantum (or hybrid) algorithm. Programs are
// interpreted by both the QGGM simulator and the dequantizer, so every
// oracle interaction is explicit.
struct Step {
  StepKind kind = StepKind::kUnitary;
  std::string label;
  // kUnitary.
  std::vector<std::size_t> cells;
  std::shared_ptr<const LocalUnitary> unitary;
  // kPermutation.
  LocalPermutation permutation;
  // kGroupOp / kEquality: registers Q_1..Q_width.
  std::size_t width = 1;
  // kGroupOp: declared QRACM index set.
  std::vector<Index> qracm;
  // kClassicalGroupOp: 0-based query register.
  std::size_t query = 0;
};

struct OutputSpec {
  enum class Kind { kClassical, kGroup };
  Kind kind = Kind::kClassical;
  // kClassical: cells measured and reported.
  std::vector<std::size_t> cells;
  // kGroup: 1-based table index whose element is the output.
  std::size_t table_index = 1;
};

// Result of one run. Group outputs carry the element value read by the
// referee, so quantum and dequantized runs compare directly.
struct Outcome {
  bool group = false;
  std::vector<std::uint64_t> values;

  friend auto operator<=>(const Outcome&, const Outcome&) = default;
};

using OutcomeDistribution = std::map<Outcome, double>;

// Total-variation distance between two outcome distributions.
double TotalVariation(const OutcomeDistribution& a,
                      const OutcomeDistribution& b);

struct Program {
  std::string name;
  RegisterLayout layout;
  std::vector<Step> steps;
  OutputSpec output;
  std::vector<std::uint32_t> work_init;

  std::size_t CountSteps(StepKind kind) const;
  // Parallel layers of quantum group operations.
  std::size_t QuantumDepth() const;
  // Quantum group operations, counting width.
  std::size_t QuantumOps() const;
};

// Maps a work-register assignment to a query triple.
using TripleFn = std::function<QueryTriple(std::span<const std::uint32_t>)>;

class ProgramBuilder {
 public:
  ProgramBuilder(std::string name, RegisterLayout layout);

  const RegisterLayout& layout() const { return layout_; }

  ProgramBuilder& Unitary(std::vector<std::size_t> cells,
                          std::shared_ptr<const LocalUnitary> u);
  ProgramBuilder& Fourier(std::vector<std::size_t> cells, bool inverse);
  ProgramBuilder& Permutation(LocalPermutation f, std::string label = "perm");
  // Q_k += f(W) (componentwise, modulo the field sizes).
  ProgramBuilder& SetQuery(std::size_t k, TripleFn f);
  // Q_k -= f(W).
  ProgramBuilder& ClearQuery(std::size_t k, TripleFn f);
  ProgramBuilder& SetQueryConstant(std::size_t k, QueryTriple q);
  ProgramBuilder& ClearQueryConstant(std::size_t k, QueryTriple q);
  ProgramBuilder& GroupOp(std::size_t width = 1, std::vector<Index> qracm = {});
  ProgramBuilder& Equality(std::size_t width = 1);
  ProgramBuilder& ClassicalGroupOp(std::size_t query = 0);
  // Sets Q_1 to q, performs one classical group operation, clears Q_1.
  ProgramBuilder& ClassicalOpConstant(QueryTriple q);
  ProgramBuilder& ForcedMeasurement();
  ProgramBuilder& WorkInit(std::vector<std::uint32_t> init);

  Program Build(OutputSpec output) &&;

 private:
  ProgramBuilder& AddToQuery(std::size_t k, TripleFn f, bool subtract);

  std::string name_;
  RegisterLayout layout_;
  std::vector<Step> steps_;
  std::vector<std::uint32_t> work_init_;
};

}  // namespace ggq

#endif  // GGQ_PROGRAM_H_

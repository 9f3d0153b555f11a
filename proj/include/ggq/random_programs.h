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

#ifndef GGQ_RANDOM_PROGRAMS_H_
#define GGQ_RANDOM_PROGRAMS_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "ggq/dequantizer.h"
#include "ggq/executor.h"
#include "ggq/linear_form.h"
#include "ggq/local_unitary.h"
#include "ggq/program.h"
#include "ggq/qggm_oracle.h"
#include "ggq/rng.h"
#include "ggq/schedule.h"

namespace ggq {

// Haar-random unitary on cells of the given dimensions.
std::shared_ptr<DenseUnitary> RandomUnitary(std::vector<std::uint64_t> dims,
                                            Rng& rng);

struct RandomProgramParams {
  std::uint64_t order = 7;
  // Inputs at table indices 1..m.
  std::size_t m = 2;
  // Layers of parallel group operations.
  std::size_t depth = 2;
  // Registers per layer.
  std::size_t width = 1;
  std::size_t extra_slots = 1;
  // Probability that a layer is an equality query instead.
  double equality_rate = 0.2;
};

// A pure QGGM program: random work unitaries interleaved with group
// operations whose triples are random functions of the work registers.
Program RandomGenericProgram(const RandomProgramParams& params, Rng& rng);

struct RandomScheduleParams {
  SimulationMode mode = SimulationMode::kQuery;
  std::uint64_t order = 7;
  std::size_t m = 2;
  std::size_t subroutines = 1;
  // q for query and memory modes, d for depth mode.
  std::size_t limit = 1;
  std::size_t width = 1;
  std::size_t t = 1;
  std::size_t r = 0;
  std::size_t max_classical_per_stage = 1;
  std::size_t final_classical = 1;
  std::size_t extra_slots = 2;
};

HybridSchedule RandomHybridSchedule(const RandomScheduleParams& params,
                                    Rng& rng);

// Uniform in Z_N, zero with probability 1/4.
std::vector<Residue> RandomInputs(std::uint64_t order, std::size_t m, Rng& rng);

// Interns linear forms as table values so a QGGM run can be followed
// symbolically. Values are form ids; the id of the zero form is 0.
class SymbolicShadow {
 public:
  SymbolicShadow(GroupSpec spec, std::size_t m);

  std::uint32_t Intern(const LinearForm& f);
  const LinearForm& Form(std::uint32_t id) const { return forms_.at(id); }
  std::size_t size() const { return forms_.size(); }
  // Ids of Y_1..Y_m.
  std::vector<Residue> InputIds();
  CombineFn Combine();

 private:
  GroupSpec spec_;
  std::size_t m_;
  std::vector<LinearForm> forms_;
  std::unordered_map<LinearForm, std::uint32_t, LinearFormHash> ids_;
};

// Executes programs over form ids instead of residues. For every quantum
// group operation it records the most distinct new values that the
// branches sharing one table gain.
class ShadowBackend {
 public:
  explicit ShadowBackend(std::shared_ptr<SymbolicShadow> shadow);

  void GroupOp(StateVector& state, const Step& step,
               const MemoryPolicy& policy);
  void Equality(StateVector& state, const Step& step);
  void ClassicalOp(StateVector& state, const QueryTriple& triple,
                   std::size_t query, const MemoryPolicy& policy);
  void ForcedMeasurement(const StateVector&, const StageReport&) {}
  void Finish(const StageReport&) {}
  Outcome GroupOutcome(std::uint32_t id) const { return {true, {id}}; }

  std::size_t max_new_values() const { return max_new_values_; }
  std::size_t quantum_queries() const { return quantum_queries_; }

 private:
  std::shared_ptr<SymbolicShadow> shadow_;
  CombineFn combine_;
  std::size_t max_new_values_ = 0;
  std::size_t quantum_queries_ = 0;
};

}  // namespace ggq

#endif  // GGQ_RANDOM_PROGRAMS_H_

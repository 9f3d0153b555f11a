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

#ifndef GGQ_ALGORITHMS_H_
#define GGQ_ALGORITHMS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ggq/counters.h"
#include "ggq/group.h"
#include "ggq/group_oracle.h"
#include "ggq/linear_form.h"
#include "ggq/program.h"
#include "ggq/rng.h"
#include "ggq/state_vector.h"

namespace ggq {

// Applies the Z_N Fourier transform (or its inverse) to one work cell.
void QftApply(StateVector& state, std::size_t cell, bool inverse = false);

// Discrete log instance: g at index 1, x*g at index 2.
struct DlInstance {
  GroupSpec spec;
  Residue x = 0;
  Residue g = 1;

  std::vector<Residue> Inputs() const;
  GgmOracle MakeOracle() const;
};

// m-MDL instance: g at index 1, x_i*g at index i + 1.
struct MdlInstance {
  GroupSpec spec;
  std::vector<Residue> xs;
  Residue g = 1;

  std::vector<Residue> Inputs() const;
  GgmOracle MakeOracle() const;
};

// The elements k p^i g and k p^i (xg), 1 <= k < p, 0 <= i < n_p, stored at
// consecutive oracle indices (g and xg keep indices 1 and 2).
class PrecomputedPowers {
 public:
  std::size_t base() const { return p_; }
  std::size_t digits() const { return n_p_; }
  // `side` 0 is g, 1 is xg.
  Index Slot(int side, std::size_t i, std::size_t k) const;
  // Slots of every k at digit position i.
  std::vector<Index> DigitSlots(int side, std::size_t i) const;
  // Largest index used; the table occupies 1..size().
  std::size_t size() const { return forms_.size(); }
  // Form of each index 1..size() over (Y_1, Y_2).
  const std::vector<LinearForm>& forms() const { return forms_; }
  std::uint64_t classical_ops() const { return ops_; }
  std::size_t element_count() const { return 2 * (p_ - 1) * n_p_; }

 private:
  friend PrecomputedPowers BuildPrecomputed(GgmOracle& oracle, std::size_t p);

  std::size_t p_ = 2;
  std::size_t n_p_ = 1;
  std::vector<Index> slots_[2];
  std::vector<LinearForm> forms_;
  std::uint64_t ops_ = 0;
};

// Throws DomainError for p < 2.
PrecomputedPowers BuildPrecomputed(GgmOracle& oracle, std::size_t p);

// Digit i of a in base p.
std::uint32_t Digit(std::uint64_t a, std::size_t p, std::size_t i);

// Garbage-free accumulation capacity of a depth-D parallel schedule.
std::uint64_t TreeCapacity(std::size_t depth);
// Smallest D with TreeCapacity(D) >= leaves.
std::size_t TreeDepth(std::size_t leaves);

// The quantum part of the DL algorithm over the table 1..pre.size(). Work
// registers (a, b) are measured as the classical output.
Program BuildShorProgram(const GroupSpec& spec, const PrecomputedPowers& pre);
// Same unitary with the exponentiation spread over parallel layers.
Program BuildShorTreeProgram(const GroupSpec& spec,
                             const PrecomputedPowers& pre);

// v/u, or nullopt when u = 0.
std::optional<Residue> ShorAnswer(const GroupSpec& spec, std::uint64_t u,
                                  std::uint64_t v);

struct ShorRun {
  std::optional<Residue> answer;
  std::uint64_t u = 0;
  std::uint64_t v = 0;
  // Classical precomputation plus quantum operations.
  OpCounters counters;
};

struct ShorExact {
  OutcomeDistribution distribution;
  double success_probability = 0;
  OpCounters counters;
};

// The circuit for an oracle holding g and h at indices 1 and 2. The
// precomputation is charged to `oracle`; `table` is the circuit's initial
// table as the simulator sees it.
struct ShorCircuit {
  PrecomputedPowers pre;
  Program program;
  std::vector<Residue> table;
};

ShorCircuit PrepareShor(GgmOracle& oracle, std::size_t p, bool tree = false);

// Throws DomainError for composite orders.
ShorRun ShorDl(const DlInstance& instance, std::size_t p, Rng& rng,
               bool tree = false);
ShorExact ShorDlExact(const DlInstance& instance, std::size_t p,
                      bool tree = false);

struct MultiexpResult {
  Index index = 0;
  std::uint64_t ops = 0;
};

// sum_i e_i h_i using group operations only. Fresh results go to indices at
// or above oracle.NextFreeIndex().
MultiexpResult PippengerMultiexp(GgmOracle& oracle,
                                 std::span<const Index> bases,
                                 std::span<const std::uint64_t> exponents);
// Operation count the window schedule for `exponents` will use.
std::uint64_t PippengerCost(std::span<const std::uint64_t> exponents);
// 2 (lg B + m lg B / lg(m lg B)); infinite when lg(m lg B) <= 0.
double PippengerBound(std::size_t m, std::uint64_t max_exponent);

struct MdlOptions {
  // Largest N^{m+1} simulated as a full state vector.
  std::uint64_t exact_limit = std::uint64_t{1} << 17;
  std::size_t max_attempts = 8;
  // Basis inputs checked against the compiled circuit before sampling from
  // its analytic output distribution.
  std::size_t verification_inputs = 8;
};

struct MdlCost {
  std::size_t window = 1;
  std::size_t windows = 1;
  std::uint64_t classical_ops = 0;
  std::uint64_t quantum_ops_per_run = 0;
  std::uint64_t total() const { return classical_ops + quantum_ops_per_run; }
};

struct MdlResult {
  std::optional<std::vector<Residue>> xs;
  std::size_t runs = 0;
  bool exact_simulation = false;
  // Precomputation plus every quantum run.
  OpCounters counters;
};

// Window width and operation counts for m instances over Z_N.
MdlCost MdlCircuitCost(const GroupSpec& spec, std::size_t m);
// Requires a prime order and m <= N^{1/4}.
MdlResult MdlSolve(const MdlInstance& instance, Rng& rng,
                   const MdlOptions& options = {});
// One full quantum run of the m-MDL circuit, exact. Used for small cases.
OutcomeDistribution MdlOutputDistribution(const MdlInstance& instance);

struct BsgsResult {
  Residue x = 0;
  OpCounters counters;
};

BsgsResult Bsgs(const DlInstance& instance);
// Solves for the logarithm of index 2 to the base at index 1.
BsgsResult Bsgs(GgmOracle& oracle);

}  // namespace ggq

#endif  // GGQ_ALGORITHMS_H_

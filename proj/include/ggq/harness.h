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

#ifndef GGQ_HARNESS_H_
#define GGQ_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ggq/algorithms.h"
#include "ggq/bounds.h"
#include "ggq/counters.h"
#include "ggq/dequantizer.h"
#include "ggq/group.h"
#include "ggq/group_oracle.h"
#include "ggq/hybrid.h"
#include "ggq/program.h"
#include "ggq/rng.h"
#include "ggq/schedule.h"

namespace ggq {

enum class GameKind { kDl, kCdh, kDdh, kMdl };

std::string ToString(GameKind game);
// Throws ConfigError on unknown names.
GameKind ParseGame(const std::string& name);

struct GameSpec {
  GameKind game = GameKind::kDl;
  GroupSpec spec{101};
  // Instance count for MDL.
  std::size_t m = 1;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;

  // Throws ConfigError unless trials >= 1 and m >= 1.
  void Validate() const;
  // Elements the adversary finds at indices 1..InputCount(): g, then
  // xg (DL), xg, yg (CDH), xg, yg, zg (DDH) or x_1 g..x_m g (MDL).
  std::size_t InputCount() const;
};

struct AdversaryOutput {
  // DL: {x}; MDL: {x_1..x_m}. Empty means no answer.
  std::vector<Residue> scalars;
  // CDH: the index claimed to hold xyg.
  Index index = 0;
  // DDH: the decision bit; anything other than 0 or 1 is a ConfigError.
  std::optional<std::uint64_t> bit;
  // Work not charged to the oracle handle, such as simulated quantum
  // operations.
  OpCounters extra;
};

using Adversary = std::function<AdversaryOutput(GgmOracle&, Rng&)>;

Adversary RandomGuessDlAdversary();
// The simulated quantum algorithm; exact output distributions are cached by
// the circuit's initial table.
Adversary ShorDlAdversary(std::size_t p = 2, bool tree = false);
// BSGS for x, then x(yg) by multi-exponentiation.
Adversary BsgsCdhAdversary();
Adversary ConstantDdhAdversary(std::uint64_t bit);
Adversary MdlAdversary(MdlOptions options = {});

struct BoundParams {
  std::uint64_t order = 101;
  std::uint64_t m = 1;
  // Total group operations.
  std::uint64_t ops = 0;
  std::uint64_t classical_ops = 0;
  std::uint64_t subroutines = 1;
  std::uint64_t q = 0;
  std::uint64_t d = 0;
  std::uint64_t t = 1;
  std::uint64_t r = 0;
};

struct BoundEntry {
  std::string name;
  std::string expression;
  double value = 0;
  // Set for integer operation-count bounds.
  std::optional<BigInt> exact;
  // Advantage bounds above 1 say nothing at this scale.
  bool vacuous = false;
};

struct BoundReport {
  BoundParams params;
  // Closed forms without asymptotic constants.
  bool constant_free = true;
  std::vector<BoundEntry> entries;
  std::optional<OpCounters> measured;

  // Throws ConfigError for an unknown name.
  const BoundEntry& Get(const std::string& name) const;
};

BoundReport MakeBoundReport(const BoundParams& params,
                            std::optional<OpCounters> measured = {});

struct AdvantageReport {
  GameSpec game;
  std::uint64_t successes = 0;
  // Trials the adversary lost to a budget or policy violation.
  std::uint64_t budget_failures = 0;
  double estimate = 0;
  double standard_error = 0;
  // DDH: acceptance rates on real and random tuples.
  double p_real = 0;
  double p_random = 0;
  OpCounters counters;
  std::uint64_t max_group_ops = 0;
  std::uint64_t max_quantum_depth = 0;
  BoundReport bounds;
};

AdvantageReport EstimateAdvantage(const GameSpec& game,
                                  const Adversary& adversary);

// sqrt(p(1-p)/k).
double BinomialStderr(double p, std::uint64_t k);

// Exact output distribution of a pure QGGM program with the given table.
OutcomeDistribution QuantumDistribution(const Program& program,
                                        std::span<const Residue> table,
                                        std::size_t state_cap = std::size_t{1}
                                                                << 22);

struct Comparison {
  double tv = 0;
  OutcomeDistribution quantum;
  OutcomeDistribution dequantized;
  std::uint64_t real_ops = 0;
  BigInt bound = 0;
  std::vector<StageAudit> audits;
};

// Inputs y_1..y_m at indices 1..m; other table slots start at 0.
Comparison CompareDistributions(const Program& program,
                                std::span<const Residue> inputs,
                                const DequantizeOptions& options = {});
Comparison CompareDistributions(const HybridSchedule& schedule,
                                std::span<const Residue> inputs,
                                const DequantizeOptions& options = {});
// The DL circuit on (g, xg), after its classical precomputation.
Comparison CompareShor(const GroupSpec& spec, Residue x, std::size_t p = 2,
                       bool tree = false,
                       const DequantizeOptions& options = {});

// One uniform bit, one group operation (b, 1, 2), output T_1.
Program ToyProgram(std::uint64_t order);

// A program with everything needed to run it both ways. `oracle` holds the
// initial table at 1..forms.size(); `table` is what the quantum simulation
// starts from.
struct Workload {
  std::string name;
  Program program;
  // Set for hybrid schedules.
  std::optional<std::vector<SubroutineBudget>> budgets;
  GgmOracle oracle;
  std::vector<LinearForm> forms;
  std::vector<Residue> table;

  HybridSchedule Schedule() const;
};

Workload MakeProgramWorkload(std::string name, Program program,
                             std::span<const Residue> inputs);
Workload MakeScheduleWorkload(std::string name, HybridSchedule schedule,
                              std::span<const Residue> inputs);
// The DL circuit on (g, xg); `hybrid` wraps it as one query-bounded
// subroutine.
Workload MakeShorWorkload(const GroupSpec& spec, Residue x, std::size_t p,
                          bool tree, bool hybrid);

Comparison CompareWorkload(const Workload& workload,
                           const DequantizeOptions& options = {});

struct WorkloadRun {
  OracleMode mode = OracleMode::kQuantumSim;
  // Exact distribution when enumerating, otherwise one sampled outcome.
  OutcomeDistribution distribution;
  std::optional<Outcome> outcome;
  OpCounters counters;
  std::uint64_t real_ops = 0;
  BigInt bound = 0;
  std::vector<StageAudit> audits;
};

// Pure programs are sampled from their exact distribution.
WorkloadRun RunWorkload(const Workload& workload, OracleMode mode,
                        std::uint64_t seed, bool enumerate,
                        const DequantizeOptions& options = {});

// Pearson chi-square test of independence on a contingency table; returns
// the p-value. Empty rows and columns are dropped.
double ChiSquareIndependence(
    const std::vector<std::vector<std::uint64_t>>& counts);

}  // namespace ggq

#endif  // GGQ_HARNESS_H_

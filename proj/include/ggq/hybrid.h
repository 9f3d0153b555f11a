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

#ifndef GGQ_HYBRID_H_
#define GGQ_HYBRID_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ggq/algorithms.h"
#include "ggq/counters.h"
#include "ggq/dequantizer.h"
#include "ggq/group_oracle.h"
#include "ggq/linear_form.h"
#include "ggq/program.h"
#include "ggq/qggm_oracle.h"
#include "ggq/rng.h"
#include "ggq/schedule.h"
#include "ggq/state_vector.h"

namespace ggq {

enum class OracleMode { kQuantumSim, kDequantized };

struct SubroutineResult {
  // Every cell after the forced measurement.
  Config snapshot;
  OpCounters counters;
  std::vector<QueryRecord> transcript;
};

// Runs `program` under `budget`, then measures every register.
SubroutineResult RunSubroutine(const Program& program,
                               std::span<const Residue> table,
                               const SubroutineBudget& budget, Rng& rng);

struct HybridOptions {
  OracleMode mode = OracleMode::kQuantumSim;
  std::uint64_t seed = 0;
  // Exact output distribution instead of one sample.
  bool enumerate = false;
  DequantizeOptions dequantize;
};

struct HybridRun {
  // Set when sampling.
  std::optional<Outcome> outcome;
  // Set when enumerating.
  OutcomeDistribution distribution;
  OpCounters counters;
  std::vector<QueryRecord> transcript;
  // Dequantized mode only.
  std::uint64_t real_ops = 0;
  BigInt bound = 0;
  std::vector<StageAudit> audits;
};

// Runs a validated schedule. The oracle's indices 1..table_forms.size()
// hold the initial table; the quantum simulation reads them through the
// output channel.
HybridRun RunHybrid(const HybridSchedule& schedule, const GgmOracle& oracle,
                    std::vector<LinearForm> table_forms,
                    const HybridOptions& options = {});

// Query kinds the program issues, in order.
std::vector<QueryKind> DeclaredSequence(const Program& program);
// Throws InvariantError unless the transcript follows the declared
// sequence.
void AuditTranscript(const Program& program,
                     const std::vector<QueryRecord>& transcript);

// The DL algorithm as one query-bounded subroutine; the classical output is
// (u, v).
HybridSchedule BuildShorHybrid(const GroupSpec& spec,
                               const PrecomputedPowers& pre);

}  // namespace ggq

#endif  // GGQ_HYBRID_H_

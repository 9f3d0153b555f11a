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

#ifndef GGQ_DEQUANTIZER_H_
#define GGQ_DEQUANTIZER_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "ggq/bounds.h"
#include "ggq/counters.h"
#include "ggq/executor.h"
#include "ggq/group_oracle.h"
#include "ggq/label_table.h"
#include "ggq/linear_form.h"
#include "ggq/program.h"
#include "ggq/qggm_oracle.h"
#include "ggq/rng.h"
#include "ggq/schedule.h"
#include "ggq/state_vector.h"

namespace ggq {

enum class SimulationMode { kBasic, kDepth, kQuery, kMemory };

std::string ToString(SimulationMode mode);

// Per-stage bound audit.
struct StageAudit {
  std::size_t stage = 0;
  SimulationMode mode = SimulationMode::kBasic;
  bool final_stage = false;
  // Nonzero table entries at the start of the stage.
  std::uint64_t m = 0;
  OpCounters program_counters;
  std::uint64_t real_ops = 0;
  BigInt bound = 0;
  std::size_t max_leaf_size = 0;
  std::size_t leaf_count = 0;
};

struct DequantizerEvent {
  std::string kind;
  std::size_t stage = 0;
  std::size_t forms = 0;
  std::size_t labels = 0;
  std::size_t fresh_labels = 0;
  std::uint64_t real_ops = 0;
};

// Classical simulator of a quantum generic algorithm. It holds its own
// classical oracle handle and replaces the group elements of the quantum
// table by labels. Satisfies OracleBackend.
class Dequantizer {
 public:
  struct Options {
    std::uint64_t seed = 0;
    // Hybrid runs: one budget per subroutine. Null for a plain run.
    const std::vector<SubroutineBudget>* budgets = nullptr;
    // Check after every quantum operation that the tracked label sets cover
    // every live branch.
    bool verify_coverage = true;
    // Check label consistency against the oracle after every query.
    bool audit_labels = false;
    // Throw BudgetError when a stage exceeds its bound.
    bool enforce_bounds = true;
  };

  // `table_forms[k]` is the form of the element at oracle index k + 1.
  Dequantizer(GgmOracle oracle, std::vector<LinearForm> table_forms,
              Options options);

  // Labels for a quantum table of size `table_size`; also fixes the
  // initial tracking structures.
  std::vector<Residue> StartTable(std::size_t table_size);

  void GroupOp(StateVector& state, const Step& step,
               const MemoryPolicy& policy);
  void Equality(StateVector& state, const Step& step);
  void ClassicalOp(StateVector& state, const QueryTriple& triple,
                   std::size_t query, const MemoryPolicy& policy);
  void ForcedMeasurement(const StateVector& state, const StageReport& report);
  void Finish(const StageReport& report);
  Outcome GroupOutcome(std::uint32_t label) const;

  // Smallest oracle index holding an element labeled `label`.
  Index FinalizeIndex(Label label) const;
  // Throws InvariantError unless label equality agrees with oracle
  // equality over all of S.
  void AuditLabels();

  std::uint64_t real_ops() const;
  std::size_t variable_count() const { return m_; }
  Label zero_label() const { return zero_label_; }
  const GgmOracle& oracle() const { return oracle_; }
  const LabelTable& labels() const { return table_; }
  const std::vector<StageAudit>& audits() const { return audits_; }
  const std::vector<DequantizerEvent>& events() const { return events_; }
  // Bound on the whole run: the basic bound, or the hybrid bound when every
  // subroutine uses the same mode. Zero when no single bound applies.
  const BigInt& total_bound() const { return total_bound_; }

 private:
  using OpKey = std::tuple<Label, Label, bool>;

  Label LabelOf(const LinearForm& f, Index index);
  Label Combine(Label a, Label b, bool subtract);
  void Define(Label a, Label b, bool subtract, std::set<Label>* out);
  void ApplyLabels(StateVector& state, std::span<const std::size_t> regs);
  SimulationMode StageMode() const;
  const SubroutineBudget* StageBudget() const;
  void ResetStage(const StateVector& state);
  std::vector<Label> TableLabels(const Config& c, const RegisterLayout& layout,
                                 std::size_t first, std::size_t last) const;
  void CheckCoverage(const StateVector& state) const;
  void CloseStage(const StageReport& report);
  void Record(const std::string& kind, std::size_t labels_before,
              std::uint64_t ops_before);

  GgmOracle oracle_;
  std::vector<LinearForm> table_forms_;
  Options options_;
  std::size_t m_;
  LabelTable table_;
  Rng rng_;
  Label zero_label_ = 0;
  Index next_index_ = 0;
  std::uint64_t ops_at_start_ = 0;

  std::map<OpKey, Label> op_table_;
  std::set<OpKey> current_;
  std::size_t stage_ = 0;
  std::uint64_t stage_start_ops_ = 0;
  std::uint64_t stage_m_ = 0;
  std::size_t stage_max_leaf_ = 0;
  // kBasic / kDepth: labels of S_pre.
  std::set<Label> active_;
  // kQuery: label sets; kMemory: sorted multisets of the first t labels.
  std::set<std::vector<Label>> leaves_;
  OpCounters totals_;
  std::uint64_t first_stage_m_ = 0;
  std::vector<StageAudit> audits_;
  std::vector<DequantizerEvent> events_;
  BigInt total_bound_ = 0;
};

static_assert(OracleBackend<Dequantizer>);

// Forms Y_1..Y_m.
std::vector<LinearForm> InputForms(std::size_t m);

struct DequantizedRun {
  OutcomeDistribution distribution;
  // Largest real operation count over all enumerated branches.
  std::uint64_t max_real_ops = 0;
  BigInt bound = 0;
  // Audits of the branch with the largest count.
  std::vector<StageAudit> audits;
  OpCounters program_counters;
  std::size_t branches = 0;
};

struct DequantizeOptions {
  std::uint64_t seed = 0;
  bool verify_coverage = true;
  bool audit_labels = false;
  std::size_t state_cap = std::size_t{1} << 22;
};

// Exact enumeration of `program` against a dequantizer over `oracle`, whose
// indices 1..table_forms.size() hold the program's initial table.
DequantizedRun RunBasic(const Program& program, const GgmOracle& oracle,
                        std::vector<LinearForm> table_forms,
                        const DequantizeOptions& options = {});
DequantizedRun RunHybrid(const HybridSchedule& schedule,
                         const GgmOracle& oracle,
                         std::vector<LinearForm> table_forms,
                         const DequantizeOptions& options = {});

// Single-subroutine wrappers: `program` must end its quantum part with one
// forced measurement.
DequantizedRun RunQuerySubroutine(const Program& program, std::size_t q,
                                  const GgmOracle& oracle,
                                  std::vector<LinearForm> table_forms,
                                  const DequantizeOptions& options = {});
DequantizedRun RunDepthSubroutine(const Program& program, std::size_t d,
                                  const GgmOracle& oracle,
                                  std::vector<LinearForm> table_forms,
                                  const DequantizeOptions& options = {});
DequantizedRun RunMemorySubroutine(const Program& program, std::size_t q,
                                   MemoryPolicy policy, const GgmOracle& oracle,
                                   std::vector<LinearForm> table_forms,
                                   const DequantizeOptions& options = {});

}  // namespace ggq

#endif  // GGQ_DEQUANTIZER_H_

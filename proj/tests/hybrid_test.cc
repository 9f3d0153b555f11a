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

#include "ggq/hybrid.h"

#include <vector>

#include "ggq/errors.h"
#include "ggq/harness.h"
#include "ggq/program.h"
#include "ggq/random_programs.h"
#include "gtest/gtest.h"

namespace ggq {
namespace {

constexpr double kTol = 1e-9;

OutputSpec GroupOutput(std::size_t index) {
  OutputSpec out;
  out.kind = OutputSpec::Kind::kGroup;
  out.table_index = index;
  return out;
}

// Q_k = (w_k, 3 + k, 1): a signed copy of Y_1 into slot 3 + k.
TripleFn SignedCopy(std::size_t k) {
  return [k](std::span<const std::uint32_t> w) {
    return QueryTriple{w[k], static_cast<std::uint32_t>(3 + k), 1};
  };
}

ProgramBuilder Builder(std::size_t width, std::size_t work = 1) {
  RegisterLayout layout(std::vector<std::uint64_t>(std::max(work, width), 2),
                        width, 2 + width, 7);
  ProgramBuilder b("sub", layout);
  std::vector<std::size_t> cells;
  for (std::size_t k = 0; k < layout.work_count(); ++k) {
    cells.push_back(layout.WorkCell(k));
  }
  b.Fourier(cells, false);
  return b;
}

const std::vector<Residue> kTable = {3, 4, 0};

TEST(RunSubroutineTest, ClassicalThenQuantum) {
  ProgramBuilder b = Builder(1);
  b.ClassicalOpConstant({0, 2, 1});
  b.SetQuery(0, SignedCopy(0)).GroupOp();
  const Program p = std::move(b).Build(GroupOutput(3));
  Rng rng(1);
  const SubroutineResult r =
      RunSubroutine(p, kTable, SubroutineBudget::Query(1), rng);
  EXPECT_EQ(r.counters.quantum_ops, 1u);
  EXPECT_EQ(r.counters.classical_ops, 1u);
  ASSERT_EQ(r.snapshot.size(), p.layout.cell_count());
  // T_2 = 4 + 3, T_3 = ±3.
  EXPECT_EQ(r.snapshot[p.layout.TableCell(2)], 0u);
  const std::uint32_t sign = r.snapshot[p.layout.WorkCell(0)];
  EXPECT_EQ(r.snapshot[p.layout.TableCell(3)], sign ? 4u : 3u);
  EXPECT_NO_THROW(AuditTranscript(p, r.transcript));
}

TEST(RunSubroutineTest, NoQuantumQueries) {
  ProgramBuilder b("classical", RegisterLayout({}, 1, 3, 7));
  b.ClassicalOpConstant({1, 3, 2});
  const Program p = std::move(b).Build(GroupOutput(3));
  Rng rng(2);
  const SubroutineResult r =
      RunSubroutine(p, kTable, SubroutineBudget::Query(0), rng);
  EXPECT_EQ(r.counters.quantum_ops, 0u);
  EXPECT_EQ(r.counters.classical_ops, 1u);
  EXPECT_EQ(r.snapshot[p.layout.TableCell(3)], 3u);  // 0 - 4
}

TEST(RunSubroutineTest, OneParallelLayer) {
  ProgramBuilder b = Builder(3);
  for (std::size_t k = 0; k < 3; ++k) b.SetQuery(k, SignedCopy(k));
  b.GroupOp(3);
  const Program p = std::move(b).Build(GroupOutput(3));
  Rng rng(3);
  const SubroutineResult r = RunSubroutine(p, std::vector<Residue>{3, 4},
                                           SubroutineBudget::Depth(1), rng);
  EXPECT_EQ(r.counters.quantum_depth, 1u);
  EXPECT_EQ(r.counters.quantum_ops, 3u);
  EXPECT_EQ(r.counters.parallel_width_max, 3u);
}

TEST(RunSubroutineTest, QuantumOpBeyondTheBudget) {
  ProgramBuilder b = Builder(1);
  b.SetQuery(0, SignedCopy(0)).GroupOp().GroupOp();
  const Program p = std::move(b).Build(GroupOutput(3));
  Rng rng(4);
  EXPECT_THROW(RunSubroutine(p, kTable, SubroutineBudget::Query(1), rng),
               BudgetError);
}

TEST(RunSubroutineTest, LayerBeyondTheDepthBudget) {
  ProgramBuilder b = Builder(2);
  b.SetQuery(0, SignedCopy(0)).SetQuery(1, SignedCopy(1));
  b.GroupOp(2).GroupOp(2);
  const Program p = std::move(b).Build(GroupOutput(3));
  Rng rng(5);
  EXPECT_THROW(RunSubroutine(p, std::vector<Residue>{3, 4, 0, 0},
                             SubroutineBudget::Depth(1), rng),
               BudgetError);
}

TEST(RunSubroutineTest, ClassicalOpAfterTheLastQuantumOp) {
  ProgramBuilder b = Builder(1);
  b.SetQuery(0, SignedCopy(0)).GroupOp().ClearQuery(0, SignedCopy(0));
  b.ClassicalOpConstant({0, 1, 2});
  const Program p = std::move(b).Build(GroupOutput(3));
  Rng rng(6);
  EXPECT_THROW(RunSubroutine(p, kTable, SubroutineBudget::Query(1), rng),
               BudgetError);
}

TEST(RunSubroutineTest, ParallelOpsNeedADepthBudget) {
  ProgramBuilder b = Builder(2);
  b.SetQuery(0, SignedCopy(0)).SetQuery(1, SignedCopy(1)).GroupOp(2);
  const Program p = std::move(b).Build(GroupOutput(3));
  Rng rng(7);
  EXPECT_THROW(RunSubroutine(p, std::vector<Residue>{3, 4, 0, 0},
                             SubroutineBudget::Query(2), rng),
               ConfigError);
}

// Every returned snapshot is one basis configuration of the register.
TEST(RunSubroutineTest, SnapshotsAreClassical) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    RandomProgramParams params;
    params.depth = 1 + trial % 2;
    const Program p = RandomGenericProgram(params, rng);
    std::vector<Residue> table(p.layout.table_size(), 0);
    table[0] = 1 + trial % 6;
    table[1] = trial % 7;
    const SubroutineResult r =
        RunSubroutine(p, table, SubroutineBudget::Depth(params.depth), rng);
    ASSERT_EQ(r.snapshot.size(), p.layout.cell_count());
    for (std::size_t c = 0; c < r.snapshot.size(); ++c) {
      EXPECT_LT(r.snapshot[c], p.layout.dim(c));
    }
    EXPECT_LE(r.counters.quantum_depth, params.depth);
    EXPECT_NO_THROW(AuditTranscript(p, r.transcript));
  }
}

TEST(TranscriptAuditTest, DetectsADeviation) {
  ProgramBuilder b = Builder(1);
  b.ClassicalOpConstant({0, 1, 2}).SetQuery(0, SignedCopy(0)).GroupOp();
  b.Equality();
  const Program p = std::move(b).Build(GroupOutput(3));
  EXPECT_EQ(
      DeclaredSequence(p),
      (std::vector<QueryKind>{QueryKind::kClassicalOp, QueryKind::kQuantumOp,
                              QueryKind::kEquality}));
  Rng rng(9);
  SubroutineResult r =
      RunSubroutine(p, kTable, SubroutineBudget::Query(1), rng);
  EXPECT_NO_THROW(AuditTranscript(p, r.transcript));
  std::swap(r.transcript[0], r.transcript[1]);
  EXPECT_THROW(AuditTranscript(p, r.transcript), InvariantError);
  r.transcript.pop_back();
  EXPECT_THROW(AuditTranscript(p, r.transcript), InvariantError);
}

TEST(RunHybridTest, ShorAsOneSubroutineReturnsX) {
  const GroupSpec spec(17);
  const Residue x = 11;
  const Workload w = MakeShorWorkload(spec, x, 4, false, true);
  const HybridSchedule s = w.Schedule();
  HybridOptions opts;
  opts.enumerate = true;
  const HybridRun exact = RunHybrid(s, w.oracle, w.forms, opts);
  double success = 0;
  for (const auto& [o, p] : exact.distribution) {
    if (ShorAnswer(spec, o.values[0], o.values[1]) == x) success += p;
  }
  EXPECT_NEAR(success, 1 - 1.0 / 17, kTol);
  opts.mode = OracleMode::kDequantized;
  const HybridRun dq = RunHybrid(s, w.oracle, w.forms, opts);
  EXPECT_LT(TotalVariation(exact.distribution, dq.distribution), kTol);
  EXPECT_LE(dq.real_ops, dq.bound);

  int found = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    HybridOptions sample;
    sample.seed = seed;
    const HybridRun r = RunHybrid(s, w.oracle, w.forms, sample);
    ASSERT_TRUE(r.outcome.has_value());
    if (ShorAnswer(spec, r.outcome->values[0], r.outcome->values[1]) == x) {
      ++found;
    }
    EXPECT_EQ(r.counters.quantum_ops, s.budgets[0].limit);
  }
  EXPECT_GE(found, 15);
}

TEST(RunHybridTest, NoSubroutines) {
  ProgramBuilder b("final", RegisterLayout({}, 1, 2, 7));
  b.ClassicalOpConstant({0, 1, 2});
  const HybridSchedule s{std::move(b).Build(GroupOutput(1)), {}};
  const std::vector<Residue> y = {3, 5};
  for (OracleMode mode : {OracleMode::kQuantumSim, OracleMode::kDequantized}) {
    HybridOptions opts;
    opts.mode = mode;
    const HybridRun r =
        RunHybrid(s, GgmOracle(GroupSpec(7), y), InputForms(2), opts);
    ASSERT_TRUE(r.outcome.has_value());
    EXPECT_EQ(*r.outcome, (Outcome{true, {1}}));
    EXPECT_EQ(r.counters.classical_ops, 1u);
  }
}

TEST(RunHybridTest, QuantumOpInTheFinalStageIsRejected) {
  ProgramBuilder b = Builder(1);
  b.ForcedMeasurement().SetQuery(0, SignedCopy(0)).GroupOp();
  const HybridSchedule s{std::move(b).Build(GroupOutput(3)),
                         {SubroutineBudget::Query(1)}};
  EXPECT_THROW(s.Validate(), ConfigError);
  EXPECT_THROW(RunHybrid(s, GgmOracle(GroupSpec(7), kTable), InputForms(2),
                         HybridOptions{}),
               ConfigError);
}

// Two copies of the same subroutine, each measured into its own cell.
HybridSchedule TwoCoinFlips() {
  RegisterLayout layout({3, 3}, 1, 3, 7);
  ProgramBuilder b("two", layout);
  for (std::size_t k = 0; k < 2; ++k) {
    b.Fourier({layout.WorkCell(k)}, false);
    const TripleFn f = [k](std::span<const std::uint32_t> w) {
      return QueryTriple{w[k] % 2, 3, 1};
    };
    b.SetQuery(0, f).GroupOp().ClearQuery(0, f).ForcedMeasurement();
  }
  OutputSpec out;
  out.cells = {layout.WorkCell(0), layout.WorkCell(1)};
  return {std::move(b).Build(out),
          {SubroutineBudget::Query(1), SubroutineBudget::Query(1)}};
}

TEST(RunHybridTest, SubroutinesMeasureIndependently) {
  const HybridSchedule s = TwoCoinFlips();
  const GgmOracle oracle(GroupSpec(7), std::vector<Residue>{2, 5});
  std::vector<std::vector<std::uint64_t>> counts(3,
                                                 std::vector<std::uint64_t>(3));
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    HybridOptions opts;
    opts.seed = TrialSeed(42, trial);
    const HybridRun r = RunHybrid(s, oracle, InputForms(2), opts);
    counts[r.outcome->values[0]][r.outcome->values[1]] += 1;
  }
  EXPECT_GT(ChiSquareIndependence(counts), 0.01);
  for (const auto& row : counts) {
    for (std::uint64_t c : row) EXPECT_GT(c, 60u);
  }
}

TEST(RunHybridTest, ModesAgreeOnRandomSchedules) {
  Rng rng(31);
  for (SimulationMode mode : {SimulationMode::kQuery, SimulationMode::kDepth,
                              SimulationMode::kMemory}) {
    for (int trial = 0; trial < 5; ++trial) {
      RandomScheduleParams params;
      params.mode = mode;
      params.subroutines = 1 + trial % 2;
      params.limit = 1 + trial % 2;
      const HybridSchedule s = RandomHybridSchedule(params, rng);
      const std::vector<Residue> y = RandomInputs(7, params.m, rng);
      const GgmOracle oracle(GroupSpec(7), y);
      HybridOptions opts;
      opts.enumerate = true;
      const HybridRun q = RunHybrid(s, oracle, InputForms(params.m), opts);
      opts.mode = OracleMode::kDequantized;
      const HybridRun d = RunHybrid(s, oracle, InputForms(params.m), opts);
      EXPECT_LT(TotalVariation(q.distribution, d.distribution), kTol);
      EXPECT_LE(d.real_ops, d.bound);
      ASSERT_EQ(d.audits.size(), params.subroutines + 1);
      for (std::size_t k = 0; k < params.subroutines; ++k) {
        const OpCounters& c = d.audits[k].program_counters;
        if (mode == SimulationMode::kDepth) {
          EXPECT_LE(c.quantum_depth, params.limit);
        } else {
          EXPECT_LE(c.quantum_ops, params.limit);
        }
      }
    }
  }
}

}  // namespace
}  // namespace ggq

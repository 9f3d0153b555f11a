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

#include <utility>

#include "ggq/errors.h"
#include "ggq/executor.h"

namespace ggq {
namespace {

std::vector<Residue> TableValues(const GgmOracle& oracle, std::size_t forms,
                                 std::size_t table_size) {
  std::vector<Residue> table(table_size, 0);
  for (std::size_t i = 1; i <= std::min(forms, table_size); ++i) {
    table[i - 1] = oracle.Output(i);
  }
  return table;
}

template <typename Backend>
void Collect(const ExecutionContext<Backend>& ctx, HybridRun& run) {
  run.counters = ctx.counters;
  run.transcript = ctx.transcript;
}

}  // namespace

SubroutineResult RunSubroutine(const Program& program,
                               std::span<const Residue> table,
                               const SubroutineBudget& budget, Rng& rng) {
  HybridSchedule schedule{program, {budget}};
  Step forced;
  forced.kind = StepKind::kForcedMeasurement;
  forced.label = "forced_measurement";
  schedule.program.steps.push_back(forced);
  schedule.program.output = OutputSpec{};
  schedule.program.output.cells = schedule.program.layout.AllCells();
  schedule.Validate();
  ExecutionOptions eo;
  eo.budgets = &schedule.budgets;
  Executor<QggmBackend> executor(schedule.program, eo);
  SubroutineResult result;
  const Outcome o = executor.Sample(
      Executor<QggmBackend>::MakeContext(schedule.program, table,
                                         QggmBackend(program.layout.order())),
      rng, [&](const ExecutionContext<QggmBackend>& ctx, double) {
        result.counters = ctx.counters;
        result.transcript = ctx.transcript;
      });
  result.snapshot.assign(o.values.begin(), o.values.end());
  return result;
}

HybridRun RunHybrid(const HybridSchedule& schedule, const GgmOracle& oracle,
                    std::vector<LinearForm> table_forms,
                    const HybridOptions& options) {
  schedule.Validate();
  const Program& program = schedule.program;
  HybridRun run;
  ExecutionOptions eo;
  eo.budgets = &schedule.budgets;
  eo.state_cap = options.dequantize.state_cap;
  if (options.mode == OracleMode::kQuantumSim) {
    const std::vector<Residue> table =
        TableValues(oracle, table_forms.size(), program.layout.table_size());
    Executor<QggmBackend> executor(program, eo);
    auto root = Executor<QggmBackend>::MakeContext(
        program, table, QggmBackend(oracle.spec().order()));
    auto visit = [&](const ExecutionContext<QggmBackend>& ctx, double) {
      Collect(ctx, run);
    };
    if (options.enumerate) {
      run.distribution = executor.Enumerate(std::move(root), visit);
    } else {
      Rng rng(options.seed);
      run.outcome = executor.Sample(std::move(root), rng, visit);
    }
    return run;
  }
  if (options.enumerate) {
    DequantizeOptions dq = options.dequantize;
    dq.seed = options.seed;
    DequantizedRun d =
        ggq::RunHybrid(schedule, oracle, std::move(table_forms), dq);
    run.distribution = std::move(d.distribution);
    run.counters = d.program_counters;
    run.real_ops = d.max_real_ops;
    run.bound = d.bound;
    run.audits = std::move(d.audits);
    return run;
  }
  Dequantizer::Options o;
  o.seed = options.seed;
  o.budgets = &schedule.budgets;
  o.verify_coverage = options.dequantize.verify_coverage;
  o.audit_labels = options.dequantize.audit_labels;
  Dequantizer dq(oracle, std::move(table_forms), o);
  const std::vector<Residue> table = dq.StartTable(program.layout.table_size());
  Executor<Dequantizer> executor(program, eo);
  Rng rng(SplitMix64(options.seed));
  run.outcome = executor.Sample(
      Executor<Dequantizer>::MakeContext(program, table, std::move(dq)), rng,
      [&](const ExecutionContext<Dequantizer>& ctx, double) {
        Collect(ctx, run);
        run.real_ops = ctx.backend.real_ops();
        run.bound = ctx.backend.total_bound();
        run.audits = ctx.backend.audits();
      });
  return run;
}

std::vector<QueryKind> DeclaredSequence(const Program& program) {
  std::vector<QueryKind> out;
  for (const Step& s : program.steps) {
    switch (s.kind) {
      case StepKind::kGroupOp:
        out.push_back(s.width == 1 ? QueryKind::kQuantumOp
                                   : QueryKind::kParallelOp);
        break;
      case StepKind::kEquality:
        out.push_back(s.width == 1 ? QueryKind::kEquality
                                   : QueryKind::kParallelEquality);
        break;
      case StepKind::kClassicalGroupOp:
        out.push_back(QueryKind::kClassicalOp);
        break;
      default:
        break;
    }
  }
  return out;
}

void AuditTranscript(const Program& program,
                     const std::vector<QueryRecord>& transcript) {
  const std::vector<QueryKind> declared = DeclaredSequence(program);
  if (declared.size() != transcript.size()) {
    throw InvariantError(
        "transcript length differs from the declared "
        "sequence");
  }
  for (std::size_t k = 0; k < declared.size(); ++k) {
    if (declared[k] != transcript[k].kind) {
      throw InvariantError("query " + std::to_string(k + 1) + " was " +
                           ToString(transcript[k].kind) + ", declared " +
                           ToString(declared[k]));
    }
  }
}

HybridSchedule BuildShorHybrid(const GroupSpec& spec,
                               const PrecomputedPowers& pre) {
  HybridSchedule schedule{BuildShorProgram(spec, pre),
                          {SubroutineBudget::Query(2 * pre.digits())}};
  Step forced;
  forced.kind = StepKind::kForcedMeasurement;
  forced.label = "forced_measurement";
  schedule.program.steps.push_back(forced);
  schedule.program.name = "shor_dl_hybrid";
  return schedule;
}

}  // namespace ggq

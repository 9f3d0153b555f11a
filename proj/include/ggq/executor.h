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

#ifndef GGQ_EXECUTOR_H_
#define GGQ_EXECUTOR_H_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ggq/counters.h"
#include "ggq/errors.h"
#include "ggq/program.h"
#include "ggq/qggm_oracle.h"
#include "ggq/rng.h"
#include "ggq/schedule.h"
#include "ggq/state_vector.h"

namespace ggq {

// What an interpreter of T needs to provide: the QGGM keeps group elements
// in T, the dequantizer keeps labels.
template <typename B>
concept OracleBackend =
    std::copy_constructible<B> &&
    requires(B b, const B cb, StateVector& s, const StateVector& cs,
             const Step& step, const QueryTriple& q, const MemoryPolicy& p,
             const StageReport& r, std::uint32_t v) {
      b.GroupOp(s, step, p);
      b.Equality(s, step);
      b.ClassicalOp(s, q, std::size_t{0}, p);
      b.ForcedMeasurement(cs, r);
      b.Finish(r);
      { cb.GroupOutcome(v) } -> std::same_as<Outcome>;
    };

class QggmBackend {
 public:
  explicit QggmBackend(std::uint64_t order);

  void GroupOp(StateVector& state, const Step& step,
               const MemoryPolicy& policy);
  void Equality(StateVector& state, const Step& step);
  void ClassicalOp(StateVector& state, const QueryTriple& triple,
                   std::size_t query, const MemoryPolicy& policy);
  void ForcedMeasurement(const StateVector&, const StageReport&) {}
  void Finish(const StageReport&) {}
  Outcome GroupOutcome(std::uint32_t value) const { return {true, {value}}; }

 private:
  CombineFn combine_;
};

struct ExecutionOptions {
  // Hybrid execution when set: one budget per forced measurement.
  const std::vector<SubroutineBudget>* budgets = nullptr;
  // Memory policy for non-hybrid runs.
  MemoryPolicy policy;
  // Largest support tolerated before raising SizeError.
  std::size_t state_cap = std::size_t{1} << 22;
};

template <OracleBackend Backend>
struct ExecutionContext {
  StateVector state;
  Backend backend;
  double weight = 1.0;
  std::size_t stage = 0;
  OpCounters counters;
  OpCounters stage_counters;
  std::vector<QueryRecord> transcript;
};

// Interprets a Program against a backend. Enumerate() forks on every
// measurement and returns the exact outcome distribution; Sample() follows
// one Born-rule path.
template <OracleBackend Backend>
class Executor {
 public:
  using Context = ExecutionContext<Backend>;
  using LeafVisitor = std::function<void(const Context&, double)>;

  Executor(const Program& program, ExecutionOptions options = {})
      : program_(program), options_(options) {}

  static Context MakeContext(const Program& program,
                             std::span<const Residue> table, Backend backend) {
    return Context{StateVector::Init(program.layout, table, program.work_init),
                   std::move(backend),
                   1.0,
                   0,
                   {},
                   {},
                   {}};
  }

  OutcomeDistribution Enumerate(Context root,
                                const LeafVisitor& visit = {}) const {
    OutcomeDistribution dist;
    Run(std::move(root), 0, nullptr, &dist, nullptr, visit);
    return dist;
  }

  Outcome Sample(Context root, Rng& rng, const LeafVisitor& visit = {}) const {
    Outcome out;
    Run(std::move(root), 0, &rng, nullptr, &out, visit);
    return out;
  }

 private:
  bool hybrid() const { return options_.budgets != nullptr; }

  const SubroutineBudget* Budget(const Context& ctx) const {
    if (!hybrid() || ctx.stage >= options_.budgets->size()) return nullptr;
    return &(*options_.budgets)[ctx.stage];
  }

  MemoryPolicy Policy(const Context& ctx) const {
    if (!hybrid()) return options_.policy;
    const SubroutineBudget* b = Budget(ctx);
    return b && b->memory ? *b->memory : MemoryPolicy{};
  }

  StageReport Report(const Context& ctx) const {
    return StageReport{ctx.stage, hybrid() && Budget(ctx) == nullptr,
                       ctx.stage_counters, Budget(ctx)};
  }

  void ChargeQuantum(Context& ctx, const Step& step) const {
    if (hybrid()) {
      const SubroutineBudget* b = Budget(ctx);
      if (b == nullptr) {
        throw BudgetError("quantum operation in the final classical stage");
      }
      const bool over =
          b->mode == SubroutineBudget::Mode::kQuery
              ? ctx.stage_counters.quantum_ops + step.width > b->limit
              : ctx.stage_counters.quantum_depth + 1 > b->limit;
      if (over) {
        throw BudgetError("subroutine " + std::to_string(ctx.stage + 1) +
                          " exceeds its " + ToString(b->mode) + " budget " +
                          std::to_string(b->limit));
      }
    }
    for (OpCounters* c : {&ctx.counters, &ctx.stage_counters}) {
      c->quantum_ops += step.width;
      c->quantum_depth += 1;
      c->parallel_width_max =
          std::max<std::uint64_t>(c->parallel_width_max, step.width);
    }
    ctx.transcript.push_back(
        {step.width == 1 ? QueryKind::kQuantumOp : QueryKind::kParallelOp,
         step.width,
         ctx.counters.quantum_depth,
         ctx.stage,
         {},
         {}});
  }

  void ChargeClassical(const Context& ctx) const {
    const SubroutineBudget* b = Budget(ctx);
    if (b && b->mode == SubroutineBudget::Mode::kQuery && b->limit > 0 &&
        ctx.stage_counters.quantum_ops >= b->limit) {
      throw BudgetError(
          "classical operation after the final quantum "
          "operation of subroutine " +
          std::to_string(ctx.stage + 1));
    }
  }

  // Calls f(branch context) for every outcome (enumeration) or for one
  // sampled outcome.
  template <typename F>
  void ForEachBranch(Context& ctx, std::span<const std::size_t> cells, Rng* rng,
                     F&& f) const {
    if (rng != nullptr) {
      StateVector::Branch b = ctx.state.Measure(cells, *rng);
      ctx.state = std::move(b.state);
      f(ctx, b.outcome);
      return;
    }
    std::vector<StateVector::Branch> branches = ctx.state.Branches(cells);
    ctx.state = branches.front().state;
    for (StateVector::Branch& b : branches) {
      Context c = ctx;
      c.state = std::move(b.state);
      c.weight *= b.probability;
      f(c, b.outcome);
    }
  }

  void Run(Context ctx, std::size_t pc, Rng* rng, OutcomeDistribution* dist,
           Outcome* sampled, const LeafVisitor& visit) const {
    const RegisterLayout& layout = program_.layout;
    for (; pc < program_.steps.size(); ++pc) {
      const Step& step = program_.steps[pc];
      switch (step.kind) {
        case StepKind::kUnitary:
          ctx.state.ApplyLocal(step.cells, *step.unitary);
          break;
        case StepKind::kPermutation:
          ctx.state.ApplyPermutation(step.permutation);
          break;
        case StepKind::kGroupOp:
          ChargeQuantum(ctx, step);
          ctx.backend.GroupOp(ctx.state, step, Policy(ctx));
          break;
        case StepKind::kEquality:
          ctx.backend.Equality(ctx.state, step);
          ctx.counters.equality_queries += step.width;
          ctx.stage_counters.equality_queries += step.width;
          ctx.transcript.push_back({step.width == 1
                                        ? QueryKind::kEquality
                                        : QueryKind::kParallelEquality,
                                    step.width,
                                    ctx.counters.quantum_depth,
                                    ctx.stage,
                                    {},
                                    {}});
          break;
        case StepKind::kClassicalGroupOp: {
          ChargeClassical(ctx);
          const std::vector<std::size_t> qcells = layout.QueryCells(step.query);
          ForEachBranch(ctx, qcells, rng, [&](Context& c, const Config& o) {
            const QueryTriple q{o[0], o[1], o[2]};
            auto finish =
                [&](Context& c2,
                    std::optional<std::pair<std::uint32_t, std::uint32_t>>
                        operands) {
                  if (q.i != q.j) {
                    c2.backend.ClassicalOp(c2.state, q, step.query, Policy(c2));
                  }
                  c2.counters.classical_ops += 1;
                  c2.stage_counters.classical_ops += 1;
                  c2.transcript.push_back({QueryKind::kClassicalOp, 1,
                                           c2.counters.quantum_depth, c2.stage,
                                           q, operands});
                  Run(std::move(c2), pc + 1, rng, dist, sampled, visit);
                };
            if (q.i == q.j) {
              finish(c, std::nullopt);
              return;
            }
            if (q.i == 0 || q.j == 0) {
              throw DomainError("classical operation references index 0");
            }
            const std::vector<std::size_t> tcells = {layout.TableCell(q.i),
                                                     layout.TableCell(q.j)};
            ForEachBranch(c, tcells, rng, [&](Context& c2, const Config& v) {
              finish(c2, std::make_pair(v[0], v[1]));
            });
          });
          return;
        }
        case StepKind::kForcedMeasurement: {
          const std::vector<std::size_t> all = layout.AllCells();
          ForEachBranch(ctx, all, rng, [&](Context& c, const Config&) {
            if (!hybrid()) {
              throw ConfigError("forced measurement outside a hybrid run");
            }
            c.backend.ForcedMeasurement(c.state, Report(c));
            c.stage += 1;
            c.stage_counters = OpCounters{};
            Run(std::move(c), pc + 1, rng, dist, sampled, visit);
          });
          return;
        }
      }
      if (ctx.state.size() > options_.state_cap) {
        throw SizeError("state support " + std::to_string(ctx.state.size()) +
                        " exceeds the cap");
      }
    }
    Finish(ctx, rng, dist, sampled, visit);
  }

  void Finish(Context& ctx, Rng* rng, OutcomeDistribution* dist,
              Outcome* sampled, const LeafVisitor& visit) const {
    ctx.backend.Finish(Report(ctx));
    const OutputSpec& out = program_.output;
    const bool group = out.kind == OutputSpec::Kind::kGroup;
    const std::vector<std::size_t> cells =
        group ? std::vector<std::size_t>{program_.layout.TableCell(
                    out.table_index)}
              : out.cells;
    auto to_outcome = [&](const Config& values) {
      if (group) return ctx.backend.GroupOutcome(values[0]);
      return Outcome{false, {values.begin(), values.end()}};
    };
    if (rng != nullptr) {
      StateVector::Branch b = ctx.state.Measure(cells, *rng);
      *sampled = to_outcome(b.outcome);
    } else {
      for (const auto& [values, p] : ctx.state.Distribution(cells)) {
        (*dist)[to_outcome(values)] += ctx.weight * p;
      }
    }
    if (visit) visit(ctx, ctx.weight);
  }

  const Program& program_;
  ExecutionOptions options_;
};

}  // namespace ggq

#endif  // GGQ_EXECUTOR_H_

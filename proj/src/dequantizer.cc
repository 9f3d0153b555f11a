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

#include "ggq/dequantizer.h"

#include <algorithm>
#include <utility>

#include "ggq/errors.h"

namespace ggq {

std::string ToString(SimulationMode mode) {
  switch (mode) {
    case SimulationMode::kBasic:
      return "basic";
    case SimulationMode::kDepth:
      return "depth";
    case SimulationMode::kQuery:
      return "query";
    case SimulationMode::kMemory:
      return "memory";
  }
  return "unknown";
}

std::vector<LinearForm> InputForms(std::size_t m) {
  std::vector<LinearForm> forms;
  forms.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    forms.push_back(LinearForm::Variable(m, i));
  }
  return forms;
}

Dequantizer::Dequantizer(GgmOracle oracle, std::vector<LinearForm> table_forms,
                         Options options)
    : oracle_(std::move(oracle)),
      table_forms_(std::move(table_forms)),
      options_(options),
      m_(table_forms_.empty() ? 0 : table_forms_.front().variable_count()),
      table_(oracle_.spec()),
      rng_(options.seed) {
  for (const LinearForm& f : table_forms_) {
    if (f.variable_count() != m_) {
      throw DomainError("table forms use different variable sets");
    }
  }
  next_index_ = oracle_.NextFreeIndex();
  ops_at_start_ = oracle_.counters().classical_ops;
  zero_label_ = table_.FreshLabel(rng_);
  table_.Insert(LinearForm::Zero(m_), zero_label_, next_index_++);
  for (std::size_t k = 0; k < table_forms_.size(); ++k) {
    LabelOf(table_forms_[k], k + 1);
  }
}

std::uint64_t Dequantizer::real_ops() const {
  return oracle_.counters().classical_ops - ops_at_start_;
}

Label Dequantizer::LabelOf(const LinearForm& f, Index index) {
  if (auto e = table_.Find(f)) return e->label;
  for (Label l : table_.Labels()) {
    if (oracle_.Equal(index, table_.MaterializedIndex(l))) {
      table_.Insert(f, l, index);
      return l;
    }
  }
  const Label fresh = table_.FreshLabel(rng_);
  table_.Insert(f, fresh, index);
  return fresh;
}

Label Dequantizer::Combine(Label a, Label b, bool subtract) {
  const OpKey key{a, b, subtract};
  if (auto it = op_table_.find(key); it != op_table_.end()) return it->second;
  const LinearForm h = table_.Representative(a).Combine(
      table_.Representative(b), subtract, oracle_.spec());
  Label l;
  if (auto e = table_.Find(h)) {
    l = e->label;
  } else {
    const Index k = next_index_++;
    oracle_.GroupOp(subtract, table_.MaterializedIndex(a),
                    table_.MaterializedIndex(b), k);
    l = LabelOf(h, k);
  }
  op_table_.emplace(key, l);
  return l;
}

void Dequantizer::Define(Label a, Label b, bool subtract,
                         std::set<Label>* out) {
  const Label l = Combine(a, b, subtract);
  current_.insert({a, b, subtract});
  if (out != nullptr) out->insert(l);
}

void Dequantizer::ApplyLabels(StateVector& state,
                              std::span<const std::size_t> regs) {
  const CombineFn combine = [this](std::uint32_t a, std::uint32_t b,
                                   bool subtract) -> std::uint32_t {
    const OpKey key{a, b, subtract};
    if (!current_.contains(key)) {
      throw InvariantError("label operation " + std::to_string(a) +
                           (subtract ? " - " : " + ") + std::to_string(b) +
                           " undefined on a live branch");
    }
    return op_table_.at(key);
  };
  ApplyGroupOperation(state, regs, combine);
}

const SubroutineBudget* Dequantizer::StageBudget() const {
  if (options_.budgets == nullptr || stage_ >= options_.budgets->size()) {
    return nullptr;
  }
  return &(*options_.budgets)[stage_];
}

SimulationMode Dequantizer::StageMode() const {
  const SubroutineBudget* b = StageBudget();
  if (b == nullptr) return SimulationMode::kBasic;
  if (b->memory) return SimulationMode::kMemory;
  return b->mode == SubroutineBudget::Mode::kQuery ? SimulationMode::kQuery
                                                   : SimulationMode::kDepth;
}

std::vector<Label> Dequantizer::TableLabels(const Config& c,
                                            const RegisterLayout& layout,
                                            std::size_t first,
                                            std::size_t last) const {
  std::vector<Label> out;
  for (std::size_t i = first; i <= last; ++i) {
    out.push_back(i <= layout.table_size() ? c[layout.TableCell(i)]
                                           : zero_label_);
  }
  return out;
}

std::vector<Residue> Dequantizer::StartTable(std::size_t table_size) {
  std::vector<Residue> labels(table_size, zero_label_);
  for (std::size_t k = 0; k < std::min(table_size, table_forms_.size()); ++k) {
    labels[k] = table_.Find(table_forms_[k])->label;
  }
  RegisterLayout layout({}, 0, table_size, oracle_.spec().order());
  ResetStage(StateVector::Init(layout, labels));
  first_stage_m_ = stage_m_;
  return labels;
}

void Dequantizer::ResetStage(const StateVector& state) {
  if (!state.IsBasisState()) {
    throw InvariantError("stage starts from a superposition");
  }
  const RegisterLayout& layout = state.layout();
  const Config& c = state.amplitudes().begin()->first;
  const std::vector<Label> all = TableLabels(c, layout, 1, layout.table_size());
  stage_m_ = static_cast<std::uint64_t>(std::count_if(
      all.begin(), all.end(), [&](Label l) { return l != zero_label_; }));
  stage_start_ops_ = real_ops();
  active_ = std::set<Label>(all.begin(), all.end());
  active_.insert(zero_label_);
  leaves_.clear();
  stage_max_leaf_ = 0;
  switch (StageMode()) {
    case SimulationMode::kQuery:
      leaves_.insert(std::vector<Label>(active_.begin(), active_.end()));
      stage_max_leaf_ = active_.size();
      break;
    case SimulationMode::kMemory: {
      const std::size_t t = StageBudget()->memory->t;
      std::vector<Label> v = TableLabels(c, layout, 1, t);
      std::sort(v.begin(), v.end());
      leaves_.insert(std::move(v));
      stage_max_leaf_ = t;
      break;
    }
    case SimulationMode::kBasic:
    case SimulationMode::kDepth:
      break;
  }
}

void Dequantizer::GroupOp(StateVector& state, const Step& step,
                          const MemoryPolicy& policy) {
  const std::vector<std::size_t> regs = FirstRegisters(step.width);
  if (policy.enabled) CheckQuantumQuery(policy, state, regs, step.qracm);
  const std::size_t labels_before = table_.label_count();
  const std::uint64_t ops_before = real_ops();
  current_.clear();
  switch (StageMode()) {
    case SimulationMode::kBasic:
    case SimulationMode::kDepth: {
      const std::vector<Label> pre(active_.begin(), active_.end());
      std::set<Label> added;
      for (Label a : pre) {
        for (Label b : pre) {
          Define(a, b, false, &added);
          Define(a, b, true, &added);
        }
      }
      active_.insert(added.begin(), added.end());
      break;
    }
    case SimulationMode::kQuery: {
      if (step.width != 1) {
        throw ConfigError("query-bounded simulation needs width-1 operations");
      }
      std::set<std::vector<Label>> next;
      for (const std::vector<Label>& v : leaves_) {
        for (Label a : v) {
          for (Label b : v) {
            for (bool s : {false, true}) {
              const Label l = Combine(a, b, s);
              current_.insert({a, b, s});
              std::vector<Label> child = v;
              auto pos = std::lower_bound(child.begin(), child.end(), l);
              if (pos == child.end() || *pos != l) child.insert(pos, l);
              stage_max_leaf_ = std::max(stage_max_leaf_, child.size());
              next.insert(std::move(child));
            }
          }
        }
      }
      leaves_ = std::move(next);
      break;
    }
    case SimulationMode::kMemory: {
      if (!policy.enabled) {
        throw ConfigError("memory-bounded simulation needs a memory policy");
      }
      const RegisterLayout& layout = state.layout();
      std::vector<Label> qracm;
      for (Index j : step.qracm) {
        const std::size_t cell = layout.TableCell(j);
        const Label l = state.amplitudes().begin()->first[cell];
        for (const auto& [c, amp] : state.amplitudes()) {
          if (c[cell] != l) {
            throw InvariantError("QRACM slot " + std::to_string(j) +
                                 " is not classical");
          }
        }
        qracm.push_back(l);
      }
      std::set<std::vector<Label>> next;
      auto add_child = [&](const std::vector<Label>& v, std::size_t a, Label b,
                           bool s) {
        const Label l = Combine(v[a], b, s);
        current_.insert({v[a], b, s});
        std::vector<Label> child = v;
        child[a] = l;
        std::sort(child.begin(), child.end());
        next.insert(std::move(child));
      };
      for (const std::vector<Label>& v : leaves_) {
        next.insert(v);
        for (std::size_t a = 0; a < v.size(); ++a) {
          for (bool s : {false, true}) {
            for (std::size_t b = 0; b < v.size(); ++b) {
              if (b != a) add_child(v, a, v[b], s);
            }
            for (Label j : qracm) add_child(v, a, j, s);
          }
        }
      }
      leaves_ = std::move(next);
      break;
    }
  }
  ApplyLabels(state, regs);
  if (options_.verify_coverage) CheckCoverage(state);
  if (options_.audit_labels) AuditLabels();
  Record(step.width == 1 ? "quantum_op" : "parallel_op", labels_before,
         ops_before);
}

void Dequantizer::Equality(StateVector& state, const Step& step) {
  ApplyEqualityOperation(state, FirstRegisters(step.width));
  Record(step.width == 1 ? "equality" : "parallel_equality",
         table_.label_count(), real_ops());
}

void Dequantizer::ClassicalOp(StateVector& state, const QueryTriple& triple,
                              std::size_t query, const MemoryPolicy& policy) {
  if (options_.budgets == nullptr) {
    throw ConfigError("classical operations need a hybrid schedule");
  }
  if (policy.enabled) {
    CheckPolicy(policy, QueryKind::kClassicalOp, {&triple, 1}, {});
  }
  const std::size_t labels_before = table_.label_count();
  const std::uint64_t ops_before = real_ops();
  const RegisterLayout& layout = state.layout();
  const Config& c = state.amplitudes().begin()->first;
  const Label li = c[layout.TableCell(triple.i)];
  const Label lj = c[layout.TableCell(triple.j)];
  const bool subtract = triple.b != 0;
  current_.clear();
  Define(li, lj, subtract, nullptr);
  const Label l = op_table_.at({li, lj, subtract});
  switch (StageMode()) {
    case SimulationMode::kBasic:
    case SimulationMode::kDepth:
      active_.insert(l);
      break;
    case SimulationMode::kQuery: {
      std::set<std::vector<Label>> next;
      for (std::vector<Label> v : leaves_) {
        auto pos = std::lower_bound(v.begin(), v.end(), l);
        if (pos == v.end() || *pos != l) v.insert(pos, l);
        stage_max_leaf_ = std::max(stage_max_leaf_, v.size());
        next.insert(std::move(v));
      }
      leaves_ = std::move(next);
      break;
    }
    case SimulationMode::kMemory: {
      if (triple.i > policy.t) break;
      std::set<std::vector<Label>> next;
      for (std::vector<Label> v : leaves_) {
        auto pos = std::find(v.begin(), v.end(), li);
        if (pos != v.end()) {
          *pos = l;
          std::sort(v.begin(), v.end());
        }
        next.insert(std::move(v));
      }
      leaves_ = std::move(next);
      break;
    }
  }
  const std::size_t reg[] = {query};
  ApplyLabels(state, reg);
  if (options_.audit_labels) AuditLabels();
  Record("classical_op", labels_before, ops_before);
}

void Dequantizer::CheckCoverage(const StateVector& state) const {
  const RegisterLayout& layout = state.layout();
  for (const auto& [c, amp] : state.amplitudes()) {
    switch (StageMode()) {
      case SimulationMode::kBasic:
      case SimulationMode::kDepth:
        for (Label l : TableLabels(c, layout, 1, layout.table_size())) {
          if (!active_.contains(l)) {
            throw InvariantError("branch holds a label outside S");
          }
        }
        break;
      case SimulationMode::kQuery: {
        std::vector<Label> v = TableLabels(c, layout, 1, layout.table_size());
        v.push_back(zero_label_);
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        const bool covered =
            std::any_of(leaves_.begin(), leaves_.end(), [&](const auto& leaf) {
              return std::includes(leaf.begin(), leaf.end(), v.begin(),
                                   v.end());
            });
        if (!covered) throw InvariantError("branch not covered by any leaf");
        break;
      }
      case SimulationMode::kMemory: {
        std::vector<Label> v =
            TableLabels(c, layout, 1, StageBudget()->memory->t);
        std::sort(v.begin(), v.end());
        if (!leaves_.contains(v)) {
          throw InvariantError("quantum slots of a branch match no leaf");
        }
        break;
      }
    }
  }
}

void Dequantizer::AuditLabels() {
  for (const auto& [f, e] : table_.forms()) {
    if (!oracle_.Equal(e.index, table_.MaterializedIndex(e.label))) {
      throw InvariantError("form " + f.ToString() +
                           " shares a label with a different element");
    }
  }
  const std::vector<Label> labels = table_.Labels();
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      if (oracle_.Equal(table_.MaterializedIndex(labels[a]),
                        table_.MaterializedIndex(labels[b]))) {
        throw InvariantError("two labels name the same element");
      }
    }
  }
}

void Dequantizer::Record(const std::string& kind, std::size_t labels_before,
                         std::uint64_t ops_before) {
  events_.push_back({kind, stage_, table_.form_count(), table_.label_count(),
                     table_.label_count() - labels_before,
                     real_ops() - ops_before});
}

void Dequantizer::CloseStage(const StageReport& report) {
  StageAudit a;
  a.stage = stage_;
  a.mode = StageMode();
  a.final_stage = report.final_stage;
  a.m = stage_m_;
  a.program_counters = report.counters;
  a.real_ops = real_ops() - stage_start_ops_;
  a.max_leaf_size = stage_max_leaf_;
  a.leaf_count = leaves_.size();
  totals_ += report.counters;
  const OpCounters& c = report.counters;
  const SubroutineBudget* budget = StageBudget();
  if (options_.budgets == nullptr) {
    a.bound = BasicSimulationBound(c.quantum_depth, m_);
  } else if (budget == nullptr) {
    a.bound = c.group_ops();
  } else {
    switch (a.mode) {
      case SimulationMode::kDepth:
        a.bound = DepthSubroutineBound(a.m, c.group_ops(), c.quantum_depth);
        break;
      case SimulationMode::kQuery:
        a.bound = QuerySubroutineBound(a.m, c.group_ops(), c.quantum_ops);
        if (a.max_leaf_size > a.m + c.group_ops() + 1) {
          throw InvariantError("leaf size exceeds m + Q + 1");
        }
        break;
      case SimulationMode::kMemory:
        a.bound = MemorySubroutineBound(c.classical_ops, budget->memory->t,
                                        budget->memory->r, c.quantum_ops);
        break;
      case SimulationMode::kBasic:
        break;
    }
  }
  if (options_.enforce_bounds && a.real_ops > a.bound) {
    throw BudgetError("stage " + std::to_string(stage_ + 1) + " (" +
                      ToString(a.mode) + ") used " +
                      std::to_string(a.real_ops) + " operations, bound " +
                      ToString(a.bound));
  }
  audits_.push_back(std::move(a));
}

void Dequantizer::ForcedMeasurement(const StateVector& state,
                                    const StageReport& report) {
  CloseStage(report);
  stage_ += 1;
  ResetStage(state);
}

void Dequantizer::Finish(const StageReport& report) {
  CloseStage(report);
  if (options_.budgets == nullptr) {
    total_bound_ = audits_.back().bound;
    return;
  }
  const std::vector<SubroutineBudget>& budgets = *options_.budgets;
  const std::uint64_t subroutines = budgets.size();
  std::uint64_t q = 0;
  std::uint64_t d = 0;
  std::uint64_t t = 0;
  std::uint64_t r = 0;
  for (const StageAudit& a : audits_) {
    q = std::max(q, a.program_counters.quantum_ops);
    d = std::max(d, a.program_counters.quantum_depth);
  }
  bool all_query = true;
  bool all_depth = true;
  bool all_memory = true;
  for (const SubroutineBudget& b : budgets) {
    all_memory &= b.memory.has_value();
    all_query &= !b.memory && b.mode == SubroutineBudget::Mode::kQuery;
    all_depth &= !b.memory && b.mode == SubroutineBudget::Mode::kDepth;
    if (b.memory) {
      t = std::max<std::uint64_t>(t, b.memory->t);
      r = std::max<std::uint64_t>(r, b.memory->r);
    }
  }
  const std::uint64_t ops = totals_.group_ops();
  if (subroutines == 0) {
    total_bound_ = ops;
  } else if (all_memory) {
    total_bound_ =
        HybridMemoryBound(totals_.classical_ops, subroutines, t, r, q);
  } else if (all_query) {
    total_bound_ = HybridQueryBound(ops, subroutines, first_stage_m_, q);
  } else if (all_depth) {
    total_bound_ = HybridDepthBound(ops, subroutines, first_stage_m_, d);
  } else {
    total_bound_ = 0;
  }
  if (options_.enforce_bounds && total_bound_ > 0 &&
      real_ops() > total_bound_) {
    throw BudgetError("hybrid simulation used " + std::to_string(real_ops()) +
                      " operations, bound " + ToString(total_bound_));
  }
}

Index Dequantizer::FinalizeIndex(Label label) const {
  return table_.MaterializedIndex(label);
}

Outcome Dequantizer::GroupOutcome(std::uint32_t label) const {
  return Outcome{true, {oracle_.Output(FinalizeIndex(label))}};
}

namespace {

DequantizedRun Run(const Program& program,
                   const std::vector<SubroutineBudget>* budgets,
                   const GgmOracle& oracle, std::vector<LinearForm> table_forms,
                   const DequantizeOptions& options) {
  Dequantizer::Options o;
  o.seed = options.seed;
  o.budgets = budgets;
  o.verify_coverage = options.verify_coverage;
  o.audit_labels = options.audit_labels;
  Dequantizer dq(oracle, std::move(table_forms), o);
  const std::vector<Residue> table = dq.StartTable(program.layout.table_size());
  ExecutionOptions eo;
  eo.budgets = budgets;
  eo.state_cap = options.state_cap;
  Executor<Dequantizer> executor(program, eo);
  DequantizedRun run;
  bool first = true;
  run.distribution = executor.Enumerate(
      Executor<Dequantizer>::MakeContext(program, table, std::move(dq)),
      [&](const ExecutionContext<Dequantizer>& ctx, double) {
        run.branches += 1;
        const std::uint64_t ops = ctx.backend.real_ops();
        if (first || ops > run.max_real_ops) {
          run.max_real_ops = ops;
          run.audits = ctx.backend.audits();
          run.program_counters = ctx.counters;
        }
        run.bound = std::max(run.bound, ctx.backend.total_bound());
        first = false;
      });
  return run;
}

DequantizedRun RunSingle(const Program& program, SubroutineBudget budget,
                         const GgmOracle& oracle,
                         std::vector<LinearForm> table_forms,
                         const DequantizeOptions& options) {
  HybridSchedule schedule{program, {budget}};
  return RunHybrid(schedule, oracle, std::move(table_forms), options);
}

}  // namespace

DequantizedRun RunBasic(const Program& program, const GgmOracle& oracle,
                        std::vector<LinearForm> table_forms,
                        const DequantizeOptions& options) {
  return Run(program, nullptr, oracle, std::move(table_forms), options);
}

DequantizedRun RunHybrid(const HybridSchedule& schedule,
                         const GgmOracle& oracle,
                         std::vector<LinearForm> table_forms,
                         const DequantizeOptions& options) {
  schedule.Validate();
  return Run(schedule.program, &schedule.budgets, oracle,
             std::move(table_forms), options);
}

DequantizedRun RunQuerySubroutine(const Program& program, std::size_t q,
                                  const GgmOracle& oracle,
                                  std::vector<LinearForm> table_forms,
                                  const DequantizeOptions& options) {
  return RunSingle(program, SubroutineBudget::Query(q), oracle,
                   std::move(table_forms), options);
}

DequantizedRun RunDepthSubroutine(const Program& program, std::size_t d,
                                  const GgmOracle& oracle,
                                  std::vector<LinearForm> table_forms,
                                  const DequantizeOptions& options) {
  return RunSingle(program, SubroutineBudget::Depth(d), oracle,
                   std::move(table_forms), options);
}

DequantizedRun RunMemorySubroutine(const Program& program, std::size_t q,
                                   MemoryPolicy policy, const GgmOracle& oracle,
                                   std::vector<LinearForm> table_forms,
                                   const DequantizeOptions& options) {
  return RunSingle(program, SubroutineBudget::Query(q, policy), oracle,
                   std::move(table_forms), options);
}

}  // namespace ggq

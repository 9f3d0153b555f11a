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

#include "ggq/random_programs.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <utility>

#include "ggq/errors.h"

namespace ggq {
namespace {

std::vector<std::uint64_t> RandomWorkDims(Rng& rng) {
  const std::size_t cells = 1 + UniformBelow(rng, 2);
  std::vector<std::uint64_t> dims;
  for (std::size_t c = 0; c < cells; ++c)
    dims.push_back(2 + UniformBelow(rng, 2));
  return dims;
}

std::uint64_t WorkSpace(const std::vector<std::uint64_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::uint64_t{1},
                         std::multiplies<>());
}

std::uint64_t WorkIndex(std::span<const std::uint32_t> w,
                        const std::vector<std::uint64_t>& dims) {
  std::uint64_t idx = 0;
  for (std::size_t c = 0; c < dims.size(); ++c) idx = idx * dims[c] + w[c];
  return idx;
}

// A triple per work configuration.
TripleFn TableQuery(std::vector<QueryTriple> table,
                    std::vector<std::uint64_t> dims) {
  return [table = std::move(table),
          dims = std::move(dims)](std::span<const std::uint32_t> w) {
    return table[WorkIndex(w, dims)];
  };
}

QueryTriple RandomTriple(std::size_t s, Rng& rng) {
  if (UniformBelow(rng, 6) == 0) return {0, 0, 0};
  return {static_cast<std::uint32_t>(UniformBelow(rng, 2)),
          static_cast<std::uint32_t>(1 + UniformBelow(rng, s)),
          static_cast<std::uint32_t>(1 + UniformBelow(rng, s))};
}

std::vector<std::size_t> WorkCells(const RegisterLayout& layout) {
  std::vector<std::size_t> cells;
  for (std::size_t c = 0; c < layout.work_count(); ++c) {
    cells.push_back(layout.WorkCell(c));
  }
  return cells;
}

OutputSpec RandomOutput(const RegisterLayout& layout, Rng& rng) {
  OutputSpec out;
  if (UniformBelow(rng, 2) == 0) {
    out.kind = OutputSpec::Kind::kGroup;
    out.table_index = 1 + UniformBelow(rng, layout.table_size());
  } else {
    out.cells = WorkCells(layout);
  }
  return out;
}

// Box-Muller on UniformDouble keeps draws identical across libraries.
Complex Gaussian(Rng& rng) {
  const double u = 1.0 - UniformDouble(rng);
  const double v = UniformDouble(rng);
  const double radius = std::sqrt(-2.0 * std::log(u));
  return std::polar(radius, 2.0 * std::numbers::pi * v);
}

}  // namespace

std::shared_ptr<DenseUnitary> RandomUnitary(std::vector<std::uint64_t> dims,
                                            Rng& rng) {
  const auto n = static_cast<Eigen::Index>(WorkSpace(dims));
  Eigen::MatrixXcd z(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) z(r, c) = Gaussian(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index c = 0; c < n; ++c) {
    const Complex d = r(c, c);
    if (std::abs(d) > 0) q.col(c) *= d / std::abs(d);
  }
  std::vector<Complex> m(static_cast<std::size_t>(n * n));
  for (Eigen::Index r2 = 0; r2 < n; ++r2) {
    for (Eigen::Index c = 0; c < n; ++c) {
      m[static_cast<std::size_t>(r2 * n + c)] = q(r2, c);
    }
  }
  return std::make_shared<DenseUnitary>(std::move(dims), std::move(m), "haar");
}

std::vector<Residue> RandomInputs(std::uint64_t order, std::size_t m,
                                  Rng& rng) {
  std::vector<Residue> y(m);
  for (Residue& v : y) {
    v = UniformBelow(rng, 4) == 0 ? 0 : UniformBelow(rng, order);
  }
  return y;
}

Program RandomGenericProgram(const RandomProgramParams& params, Rng& rng) {
  const std::vector<std::uint64_t> dims = RandomWorkDims(rng);
  const std::size_t s = std::max<std::size_t>(1, params.m + params.extra_slots);
  RegisterLayout layout(dims, params.width, s, params.order);
  const std::vector<std::size_t> work = WorkCells(layout);
  const std::uint64_t space = WorkSpace(dims);
  ProgramBuilder b("random_generic", layout);
  std::size_t layers = 0;
  while (layers < params.depth) {
    b.Unitary(work, RandomUnitary(dims, rng));
    const bool equality = UniformDouble(rng) < params.equality_rate;
    const std::size_t width = 1 + UniformBelow(rng, params.width);
    std::vector<TripleFn> queries;
    for (std::size_t k = 0; k < width; ++k) {
      std::vector<QueryTriple> table(space);
      for (QueryTriple& q : table) q = RandomTriple(s, rng);
      queries.push_back(TableQuery(std::move(table), dims));
      b.SetQuery(k, queries.back());
    }
    if (equality) {
      b.Equality(width);
    } else {
      b.GroupOp(width);
      ++layers;
    }
    for (std::size_t k = 0; k < width; ++k) b.ClearQuery(k, queries[k]);
  }
  b.Unitary(work, RandomUnitary(dims, rng));
  return std::move(b).Build(RandomOutput(layout, rng));
}

HybridSchedule RandomHybridSchedule(const RandomScheduleParams& params,
                                    Rng& rng) {
  const bool memory = params.mode == SimulationMode::kMemory;
  const bool depth = params.mode == SimulationMode::kDepth;
  if (params.mode == SimulationMode::kBasic) {
    throw ConfigError("hybrid schedules need a subroutine mode");
  }
  const std::vector<std::uint64_t> dims = RandomWorkDims(rng);
  const std::uint64_t space = WorkSpace(dims);
  const std::size_t width = depth ? std::max<std::size_t>(1, params.width) : 1;
  std::size_t s = std::max<std::size_t>(1, params.m + params.extra_slots);
  if (memory) s = std::max(s, params.t + params.r + 1);
  RegisterLayout layout(dims, width, s, params.order);
  const std::vector<std::size_t> work = WorkCells(layout);
  ProgramBuilder b("random_hybrid", layout);
  std::vector<SubroutineBudget> budgets;

  auto classical = [&](std::size_t count) {
    for (std::size_t c = 0; c < count; ++c) {
      std::vector<QueryTriple> table(space);
      for (QueryTriple& q : table) q = RandomTriple(s, rng);
      const TripleFn f = TableQuery(std::move(table), dims);
      b.SetQuery(0, f).ClassicalGroupOp(0).ClearQuery(0, f);
    }
  };
  auto memory_triple = [&](const std::vector<Index>& qracm) -> QueryTriple {
    if (UniformBelow(rng, 6) == 0) return {0, 0, 0};
    const auto bit = static_cast<std::uint32_t>(UniformBelow(rng, 2));
    const auto i = static_cast<std::uint32_t>(1 + UniformBelow(rng, params.t));
    std::uint32_t j;
    if (!qracm.empty() && UniformBelow(rng, 2) == 0) {
      j = static_cast<std::uint32_t>(qracm[UniformBelow(rng, qracm.size())]);
    } else {
      j = static_cast<std::uint32_t>(1 + UniformBelow(rng, params.t));
    }
    return {bit, i, j};
  };

  for (std::size_t stage = 0; stage < params.subroutines; ++stage) {
    const std::size_t ops = UniformBelow(rng, params.limit + 1);
    const std::size_t pre =
        UniformBelow(rng, params.max_classical_per_stage + 1);
    classical(pre);
    for (std::size_t op = 0; op < ops; ++op) {
      b.Unitary(work, RandomUnitary(dims, rng));
      const std::size_t w = 1 + UniformBelow(rng, width);
      std::vector<Index> qracm;
      if (memory) {
        std::vector<Index> pool;
        for (Index j = params.t + 1; j <= s; ++j) pool.push_back(j);
        for (std::size_t k = pool.size(); k > 1; --k) {
          std::swap(pool[k - 1], pool[UniformBelow(rng, k)]);
        }
        pool.resize(std::min<std::size_t>(pool.size(),
                                          UniformBelow(rng, params.r + 1)));
        qracm = pool;
      }
      std::vector<TripleFn> queries;
      for (std::size_t k = 0; k < w; ++k) {
        std::vector<QueryTriple> table(space);
        for (QueryTriple& q : table) {
          q = memory ? memory_triple(qracm) : RandomTriple(s, rng);
        }
        queries.push_back(TableQuery(std::move(table), dims));
        b.SetQuery(k, queries.back());
      }
      b.GroupOp(w, qracm);
      for (std::size_t k = 0; k < w; ++k) b.ClearQuery(k, queries[k]);
      // Classical operations may follow any quantum operation but the last.
      if (op + 1 < ops && UniformBelow(rng, 3) == 0) classical(1);
    }
    b.Unitary(work, RandomUnitary(dims, rng));
    b.ForcedMeasurement();
    if (depth) {
      budgets.push_back(SubroutineBudget::Depth(params.limit));
    } else if (memory) {
      budgets.push_back(SubroutineBudget::Query(
          params.limit, MemoryPolicy::Bounded(params.t, params.r)));
    } else {
      budgets.push_back(SubroutineBudget::Query(params.limit));
    }
  }
  classical(params.final_classical);
  HybridSchedule schedule{std::move(b).Build(RandomOutput(layout, rng)),
                          std::move(budgets)};
  schedule.Validate();
  return schedule;
}

SymbolicShadow::SymbolicShadow(GroupSpec spec, std::size_t m)
    : spec_(spec), m_(m) {
  Intern(LinearForm::Zero(m));
}

std::uint32_t SymbolicShadow::Intern(const LinearForm& f) {
  auto [it, inserted] =
      ids_.emplace(f, static_cast<std::uint32_t>(forms_.size()));
  if (inserted) forms_.push_back(f);
  return it->second;
}

std::vector<Residue> SymbolicShadow::InputIds() {
  std::vector<Residue> ids;
  for (std::size_t i = 1; i <= m_; ++i) {
    ids.push_back(Intern(LinearForm::Variable(m_, i)));
  }
  return ids;
}

CombineFn SymbolicShadow::Combine() {
  return [this](std::uint32_t a, std::uint32_t b, bool subtract) {
    return Intern(Form(a).Combine(Form(b), subtract, spec_));
  };
}

ShadowBackend::ShadowBackend(std::shared_ptr<SymbolicShadow> shadow)
    : shadow_(std::move(shadow)), combine_(shadow_->Combine()) {}

void ShadowBackend::GroupOp(StateVector& state, const Step& step,
                            const MemoryPolicy& policy) {
  const std::vector<std::size_t> regs = FirstRegisters(step.width);
  if (policy.enabled) CheckQuantumQuery(policy, state, regs, step.qracm);
  const RegisterLayout& layout = state.layout();
  std::map<Config, std::set<std::uint32_t>> fresh;
  for (const auto& [c, amp] : state.amplitudes()) {
    Config table(
        c.begin() + static_cast<std::ptrdiff_t>(layout.local_cell_count()),
        c.end());
    std::set<std::uint32_t>& out = fresh[table];
    std::vector<QueryTriple> triples;
    for (std::size_t k : regs) triples.push_back(ReadQuery(layout, c, k));
    if (!ParallelQueryValid(triples)) continue;
    const std::set<std::uint32_t> present(table.begin(), table.end());
    for (const QueryTriple& q : triples) {
      const std::uint32_t v = combine_(c[layout.TableCell(q.i)],
                                       c[layout.TableCell(q.j)], q.b == 1);
      if (!present.contains(v)) out.insert(v);
    }
  }
  for (const auto& [table, values] : fresh) {
    max_new_values_ = std::max(max_new_values_, values.size());
  }
  ++quantum_queries_;
  ApplyGroupOperation(state, regs, combine_);
}

void ShadowBackend::Equality(StateVector& state, const Step& step) {
  ApplyEqualityOperation(state, FirstRegisters(step.width));
}

void ShadowBackend::ClassicalOp(StateVector& state, const QueryTriple& triple,
                                std::size_t query, const MemoryPolicy& policy) {
  if (policy.enabled) {
    CheckPolicy(policy, QueryKind::kClassicalOp, {&triple, 1}, {});
  }
  const std::size_t reg[] = {query};
  ApplyGroupOperation(state, reg, combine_);
}

}  // namespace ggq

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

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>

#include "ggq/algorithms.h"
#include "ggq/errors.h"
#include "ggq/executor.h"
#include "ggq/local_unitary.h"

namespace ggq {
namespace {

// One leaf is digit i of work register `side`; it selects the matching
// precomputed slot, or `zero` when the digit vanishes.
struct Leaf {
  int side = 0;
  std::size_t position = 0;
};

struct TreeOp {
  bool subtract = false;
  std::uint32_t target = 0;
  // Source slot, or a leaf when `leaf` is set.
  std::uint32_t source = 0;
  std::optional<Leaf> leaf;
};

class TreeScheduler {
 public:
  TreeScheduler(std::size_t depth, std::uint32_t first_helper)
      : layers_(depth), next_helper_(first_helper) {}

  // Adds (or, with `subtract`, removes) the sum of `leaves` into `target`
  // using layers [start, start + depth).
  void Accumulate(std::uint32_t target, std::span<const Leaf> leaves,
                  std::size_t start, std::size_t depth, bool subtract) {
    if (leaves.size() > TreeCapacity(depth)) {
      throw InvariantError("tree schedule over capacity");
    }
    std::size_t used = 0;
    for (std::size_t l = 1; l <= depth && used < leaves.size(); ++l) {
      const std::uint64_t cap = std::max<std::uint64_t>(
          1, std::min(TreeCapacity(l - 1), TreeCapacity(depth - l)));
      const std::size_t take = static_cast<std::size_t>(
          std::min<std::uint64_t>(cap, leaves.size() - used));
      std::vector<TreeOp>& layer = layers_[start + l - 1];
      if (take == 1) {
        layer.push_back({subtract, target, 0, leaves[used]});
      } else {
        const std::uint32_t helper = next_helper_++;
        const std::span<const Leaf> part = leaves.subspan(used, take);
        Accumulate(helper, part, start, l - 1, false);
        layer.push_back({subtract, target, helper, std::nullopt});
        Accumulate(helper, part, start + l, depth - l, true);
      }
      used += take;
    }
    if (used != leaves.size()) {
      throw InvariantError("tree schedule left leaves unplaced");
    }
  }

  std::vector<std::vector<TreeOp>>& layers() { return layers_; }
  std::uint32_t next_helper() const { return next_helper_; }

 private:
  std::vector<std::vector<TreeOp>> layers_;
  std::uint32_t next_helper_;
};

TripleFn LeafQuery(const PrecomputedPowers& pre, const Leaf& leaf,
                   bool subtract, std::uint32_t target, std::uint32_t zero) {
  const std::vector<Index> slots = pre.DigitSlots(leaf.side, leaf.position);
  const std::size_t p = pre.base();
  return [slots, p, leaf, subtract, target,
          zero](std::span<const std::uint32_t> w) -> QueryTriple {
    const std::uint32_t d = Digit(w[leaf.side], p, leaf.position);
    const std::uint32_t j =
        d == 0 ? zero : static_cast<std::uint32_t>(slots[d - 1]);
    if (j == 0) return {0, 0, 0};
    return {subtract ? 1u : 0u, target, j};
  };
}

void RequirePrime(const GroupSpec& spec) {
  if (!spec.is_prime()) {
    throw DomainError("the DL algorithm needs a prime group order");
  }
}

std::vector<Residue> InitialTable(const GgmOracle& oracle,
                                  const PrecomputedPowers& pre,
                                  std::size_t table_size) {
  std::vector<Residue> table(table_size, 0);
  for (std::size_t i = 1; i <= pre.size(); ++i) table[i - 1] = oracle.Output(i);
  return table;
}

}  // namespace

void QftApply(StateVector& state, std::size_t cell, bool inverse) {
  const FourierTransform f({state.layout().dim(cell)}, inverse);
  const std::size_t cells[] = {cell};
  state.ApplyLocal(cells, f);
}

Program BuildShorProgram(const GroupSpec& spec, const PrecomputedPowers& pre) {
  const std::uint64_t n = spec.order();
  const std::uint32_t acc = static_cast<std::uint32_t>(pre.size() + 1);
  RegisterLayout layout({n, n}, 1, pre.size() + 1, n);
  const std::size_t a = layout.WorkCell(0);
  const std::size_t b = layout.WorkCell(1);
  ProgramBuilder builder("shor_dl", layout);
  builder.Fourier({a}, false).Fourier({b}, false);
  for (int side = 0; side < 2; ++side) {
    for (std::size_t i = 0; i < pre.digits(); ++i) {
      const TripleFn f = LeafQuery(pre, Leaf{side, i}, false, acc, 0);
      builder.SetQuery(0, f)
          .GroupOp(1, pre.DigitSlots(side, i))
          .ClearQuery(0, f);
    }
  }
  builder.Fourier({a, b}, true);
  OutputSpec out;
  out.cells = {a, b};
  return std::move(builder).Build(out);
}

Program BuildShorTreeProgram(const GroupSpec& spec,
                             const PrecomputedPowers& pre) {
  const std::uint64_t n = spec.order();
  const std::uint32_t acc = static_cast<std::uint32_t>(pre.size() + 1);
  const std::uint32_t zero = acc + 1;
  std::vector<Leaf> leaves;
  for (int side = 0; side < 2; ++side) {
    for (std::size_t i = 0; i < pre.digits(); ++i) leaves.push_back({side, i});
  }
  const std::size_t depth = TreeDepth(leaves.size());
  TreeScheduler scheduler(depth, zero + 1);
  scheduler.Accumulate(acc, leaves, 0, depth, false);
  std::size_t width = 1;
  for (const auto& layer : scheduler.layers()) {
    width = std::max(width, layer.size());
  }
  RegisterLayout layout({n, n}, width, scheduler.next_helper() - 1, n);
  const std::size_t a = layout.WorkCell(0);
  const std::size_t b = layout.WorkCell(1);
  ProgramBuilder builder("shor_dl_tree", layout);
  builder.Fourier({a}, false).Fourier({b}, false);
  for (const std::vector<TreeOp>& layer : scheduler.layers()) {
    if (layer.empty()) continue;
    std::set<std::uint32_t> targets;
    std::set<std::uint32_t> sources;
    std::vector<TripleFn> queries;
    for (const TreeOp& op : layer) {
      if (!targets.insert(op.target).second) {
        throw InvariantError("slot targeted twice in one layer");
      }
      if (op.leaf) {
        queries.push_back(
            LeafQuery(pre, *op.leaf, op.subtract, op.target, zero));
      } else {
        sources.insert(op.source);
        const QueryTriple q{op.subtract ? 1u : 0u, op.target, op.source};
        queries.push_back([q](std::span<const std::uint32_t>) { return q; });
      }
    }
    for (std::uint32_t s : sources) {
      if (targets.contains(s)) {
        throw InvariantError("slot is both target and control in a layer");
      }
    }
    for (std::size_t k = 0; k < queries.size(); ++k) {
      builder.SetQuery(k, queries[k]);
    }
    builder.GroupOp(queries.size());
    for (std::size_t k = 0; k < queries.size(); ++k) {
      builder.ClearQuery(k, queries[k]);
    }
  }
  builder.Fourier({a, b}, true);
  OutputSpec out;
  out.cells = {a, b};
  return std::move(builder).Build(out);
}

std::optional<Residue> ShorAnswer(const GroupSpec& spec, std::uint64_t u,
                                  std::uint64_t v) {
  if (u % spec.order() == 0) return std::nullopt;
  return spec.Mul(v, spec.Inverse(u % spec.order()));
}

ShorCircuit PrepareShor(GgmOracle& oracle, std::size_t p, bool tree) {
  RequirePrime(oracle.spec());
  PrecomputedPowers pre = BuildPrecomputed(oracle, p);
  Program program = tree ? BuildShorTreeProgram(oracle.spec(), pre)
                         : BuildShorProgram(oracle.spec(), pre);
  std::vector<Residue> table =
      InitialTable(oracle, pre, program.layout.table_size());
  return ShorCircuit{std::move(pre), std::move(program), std::move(table)};
}

ShorRun ShorDl(const DlInstance& instance, std::size_t p, Rng& rng, bool tree) {
  GgmOracle oracle = instance.MakeOracle();
  const ShorCircuit c = PrepareShor(oracle, p, tree);
  Executor<QggmBackend> executor(c.program);
  ShorRun run;
  const Outcome o = executor.Sample(
      Executor<QggmBackend>::MakeContext(c.program, c.table,
                                         QggmBackend(instance.spec.order())),
      rng, [&](const ExecutionContext<QggmBackend>& ctx, double) {
        run.counters = ctx.counters;
      });
  run.counters.classical_ops += c.pre.classical_ops();
  run.u = o.values[0];
  run.v = o.values[1];
  run.answer = ShorAnswer(instance.spec, run.u, run.v);
  return run;
}

ShorExact ShorDlExact(const DlInstance& instance, std::size_t p, bool tree) {
  GgmOracle oracle = instance.MakeOracle();
  const ShorCircuit c = PrepareShor(oracle, p, tree);
  Executor<QggmBackend> executor(c.program);
  ShorExact exact;
  exact.distribution = executor.Enumerate(
      Executor<QggmBackend>::MakeContext(c.program, c.table,
                                         QggmBackend(instance.spec.order())),
      [&](const ExecutionContext<QggmBackend>& ctx, double) {
        exact.counters = ctx.counters;
      });
  exact.counters.classical_ops += c.pre.classical_ops();
  for (const auto& [o, prob] : exact.distribution) {
    const std::optional<Residue> ans =
        ShorAnswer(instance.spec, o.values[0], o.values[1]);
    if (ans && *ans == instance.x % instance.spec.order()) {
      exact.success_probability += prob;
    }
  }
  return exact;
}

}  // namespace ggq

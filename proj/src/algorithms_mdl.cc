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
#include <bit>
#include <cmath>
#include <utility>

#include "ggq/algorithms.h"
#include "ggq/errors.h"
#include "ggq/executor.h"

namespace ggq {
namespace {

struct MdlLayout {
  std::size_t bases = 0;
  std::size_t window = 1;
  std::size_t windows = 1;
  std::uint64_t buckets = 1;
  // Doublings of the classical precomputation.
  std::size_t shifts() const { return bases * (windows - 1) * window; }
  // Index of base i shifted by window w (w = 0 is the base itself).
  Index Shifted(std::size_t i, std::size_t w) const {
    if (w == 0) return i + 1;
    return bases + (i * (windows - 1) + (w - 1)) * window + window;
  }
  Index Bucket(std::uint64_t b) const { return bases + shifts() + b; }
  Index r() const { return Bucket(buckets) + 1; }
  Index s() const { return r() + 1; }
  std::size_t table_size() const { return s(); }
};

MdlLayout MakeLayout(const GroupSpec& spec, std::size_t m) {
  if (m == 0) throw DomainError("m-MDL needs m >= 1");
  MdlLayout l;
  l.bases = m + 1;
  const std::uint64_t top = spec.order() - 1;
  const std::size_t bits = std::max<std::size_t>(1, std::bit_width(top));
  const double lg_b =
      std::log2(static_cast<double>(std::max<std::uint64_t>(top, 2)));
  const double lg = std::log2(static_cast<double>(l.bases) * lg_b);
  const long c = static_cast<long>(std::floor(lg)) - 1;
  l.window =
      std::min<std::size_t>(bits, static_cast<std::size_t>(std::max(1L, c)));
  l.windows = (bits + l.window - 1) / l.window;
  l.buckets = (std::uint64_t{1} << l.window) - 1;
  return l;
}

// Classical precomputation of 2^{cw} h_i by doubling; returns the initial
// quantum table.
std::vector<Residue> RunPrecompute(GgmOracle& oracle, const MdlLayout& l,
                                   std::uint64_t* ops) {
  if (oracle.NextFreeIndex() != l.bases + 1) {
    throw InvariantError("m-MDL precomputation needs a fresh oracle");
  }
  for (std::size_t i = 0; i < l.bases; ++i) {
    for (std::size_t w = 1; w < l.windows; ++w) {
      Index prev = l.Shifted(i, w - 1);
      const Index first = l.Shifted(i, w) - l.window + 1;
      for (std::size_t k = 0; k < l.window; ++k) {
        oracle.GroupOp(false, prev, prev, first + k);
        *ops += 1;
        prev = first + k;
      }
    }
  }
  std::vector<Residue> table(l.table_size(), 0);
  for (Index i = 1; i < l.Bucket(1); ++i) table[i - 1] = oracle.Output(i);
  return table;
}

Program BuildMdlProgram(const GroupSpec& spec, const MdlLayout& l, bool fourier,
                        std::vector<std::uint32_t> work_init) {
  const std::uint64_t n = spec.order();
  RegisterLayout layout(std::vector<std::uint64_t>(l.bases, n), 1,
                        l.table_size(), n);
  ProgramBuilder b("mdl", layout);
  if (!work_init.empty()) b.WorkInit(std::move(work_init));
  std::vector<std::size_t> cells;
  for (std::size_t i = 0; i < l.bases; ++i) cells.push_back(layout.WorkCell(i));
  if (fourier) {
    for (std::size_t c : cells) b.Fourier({c}, false);
  }
  auto fill = [&](std::size_t i, std::size_t w, bool subtract) {
    const std::size_t lo = w * l.window;
    const std::uint64_t mask = l.buckets;
    const std::uint32_t src = static_cast<std::uint32_t>(l.Shifted(i, w));
    const Index bucket0 = l.Bucket(0);
    return [i, lo, mask, src, bucket0,
            subtract](std::span<const std::uint32_t> wv) -> QueryTriple {
      const std::uint64_t d = (wv[i] >> lo) & mask;
      if (d == 0) return {0, 0, 0};
      return {subtract ? 1u : 0u, static_cast<std::uint32_t>(bucket0 + d), src};
    };
  };
  auto constant = [&](bool subtract, Index i, Index j) {
    const QueryTriple q{subtract ? 1u : 0u, static_cast<std::uint32_t>(i),
                        static_cast<std::uint32_t>(j)};
    b.SetQueryConstant(0, q).GroupOp(1).ClearQueryConstant(0, q);
  };
  for (std::size_t i = 0; i < l.bases; ++i) {
    for (std::size_t w = 0; w < l.windows; ++w) {
      const TripleFn f = fill(i, w, false);
      b.SetQuery(0, f).GroupOp(1).ClearQuery(0, f);
    }
  }
  for (std::uint64_t k = l.buckets; k >= 1; --k) {
    constant(false, l.r(), l.Bucket(k));
    constant(false, l.s(), l.r());
  }
  for (std::uint64_t k = 1; k <= l.buckets; ++k) {
    constant(true, l.r(), l.Bucket(k));
  }
  for (std::size_t i = l.bases; i-- > 0;) {
    for (std::size_t w = l.windows; w-- > 0;) {
      const TripleFn f = fill(i, w, true);
      b.SetQuery(0, f).GroupOp(1).ClearQuery(0, f);
    }
  }
  if (fourier) {
    for (std::size_t c : cells) b.Fourier({c}, true);
  }
  OutputSpec out;
  if (fourier) {
    out.cells = cells;
  } else {
    out.kind = OutputSpec::Kind::kGroup;
    out.table_index = l.s();
  }
  return std::move(b).Build(out);
}

void RequireMdlDomain(const MdlInstance& instance) {
  if (!instance.spec.is_prime()) {
    throw DomainError("the m-MDL algorithm needs a prime group order");
  }
  if (instance.xs.empty()) throw DomainError("m-MDL needs m >= 1");
}

// Checks one basis input of the compiled circuit: S = f(k) and every
// scratch slot returns to zero.
void VerifyCore(const MdlInstance& instance, const MdlLayout& l,
                const std::vector<Residue>& table,
                const std::vector<std::uint32_t>& k) {
  const GroupSpec& spec = instance.spec;
  const Program core = BuildMdlProgram(spec, l, false, k);
  Executor<QggmBackend> executor(core);
  Residue expected = 0;
  for (std::size_t i = 0; i < l.bases; ++i) {
    expected = spec.Add(expected, spec.Mul(k[i], table[i]));
  }
  executor.Enumerate(
      Executor<QggmBackend>::MakeContext(core, table,
                                         QggmBackend(spec.order())),
      [&](const ExecutionContext<QggmBackend>& ctx, double) {
        const StateVector& s = ctx.state;
        if (!s.IsBasisState()) {
          throw InvariantError("m-MDL circuit left a superposition");
        }
        const Config& c = s.amplitudes().begin()->first;
        const RegisterLayout& layout = s.layout();
        if (c[layout.TableCell(l.s())] != expected) {
          throw InvariantError("m-MDL circuit computed the wrong element");
        }
        for (Index i = l.Bucket(1); i < l.s(); ++i) {
          if (c[layout.TableCell(i)] != 0) {
            throw InvariantError("m-MDL circuit left garbage");
          }
        }
        for (Index i = 1; i < l.Bucket(1); ++i) {
          if (c[layout.TableCell(i)] != table[i - 1]) {
            throw InvariantError("m-MDL circuit modified a base");
          }
        }
      });
}

// Incremental row reduction over Z_N of the dual samples.
class DualSystem {
 public:
  DualSystem(const GroupSpec& spec, std::size_t cols)
      : spec_(spec), cols_(cols) {}

  void Add(std::vector<Residue> row) {
    for (const auto& [pivot, r] : rows_) {
      const Residue f = row[pivot];
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols_; ++c) {
        row[c] = spec_.Sub(row[c], spec_.Mul(f, r[c]));
      }
    }
    auto it =
        std::find_if(row.begin(), row.end(), [](Residue v) { return v != 0; });
    if (it == row.end()) return;
    const std::size_t pivot = static_cast<std::size_t>(it - row.begin());
    const Residue inv = spec_.Inverse(row[pivot]);
    for (Residue& v : row) v = spec_.Mul(v, inv);
    for (auto& [p, r] : rows_) {
      const Residue f = r[pivot];
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols_; ++c) {
        r[c] = spec_.Sub(r[c], spec_.Mul(f, row[c]));
      }
    }
    rows_.emplace_back(pivot, std::move(row));
  }

  std::size_t rank() const { return rows_.size(); }

  // The orthogonal complement of {x_i e_0 - e_i} is spanned by (1, x).
  std::optional<std::vector<Residue>> Solution() const {
    if (rows_.size() != 1 || rows_.front().first != 0) return std::nullopt;
    const std::vector<Residue>& r = rows_.front().second;
    return std::vector<Residue>(r.begin() + 1, r.end());
  }

 private:
  GroupSpec spec_;
  std::size_t cols_;
  std::vector<std::pair<std::size_t, std::vector<Residue>>> rows_;
};

}  // namespace

MdlCost MdlCircuitCost(const GroupSpec& spec, std::size_t m) {
  const MdlLayout l = MakeLayout(spec, m);
  MdlCost cost;
  cost.window = l.window;
  cost.windows = l.windows;
  cost.classical_ops = l.shifts();
  cost.quantum_ops_per_run = 2 * l.bases * l.windows + 3 * l.buckets;
  return cost;
}

OutcomeDistribution MdlOutputDistribution(const MdlInstance& instance) {
  RequireMdlDomain(instance);
  const MdlLayout l = MakeLayout(instance.spec, instance.xs.size());
  GgmOracle oracle = instance.MakeOracle();
  std::uint64_t ops = 0;
  const std::vector<Residue> table = RunPrecompute(oracle, l, &ops);
  const Program program = BuildMdlProgram(instance.spec, l, true, {});
  Executor<QggmBackend> executor(program);
  return executor.Enumerate(Executor<QggmBackend>::MakeContext(
      program, table, QggmBackend(instance.spec.order())));
}

MdlResult MdlSolve(const MdlInstance& instance, Rng& rng,
                   const MdlOptions& options) {
  RequireMdlDomain(instance);
  const GroupSpec& spec = instance.spec;
  const std::size_t m = instance.xs.size();
  const double quarter = std::pow(static_cast<double>(spec.order()), 0.25);
  if (static_cast<double>(m) > quarter) {
    throw DomainError("m-MDL solver requires m <= N^{1/4}");
  }
  const MdlLayout l = MakeLayout(spec, m);
  const MdlCost cost = MdlCircuitCost(spec, m);
  GgmOracle oracle = instance.MakeOracle();
  MdlResult result;
  const std::vector<Residue> table =
      RunPrecompute(oracle, l, &result.counters.classical_ops);

  double configs = 1;
  for (std::size_t i = 0; i <= m; ++i)
    configs *= static_cast<double>(spec.order());
  result.exact_simulation = configs <= static_cast<double>(options.exact_limit);

  std::vector<std::pair<Outcome, double>> exact;
  if (result.exact_simulation) {
    const Program program = BuildMdlProgram(spec, l, true, {});
    Executor<QggmBackend> executor(program);
    for (const auto& kv : executor.Enumerate(Executor<QggmBackend>::MakeContext(
             program, table, QggmBackend(spec.order())))) {
      exact.push_back(kv);
    }
  } else {
    for (std::size_t t = 0; t < options.verification_inputs; ++t) {
      std::vector<std::uint32_t> k(l.bases);
      for (auto& v : k)
        v = static_cast<std::uint32_t>(UniformBelow(rng, spec.order()));
      VerifyCore(instance, l, table, k);
    }
  }
  const Residue g = table[0];
  auto sample = [&]() -> std::vector<Residue> {
    if (result.exact_simulation) {
      double u = UniformDouble(rng);
      for (const auto& [o, p] : exact) {
        if (u < p) return {o.values.begin(), o.values.end()};
        u -= p;
      }
      return {exact.back().first.values.begin(),
              exact.back().first.values.end()};
    }
    // Uniform over the dual of the hidden subgroup; the simulator reads the
    // table directly.
    const Residue u0 = UniformBelow(rng, spec.order());
    std::vector<Residue> u = {u0};
    const Residue ginv = spec.Inverse(g);
    for (std::size_t i = 1; i <= m; ++i) {
      u.push_back(spec.Mul(u0, spec.Mul(table[i], ginv)));
    }
    return u;
  };
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    DualSystem system(spec, m + 1);
    for (std::size_t s = 0; s < m + 4; ++s) {
      system.Add(sample());
      result.runs += 1;
      result.counters.quantum_ops += cost.quantum_ops_per_run;
      result.counters.quantum_depth += cost.quantum_ops_per_run;
      result.counters.parallel_width_max = 1;
      if (auto x = system.Solution()) {
        result.xs = std::move(x);
        return result;
      }
      if (system.rank() > 1) break;
    }
  }
  return result;
}

}  // namespace ggq

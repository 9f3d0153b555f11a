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

#include "ggq/harness.h"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <utility>

#include "ggq/errors.h"
#include "ggq/executor.h"
#include "ggq/local_unitary.h"

namespace ggq {
namespace {

struct GameInstance {
  std::vector<Residue> inputs;
  std::vector<Residue> secrets;
  bool real = true;
};

GameInstance SampleInstance(const GameSpec& game, std::uint64_t trial,
                            Rng& rng) {
  const GroupSpec& spec = game.spec;
  auto draw = [&] {
    return static_cast<Residue>(UniformBelow(rng, spec.order()));
  };
  GameInstance inst;
  inst.inputs.push_back(1);
  switch (game.game) {
    case GameKind::kDl:
      inst.secrets = {draw()};
      break;
    case GameKind::kCdh:
      inst.secrets = {draw(), draw()};
      break;
    case GameKind::kDdh: {
      const Residue x = draw();
      const Residue y = draw();
      const Residue z = draw();
      inst.real = trial % 2 == 0;
      inst.secrets = {x, y, inst.real ? spec.Mul(x, y) : z};
      break;
    }
    case GameKind::kMdl:
      for (std::size_t i = 0; i < game.m; ++i) inst.secrets.push_back(draw());
      break;
  }
  inst.inputs.insert(inst.inputs.end(), inst.secrets.begin(),
                     inst.secrets.end());
  return inst;
}

bool Judge(const GameSpec& game, const GameInstance& inst,
           const GgmOracle& oracle, const AdversaryOutput& out) {
  const GroupSpec& spec = game.spec;
  switch (game.game) {
    case GameKind::kDl:
    case GameKind::kMdl:
      return out.scalars == inst.secrets;
    case GameKind::kCdh: {
      // The referee materializes xyg in a shadow oracle the adversary
      // never sees.
      const Residue claimed = out.index == 0 ? 0 : oracle.Output(out.index);
      const std::vector<Residue> shadow_inputs = {
          claimed, spec.Mul(inst.secrets[0], inst.secrets[1])};
      GgmOracle shadow(spec, shadow_inputs);
      return shadow.Equal(1, 2);
    }
    case GameKind::kDdh:
      if (!out.bit || *out.bit > 1) {
        throw ConfigError("a DDH adversary must output 0 or 1");
      }
      return *out.bit == 1;
  }
  return false;
}

// Bounds too large to expand are reported as infinite without an exact
// value.
template <typename F>
BoundEntry Exact(std::string name, std::string expression, F&& f) {
  BoundEntry e;
  e.name = std::move(name);
  e.expression = std::move(expression);
  try {
    BigInt v = f();
    e.value = v.convert_to<double>();
    e.exact = std::move(v);
  } catch (const SizeError&) {
    e.value = std::numeric_limits<double>::infinity();
  }
  return e;
}

BoundEntry Advantage(std::string name, std::string expression, double v) {
  BoundEntry e;
  e.name = std::move(name);
  e.expression = std::move(expression);
  e.value = v;
  e.vacuous = std::isnan(v) || v > 1.0;
  return e;
}

struct CachedDistribution {
  std::vector<std::pair<Outcome, double>> cumulative;
  OpCounters counters;
};

const Outcome& SampleFrom(const CachedDistribution& d, Rng& rng) {
  const double u = UniformDouble(rng);
  for (const auto& [o, c] : d.cumulative) {
    if (u < c) return o;
  }
  return d.cumulative.back().first;
}

std::vector<Residue> PaddedTable(const Program& program,
                                 std::span<const Residue> inputs) {
  if (inputs.size() > program.layout.table_size()) {
    throw ConfigError("more inputs than table slots");
  }
  std::vector<Residue> table(program.layout.table_size(), 0);
  std::copy(inputs.begin(), inputs.end(), table.begin());
  return table;
}

}  // namespace

std::string ToString(GameKind game) {
  switch (game) {
    case GameKind::kDl:
      return "dl";
    case GameKind::kCdh:
      return "cdh";
    case GameKind::kDdh:
      return "ddh";
    case GameKind::kMdl:
      return "mdl";
  }
  return "?";
}

GameKind ParseGame(const std::string& name) {
  for (GameKind g :
       {GameKind::kDl, GameKind::kCdh, GameKind::kDdh, GameKind::kMdl}) {
    if (ToString(g) == name) return g;
  }
  throw ConfigError("unknown game '" + name + "'");
}

void GameSpec::Validate() const {
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (m < 1) throw ConfigError("m must be at least 1");
}

std::size_t GameSpec::InputCount() const {
  switch (game) {
    case GameKind::kDl:
      return 2;
    case GameKind::kCdh:
      return 3;
    case GameKind::kDdh:
      return 4;
    case GameKind::kMdl:
      return 1 + m;
  }
  return 0;
}

Adversary RandomGuessDlAdversary() {
  return [](GgmOracle& oracle, Rng& rng) {
    AdversaryOutput out;
    out.scalars = {
        static_cast<Residue>(UniformBelow(rng, oracle.spec().order()))};
    return out;
  };
}

Adversary ShorDlAdversary(std::size_t p, bool tree) {
  auto cache = std::make_shared<
      std::map<std::vector<Residue>, std::shared_ptr<CachedDistribution>>>();
  return [cache, p, tree](GgmOracle& oracle, Rng& rng) {
    const GroupSpec spec = oracle.spec();
    const ShorCircuit c = PrepareShor(oracle, p, tree);
    std::vector<Residue> key = c.table;
    key.push_back(static_cast<Residue>(spec.order()));
    auto it = cache->find(key);
    if (it == cache->end()) {
      auto d = std::make_shared<CachedDistribution>();
      Executor<QggmBackend> executor(c.program);
      const OutcomeDistribution dist =
          executor.Enumerate(Executor<QggmBackend>::MakeContext(
                                 c.program, c.table, QggmBackend(spec.order())),
                             [&](const ExecutionContext<QggmBackend>& ctx,
                                 double) { d->counters = ctx.counters; });
      double acc = 0;
      for (const auto& [o, prob] : dist) {
        acc += prob;
        d->cumulative.emplace_back(o, acc);
      }
      it = cache->emplace(std::move(key), std::move(d)).first;
    }
    const Outcome& o = SampleFrom(*it->second, rng);
    AdversaryOutput out;
    out.extra = it->second->counters;
    if (auto ans = ShorAnswer(spec, o.values[0], o.values[1])) {
      out.scalars = {*ans};
    }
    return out;
  };
}

Adversary BsgsCdhAdversary() {
  return [](GgmOracle& oracle, Rng&) {
    const BsgsResult x = Bsgs(oracle);
    const Index bases[] = {3};
    const std::uint64_t exponents[] = {x.x};
    AdversaryOutput out;
    out.index = PippengerMultiexp(oracle, bases, exponents).index;
    return out;
  };
}

Adversary ConstantDdhAdversary(std::uint64_t bit) {
  return [bit](GgmOracle&, Rng&) {
    AdversaryOutput out;
    out.bit = bit;
    return out;
  };
}

Adversary MdlAdversary(MdlOptions options) {
  return [options](GgmOracle& oracle, Rng& rng) {
    // The simulator, not the algorithm, reads the table to build its
    // circuit; every group operation is counted by MdlSolve.
    MdlInstance instance{oracle.spec(), {}};
    for (Index i = 2; i <= oracle.input_count(); ++i) {
      instance.xs.push_back(oracle.Output(i));
    }
    const MdlResult r = MdlSolve(instance, rng, options);
    AdversaryOutput out;
    out.extra = r.counters;
    if (r.xs) out.scalars = *r.xs;
    return out;
  };
}

const BoundEntry& BoundReport::Get(const std::string& name) const {
  for (const BoundEntry& e : entries) {
    if (e.name == name) return e;
  }
  throw ConfigError("no bound named '" + name + "'");
}

BoundReport MakeBoundReport(const BoundParams& p,
                            std::optional<OpCounters> measured) {
  BoundReport report;
  report.params = p;
  report.measured = measured;
  auto& e = report.entries;
  e.push_back(Advantage("qggm_dl", "2^{4d}/N", QggmDlBound(p.d, p.order)));
  e.push_back(Advantage("qggm_cdh", "2^{8d}/N", QggmCdhBound(p.d, p.order)));
  e.push_back(Advantage("ggm_dl", "Q^2/N", GgmDlBound(p.ops, p.order)));
  // Undefined without instances.
  e.push_back(Advantage("ggm_mdl", "(e(Q+m+1)^2/(2mN))^m",
                        p.m == 0 ? std::numeric_limits<double>::quiet_NaN()
                                 : GgmMdlBound(p.ops, p.m, p.order)));
  e.push_back(Exact("basic_simulation", "2^{(d+1)m}",
                    [&] { return BasicSimulationBound(p.d, p.m); }));
  e.push_back(Exact("query_subroutine", "Q+2^{q+1}(m+Q+1)^{2q}",
                    [&] { return QuerySubroutineBound(p.m, p.ops, p.q); }));
  e.push_back(Exact("depth_subroutine", "Q+2^{2^d}(m+Q+1)^{2^d}",
                    [&] { return DepthSubroutineBound(p.m, p.ops, p.d); }));
  e.push_back(Exact("memory_subroutine", "C+2(2t(t-1+r)+1)^q", [&] {
    return MemorySubroutineBound(p.classical_ops, p.t, p.r, p.q);
  }));
  e.push_back(Exact("hybrid_query", "Q+T*2^{q+1}(m+Q+1)^{2q}", [&] {
    return HybridQueryBound(p.ops, p.subroutines, p.m, p.q);
  }));
  e.push_back(Exact("hybrid_depth", "Q+T*2^{2^d}(m+Q+1)^{2^d}", [&] {
    return HybridDepthBound(p.ops, p.subroutines, p.m, p.d);
  }));
  e.push_back(Exact("hybrid_memory", "C+2T(2t(t-1+r)+1)^q", [&] {
    return HybridMemoryBound(p.classical_ops, p.subroutines, p.t, p.r, p.q);
  }));
  return report;
}

double BinomialStderr(double p, std::uint64_t k) {
  if (k == 0) return 0;
  return std::sqrt(p * (1.0 - p) / static_cast<double>(k));
}

AdvantageReport EstimateAdvantage(const GameSpec& game,
                                  const Adversary& adversary) {
  game.Validate();
  AdvantageReport report;
  report.game = game;
  std::uint64_t accepted[2] = {0, 0};
  std::uint64_t seen[2] = {0, 0};
  for (std::uint64_t trial = 0; trial < game.trials; ++trial) {
    Rng rng(TrialSeed(game.seed, trial));
    const GameInstance inst = SampleInstance(game, trial, rng);
    GgmOracle oracle(game.spec, inst.inputs);
    const int half = inst.real ? 1 : 0;
    ++seen[half];
    AdversaryOutput out;
    try {
      out = adversary(oracle, rng);
    } catch (const BudgetError&) {
      ++report.budget_failures;
      continue;
    } catch (const PolicyError&) {
      ++report.budget_failures;
      continue;
    }
    const OpCounters used = oracle.counters() + out.extra;
    report.counters += used;
    report.max_group_ops = std::max(report.max_group_ops, used.group_ops());
    report.max_quantum_depth =
        std::max(report.max_quantum_depth, used.quantum_depth);
    if (Judge(game, inst, oracle, out)) {
      ++report.successes;
      ++accepted[half];
    }
  }
  const auto k = game.trials;
  if (game.game == GameKind::kDdh) {
    report.p_real = seen[1] ? static_cast<double>(accepted[1]) / seen[1] : 0;
    report.p_random = seen[0] ? static_cast<double>(accepted[0]) / seen[0] : 0;
    report.estimate = std::abs(report.p_real - report.p_random);
    const double a = BinomialStderr(report.p_real, seen[1]);
    const double b = BinomialStderr(report.p_random, seen[0]);
    report.standard_error = std::sqrt(a * a + b * b);
  } else {
    report.estimate = static_cast<double>(report.successes) / k;
    report.standard_error = BinomialStderr(report.estimate, k);
  }
  BoundParams params;
  params.order = game.spec.order();
  params.m = game.game == GameKind::kMdl ? game.m : 1;
  params.ops = report.max_group_ops;
  params.d = report.max_quantum_depth;
  report.bounds = MakeBoundReport(params, report.counters);
  return report;
}

OutcomeDistribution QuantumDistribution(const Program& program,
                                        std::span<const Residue> table,
                                        std::size_t state_cap) {
  ExecutionOptions options;
  options.state_cap = state_cap;
  Executor<QggmBackend> executor(program, options);
  return executor.Enumerate(Executor<QggmBackend>::MakeContext(
      program, table, QggmBackend(program.layout.order())));
}

HybridSchedule Workload::Schedule() const {
  if (!budgets) throw ConfigError("workload '" + name + "' is not hybrid");
  return HybridSchedule{program, *budgets};
}

Workload MakeProgramWorkload(std::string name, Program program,
                             std::span<const Residue> inputs) {
  std::vector<Residue> table = PaddedTable(program, inputs);
  GgmOracle oracle(GroupSpec(program.layout.order()), inputs);
  return Workload{
      std::move(name),   std::move(program),        std::nullopt,
      std::move(oracle), InputForms(inputs.size()), std::move(table)};
}

Workload MakeScheduleWorkload(std::string name, HybridSchedule schedule,
                              std::span<const Residue> inputs) {
  schedule.Validate();
  Workload w =
      MakeProgramWorkload(std::move(name), std::move(schedule.program), inputs);
  w.budgets = std::move(schedule.budgets);
  return w;
}

Workload MakeShorWorkload(const GroupSpec& spec, Residue x, std::size_t p,
                          bool tree, bool hybrid) {
  const std::vector<Residue> inputs = {1, x % spec.order()};
  GgmOracle oracle(spec, inputs);
  ShorCircuit c = PrepareShor(oracle, p, tree);
  Workload w{
      tree ? "shor_tree" : "shor", std::move(c.program), std::nullopt,
      std::move(oracle),           c.pre.forms(),        std::move(c.table)};
  if (hybrid) {
    if (tree) throw ConfigError("the hybrid DL schedule is sequential");
    HybridSchedule s = BuildShorHybrid(spec, c.pre);
    w.name = "shor_hybrid";
    w.program = std::move(s.program);
    w.budgets = std::move(s.budgets);
  }
  return w;
}

Comparison CompareWorkload(const Workload& workload,
                           const DequantizeOptions& options) {
  Comparison c;
  const Program& program = workload.program;
  ExecutionOptions exec;
  exec.state_cap = options.state_cap;
  DequantizedRun d;
  std::optional<HybridSchedule> schedule;
  if (workload.budgets) {
    schedule = workload.Schedule();
    exec.budgets = &schedule->budgets;
  }
  Executor<QggmBackend> executor(program, exec);
  c.quantum = executor.Enumerate(Executor<QggmBackend>::MakeContext(
      program, workload.table, QggmBackend(program.layout.order())));
  d = schedule ? RunHybrid(*schedule, workload.oracle, workload.forms, options)
               : RunBasic(program, workload.oracle, workload.forms, options);
  c.dequantized = std::move(d.distribution);
  c.real_ops = d.max_real_ops;
  c.bound = d.bound;
  c.audits = std::move(d.audits);
  c.tv = TotalVariation(c.quantum, c.dequantized);
  return c;
}

Comparison CompareDistributions(const Program& program,
                                std::span<const Residue> inputs,
                                const DequantizeOptions& options) {
  return CompareWorkload(MakeProgramWorkload("program", program, inputs),
                         options);
}

Comparison CompareDistributions(const HybridSchedule& schedule,
                                std::span<const Residue> inputs,
                                const DequantizeOptions& options) {
  return CompareWorkload(MakeScheduleWorkload("schedule", schedule, inputs),
                         options);
}

Comparison CompareShor(const GroupSpec& spec, Residue x, std::size_t p,
                       bool tree, const DequantizeOptions& options) {
  return CompareWorkload(MakeShorWorkload(spec, x, p, tree, false), options);
}

WorkloadRun RunWorkload(const Workload& workload, OracleMode mode,
                        std::uint64_t seed, bool enumerate,
                        const DequantizeOptions& options) {
  WorkloadRun run;
  run.mode = mode;
  if (workload.budgets) {
    HybridOptions h;
    h.mode = mode;
    h.seed = seed;
    h.enumerate = enumerate;
    h.dequantize = options;
    HybridRun r =
        RunHybrid(workload.Schedule(), workload.oracle, workload.forms, h);
    run.distribution = std::move(r.distribution);
    run.outcome = std::move(r.outcome);
    run.counters = r.counters;
    run.real_ops = r.real_ops;
    run.bound = std::move(r.bound);
    run.audits = std::move(r.audits);
    return run;
  }
  const Program& program = workload.program;
  if (mode == OracleMode::kQuantumSim) {
    ExecutionOptions exec;
    exec.state_cap = options.state_cap;
    Executor<QggmBackend> executor(program, exec);
    run.distribution = executor.Enumerate(
        Executor<QggmBackend>::MakeContext(program, workload.table,
                                           QggmBackend(program.layout.order())),
        [&](const ExecutionContext<QggmBackend>& ctx, double) {
          run.counters = ctx.counters;
        });
  } else {
    DequantizedRun d =
        RunBasic(program, workload.oracle, workload.forms, options);
    run.distribution = std::move(d.distribution);
    run.counters = d.program_counters;
    run.real_ops = d.max_real_ops;
    run.bound = std::move(d.bound);
    run.audits = std::move(d.audits);
  }
  if (!enumerate) {
    Rng rng(seed);
    CachedDistribution cdf;
    double acc = 0;
    for (const auto& [o, p] : run.distribution) {
      acc += p;
      cdf.cumulative.emplace_back(o, acc);
    }
    run.outcome = SampleFrom(cdf, rng);
    run.distribution.clear();
  }
  return run;
}

Program ToyProgram(std::uint64_t order) {
  RegisterLayout layout({2}, 1, 2, order);
  ProgramBuilder b("toy", layout);
  const std::size_t w = layout.WorkCell(0);
  b.Unitary({w}, std::make_shared<DenseUnitary>(DenseUnitary::Hadamard()));
  const TripleFn f = [](std::span<const std::uint32_t> work) {
    return QueryTriple{work[0], 1, 2};
  };
  b.SetQuery(0, f).GroupOp().ClearQuery(0, f);
  OutputSpec out;
  out.kind = OutputSpec::Kind::kGroup;
  out.table_index = 1;
  return std::move(b).Build(out);
}

double ChiSquareIndependence(
    const std::vector<std::vector<std::uint64_t>>& counts) {
  std::vector<double> rows;
  std::vector<double> cols;
  std::vector<std::size_t> keep_rows;
  std::vector<std::size_t> keep_cols;
  const std::size_t width = counts.empty() ? 0 : counts[0].size();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i].size() != width) {
      throw ConfigError("ragged contingency table");
    }
    double s = 0;
    for (std::uint64_t v : counts[i]) s += static_cast<double>(v);
    if (s > 0) {
      keep_rows.push_back(i);
      rows.push_back(s);
    }
  }
  for (std::size_t j = 0; j < width; ++j) {
    double s = 0;
    for (const auto& row : counts) s += static_cast<double>(row[j]);
    if (s > 0) {
      keep_cols.push_back(j);
      cols.push_back(s);
    }
  }
  if (keep_rows.size() < 2 || keep_cols.size() < 2) return 1.0;
  double total = 0;
  for (double r : rows) total += r;
  double stat = 0;
  for (std::size_t a = 0; a < keep_rows.size(); ++a) {
    for (std::size_t b = 0; b < keep_cols.size(); ++b) {
      const double expected = rows[a] * cols[b] / total;
      const double diff =
          static_cast<double>(counts[keep_rows[a]][keep_cols[b]]) - expected;
      stat += diff * diff / expected;
    }
  }
  const double dof =
      static_cast<double>((keep_rows.size() - 1) * (keep_cols.size() - 1));
  const boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace ggq

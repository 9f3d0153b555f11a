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

#include <cmath>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ggq/algorithms.h"
#include "ggq/errors.h"
#include "ggq/harness.h"
#include "ggq/json_io.h"

namespace {

constexpr int kOk = 0;
constexpr int kAssertionFailure = 2;
constexpr int kConfigError = 3;
constexpr double kTvTolerance = 1e-9;

struct Flags {
  std::uint64_t order = 101;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100;
  std::optional<std::size_t> budget_q;
  std::optional<std::size_t> budget_d;
  std::optional<std::size_t> mem_t;
  std::size_t mem_r = 0;
  std::size_t base_p = 2;
  std::string format = "json";
  bool enumerate = false;
  std::string config;
  // Game runs.
  std::string game = "dl";
  std::string algorithm = "shor";
  std::size_t m = 1;
  // Inline workloads.
  std::string program = "toy";
  std::vector<ggq::Residue> inputs;
  std::optional<ggq::Residue> x;
  std::size_t depth = 2;
  std::size_t width = 1;
  std::size_t subroutines = 1;
  std::string mode = "dequantized";
  // Bounds.
  std::uint64_t ops = 0;
  std::uint64_t classical = 0;
  // Sweeps.
  std::vector<std::uint64_t> orders = {17, 53, 101};
};

void AddBudgetFlags(CLI::App* app, Flags& f) {
  app->add_option("--budget-q", f.budget_q, "Query budget per subroutine");
  app->add_option("--budget-d", f.budget_d, "Depth budget per subroutine");
  app->add_option("--mem-t", f.mem_t, "Quantum memory slots t");
  app->add_option("--mem-r", f.mem_r, "QRACM size r");
}

void AddWorkloadFlags(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config, "Workload JSON file");
  app->add_option("--program", f.program,
                  "toy|shor|shor_tree|shor_hybrid|random_generic|"
                  "random_hybrid");
  app->add_option("--order", f.order, "Group order N");
  app->add_option("--seed", f.seed, "Random seed");
  app->add_option("--inputs", f.inputs, "Table inputs y_1..y_m");
  app->add_option("--x", f.x, "Discrete logarithm for the DL circuit");
  app->add_option("--base-p", f.base_p, "Digit base of the DL circuit");
  app->add_option("--m", f.m, "Inputs of random programs");
  app->add_option("--depth", f.depth, "Layers of random generic programs");
  app->add_option("--width", f.width, "Parallel width of random programs");
  app->add_option("--subroutines", f.subroutines,
                  "Subroutines of random hybrid schedules");
  AddBudgetFlags(app, f);
}

void AddFormatFlag(CLI::App* app, Flags& f) {
  app->add_option("--format", f.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

std::optional<ggq::SubroutineBudget> FlagBudget(const Flags& f) {
  if (f.budget_q && f.budget_d) {
    throw ggq::ConfigError("--budget-q and --budget-d are exclusive");
  }
  if (f.budget_d) {
    if (f.mem_t) throw ggq::ConfigError("memory budgets are query bounded");
    return ggq::SubroutineBudget::Depth(*f.budget_d);
  }
  if (f.budget_q) {
    if (f.mem_t) {
      return ggq::SubroutineBudget::Query(
          *f.budget_q, ggq::MemoryPolicy::Bounded(*f.mem_t, f.mem_r));
    }
    return ggq::SubroutineBudget::Query(*f.budget_q);
  }
  if (f.mem_t) throw ggq::ConfigError("--mem-t needs --budget-q");
  return std::nullopt;
}

ggq::Workload BuildWorkload(const Flags& f) {
  const std::optional<ggq::SubroutineBudget> budget = FlagBudget(f);
  ggq::Workload w = [&] {
    if (!f.config.empty()) return ggq::LoadWorkload(f.config);
    ggq::Json config{{"order", f.order}, {"seed", f.seed}};
    if (!f.inputs.empty()) config["inputs"] = f.inputs;
    ggq::Json program{{"m", f.m}};
    if (f.program == "shor" || f.program == "shor_tree" ||
        f.program == "shor_hybrid") {
      program["kind"] = "shor";
      program["p"] = f.base_p;
      program["tree"] = f.program == "shor_tree";
      program["hybrid"] = f.program == "shor_hybrid";
      if (f.x) program["x"] = *f.x;
    } else {
      program["kind"] = f.program;
      program["depth"] = f.depth;
      program["width"] = f.width;
      program["subroutines"] = f.subroutines;
      if (budget) {
        program["mode"] = budget->memory ? "memory"
                          : budget->mode == ggq::SubroutineBudget::Mode::kDepth
                              ? "depth"
                              : "query";
        program["limit"] = budget->limit;
        if (budget->memory) {
          program["t"] = budget->memory->t;
          program["r"] = budget->memory->r;
        }
      }
    }
    config["program"] = std::move(program);
    return ggq::ParseWorkload(config);
  }();
  if (budget) {
    if (!w.budgets) {
      throw ggq::ConfigError("budget flags need a hybrid workload");
    }
    w.budgets->assign(w.budgets->size(), *budget);
    w.Schedule().Validate();
  }
  return w;
}

ggq::Adversary MakeAdversary(const Flags& f, ggq::GameKind game) {
  using ggq::GameKind;
  const std::string& a = f.algorithm;
  if (game == GameKind::kDl && a == "shor") {
    return ggq::ShorDlAdversary(f.base_p);
  }
  if (game == GameKind::kDl && a == "shor_tree") {
    return ggq::ShorDlAdversary(f.base_p, true);
  }
  if (game == GameKind::kDl && a == "random") {
    return ggq::RandomGuessDlAdversary();
  }
  if (game == GameKind::kDl && a == "bsgs") {
    return [](ggq::GgmOracle& oracle, ggq::Rng&) {
      ggq::AdversaryOutput out;
      out.scalars = {ggq::Bsgs(oracle).x};
      return out;
    };
  }
  if (game == GameKind::kCdh && a == "bsgs") return ggq::BsgsCdhAdversary();
  if (game == GameKind::kDdh && (a == "constant0" || a == "constant1")) {
    return ggq::ConstantDdhAdversary(a == "constant1" ? 1 : 0);
  }
  if (game == GameKind::kMdl && a == "mdl") return ggq::MdlAdversary();
  throw ggq::ConfigError("algorithm '" + a + "' does not play " +
                         ggq::ToString(game));
}

ggq::AdvantageReport RunGame(const Flags& f, std::uint64_t order) {
  ggq::GameSpec spec;
  spec.game = ggq::ParseGame(f.game);
  spec.spec = ggq::GroupSpec(order);
  spec.m = f.m;
  spec.trials = f.trials;
  spec.seed = f.seed;
  return ggq::EstimateAdvantage(spec, MakeAdversary(f, spec.game));
}

const char* kReportHeader =
    "game,N,m,trials,seed,successes,budget_failures,estimate,stderr,"
    "classical_ops,quantum_ops,max_group_ops,max_quantum_depth";

std::string CsvRow(const ggq::AdvantageReport& r) {
  std::ostringstream s;
  s.precision(17);
  s << ggq::ToString(r.game.game) << ',' << r.game.spec.order() << ','
    << r.game.m << ',' << r.game.trials << ',' << r.game.seed << ','
    << r.successes << ',' << r.budget_failures << ',' << r.estimate << ','
    << r.standard_error << ',' << r.counters.classical_ops << ','
    << r.counters.quantum_ops << ',' << r.max_group_ops << ','
    << r.max_quantum_depth;
  return s.str();
}

int CmdRun(const Flags& f) {
  const ggq::AdvantageReport r = RunGame(f, f.order);
  if (f.format == "csv") {
    std::cout << kReportHeader << '\n' << CsvRow(r) << '\n';
  } else {
    std::cout << ggq::ToJson(r).dump(2) << '\n';
  }
  return kOk;
}

int CmdSweep(const Flags& f) {
  std::vector<ggq::AdvantageReport> reports;
  for (std::uint64_t n : f.orders) reports.push_back(RunGame(f, n));
  if (f.format == "csv") {
    std::cout << kReportHeader << '\n';
    for (const auto& r : reports) std::cout << CsvRow(r) << '\n';
  } else {
    ggq::Json out = ggq::Json::array();
    for (const auto& r : reports) out.push_back(ggq::ToJson(r));
    std::cout << out.dump(2) << '\n';
  }
  return kOk;
}

int CmdDequantize(const Flags& f) {
  const ggq::Workload w = BuildWorkload(f);
  const ggq::OracleMode mode = f.mode == "quantum"
                                   ? ggq::OracleMode::kQuantumSim
                                   : ggq::OracleMode::kDequantized;
  const ggq::WorkloadRun run = ggq::RunWorkload(w, mode, f.seed, f.enumerate);
  ggq::Json out = ggq::ToJson(run);
  out["workload"] = w.name;
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int CmdCompare(const Flags& f) {
  const ggq::Workload w = BuildWorkload(f);
  const ggq::Comparison c = ggq::CompareWorkload(w);
  const bool pass = c.tv <= kTvTolerance;
  if (f.format == "csv") {
    std::cout << "workload,tv,real_ops,bound,pass\n"
              << w.name << ',' << c.tv << ',' << c.real_ops << ','
              << ggq::ToString(c.bound) << ',' << (pass ? 1 : 0) << '\n';
  } else {
    ggq::Json out = ggq::ToJson(c);
    out["workload"] = w.name;
    out["pass"] = pass;
    std::cout << out.dump(2) << '\n';
  }
  return pass ? kOk : kAssertionFailure;
}

int CmdBounds(const Flags& f) {
  ggq::BoundParams p;
  p.order = f.order;
  p.m = f.m;
  p.ops = f.ops;
  p.classical_ops = f.classical;
  p.subroutines = f.subroutines;
  p.q = f.budget_q.value_or(0);
  p.d = f.budget_d.value_or(0);
  p.t = f.mem_t.value_or(1);
  p.r = f.mem_r;
  const ggq::BoundReport r = ggq::MakeBoundReport(p);
  if (f.format == "csv") {
    std::cout << "name,expression,value,exact,vacuous\n";
    for (const ggq::BoundEntry& e : r.entries) {
      std::cout << e.name << ",\"" << e.expression << "\"," << e.value << ','
                << (e.exact ? ggq::ToString(*e.exact) : "") << ','
                << (e.vacuous ? 1 : 0) << '\n';
    }
  } else {
    std::cout << ggq::ToJson(r).dump(2) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic group model simulators, dequantizer and games"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* run = app.add_subcommand("run", "Estimate a game advantage");
  run->add_option("--game", f.game, "dl|cdh|ddh|mdl");
  run->add_option("--algorithm", f.algorithm,
                  "shor|shor_tree|random|bsgs|constant0|constant1|mdl");
  run->add_option("--order", f.order, "Group order N");
  run->add_option("--seed", f.seed, "Random seed");
  run->add_option("--trials", f.trials, "Trials")->check(CLI::PositiveNumber);
  run->add_option("--base-p", f.base_p, "Digit base of the DL circuit");
  run->add_option("--m", f.m, "Instances for the MDL game");
  AddFormatFlag(run, f);

  CLI::App* sweep = app.add_subcommand("sweep", "Run a game over orders");
  sweep->add_option("--game", f.game, "dl|cdh|ddh|mdl");
  sweep->add_option("--algorithm", f.algorithm, "Adversary");
  sweep->add_option("--orders", f.orders, "Group orders")->delimiter(',');
  sweep->add_option("--seed", f.seed, "Random seed");
  sweep->add_option("--trials", f.trials, "Trials")->check(CLI::PositiveNumber);
  sweep->add_option("--base-p", f.base_p, "Digit base of the DL circuit");
  sweep->add_option("--m", f.m, "Instances for the MDL game");
  AddFormatFlag(sweep, f);

  CLI::App* deq = app.add_subcommand("dequantize", "Run a workload");
  AddWorkloadFlags(deq, f);
  deq->add_option("--mode", f.mode, "dequantized|quantum")
      ->check(CLI::IsMember({"dequantized", "quantum"}));
  deq->add_flag("--enumerate", f.enumerate, "Exact output distribution");

  CLI::App* cmp =
      app.add_subcommand("compare", "Total variation between simulators");
  AddWorkloadFlags(cmp, f);
  AddFormatFlag(cmp, f);
  cmp->add_flag("--enumerate", f.enumerate, "Accepted; always exact");

  CLI::App* bounds = app.add_subcommand("bounds", "Closed-form bounds");
  bounds->add_option("--order", f.order, "Group order N");
  bounds->add_option("--m", f.m, "Inputs m");
  bounds->add_option("--ops", f.ops, "Group operations Q");
  bounds->add_option("--classical", f.classical, "Classical operations C");
  bounds->add_option("--subroutines", f.subroutines, "Subroutines T");
  AddBudgetFlags(bounds, f);
  AddFormatFlag(bounds, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }
  try {
    if (*run) return CmdRun(f);
    if (*sweep) return CmdSweep(f);
    if (*deq) return CmdDequantize(f);
    if (*cmp) return CmdCompare(f);
    if (*bounds) return CmdBounds(f);
  } catch (const ggq::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ggq::DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ggq::ValidationError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "assertion failure: " << e.what() << '\n';
    return kAssertionFailure;
  }
  return kOk;
}

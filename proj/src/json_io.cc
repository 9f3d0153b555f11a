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

#include "ggq/json_io.h"

#include <fstream>
#include <utility>

#include "ggq/errors.h"
#include "ggq/random_programs.h"

namespace ggq {
namespace {

std::vector<Residue> Inputs(const Json& config, std::size_t m,
                            std::uint64_t order, Rng& rng) {
  if (config.contains("inputs")) {
    return config.at("inputs").get<std::vector<Residue>>();
  }
  return RandomInputs(order, m, rng);
}

template <typename T>
T Field(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

Workload ParseWorkloadUnchecked(const Json& config) {
  const std::uint64_t order = config.at("order").get<std::uint64_t>();
  if (order < 2) throw ConfigError("order must be at least 2");
  Rng rng(Field<std::uint64_t>(config, "seed", 0));
  const Json& program = config.at("program");
  const std::string kind = program.at("kind").get<std::string>();
  const std::size_t m = Field<std::size_t>(program, "m", 2);
  std::optional<Workload> w;
  if (kind == "toy") {
    w = MakeProgramWorkload("toy", ToyProgram(order),
                            Inputs(config, 2, order, rng));
  } else if (kind == "shor") {
    const GroupSpec spec(order);
    const Residue x = Field<Residue>(
        program, "x", static_cast<Residue>(UniformBelow(rng, order)));
    w = MakeShorWorkload(spec, x, Field<std::size_t>(program, "p", 2),
                         Field<bool>(program, "tree", false),
                         Field<bool>(program, "hybrid", false));
  } else if (kind == "random_generic") {
    RandomProgramParams p;
    p.order = order;
    p.m = m;
    p.depth = Field<std::size_t>(program, "depth", p.depth);
    p.width = Field<std::size_t>(program, "width", p.width);
    p.extra_slots = Field<std::size_t>(program, "extra_slots", p.extra_slots);
    p.equality_rate = Field<double>(program, "equality_rate", p.equality_rate);
    Program prog = RandomGenericProgram(p, rng);
    w = MakeProgramWorkload("random_generic", std::move(prog),
                            Inputs(config, m, order, rng));
  } else if (kind == "random_hybrid") {
    RandomScheduleParams p;
    p.mode = ParseMode(Field<std::string>(program, "mode", "query"));
    p.order = order;
    p.m = m;
    p.subroutines = Field<std::size_t>(program, "subroutines", p.subroutines);
    p.limit = Field<std::size_t>(program, "limit", p.limit);
    p.width = Field<std::size_t>(program, "width", p.width);
    p.t = Field<std::size_t>(program, "t", p.t);
    p.r = Field<std::size_t>(program, "r", p.r);
    p.max_classical_per_stage = Field<std::size_t>(
        program, "classical_per_stage", p.max_classical_per_stage);
    p.final_classical =
        Field<std::size_t>(program, "final_classical", p.final_classical);
    HybridSchedule s = RandomHybridSchedule(p, rng);
    w = MakeScheduleWorkload("random_hybrid", std::move(s),
                             Inputs(config, m, order, rng));
  } else {
    throw ConfigError("unknown program kind '" + kind + "'");
  }
  if (config.contains("budgets")) {
    std::vector<SubroutineBudget> budgets;
    for (const Json& b : config.at("budgets"))
      budgets.push_back(ParseBudget(b));
    w->budgets = std::move(budgets);
    w->Schedule().Validate();
  }
  return std::move(*w);
}

}  // namespace

Json ToJson(const OpCounters& c) {
  return Json{{"classical_ops", c.classical_ops},
              {"quantum_ops", c.quantum_ops},
              {"quantum_depth", c.quantum_depth},
              {"equality_queries", c.equality_queries},
              {"parallel_width_max", c.parallel_width_max},
              {"group_ops", c.group_ops()}};
}

Json ToJson(const Outcome& o) {
  return Json{{"group", o.group}, {"values", o.values}};
}

Json ToJson(const OutcomeDistribution& d) {
  Json out = Json::array();
  for (const auto& [o, p] : d) {
    Json e = ToJson(o);
    e["probability"] = p;
    out.push_back(std::move(e));
  }
  return out;
}

Json ToJson(const StageAudit& a) {
  return Json{{"stage", a.stage},
              {"mode", ToString(a.mode)},
              {"final_stage", a.final_stage},
              {"m", a.m},
              {"program_counters", ToJson(a.program_counters)},
              {"real_ops", a.real_ops},
              {"bound", ToString(a.bound)},
              {"max_leaf_size", a.max_leaf_size},
              {"leaf_count", a.leaf_count}};
}

Json ToJson(const DequantizerEvent& e) {
  return Json{{"kind", e.kind},
              {"stage", e.stage},
              {"forms", e.forms},
              {"labels", e.labels},
              {"fresh_labels", e.fresh_labels},
              {"real_ops", e.real_ops}};
}

Json ToJson(const BoundReport& r) {
  const BoundParams& p = r.params;
  Json entries = Json::array();
  for (const BoundEntry& e : r.entries) {
    Json j{{"name", e.name},
           {"expression", e.expression},
           {"value", e.value},
           {"vacuous", e.vacuous}};
    if (e.exact) j["exact"] = ToString(*e.exact);
    if (!e.exact && !e.vacuous && e.value > 1e308) j["overflow"] = true;
    entries.push_back(std::move(j));
  }
  Json out{{"params",
            {{"N", p.order},
             {"m", p.m},
             {"Q", p.ops},
             {"C", p.classical_ops},
             {"T", p.subroutines},
             {"q", p.q},
             {"d", p.d},
             {"t", p.t},
             {"r", p.r}}},
           {"constant_free", r.constant_free},
           {"entries", std::move(entries)}};
  if (r.measured) out["measured"] = ToJson(*r.measured);
  return out;
}

Json ToJson(const AdvantageReport& r) {
  Json out{{"game", ToString(r.game.game)},
           {"N", r.game.spec.order()},
           {"m", r.game.m},
           {"trials", r.game.trials},
           {"seed", r.game.seed},
           {"successes", r.successes},
           {"budget_failures", r.budget_failures},
           {"estimate", r.estimate},
           {"stderr", r.standard_error},
           {"counters", ToJson(r.counters)},
           {"max_group_ops", r.max_group_ops},
           {"max_quantum_depth", r.max_quantum_depth},
           {"bounds", ToJson(r.bounds)}};
  if (r.game.game == GameKind::kDdh) {
    out["p_real"] = r.p_real;
    out["p_random"] = r.p_random;
  }
  return out;
}

Json ToJson(const Comparison& c) {
  Json audits = Json::array();
  for (const StageAudit& a : c.audits) audits.push_back(ToJson(a));
  return Json{{"tv", c.tv},
              {"quantum", ToJson(c.quantum)},
              {"dequantized", ToJson(c.dequantized)},
              {"real_ops", c.real_ops},
              {"bound", ToString(c.bound)},
              {"audits", std::move(audits)}};
}

Json ToJson(const WorkloadRun& r) {
  Json audits = Json::array();
  for (const StageAudit& a : r.audits) audits.push_back(ToJson(a));
  Json out{{"mode",
            r.mode == OracleMode::kQuantumSim ? "quantum_sim" : "dequantized"},
           {"counters", ToJson(r.counters)}};
  if (r.outcome) {
    out["outcome"] = ToJson(*r.outcome);
  } else {
    out["distribution"] = ToJson(r.distribution);
  }
  if (r.mode == OracleMode::kDequantized) {
    out["real_ops"] = r.real_ops;
    out["bound"] = ToString(r.bound);
    out["audits"] = std::move(audits);
  }
  return out;
}

Json ToJson(const SubroutineBudget& b) {
  Json out{{ToString(b.mode), b.limit}};
  if (b.memory) {
    out["t"] = b.memory->t;
    out["r"] = b.memory->r;
  }
  return out;
}

SimulationMode ParseMode(const std::string& name) {
  for (SimulationMode m : {SimulationMode::kBasic, SimulationMode::kDepth,
                           SimulationMode::kQuery, SimulationMode::kMemory}) {
    if (ToString(m) == name) return m;
  }
  throw ConfigError("unknown simulation mode '" + name + "'");
}

SubroutineBudget ParseBudget(const Json& j) {
  try {
    if (j.contains("depth")) {
      if (j.contains("query")) {
        throw ConfigError("a budget is either query or depth bounded");
      }
      return SubroutineBudget::Depth(j.at("depth").get<std::size_t>());
    }
    const std::size_t q = j.at("query").get<std::size_t>();
    if (j.contains("t")) {
      return SubroutineBudget::Query(
          q, MemoryPolicy::Bounded(j.at("t").get<std::size_t>(),
                                   Field<std::size_t>(j, "r", 0)));
    }
    return SubroutineBudget::Query(q);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("bad budget: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("bad budget: ") + e.what());
  }
}

Workload ParseWorkload(const Json& config) {
  try {
    return ParseWorkloadUnchecked(config);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("bad workload: ") + e.what());
  } catch (const DomainError& e) {
    throw ConfigError(std::string("bad workload: ") + e.what());
  }
}

Workload LoadWorkload(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  Json config;
  try {
    in >> config;
  } catch (const Json::exception& e) {
    throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
  }
  return ParseWorkload(config);
}

}  // namespace ggq

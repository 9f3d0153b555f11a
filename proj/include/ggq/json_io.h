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

#ifndef GGQ_JSON_IO_H_
#define GGQ_JSON_IO_H_

#include <string>

#include "ggq/counters.h"
#include "ggq/dequantizer.h"
#include "ggq/harness.h"
#include "ggq/program.h"
#include "ggq/schedule.h"
#include "json.hpp"

namespace ggq {

using Json = nlohmann::json;

Json ToJson(const OpCounters& c);
Json ToJson(const Outcome& o);
Json ToJson(const OutcomeDistribution& d);
Json ToJson(const StageAudit& a);
Json ToJson(const DequantizerEvent& e);
Json ToJson(const BoundReport& r);
Json ToJson(const AdvantageReport& r);
Json ToJson(const Comparison& c);
Json ToJson(const WorkloadRun& r);
Json ToJson(const SubroutineBudget& b);

// Throws ConfigError on unknown names.
SimulationMode ParseMode(const std::string& name);

// {"query": q, "t": t, "r": r} or {"depth": d}; t and r are optional.
SubroutineBudget ParseBudget(const Json& j);

// A workload description:
//   {"order": 7, "inputs": [3, 4], "seed": 1,
//    "program": {"kind": "toy" | "shor" | "random_generic" |
//                        "random_hybrid", ...},
//    "budgets": [...]}
// "budgets" replaces the program's own budgets. Malformed input raises
// ConfigError.
Workload ParseWorkload(const Json& config);
Workload LoadWorkload(const std::string& path);

}  // namespace ggq

#endif  // GGQ_JSON_IO_H_

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

#include <cmath>
#include <string>
#include <vector>

#include "ggq/errors.h"
#include "ggq/json_io.h"
#include "gtest/gtest.h"

namespace ggq {
namespace {

constexpr double kTol = 1e-9;

GameSpec Game(GameKind kind, std::uint64_t order, std::uint64_t trials,
              std::uint64_t seed = 7, std::size_t m = 1) {
  GameSpec g;
  g.game = kind;
  g.spec = GroupSpec(order);
  g.trials = trials;
  g.seed = seed;
  g.m = m;
  return g;
}

TEST(GameSpecTest, ParseAndValidate) {
  EXPECT_EQ(ParseGame("dl"), GameKind::kDl);
  EXPECT_EQ(ParseGame("mdl"), GameKind::kMdl);
  EXPECT_EQ(ToString(GameKind::kDdh), "ddh");
  EXPECT_THROW(ParseGame("sdh"), ConfigError);
  EXPECT_THROW(Game(GameKind::kDl, 101, 0).Validate(), ConfigError);
  EXPECT_THROW(Game(GameKind::kMdl, 101, 1, 0, 0).Validate(), ConfigError);
  EXPECT_EQ(Game(GameKind::kDdh, 101, 1).InputCount(), 4u);
  EXPECT_EQ(Game(GameKind::kMdl, 101, 1, 0, 5).InputCount(), 6u);
}

TEST(AdvantageTest, RandomGuessMatchesOneOverN) {
  const AdvantageReport r = EstimateAdvantage(Game(GameKind::kDl, 101, 2000),
                                              RandomGuessDlAdversary());
  const double sigma = BinomialStderr(1.0 / 101, 2000);
  EXPECT_LE(std::abs(r.estimate - 1.0 / 101), 3 * sigma);
  EXPECT_EQ(r.counters.group_ops(), 0u);
}

TEST(AdvantageTest, ShorSucceedsAlmostAlways) {
  const std::uint64_t n = 53;
  const AdvantageReport r =
      EstimateAdvantage(Game(GameKind::kDl, n, 300), ShorDlAdversary());
  const double expected = 1 - 1.0 / n;
  EXPECT_LE(std::abs(r.estimate - expected), 3 * BinomialStderr(expected, 300));
  EXPECT_GT(r.max_quantum_depth, 0u);
  EXPECT_EQ(r.budget_failures, 0u);
}

TEST(AdvantageTest, BsgsSolvesCdh) {
  const AdvantageReport r =
      EstimateAdvantage(Game(GameKind::kCdh, 101, 40), BsgsCdhAdversary());
  EXPECT_EQ(r.successes, 40u);
  EXPECT_DOUBLE_EQ(r.estimate, 1.0);
}

TEST(AdvantageTest, ConstantDdhHasNoAdvantage) {
  for (std::uint64_t bit : {0u, 1u}) {
    const AdvantageReport r = EstimateAdvantage(Game(GameKind::kDdh, 101, 400),
                                                ConstantDdhAdversary(bit));
    EXPECT_LE(r.estimate, 3 * r.standard_error + kTol);
    EXPECT_DOUBLE_EQ(r.p_real, static_cast<double>(bit));
    EXPECT_DOUBLE_EQ(r.p_random, static_cast<double>(bit));
  }
}

TEST(AdvantageTest, DdhBitMustBeBinary) {
  const Adversary bad = [](GgmOracle&, Rng&) {
    AdversaryOutput out;
    out.bit = 2;
    return out;
  };
  EXPECT_THROW(EstimateAdvantage(Game(GameKind::kDdh, 101, 4), bad),
               ConfigError);
}

TEST(AdvantageTest, MdlSolverRecoversAllLogs) {
  const AdvantageReport r =
      EstimateAdvantage(Game(GameKind::kMdl, 101, 30, 3, 3), MdlAdversary());
  EXPECT_GE(r.estimate, 0.9);
  EXPECT_EQ(r.bounds.params.m, 3u);
}

TEST(AdvantageTest, StandardErrors) {
  EXPECT_DOUBLE_EQ(BinomialStderr(0.5, 100), 0.05);
  EXPECT_DOUBLE_EQ(BinomialStderr(0.3, 0), 0.0);
  const AdvantageReport r =
      EstimateAdvantage(Game(GameKind::kDl, 11, 500), RandomGuessDlAdversary());
  EXPECT_DOUBLE_EQ(r.standard_error, BinomialStderr(r.estimate, 500));
  const AdvantageReport d =
      EstimateAdvantage(Game(GameKind::kDdh, 11, 100), [](GgmOracle& o, Rng&) {
        AdversaryOutput out;
        out.bit = o.Equal(4, 4) ? 1 : 0;
        return out;
      });
  const double a = BinomialStderr(d.p_real, 50);
  const double b = BinomialStderr(d.p_random, 50);
  EXPECT_DOUBLE_EQ(d.standard_error, std::sqrt(a * a + b * b));
}

TEST(AdvantageTest, CountersAggregateOverTrials) {
  const Adversary three_ops = [](GgmOracle& o, Rng&) {
    const Index k = o.NextFreeIndex();
    o.GroupOp(false, 1, 2, k);
    o.GroupOp(false, k, 2, k);
    o.GroupOp(true, k, 1, k + 1);
    o.Equal(1, 2);
    AdversaryOutput out;
    out.scalars = {0};
    out.extra.quantum_ops = 2;
    out.extra.quantum_depth = 1;
    return out;
  };
  const AdvantageReport r =
      EstimateAdvantage(Game(GameKind::kDl, 101, 25), three_ops);
  EXPECT_EQ(r.counters.classical_ops, 75u);
  EXPECT_EQ(r.counters.quantum_ops, 50u);
  EXPECT_EQ(r.counters.equality_queries, 25u);
  EXPECT_EQ(r.max_group_ops, 5u);
  EXPECT_EQ(r.max_quantum_depth, 1u);
  EXPECT_EQ(r.bounds.params.ops, 5u);
  EXPECT_EQ(r.bounds.params.d, 1u);
}

TEST(AdvantageTest, BudgetViolationsAreCounted) {
  int calls = 0;
  const Adversary flaky = [&calls](GgmOracle&, Rng&) -> AdversaryOutput {
    if (++calls % 2) throw BudgetError("over");
    throw PolicyError("bad slot");
  };
  const AdvantageReport r =
      EstimateAdvantage(Game(GameKind::kDl, 101, 10), flaky);
  EXPECT_EQ(r.budget_failures, 10u);
  EXPECT_EQ(r.successes, 0u);
}

TEST(AdvantageTest, SameSeedSameReport) {
  const GameSpec g = Game(GameKind::kDl, 53, 60, 99);
  const std::string a = ToJson(EstimateAdvantage(g, ShorDlAdversary(4))).dump();
  const std::string b = ToJson(EstimateAdvantage(g, ShorDlAdversary(4))).dump();
  EXPECT_EQ(a, b);
  const std::string c =
      ToJson(EstimateAdvantage(Game(GameKind::kDl, 53, 60, 100),
                               ShorDlAdversary(4)))
          .dump();
  EXPECT_NE(a, c);
}

TEST(CompareTest, ToyProgram) {
  const std::vector<Residue> y = {3, 4};
  const Comparison c = CompareDistributions(ToyProgram(7), y);
  EXPECT_LT(c.tv, kTol);
  ASSERT_EQ(c.quantum.size(), 2u);
  EXPECT_NEAR(c.quantum.at(Outcome{true, {0}}), 0.5, kTol);
  EXPECT_NEAR(c.quantum.at(Outcome{true, {6}}), 0.5, kTol);
}

TEST(CompareTest, DepthZero) {
  ProgramBuilder b("depth0", RegisterLayout({3}, 1, 2, 7));
  OutputSpec out;
  out.kind = OutputSpec::Kind::kGroup;
  out.table_index = 1;
  const Comparison c =
      CompareDistributions(std::move(b).Build(out), std::vector<Residue>{5, 2});
  EXPECT_EQ(c.tv, 0.0);
  EXPECT_EQ(c.quantum, (OutcomeDistribution{{Outcome{true, {5}}, 1.0}}));
}

TEST(CompareTest, ShorIsExactlyReproduced) {
  const Comparison c = CompareShor(GroupSpec(17), 5);
  EXPECT_LT(c.tv, kTol);
  EXPECT_LE(c.real_ops, c.bound);
  const Json j = ToJson(c);
  EXPECT_TRUE(j.contains("tv"));
}

TEST(CompareTest, WorkloadRunsAgree) {
  const Workload w = MakeShorWorkload(GroupSpec(17), 3, 2, false, true);
  const WorkloadRun q = RunWorkload(w, OracleMode::kQuantumSim, 0, true);
  const WorkloadRun d = RunWorkload(w, OracleMode::kDequantized, 0, true);
  EXPECT_LT(TotalVariation(q.distribution, d.distribution), kTol);
  const WorkloadRun s = RunWorkload(w, OracleMode::kDequantized, 5, false);
  ASSERT_TRUE(s.outcome.has_value());
  EXPECT_GT(d.distribution.count(*s.outcome), 0u);
}

TEST(BoundReportTest, Examples) {
  BoundParams p;
  p.order = 101;
  p.d = 3;
  p.ops = 10;
  const BoundReport r = MakeBoundReport(p);
  EXPECT_NEAR(r.Get("qggm_dl").value, 4096.0 / 101, 1e-12);
  EXPECT_TRUE(r.Get("qggm_dl").vacuous);
  EXPECT_NEAR(r.Get("ggm_dl").value, 100.0 / 101, 1e-12);
  EXPECT_FALSE(r.Get("ggm_dl").vacuous);
  EXPECT_TRUE(r.constant_free);
  EXPECT_THROW(r.Get("nope"), ConfigError);

  BoundParams h;
  h.m = 2;
  h.ops = 3;
  h.q = 1;
  h.subroutines = 1;
  const BoundReport hr = MakeBoundReport(h);
  ASSERT_TRUE(hr.Get("hybrid_query").exact.has_value());
  EXPECT_EQ(*hr.Get("hybrid_query").exact, 147);
  EXPECT_EQ(*hr.Get("query_subroutine").exact, 147);
}

TEST(BoundReportTest, OverflowIsReportedAsInfinite) {
  BoundParams p;
  p.d = 40;
  p.m = 3;
  p.ops = 100;
  const BoundReport r = MakeBoundReport(p);
  EXPECT_TRUE(std::isinf(r.Get("depth_subroutine").value));
  EXPECT_FALSE(r.Get("depth_subroutine").exact.has_value());
}

TEST(BoundReportTest, JsonCarriesEveryEntry) {
  BoundParams p;
  p.ops = 4;
  const Json j = ToJson(MakeBoundReport(p));
  EXPECT_EQ(j["entries"].size(), 11u);
}

TEST(ChiSquareTest, Independence) {
  EXPECT_GT(ChiSquareIndependence({{50, 50}, {50, 50}}), 0.99);
  EXPECT_LT(ChiSquareIndependence({{90, 10}, {10, 90}}), 1e-6);
  EXPECT_THROW(ChiSquareIndependence({{1, 2}, {3}}), ConfigError);
}

TEST(WorkloadConfigTest, ParsesPrograms) {
  const Workload toy = ParseWorkload(Json::parse(
      R"({"order": 7, "inputs": [3, 4], "program": {"kind": "toy"}})"));
  EXPECT_EQ(toy.forms.size(), 2u);
  EXPECT_LT(CompareWorkload(toy).tv, kTol);

  const Workload shor = ParseWorkload(Json::parse(
      R"({"order": 17, "program": {"kind": "shor", "x": 5, "p": 4, "hybrid": true}})"));
  ASSERT_TRUE(shor.budgets.has_value());
  EXPECT_LT(CompareWorkload(shor).tv, kTol);

  const Workload rnd = ParseWorkload(Json::parse(
      R"({"order": 7, "seed": 3, "program": {"kind": "random_hybrid", "mode": "memory", "t": 1, "r": 1}})"));
  EXPECT_LT(CompareWorkload(rnd).tv, kTol);
}

TEST(WorkloadConfigTest, RejectsBadConfigs) {
  EXPECT_THROW(ParseWorkload(Json::parse(R"({"order": 7})")), ConfigError);
  EXPECT_THROW(ParseWorkload(
                   Json::parse(R"({"order": 7, "program": {"kind": "nope"}})")),
               ConfigError);
  EXPECT_THROW(ParseWorkload(Json::parse(
                   R"({"order": "x", "program": {"kind": "toy"}})")),
               ConfigError);
  EXPECT_THROW(ParseBudget(Json::parse(R"({"width": 2})")), ConfigError);
  EXPECT_THROW(ParseMode("fast"), ConfigError);
  EXPECT_THROW(LoadWorkload("/nonexistent/config.json"), ConfigError);
}

}  // namespace
}  // namespace ggq

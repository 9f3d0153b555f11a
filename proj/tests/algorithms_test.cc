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

#include "ggq/algorithms.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "ggq/errors.h"
#include "ggq/group_oracle.h"
#include "ggq/program.h"
#include "ggq/rng.h"
#include "gtest/gtest.h"

namespace ggq {
namespace {

constexpr double kEps = 1e-9;

TEST(PrecomputeTest, BinaryAtN101) {
  GgmOracle o = DlInstance{GroupSpec(101), 37}.MakeOracle();
  const PrecomputedPowers pre = BuildPrecomputed(o, 2);
  EXPECT_EQ(pre.digits(), 7u);
  EXPECT_EQ(pre.element_count(), 14u);
  EXPECT_EQ(pre.classical_ops(), 12u);
  EXPECT_EQ(o.counters().classical_ops, 12u);
  for (std::size_t i = 0; i < 7; ++i) {
    const Residue p2 = Residue{1} << i;
    EXPECT_EQ(o.Output(pre.Slot(0, i, 1)), p2 % 101);
    EXPECT_EQ(o.Output(pre.Slot(1, i, 1)), p2 * 37 % 101);
  }
}

TEST(PrecomputeTest, SmallestChain) {
  GgmOracle o = DlInstance{GroupSpec(3), 2}.MakeOracle();
  const PrecomputedPowers pre = BuildPrecomputed(o, 2);
  ASSERT_EQ(pre.digits(), 2u);
  EXPECT_EQ(o.Output(pre.Slot(0, 0, 1)), 1u);
  EXPECT_EQ(o.Output(pre.Slot(0, 1, 1)), 2u);
  EXPECT_EQ(o.Output(pre.Slot(1, 0, 1)), 2u);
  EXPECT_EQ(o.Output(pre.Slot(1, 1, 1)), 1u);
}

TEST(PrecomputeTest, BaseFourAtN101) {
  GgmOracle o = DlInstance{GroupSpec(101), 37}.MakeOracle();
  const PrecomputedPowers pre = BuildPrecomputed(o, 4);
  EXPECT_EQ(pre.digits(), 4u);
  EXPECT_EQ(pre.element_count(), 24u);
  for (int side = 0; side < 2; ++side) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t k = 1; k < 4; ++k) {
        const Residue base = side == 0 ? 1 : 37;
        const Residue want = k * (Residue{1} << (2 * i)) % 101 * base % 101;
        EXPECT_EQ(o.Output(pre.Slot(side, i, k)), want);
      }
    }
  }
  EXPECT_THROW(BuildPrecomputed(o, 1), DomainError);
}

TEST(ShorTest, ExactSuccessAtN17) {
  const ShorExact e = ShorDlExact(DlInstance{GroupSpec(17), 5}, 2);
  EXPECT_NEAR(e.success_probability, 1.0 - 1.0 / 17, kEps);
  double total = 0;
  for (const auto& [o, p] : e.distribution) total += p;
  EXPECT_NEAR(total, 1.0, kEps);
}

TEST(ShorTest, CountersAtN101) {
  const ShorExact e = ShorDlExact(DlInstance{GroupSpec(101), 37}, 2);
  EXPECT_EQ(e.counters.quantum_ops, 14u);
  EXPECT_EQ(e.counters.quantum_depth, 14u);
  EXPECT_EQ(e.counters.classical_ops, 12u);
  EXPECT_LE(e.counters.group_ops(), 28u);
  EXPECT_NEAR(e.success_probability, 1.0 - 1.0 / 101, kEps);
  const ShorExact p4 = ShorDlExact(DlInstance{GroupSpec(101), 37}, 4);
  EXPECT_EQ(p4.counters.quantum_ops, 8u);
  EXPECT_EQ(p4.counters.classical_ops, 22u);
}

TEST(ShorTest, ZeroLogarithm) {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const ShorRun r = ShorDl(DlInstance{GroupSpec(17), 0}, 2, rng);
    if (r.answer) EXPECT_EQ(*r.answer, 0u);
  }
  EXPECT_NEAR(ShorDlExact(DlInstance{GroupSpec(17), 0}, 2).success_probability,
              1.0 - 1.0 / 17, kEps);
}

TEST(ShorTest, RejectsCompositeOrder) {
  EXPECT_THROW(ShorDlExact(DlInstance{GroupSpec(15), 2}, 2), DomainError);
}

TEST(ShorTest, AnswerNeedsInvertibleU) {
  const GroupSpec spec(17);
  EXPECT_FALSE(ShorAnswer(spec, 0, 3).has_value());
  EXPECT_EQ(*ShorAnswer(spec, 3, 15), 5u);
}

TEST(ShorTreeTest, CapacityRecursion) {
  const std::uint64_t want[] = {0, 1, 2, 3, 4, 6, 8, 11, 14};
  for (std::size_t d = 0; d < 9; ++d) EXPECT_EQ(TreeCapacity(d), want[d]);
  EXPECT_EQ(TreeDepth(1), 1u);
  EXPECT_EQ(TreeDepth(14), 8u);
  EXPECT_EQ(TreeDepth(8), 6u);
}

TEST(ShorTreeTest, MatchesSequentialAtN17) {
  for (Residue x : {0u, 3u, 5u, 16u}) {
    const DlInstance inst{GroupSpec(17), x};
    const ShorExact seq = ShorDlExact(inst, 2);
    const ShorExact tree = ShorDlExact(inst, 2, true);
    EXPECT_LE(TotalVariation(seq.distribution, tree.distribution), kEps);
    EXPECT_LT(tree.counters.quantum_depth, seq.counters.quantum_depth);
  }
}

TEST(ShorTreeTest, DepthAndWidthAtN101) {
  const ShorExact e = ShorDlExact(DlInstance{GroupSpec(101), 37}, 2, true);
  EXPECT_EQ(e.counters.quantum_depth, 8u);
  EXPECT_EQ(e.counters.quantum_ops, 28u);
  EXPECT_EQ(e.counters.parallel_width_max, 5u);
  EXPECT_NEAR(e.success_probability, 1.0 - 1.0 / 101, kEps);
  const ShorExact p4 = ShorDlExact(DlInstance{GroupSpec(101), 37}, 4, true);
  EXPECT_EQ(p4.counters.quantum_depth, 6u);
}

// The target ceil(lg(2 ceil(lg N))) + 2 = 6 layers for N = 101, p = 2.
TEST(ShorTreeTest, DepthTargetAtN101) {
  const ShorExact e = ShorDlExact(DlInstance{GroupSpec(101), 37}, 2, true);
  EXPECT_LE(e.counters.quantum_depth, 6u);
}

Residue Reference(const GroupSpec& spec, const std::vector<Residue>& y,
                  const std::vector<std::uint64_t>& e) {
  Residue acc = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    acc = spec.Add(acc, spec.Mul(y[i], e[i] % spec.order()));
  }
  return acc;
}

TEST(PippengerTest, ZeroExponents) {
  const std::vector<Residue> y = {3, 4};
  GgmOracle o(GroupSpec(257), y);
  const Index bases[] = {1, 2};
  const std::uint64_t e[] = {0, 0};
  const MultiexpResult r = PippengerMultiexp(o, bases, e);
  EXPECT_EQ(r.ops, 0u);
  EXPECT_EQ(o.Output(r.index), 0u);
}

TEST(PippengerTest, PowerOfTwoIsDoublings) {
  for (std::size_t k = 0; k < 7; ++k) {
    const std::vector<Residue> y = {3};
    GgmOracle o(GroupSpec(257), y);
    const Index bases[] = {1};
    const std::uint64_t e[] = {std::uint64_t{1} << k};
    const MultiexpResult r = PippengerMultiexp(o, bases, e);
    EXPECT_EQ(r.ops, k);
    EXPECT_EQ(o.Output(r.index), (3u << k) % 257);
  }
}

TEST(PippengerTest, FourBases) {
  const GroupSpec spec(257);
  const std::vector<Residue> y = {10, 20, 30, 40};
  GgmOracle o(spec, y);
  const Index bases[] = {1, 2, 3, 4};
  const std::vector<std::uint64_t> e = {3, 5, 7, 11};
  const MultiexpResult r = PippengerMultiexp(o, bases, e);
  EXPECT_EQ(o.Output(r.index), Reference(spec, y, e));
  EXPECT_LE(r.ops, 16u);
  EXPECT_EQ(r.ops, o.counters().classical_ops);
  EXPECT_EQ(r.ops, PippengerCost(e));
  EXPECT_DOUBLE_EQ(PippengerBound(4, 16), 16.0);
}

TEST(PippengerTest, DegenerateBoundIsInfinite) {
  EXPECT_TRUE(std::isinf(PippengerBound(1, 2)));
}

TEST(PippengerProperty, RandomInstances) {
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const GroupSpec spec(2 + UniformBelow(rng, 256));
    const std::size_t m = 1 + UniformBelow(rng, 6);
    const std::uint64_t b = 1 + UniformBelow(rng, 64);
    std::vector<Residue> y(m);
    std::vector<std::uint64_t> e(m);
    std::vector<Index> bases(m);
    for (std::size_t i = 0; i < m; ++i) {
      y[i] = UniformBelow(rng, spec.order());
      e[i] = UniformBelow(rng, b + 1);
      bases[i] = i + 1;
    }
    GgmOracle o(spec, y);
    const MultiexpResult r = PippengerMultiexp(o, bases, e);
    EXPECT_EQ(o.Output(r.index), Reference(spec, y, e));
    EXPECT_LE(static_cast<double>(r.ops), PippengerBound(m, b));
  }
}

TEST(MdlTest, CostsAtN101) {
  const GroupSpec spec(101);
  const MdlCost c1 = MdlCircuitCost(spec, 1);
  EXPECT_EQ(c1.window, 2u);
  EXPECT_EQ(c1.windows, 4u);
  EXPECT_EQ(c1.classical_ops, 12u);
  EXPECT_EQ(c1.quantum_ops_per_run, 25u);
  const MdlCost c3 = MdlCircuitCost(spec, 3);
  EXPECT_EQ(c3.window, 3u);
  EXPECT_EQ(c3.total(), 69u);
  const MdlCost c8 = MdlCircuitCost(spec, 8);
  EXPECT_EQ(c8.window, 4u);
  EXPECT_EQ(c8.windows, 2u);
  EXPECT_EQ(c8.total(), 117u);
  const ShorExact shor = ShorDlExact(DlInstance{spec, 37}, 2);
  EXPECT_LT(c8.total(), 8 * shor.counters.group_ops());
}

TEST(MdlTest, RecoversThreeLogarithms) {
  const MdlInstance inst{GroupSpec(101), {5, 17, 88}};
  int ok = 0;
  const int runs = 60;
  for (int t = 0; t < runs; ++t) {
    Rng rng(TrialSeed(9, t));
    const MdlResult r = MdlSolve(inst, rng);
    if (r.xs && *r.xs == inst.xs) ++ok;
    if (r.xs) EXPECT_EQ(*r.xs, inst.xs);
  }
  EXPECT_GE(ok, 0.9 * runs);
}

TEST(MdlTest, ExactPathAtN17) {
  const MdlInstance inst{GroupSpec(17), {3, 11}};
  Rng rng(4);
  const MdlResult r = MdlSolve(inst, rng);
  EXPECT_TRUE(r.exact_simulation);
  ASSERT_TRUE(r.xs.has_value());
  EXPECT_EQ(*r.xs, inst.xs);
}

TEST(MdlTest, SingleInstanceMatchesShor) {
  const OutcomeDistribution mdl =
      MdlOutputDistribution(MdlInstance{GroupSpec(17), {5}});
  const OutcomeDistribution shor =
      ShorDlExact(DlInstance{GroupSpec(17), 5}, 2).distribution;
  EXPECT_LE(TotalVariation(mdl, shor), kEps);
}

TEST(MdlTest, DomainChecks) {
  Rng rng(1);
  EXPECT_THROW(MdlSolve(MdlInstance{GroupSpec(101), {1, 2, 3, 4}}, rng),
               DomainError);
  EXPECT_THROW(MdlSolve(MdlInstance{GroupSpec(100), {1}}, rng), DomainError);
}

TEST(BsgsTest, Examples) {
  const BsgsResult r = Bsgs(DlInstance{GroupSpec(101), 73});
  EXPECT_EQ(r.x, 73u);
  EXPECT_LE(r.counters.group_ops(), 38u);
  const BsgsResult z = Bsgs(DlInstance{GroupSpec(101), 0});
  EXPECT_EQ(z.x, 0u);
  EXPECT_EQ(z.counters.equality_queries, 1u);
}

TEST(BsgsProperty, AllLogarithmsWithinBudget) {
  for (std::uint64_t n : {17u, 53u, 101u, 100u}) {
    const std::uint64_t budget =
        2 * static_cast<std::uint64_t>(std::ceil(std::sqrt(n))) +
        2 * CeilLog(2, n) + 4;
    for (Residue x = 0; x < n; ++x) {
      const BsgsResult r = Bsgs(DlInstance{GroupSpec(n), x});
      EXPECT_EQ(r.x, x);
      EXPECT_LE(r.counters.group_ops(), budget);
    }
  }
}

// Exact success 1 - 1/N and the 4n operation budget on every prime tested.
TEST(ShorProperty, SuccessAndBudget) {
  for (std::uint64_t n : {3u, 5u, 7u, 11u, 13u, 17u, 53u}) {
    for (std::size_t p : {2u, 3u, 4u}) {
      const Residue x = (7 * n / 3) % n;
      const ShorExact e = ShorDlExact(DlInstance{GroupSpec(n), x}, p);
      EXPECT_NEAR(e.success_probability, 1.0 - 1.0 / n, kEps);
      EXPECT_EQ(e.counters.quantum_ops,
                2u * static_cast<std::uint64_t>(CeilLog(p, n)));
      if (p == 2) {
        EXPECT_LE(e.counters.group_ops(), 4u * CeilLog(2, n));
      }
      const ShorExact t = ShorDlExact(DlInstance{GroupSpec(n), x}, p, true);
      EXPECT_LE(TotalVariation(e.distribution, t.distribution), kEps);
    }
  }
}

}  // namespace
}  // namespace ggq

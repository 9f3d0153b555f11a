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

#include "ggq/group_oracle.h"

#include <map>
#include <vector>

#include "ggq/errors.h"
#include "ggq/group.h"
#include "ggq/linear_form.h"
#include "ggq/rng.h"
#include "gtest/gtest.h"

namespace ggq {
namespace {

TEST(GroupSpecTest, PrimalityFlag) {
  EXPECT_TRUE(GroupSpec(101).is_prime());
  EXPECT_FALSE(GroupSpec(100).is_prime());
  EXPECT_THROW(GroupSpec::Prime(91), DomainError);
  EXPECT_THROW(GroupSpec(1), DomainError);
}

TEST(GroupSpecTest, Arithmetic) {
  const GroupSpec g(7);
  EXPECT_EQ(g.Add(5, 4), 2u);
  EXPECT_EQ(g.Sub(1, 3), 5u);
  EXPECT_EQ(g.Mul(3, 5), 1u);
  EXPECT_EQ(g.Inverse(3), 5u);
  EXPECT_EQ(g.Reduce(-1), 6u);
  EXPECT_THROW(GroupSpec(8).Inverse(2), DomainError);
  EXPECT_EQ(CeilLog(2, 101), 7);
  EXPECT_EQ(CeilLog(4, 101), 4);
}

TEST(GgmOracleTest, InitLayout) {
  const std::vector<Residue> in = {1, 3};
  GgmOracle o(GroupSpec(7), in);
  EXPECT_EQ(o.Output(1), 1u);
  EXPECT_EQ(o.Output(2), 3u);
  EXPECT_EQ(o.Output(3), 0u);
  EXPECT_EQ(o.input_count(), 2u);

  GgmOracle empty(GroupSpec(5), std::vector<Residue>{});
  EXPECT_EQ(empty.input_count(), 0u);
  EXPECT_EQ(empty.Output(1), 0u);

  const std::vector<Residue> dl = {1, 37};
  GgmOracle d(GroupSpec(101), dl);
  EXPECT_EQ(d.Output(1), 1u);
  EXPECT_EQ(d.Output(2), 37u);
}

TEST(GgmOracleTest, RejectsOutOfRangeInputs) {
  const std::vector<Residue> in = {7};
  EXPECT_THROW(GgmOracle(GroupSpec(7), in), DomainError);
}

TEST(GgmOracleTest, GroupOp) {
  const std::vector<Residue> in = {1, 3};
  GgmOracle a(GroupSpec(7), in);
  a.GroupOp(false, 1, 2, 3);
  EXPECT_EQ(a.Output(3), 4u);
  GgmOracle b(GroupSpec(7), in);
  b.GroupOp(true, 1, 2, 3);
  EXPECT_EQ(b.Output(3), 5u);

  const std::vector<Residue> two = {2};
  GgmOracle c(GroupSpec(5), two);
  c.GroupOp(false, 1, 1, 1);
  EXPECT_EQ(c.Output(1), 4u);
  EXPECT_EQ(c.counters().classical_ops, 1u);
}

TEST(GgmOracleTest, IndexZeroIsInvalid) {
  const std::vector<Residue> in = {1};
  GgmOracle o(GroupSpec(7), in);
  EXPECT_THROW(o.GroupOp(false, 0, 1, 2), DomainError);
  EXPECT_THROW(o.Equal(0, 1), DomainError);
}

TEST(GgmOracleTest, Equality) {
  const std::vector<Residue> same = {3, 3};
  GgmOracle a(GroupSpec(7), same);
  EXPECT_TRUE(a.Equal(1, 2));
  const std::vector<Residue> diff = {3, 4};
  GgmOracle b(GroupSpec(7), diff);
  EXPECT_FALSE(b.Equal(1, 2));
  const std::vector<Residue> zero = {0};
  GgmOracle c(GroupSpec(7), zero);
  EXPECT_TRUE(c.Equal(1, 99));
  EXPECT_EQ(c.counters().equality_queries, 1u);
  EXPECT_EQ(c.counters().classical_ops, 0u);
}

TEST(GgmOracleTest, Output) {
  const std::vector<Residue> in = {1, 3, 4};
  GgmOracle a(GroupSpec(7), in);
  EXPECT_EQ(a.Output(3), 4u);
  EXPECT_EQ(a.Output(5), 0u);
  const std::vector<Residue> twos = {2, 2};
  GgmOracle b(GroupSpec(7), twos);
  b.GroupOp(false, 1, 2, 3);
  EXPECT_EQ(b.Output(3), 4u);
  EXPECT_EQ(b.counters().group_ops(), 1u);
}

TEST(GgmOracleTest, NextFreeIndexPassesInputsAndWrites) {
  const std::vector<Residue> in = {1, 2};
  GgmOracle o(GroupSpec(7), in);
  EXPECT_EQ(o.NextFreeIndex(), 3u);
  o.GroupOp(false, 1, 2, 10);
  EXPECT_EQ(o.NextFreeIndex(), 11u);
}

// Random call sequences: counters match the calls, every value is the
// shadow linear form evaluated at the inputs, and replays are identical.
TEST(GgmOracleProperty, CountersClosureDeterminism) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    const GroupSpec spec(seed % 2 ? 101 : 12);
    const std::size_t m = 1 + UniformBelow(rng, 3);
    std::vector<Residue> y(m);
    for (Residue& v : y) v = UniformBelow(rng, spec.order());
    GgmOracle o(spec, y);
    GgmOracle replay(spec, y);
    std::map<Index, LinearForm> shadow;
    for (std::size_t i = 1; i <= m; ++i) {
      shadow[i] = LinearForm::Variable(m, i);
    }
    auto form = [&](Index i) {
      auto it = shadow.find(i);
      return it == shadow.end() ? LinearForm::Zero(m) : it->second;
    };
    std::uint64_t ops = 0;
    std::uint64_t eqs = 0;
    for (int step = 0; step < 60; ++step) {
      const Index i = 1 + UniformBelow(rng, 8);
      const Index j = 1 + UniformBelow(rng, 8);
      if (UniformBelow(rng, 4) == 0) {
        const bool e = o.Equal(i, j);
        EXPECT_EQ(e, replay.Equal(i, j));
        EXPECT_EQ(e, form(i).Evaluate(y, spec) == form(j).Evaluate(y, spec));
        ++eqs;
        continue;
      }
      const bool b = UniformBelow(rng, 2) == 1;
      const Index k = 1 + UniformBelow(rng, 8);
      o.GroupOp(b, i, j, k);
      replay.GroupOp(b, i, j, k);
      shadow[k] = form(i).Combine(form(j), b, spec);
      ++ops;
    }
    EXPECT_EQ(o.counters().classical_ops, ops);
    EXPECT_EQ(o.counters().equality_queries, eqs);
    EXPECT_EQ(o.entries(), replay.entries());
    for (const auto& [idx, value] : o.entries()) {
      EXPECT_EQ(value, form(idx).Evaluate(y, spec)) << "index " << idx;
    }
  }
}

}  // namespace
}  // namespace ggq

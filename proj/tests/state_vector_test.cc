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

#include "ggq/state_vector.h"

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <vector>

#include "ggq/algorithms.h"
#include "ggq/errors.h"
#include "ggq/local_unitary.h"
#include "ggq/random_programs.h"
#include "ggq/rng.h"
#include "gtest/gtest.h"

namespace ggq {
namespace {

constexpr double kEps = 1e-9;

// Dense amplitudes of the work cells; every other cell must be constant.
std::vector<Complex> WorkVector(const StateVector& s) {
  const RegisterLayout& l = s.layout();
  std::uint64_t dim = 1;
  for (std::uint64_t d : l.work_dims()) dim *= d;
  std::vector<Complex> v(dim);
  for (const auto& [c, a] : s.amplitudes()) {
    std::uint64_t idx = 0;
    for (std::size_t r = 0; r < l.work_count(); ++r) {
      idx = idx * l.work_dims()[r] + c[l.WorkCell(r)];
    }
    v[idx] += a;
  }
  return v;
}

std::vector<Complex> MatVec(const DenseUnitary& u,
                            const std::vector<Complex>& v) {
  const std::size_t n = v.size();
  std::vector<Complex> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out[r] += u.matrix()[r * n + c] * v[c];
  }
  return out;
}

std::vector<std::size_t> AllWork(const RegisterLayout& l) {
  std::vector<std::size_t> w;
  for (std::size_t r = 0; r < l.work_count(); ++r) w.push_back(l.WorkCell(r));
  return w;
}

TEST(StateVectorTest, InitIsOneBasisState) {
  const std::vector<Residue> in = {1, 3};
  const StateVector s = StateVector::Init(RegisterLayout({2}, 1, 2, 7), in);
  ASSERT_TRUE(s.IsBasisState());
  const auto& [c, a] = *s.amplitudes().begin();
  EXPECT_EQ(a, Complex(1.0));
  EXPECT_EQ(c[s.layout().TableCell(1)], 1u);
  EXPECT_EQ(c[s.layout().TableCell(2)], 3u);
  EXPECT_EQ(c[s.layout().QueryCell(0, QueryField::kTarget)], 0u);
  EXPECT_DOUBLE_EQ(s.Norm(), 1.0);
}

TEST(StateVectorTest, InitPadsTable) {
  const std::vector<Residue> in = {2};
  const StateVector s = StateVector::Init(RegisterLayout({2}, 1, 3, 5), in);
  const Config& c = s.amplitudes().begin()->first;
  const RegisterLayout& l = s.layout();
  EXPECT_EQ(c[l.TableCell(1)], 2u);
  EXPECT_EQ(c[l.TableCell(2)], 0u);
  EXPECT_EQ(c[l.TableCell(3)], 0u);
}

TEST(StateVectorTest, InitRejectsTooManyInputs) {
  const std::vector<Residue> in = {1, 2, 3};
  EXPECT_ANY_THROW(StateVector::Init(RegisterLayout({2}, 1, 2, 7), in));
}

TEST(StateVectorTest, HadamardGivesEqualSuperposition) {
  StateVector s = StateVector::Init(RegisterLayout({2}, 1, 1, 7), {});
  const std::size_t w[] = {s.layout().WorkCell(0)};
  s.ApplyLocal(w, DenseUnitary::Hadamard());
  ASSERT_EQ(s.size(), 2u);
  for (const auto& [c, a] : s.amplitudes()) {
    EXPECT_NEAR(a.real(), 1 / std::numbers::sqrt2, kEps);
    EXPECT_NEAR(a.imag(), 0.0, kEps);
  }
  const auto d = s.Distribution(w);
  EXPECT_NEAR(d.at({0}), 0.5, kEps);
  EXPECT_NEAR(d.at({1}), 0.5, kEps);
}

TEST(StateVectorTest, IdentityAndInvolution) {
  Rng rng(3);
  StateVector s = StateVector::Init(RegisterLayout({2, 3}, 1, 1, 7), {});
  const std::vector<std::size_t> w = AllWork(s.layout());
  s.ApplyLocal(w, *RandomUnitary({2, 3}, rng));
  const std::vector<Complex> before = WorkVector(s);
  s.ApplyLocal(w, DenseUnitary::Identity({2, 3}));
  const std::vector<Complex> same = WorkVector(s);
  const std::size_t first[] = {w[0]};
  s.ApplyLocal(first, DenseUnitary::Hadamard());
  s.ApplyLocal(first, DenseUnitary::Hadamard());
  const std::vector<Complex> after = WorkVector(s);
  for (std::size_t i = 0; i < before.size(); ++i) {
    EXPECT_NEAR(std::abs(before[i] - same[i]), 0.0, kEps);
    EXPECT_NEAR(std::abs(before[i] - after[i]), 0.0, kEps);
  }
}

TEST(StateVectorTest, MeasureSuperposition) {
  StateVector s = StateVector::Init(RegisterLayout({2}, 1, 1, 7), {});
  const std::size_t w[] = {s.layout().WorkCell(0)};
  s.ApplyLocal(w, DenseUnitary::Hadamard());
  const auto branches = s.Branches(w);
  ASSERT_EQ(branches.size(), 2u);
  for (const auto& b : branches) {
    EXPECT_NEAR(b.probability, 0.5, kEps);
    EXPECT_TRUE(b.state.IsBasisState());
    EXPECT_NEAR(b.state.Norm(), 1.0, kEps);
  }
  Rng rng(11);
  int ones = 0;
  for (int t = 0; t < 2000; ++t) ones += s.Measure(w, rng).outcome[0];
  EXPECT_NEAR(ones / 2000.0, 0.5, 3 * std::sqrt(0.25 / 2000));
}

TEST(StateVectorTest, MeasureBasisStateIsDeterministic) {
  const std::vector<Residue> in = {4};
  const StateVector s = StateVector::Init(RegisterLayout({2}, 1, 1, 7), in);
  Rng rng(1);
  const std::size_t t[] = {s.layout().TableCell(1)};
  const auto b = s.Measure(t, rng);
  EXPECT_EQ(b.outcome, Config{4});
  EXPECT_DOUBLE_EQ(b.probability, 1.0);
}

TEST(StateVectorTest, ProductMarginalsMultiply) {
  Rng rng(5);
  StateVector s = StateVector::Init(RegisterLayout({2, 3}, 1, 1, 7), {});
  const std::vector<std::size_t> w = AllWork(s.layout());
  const std::size_t c0[] = {w[0]};
  const std::size_t c1[] = {w[1]};
  s.ApplyLocal(c0, *RandomUnitary({2}, rng));
  s.ApplyLocal(c1, *RandomUnitary({3}, rng));
  const auto a = s.Distribution(c0);
  const auto b = s.Distribution(c1);
  const auto joint = s.Distribution(w);
  for (const auto& [k, p] : joint) {
    EXPECT_NEAR(p, a.at({k[0]}) * b.at({k[1]}), kEps);
  }
}

TEST(StateVectorTest, SelectorValidation) {
  StateVector s = StateVector::Init(RegisterLayout({2}, 1, 1, 7), {});
  const std::size_t bad[] = {999};
  EXPECT_ANY_THROW(s.Distribution(bad));
  const std::size_t table[] = {s.layout().TableCell(1)};
  EXPECT_ANY_THROW(s.ApplyLocal(table, DenseUnitary::Hadamard()));
}

TEST(StateVectorTest, PermutationCollisionIsRejected) {
  StateVector s = StateVector::Init(RegisterLayout({2}, 1, 1, 7), {});
  const std::size_t w[] = {s.layout().WorkCell(0)};
  s.ApplyLocal(w, DenseUnitary::Hadamard());
  const std::size_t cell = s.layout().WorkCell(0);
  EXPECT_THROW(
      s.ApplyPermutation([cell](std::span<std::uint32_t> c) { c[cell] = 0; }),
      ValidationError);
}

TEST(StateVectorTest, DebugJsonIsCanonical) {
  StateVector a = StateVector::Init(RegisterLayout({2}, 1, 1, 7), {});
  StateVector b = a;
  const std::size_t w[] = {a.layout().WorkCell(0)};
  a.ApplyLocal(w, DenseUnitary::Hadamard());
  b.ApplyLocal(w, DenseUnitary::Hadamard());
  EXPECT_EQ(a.DebugJson(), b.DebugJson());
}

TEST(QftTest, SmallCases) {
  StateVector s = StateVector::Init(RegisterLayout({2}, 1, 1, 7), {});
  QftApply(s, s.layout().WorkCell(0), false);
  for (const Complex& a : WorkVector(s)) {
    EXPECT_NEAR(std::abs(a - Complex(1 / std::numbers::sqrt2)), 0.0, kEps);
  }
  StateVector t = StateVector::Init(RegisterLayout({3}, 1, 1, 7), {},
                                    std::vector<std::uint32_t>{1});
  QftApply(t, t.layout().WorkCell(0), false);
  const std::vector<Complex> v = WorkVector(t);
  const Complex omega = std::polar(1.0, 2 * std::numbers::pi / 3);
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(std::abs(v[k] - std::pow(omega, k) / std::sqrt(3.0)), 0.0,
                kEps);
  }
  QftApply(t, t.layout().WorkCell(0), true);
  EXPECT_NEAR(std::abs(WorkVector(t)[1] - Complex(1.0)), 0.0, kEps);
}

// The DL circuit's output (u, v) is uniform on {(u, xu)}, computed here by
// summing the amplitudes of sum_{a,b} |a, b, a + bx> through both Fourier
// transforms.
TEST(StateVectorTest, ShorOutputMatchesBruteForce) {
  const std::uint64_t n = 17;
  const Residue x = 5;
  const ShorExact exact = ShorDlExact(DlInstance{GroupSpec(n), x}, 2);
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = 0; v < n; ++v) {
      double p = 0;
      for (std::uint64_t z = 0; z < n; ++z) {
        Complex amp = 0;
        for (std::uint64_t a = 0; a < n; ++a) {
          for (std::uint64_t b = 0; b < n; ++b) {
            if ((a + b * x) % n != z) continue;
            amp +=
                std::polar(1.0, -2 * std::numbers::pi *
                                    static_cast<double>((a * u + b * v) % n) /
                                    static_cast<double>(n));
          }
        }
        p += std::norm(amp) / static_cast<double>(n * n * n * n);
      }
      const auto it = exact.distribution.find(Outcome{false, {u, v}});
      const double got = it == exact.distribution.end() ? 0 : it->second;
      EXPECT_NEAR(got, p, kEps) << u << "," << v;
      if (v == x * u % n) EXPECT_NEAR(p, 1.0 / n, kEps);
    }
  }
}

// Norm preservation, linearity against a dense reference, and pruning
// soundness over random unitaries on random states.
TEST(StateVectorProperty, MatchesDenseReference) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const std::vector<std::uint64_t> dims = {2, 3, 2};
    StateVector s = StateVector::Init(RegisterLayout(dims, 1, 1, 7), {});
    const std::vector<std::size_t> w = AllWork(s.layout());
    std::vector<Complex> ref = WorkVector(s);
    for (int step = 0; step < 4; ++step) {
      const auto u = RandomUnitary(dims, rng);
      s.ApplyLocal(w, *u);
      ref = MatVec(*u, ref);
      EXPECT_NEAR(s.Norm(), 1.0, kEps);
    }
    const std::vector<Complex> got = WorkVector(s);
    for (std::size_t i = 0; i < ref.size(); ++i) {
      EXPECT_NEAR(std::abs(got[i] - ref[i]), 0.0, kEps);
    }
    const auto dist = s.Distribution(w);
    for (const auto& [k, p] : dist) {
      const std::size_t idx = (k[0] * 3 + k[1]) * 2 + k[2];
      EXPECT_NEAR(p, std::norm(ref[idx]), kEps);
    }
  }
}

}  // namespace
}  // namespace ggq

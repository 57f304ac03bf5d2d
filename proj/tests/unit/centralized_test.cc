// Copyright 2026 The structctl Authors.
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


#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "structctl/centralized.h"
#include "structctl/generator.h"
#include "structctl/graphs.h"
#include "structctl/sparsity_pattern.h"

namespace structctl::centralized {
namespace {

struct Instance {
  SparsityPattern A;
  SparsityPattern B;
};

Instance RandomInstance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = 1 + static_cast<int>(rng() % 7);
  const int p = static_cast<int>(rng() % 3);
  return {RandomPattern(n, n, 0.25, false, rng),
          RandomPattern(n, p, 0.3, false, rng)};
}

TEST(VerifyTest, AgreesWithOracle) {
  int positive = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Instance in = RandomInstance(seed);
    const Verdict v = Verify(in.A, in.B);
    ASSERT_EQ(v.controllable, testing::OracleControllable(in.A, in.B))
        << "seed " << seed;
    EXPECT_EQ(CheckVerdict(in.A, in.B, v), "") << "seed " << seed;
    positive += v.controllable;
  }
  EXPECT_GT(positive, 20);
  EXPECT_LT(positive, 480);
}

TEST(VerifyTest, AllCriteriaAgree) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Instance in = RandomInstance(seed);
    const Verdict plain = Verify(in.A, in.B);
    const Verdict cacti = VerifyViaCacti(in.A, in.B);
    const Verdict scc = VerifyViaScc(in.A, in.B);
    ASSERT_EQ(cacti.controllable, plain.controllable) << "seed " << seed;
    ASSERT_EQ(scc.controllable, plain.controllable) << "seed " << seed;
    EXPECT_EQ(cacti.criterion, Criterion::kInputCacti);
    EXPECT_EQ(scc.criterion, Criterion::kSccAndMatching);
    if (cacti.controllable) {
      EXPECT_EQ(CheckCacti(in.A, in.B, cacti.cacti), "") << "seed " << seed;
    }
  }
}

TEST(VerifyTest, WitnessesOnFailure) {
  // x0 -> x1, no input reaches x2; x1 and x2 both fed only by x0.
  const SparsityPattern A(3, 3, {{1, 0}, {2, 0}});
  const SparsityPattern B(3, 1, {{0, 0}});
  const Verdict v = Verify(A, B);
  ASSERT_FALSE(v.controllable);
  ASSERT_TRUE(v.violation.has_value());
  EXPECT_TRUE(v.violation->unreached.empty());
  EXPECT_FALSE(v.violation->deficient.empty());
  EXPECT_LT(v.violation->deficient_neighbors.size(),
            v.violation->deficient.size());

  const Verdict none = Verify(SparsityPattern(2, 2, {{1, 0}}), SparsityPattern(2, 1));
  ASSERT_TRUE(none.violation.has_value());
  EXPECT_EQ(none.violation->unreached, (std::vector<int>{0, 1}));
}

TEST(VerifyTest, ChainIsControllable) {
  const SparsityPattern A(3, 3, {{1, 0}, {2, 1}});
  const SparsityPattern B(3, 1, {{0, 0}});
  const Verdict v = Verify(A, B);
  EXPECT_TRUE(v.controllable);
  EXPECT_EQ(v.matching.size(), 3);
  EXPECT_EQ(v.reach_parent[2], 1);
  EXPECT_FALSE(v.violation.has_value());
}

TEST(CheckVerdictTest, RejectsTamperedVerdicts) {
  const SparsityPattern A(3, 3, {{1, 0}, {2, 1}});
  const SparsityPattern B(3, 1, {{0, 0}});
  Verdict v = Verify(A, B);
  Verdict flipped = v;
  flipped.controllable = false;
  EXPECT_NE(CheckVerdict(A, B, flipped), "");
  Verdict broken = v;
  broken.reach_parent[2] = -2;
  EXPECT_NE(CheckVerdict(A, B, broken), "");
  Verdict unmatched = v;
  unmatched.matching = graph::Matching(4, 3);
  EXPECT_NE(CheckVerdict(A, B, unmatched), "");
}

TEST(CheckCactiTest, RejectsOverlap) {
  const SparsityPattern A(2, 2, {{1, 0}});
  const SparsityPattern B(2, 1, {{0, 0}});
  Cactus c;
  c.stem = {2, 0, 1};
  EXPECT_EQ(CheckCacti(A, B, {c}), "");
  Cactus dup = c;
  EXPECT_NE(CheckCacti(A, B, {c, dup}), "");
  Cactus short_stem;
  short_stem.stem = {2, 0};
  EXPECT_NE(CheckCacti(A, B, {short_stem}), "");
}

TEST(NumericProbeTest, MostlyAgreesWithStructure) {
  int agree = 0;
  const int total = 200;
  for (std::uint64_t seed = 0; seed < total; ++seed) {
    const Instance in = RandomInstance(seed);
    agree += NumericProbe(in.A, in.B, seed) == Verify(in.A, in.B).controllable;
  }
  EXPECT_GE(agree, total * 99 / 100);
}

TEST(NumericProbeTest, KnownCases) {
  EXPECT_TRUE(NumericProbe(SparsityPattern(3, 3, {{1, 0}, {2, 1}}),
                           SparsityPattern(3, 1, {{0, 0}}), 1));
  // Two states driven identically by one input with no dynamics.
  EXPECT_FALSE(NumericProbe(SparsityPattern(2, 2),
                            SparsityPattern(2, 1, {{0, 0}, {1, 0}}), 1));
}

}  // namespace
}  // namespace structctl::centralized

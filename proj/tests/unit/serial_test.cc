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


#include <algorithm>

#include <gtest/gtest.h>

#include "oracles.h"
#include "structctl/centralized.h"
#include "structctl/errors.h"
#include "structctl/generator.h"
#include "structctl/serial.h"

namespace structctl::serial {
namespace {

GeneratorParams SerialParams(std::uint64_t seed, int n_max) {
  GeneratorParams params;
  params.r = 2 + static_cast<int>(seed % 5);
  params.n_max = n_max;
  params.p_max = 2;
  params.b_density = 0.4;
  params.a_density = 0.35;
  params.topology = Topology::kSerial;
  return params;
}

bool Controllable(const InterconnectedSystem& sys) {
  const GlobalPattern g = AssembleGlobal(sys);
  return centralized::Verify(g.A, g.B).controllable;
}

// Reverses every connection: E_{i,j} becomes E_{j,i} transposed.
InterconnectedSystem Reversed(const InterconnectedSystem& sys) {
  std::vector<Interconnection> flipped;
  for (const Interconnection& c : sys.connections()) {
    flipped.push_back({c.from, c.to, c.E.Transposed()});
  }
  return InterconnectedSystem::Create(
      {sys.subsystems().begin(), sys.subsystems().end()}, flipped);
}

TEST(TopologyTest, SerialAndCoSerial) {
  const SparsityPattern a(1, 1);
  const SparsityPattern b(1, 0);
  const SparsityPattern e(1, 1, {{0, 0}});
  // 0 feeds both 1 and 2.
  const InterconnectedSystem fan = InterconnectedSystem::Create(
      {{0, 1, 0, a, b}, {1, 1, 0, a, b}, {2, 1, 0, a, b}}, {{1, 0, e}, {2, 0, e}});
  const SerialCheck s = IsSerial(fan);
  EXPECT_FALSE(s.is_serial);
  EXPECT_EQ(s.offenders, (std::vector<int>{0}));
  EXPECT_TRUE(IsCoSerial(fan).is_serial);
  EXPECT_TRUE(IsSerial(Reversed(fan)).is_serial);
  EXPECT_FALSE(IsCoSerial(Reversed(fan)).is_serial);
}

TEST(LocallyReachedTest, SourceComponentsNeedInputs) {
  const Subsystem chain{0, 2, 1, SparsityPattern(2, 2, {{1, 0}}),
                        SparsityPattern(2, 1, {{0, 0}})};
  EXPECT_TRUE(LocallyReached(chain));
  Subsystem tail = chain;
  tail.B = SparsityPattern(2, 1, {{1, 0}});
  EXPECT_FALSE(LocallyReached(tail));
}

TEST(MatchingConditionTest, MatchesExhaustiveSearch) {
  int holds = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    GeneratorParams params = SerialParams(seed, 3);
    params.r = 2 + static_cast<int>(seed % 3);
    params.topology = seed % 2 ? Topology::kSerial : Topology::kGeneral;
    const InterconnectedSystem sys = RandomSystem(params, seed);
    const Lemma4Report rep = CheckLemma4(sys);
    ASSERT_EQ(rep.holds, testing::ExhaustiveLemma4(sys)) << "seed " << seed;
    holds += rep.holds;
  }
  EXPECT_GT(holds, 10);
}

TEST(MatchingConditionTest, ImpliesControllability) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const InterconnectedSystem sys = RandomSystem(SerialParams(seed, 6), seed);
    if (CheckLemma4(sys).holds) {
      ASSERT_TRUE(Controllable(sys)) << "seed " << seed;
    }
  }
}

TEST(SeqStrtCtlTest, AgreesWithMatchingConditionAndIsSound) {
  int positive = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const InterconnectedSystem sys = RandomSystem(SerialParams(seed, 6), seed);
    const auto run = RunSeqStrtCtl(sys);
    const bool verdict = run.outputs[0].verdict;
    for (const SerialAgentResult& a : run.outputs) {
      ASSERT_EQ(a.verdict, verdict) << "seed " << seed;
    }
    ASSERT_EQ(verdict, CheckLemma4(sys).holds) << "seed " << seed;
    if (verdict) {
      ASSERT_TRUE(Controllable(sys)) << "seed " << seed;
    }
    positive += verdict;
  }
  EXPECT_GT(positive, 10);
}

TEST(SeqStrtCtlTest, OutgoingVariantOnReversedTopology) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const InterconnectedSystem sys =
        Reversed(RandomSystem(SerialParams(seed, 5), seed));
    ASSERT_TRUE(IsCoSerial(sys).is_serial);
    const auto run = RunSeqStrtCtl(sys, Variant::kOutgoing);
    const bool verdict = run.outputs[0].verdict;
    ASSERT_EQ(verdict, CheckLemma4(sys).holds) << "seed " << seed;
    if (verdict) {
      ASSERT_TRUE(Controllable(sys)) << "seed " << seed;
    }
  }
}

TEST(SeqStrtCtlTest, RejectsWrongTopology) {
  const SparsityPattern a(1, 1);
  const SparsityPattern b(1, 1, {{0, 0}});
  const SparsityPattern e(1, 1, {{0, 0}});
  const InterconnectedSystem fan = InterconnectedSystem::Create(
      {{0, 1, 1, a, b}, {1, 1, 1, a, b}, {2, 1, 1, a, b}}, {{1, 0, e}, {2, 0, e}});
  try {
    RunSeqStrtCtl(fan);
    FAIL() << "expected NotSerialError";
  } catch (const NotSerialError& err) {
    EXPECT_EQ(err.offenders(), (std::vector<int>{0}));
  }
  EXPECT_NO_THROW(RunSeqStrtCtl(fan, Variant::kOutgoing));
  const InterconnectedSystem apart = InterconnectedSystem::Create(
      {{0, 1, 1, a, b}, {1, 1, 1, a, b}}, {});
  EXPECT_THROW(RunSeqStrtCtl(apart), ValidationError);
}

TEST(SeqStrtCtlTest, ReportsLocalFlags) {
  // Subsystem 1 has no input and its only state is fed by subsystem 0.
  const SparsityPattern a(1, 1);
  const InterconnectedSystem sys = InterconnectedSystem::Create(
      {{0, 1, 1, a, SparsityPattern(1, 1, {{0, 0}})}, {1, 1, 0, a, SparsityPattern(1, 0)}},
      {{1, 0, SparsityPattern(1, 1, {{0, 0}})}});
  const auto run = RunSeqStrtCtl(sys);
  EXPECT_TRUE(run.outputs[0].initial);
  EXPECT_FALSE(run.outputs[1].reached);
  EXPECT_FALSE(run.outputs[0].verdict);
  EXPECT_TRUE(Controllable(sys));
}

TEST(BlockWeightTest, SameBlockIsCheaper) {
  const graph::EdgeWeight w = BlockWeight({0, 0, 1, -1});
  EXPECT_EQ(w(0, 1), 1);
  EXPECT_EQ(w(2, 1), 2);
  EXPECT_EQ(w(3, 0), 2);
}

}  // namespace
}  // namespace structctl::serial

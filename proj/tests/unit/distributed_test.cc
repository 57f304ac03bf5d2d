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
#include <numeric>
#include <string>

#include <gtest/gtest.h>

#include "oracles.h"
#include "structctl/centralized.h"
#include "structctl/distributed.h"
#include "structctl/errors.h"
#include "structctl/generator.h"
#include "structctl/graph/matching.h"
#include "structctl/graphs.h"
#include "structctl/io.h"

namespace structctl::distributed {
namespace {

using runtime::BoundaryExchange;
using runtime::EdgeFlow;
using runtime::Side;
using runtime::SharedVertex;
using runtime::VertexUpdate;

InterconnectedSystem Corpus(std::uint64_t seed) {
  GeneratorParams params;
  params.r = 2 + static_cast<int>(seed % 5);
  params.p_max = 2;
  params.b_density = 0.5;
  return RandomSystem(params, 1000 + seed);
}

InterconnectedSystem RingExample() {
  return LoadSystem(std::string(STRUCTCTL_TEST_DATA) + "/ring4.json");
}

runtime::RunResult<PrdResult> RunPrd(const InterconnectedSystem& sys,
                                     PrdOptions options = {}) {
  return runtime::Run<PrdResult>(
      sys, [options](runtime::Agent& a) { return Prd(a, options); });
}

TEST(ReachedTest, MatchesCentralReachability) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const InterconnectedSystem sys = Corpus(seed);
    const GlobalPattern g = AssembleGlobal(sys);
    const std::vector<char> naive =
        testing::NaiveInputReached(g.A.ToDense(), g.B.ToDense());
    const auto run = RunReached(sys, {.extra_iterations = 2});
    for (int i = 0; i < sys.num_subsystems(); ++i) {
      const ReachedResult& r = run.outputs[i];
      std::vector<int> expect;
      for (int k = 0; k < sys.subsystem(i).n; ++k) {
        if (naive[sys.state_offset(i) + k]) expect.push_back(k);
      }
      ASSERT_EQ(r.rchd, expect) << "seed " << seed << " agent " << i;
      EXPECT_EQ(r.reached, static_cast<int>(expect.size()) == sys.subsystem(i).n);
      EXPECT_FALSE(r.grew_after_fixpoint) << "seed " << seed;
      EXPECT_LE(r.last_growth, r.total_scc_count);
    }
  }
}

TEST(ReachedTest, CountsComponents) {
  const auto run = RunReached(RingExample());
  int total = 0;
  for (const ReachedResult& r : run.outputs) total += r.scc_count;
  for (const ReachedResult& r : run.outputs) EXPECT_EQ(r.total_scc_count, total);
}

TEST(ReachedTest, NoInputsMeansNothingReached) {
  GeneratorParams params;
  params.r = 4;
  params.p_min = 0;
  params.p_max = 0;
  const auto run = RunReached(RandomSystem(params, 3));
  for (const ReachedResult& r : run.outputs) {
    EXPECT_TRUE(r.rchd.empty());
    EXPECT_FALSE(r.reached);
  }
}

TEST(PrdTest, SinkInflowEqualsMaximumMatching) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const InterconnectedSystem sys = Corpus(seed);
    const GlobalPattern g = AssembleGlobal(sys);
    const int nu = graph::MaxMatching(SystemBipartite(g.A, g.B)).size();
    const int beta = BoundaryVertexCount(sys, false);
    const auto run = RunPrd(sys);
    int inflow = 0;
    for (const PrdResult& p : run.outputs) {
      inflow += p.t_inflow;
      EXPECT_EQ(p.sweeps, run.outputs[0].sweeps);
      EXPECT_LE(p.sweeps, std::max(1, beta * beta)) << "seed " << seed;
    }
    ASSERT_EQ(inflow, nu) << "seed " << seed;
  }
}

TEST(PrdTest, SimplifiedRegionsStillCountMatching) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const InterconnectedSystem sys = Corpus(seed);
    const auto run = RunPrd(sys, {.fig5_simplify = true});
    int inflow = 0;
    for (const PrdResult& p : run.outputs) inflow += p.t_inflow;
    const GlobalPattern g = AssembleGlobal(sys);
    EXPECT_LE(inflow, graph::MaxMatching(SystemBipartite(g.A, g.B)).size());
  }
}

TEST(PrdTest, NeighborsGetDistinctColors) {
  const InterconnectedSystem sys = Corpus(4);
  const auto run = RunPrd(sys);
  for (const Interconnection& c : sys.connections()) {
    EXPECT_NE(run.outputs[c.to].color, run.outputs[c.from].color);
  }
  for (const PrdResult& p : run.outputs) {
    EXPECT_LT(p.color, p.num_colors);
    EXPECT_GT(p.dead_label, p.cross_length);
  }
}

TEST(PrdTest, IsolatedPerfectSubsystemFinishesInOneSweep) {
  const InterconnectedSystem sys = InterconnectedSystem::Create(
      {{0, 2, 1, SparsityPattern(2, 2, {{1, 0}}), SparsityPattern(2, 1, {{0, 0}})}},
      {});
  const auto run = RunPrd(sys);
  EXPECT_EQ(run.outputs[0].t_inflow, 2);
  EXPECT_EQ(run.outputs[0].sweeps, 1);
  EXPECT_EQ(run.stats.messages, 0);
}

TEST(RegionTest, LayoutAndSharedSets) {
  const InterconnectedSystem sys = RingExample();
  const runtime::AgentContext c0 = runtime::MakeContext(sys, 0);
  const runtime::AgentContext c1 = runtime::MakeContext(sys, 1);
  const Region region = BuildRegion(c0, false);
  EXPECT_EQ(region.owner, 0);
  EXPECT_EQ(region.vertex(2), (SharedVertex{0, 0, Side::kLeft}));
  EXPECT_TRUE(region.Owns(2));
  EXPECT_FALSE(region.Owns(kSource));
  EXPECT_GE(region.IndexOf(SharedVertex{1, 2, Side::kRight}), 2);
  EXPECT_EQ(region.IndexOf(SharedVertex{2, 0, Side::kRight}), -1);
  const Region simple = BuildRegion(c0, true);
  EXPECT_LT(simple.num_vertices(), region.num_vertices());

  const SharedSet a = SharedBetween(c0, 1, false);
  const SharedSet b = SharedBetween(c1, 0, false);
  EXPECT_EQ(a.vertices, b.vertices);
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_TRUE(SharedBetween(c0, 1, true).edges.empty());
}

TEST(RegionTest, HandshakeDetectsMismatch) {
  const runtime::AgentContext c0 = runtime::MakeContext(RingExample(), 0);
  const SharedSet shared = SharedBetween(c0, 1, false);
  BoundaryExchange ok;
  for (const SharedVertex& v : shared.vertices) ok.vertices.push_back({v, 0, 0});
  for (const auto& [t, h] : shared.edges) ok.edges.push_back({t, h, 0});
  EXPECT_NO_THROW(CheckHandshake(shared, ok, 0, 1));

  BoundaryExchange extra = ok;
  extra.vertices.push_back({SharedVertex{3, 0, Side::kLeft}, 0, 0});
  EXPECT_THROW(CheckHandshake(shared, extra, 0, 1), ProtocolError);
  BoundaryExchange short_edges = ok;
  ASSERT_FALSE(short_edges.edges.empty());
  short_edges.edges.pop_back();
  try {
    CheckHandshake(shared, short_edges, 0, 1);
    FAIL() << "expected ProtocolError";
  } catch (const ProtocolError& e) {
    EXPECT_NE(std::string(e.what()).find("region construction mismatch"),
              std::string::npos);
  }
}

TEST(ControlledTest, AgreesWithCentralVerdict) {
  int positive = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const InterconnectedSystem sys = Corpus(seed);
    const GlobalPattern g = AssembleGlobal(sys);
    const bool expect = centralized::Verify(g.A, g.B).controllable;
    const auto run = RunControlled(sys);
    for (const ControlledResult& c : run.outputs) {
      ASSERT_EQ(c.verdict, expect) << "seed " << seed;
    }
    positive += expect;
  }
  EXPECT_GT(positive, 20);
}

TEST(ControlledTest, UnreachedAgentVetoes) {
  // Subsystem 1 cannot be reached: it only feeds subsystem 0.
  const SparsityPattern a(1, 1);
  const InterconnectedSystem sys = InterconnectedSystem::Create(
      {{0, 1, 1, a, SparsityPattern(1, 1, {{0, 0}})}, {1, 1, 0, a, SparsityPattern(1, 0)}},
      {{0, 1, SparsityPattern(1, 1, {{0, 0}})}});
  const auto run = RunControlled(sys);
  EXPECT_FALSE(run.outputs[1].initial);
  EXPECT_TRUE(run.outputs[0].reach.reached);
  for (const ControlledResult& c : run.outputs) EXPECT_FALSE(c.verdict);
}

TEST(ControlledTest, RejectsDisconnectedSystems) {
  const SparsityPattern a(1, 1);
  const SparsityPattern b(1, 1, {{0, 0}});
  const InterconnectedSystem apart =
      InterconnectedSystem::Create({{0, 1, 1, a, b}, {1, 1, 1, a, b}}, {});
  EXPECT_THROW(RunControlled(apart), ValidationError);
}

TEST(RingExampleTest, ControllableWithOneInput) {
  const InterconnectedSystem sys = RingExample();
  ASSERT_EQ(sys.total_inputs(), 1);
  const GlobalPattern g = AssembleGlobal(sys);
  EXPECT_TRUE(testing::OracleControllable(g.A, g.B));
  const auto run = RunControlled(sys);
  int iterations = 0;
  for (const ControlledResult& c : run.outputs) {
    EXPECT_TRUE(c.verdict);
    iterations = std::max(iterations, c.reach.last_growth);
  }
  EXPECT_EQ(iterations, 4);
}

TEST(RingExampleTest, SimplifiedDischargeSaturatesSinkInTwoPasses) {
  const InterconnectedSystem sys = RingExample();
  const auto run = RunPrd(sys, {.fig5_simplify = true});
  const int sweeps = run.outputs[0].sweeps;
  EXPECT_EQ(sweeps, 2);
  std::vector<int> totals(sweeps, 0);
  for (const PrdResult& p : run.outputs) {
    ASSERT_EQ(static_cast<int>(p.t_inflow_by_sweep.size()), sweeps);
    for (int k = 0; k < sweeps; ++k) totals[k] += p.t_inflow_by_sweep[k];
  }
  EXPECT_LT(totals[0], sys.total_states());
  EXPECT_EQ(totals[1], sys.total_states());
}

TEST(DeterminismTest, RepeatedRunsProduceIdenticalTraces) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const InterconnectedSystem sys = Corpus(seed);
    const auto a = RunControlled(sys);
    const auto b = RunControlled(sys);
    EXPECT_EQ(a.trace.MessagesJsonl(), b.trace.MessagesJsonl());
    EXPECT_EQ(a.trace.SnapshotsJsonl(), b.trace.SnapshotsJsonl());
  }
}

}  // namespace
}  // namespace structctl::distributed

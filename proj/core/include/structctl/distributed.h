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

// Agent programs for arbitrary interconnected systems: distributed
// input-reachability (Reached), the parallel region discharge preflow (Prd)
// on the unit matching network, and the combined verdict (Controlled).
//
// The global network has a source s, a sink t, and for every subsystem i
// left copies x^{i,L}_k, input vertices u^i_k and right copies x^{i,R}_k.
// Arcs: s -> every left and input vertex, left/input -> right along the
// system bipartite graph, right -> t. All capacities are 1. Subsystem i owns
// its own vertices; its region additionally holds copies of neighbor
// vertices reached by connection matrices.

#ifndef STRUCTCTL_DISTRIBUTED_H_
#define STRUCTCTL_DISTRIBUTED_H_

#include <utility>
#include <vector>

#include "structctl/runtime/network.h"
#include "structctl/runtime/payload.h"
#include "structctl/system.h"

namespace structctl::distributed {

struct ReachedOptions {
  // Outer iterations run after the first N, used to confirm the fixpoint.
  int extra_iterations = 0;
};

struct ReachedResult {
  bool reached = false;          // every own state is input-reached
  std::vector<int> rchd;         // reached local states, ascending
  int scc_count = 0;             // SCCs of D(A_i)
  int total_scc_count = 0;       // N, summed over all subsystems
  int last_growth = 0;           // outer iteration of the last change, 0 if none
  bool grew_after_fixpoint = false;  // changed during the extra iterations
};

runtime::Task<ReachedResult> Reached(runtime::Agent& self,
                                     ReachedOptions options = {});

// Throws ValidationError when the condensed graph is not weakly connected.
runtime::RunResult<ReachedResult> RunReached(const InterconnectedSystem& sys,
                                             ReachedOptions options = {});

inline constexpr int kSource = 0;
inline constexpr int kSink = 1;

struct RegionEdge {
  int tail = 0;
  int head = 0;
};

// Vertex v >= 2 of a region is vertices[v - 2]; 0 and 1 are s and t.
// Own left, input and right vertices come first, in that order, followed by
// boundary copies in ascending SharedVertex order.
struct Region {
  int owner = 0;
  std::vector<runtime::SharedVertex> vertices;
  std::vector<RegionEdge> edges;

  int num_vertices() const { return 2 + static_cast<int>(vertices.size()); }
  const runtime::SharedVertex& vertex(int v) const { return vertices[v - 2]; }
  bool Owns(int v) const { return v >= 2 && vertex(v).subsystem == owner; }
  // -1 when absent.
  int IndexOf(const runtime::SharedVertex& v) const;
};

// With `simplify`, left copies of incoming neighbors and the arcs leaving
// them are left out, so flow cannot be routed back into a feeding region.
Region BuildRegion(const runtime::AgentContext& ctx, bool simplify);

// The vertices and arcs that the regions of ctx.id and j both hold, with
// the vertex owned by one of the two. Both sides compute it from the
// connection matrices between them.
struct SharedSet {
  std::vector<runtime::SharedVertex> vertices;
  std::vector<std::pair<runtime::SharedVertex, runtime::SharedVertex>> edges;
};
SharedSet SharedBetween(const runtime::AgentContext& ctx, int j,
                        bool simplify);

// Throws ProtocolError naming the first difference.
void CheckHandshake(const SharedSet& expected,
                    const runtime::BoundaryExchange& received, int self,
                    int from);

// Number of vertices (other than s and t) held by more than one region.
int BoundaryVertexCount(const InterconnectedSystem& sys, bool simplify);

struct PrdOptions {
  bool fig5_simplify = false;
  // Safety cap on sweeps; 0 picks a bound from the global label range.
  int max_sweeps = 0;
};

struct PrdResult {
  int t_inflow = 0;                  // flow into t from own right vertices
  int sweeps = 0;                    // discharge sweeps until quiescence
  int color = 0;                     // this region's slot in a sweep
  int num_colors = 1;
  int cross_length = 1;              // length of arcs between regions
  int dead_label = 0;                // labels at or above it are inert
  std::vector<int> t_inflow_by_sweep;
};

runtime::Task<PrdResult> Prd(runtime::Agent& self, PrdOptions options = {});

struct ControlledOptions {
  bool fig5_simplify = false;
  int reach_extra_iterations = 0;
  int max_sweeps = 0;
};

struct ControlledResult {
  ReachedResult reach;
  PrdResult prd;
  bool matched = false;   // every own right vertex drains into t
  bool initial = false;   // reached and matched
  bool verdict = false;   // after r consensus rounds
};

runtime::Task<ControlledResult> Controlled(runtime::Agent& self,
                                           ControlledOptions options = {});

// Throws ValidationError when the condensed graph is not weakly connected.
runtime::RunResult<ControlledResult> RunControlled(
    const InterconnectedSystem& sys, ControlledOptions options = {});

}  // namespace structctl::distributed

#endif  // STRUCTCTL_DISTRIBUTED_H_

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

#include "structctl/distributed.h"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "structctl/errors.h"
#include "structctl/graph/scc.h"
#include "structctl/graphs.h"

namespace structctl::distributed {

using nlohmann::json;
using runtime::Agent;
using runtime::AgentContext;
using runtime::As;
using runtime::BoundaryExchange;
using runtime::CountMap;
using runtime::EdgeFlow;
using runtime::IndexSet;
using runtime::Payload;
using runtime::SharedVertex;
using runtime::Side;
using runtime::Task;
using runtime::VertexUpdate;

namespace {

SharedVertex Left(int subsystem, int k) { return {subsystem, k, Side::kLeft}; }
SharedVertex Right(int subsystem, int k) {
  return {subsystem, k, Side::kRight};
}
SharedVertex Input(int subsystem, int k) {
  return {subsystem, k, Side::kInput};
}

using SharedEdge = std::pair<SharedVertex, SharedVertex>;

// Arcs between the states of two subsystems, in both directions, as they
// appear in the global network.
void CrossArcs(const AgentContext& ctx, int j, std::vector<SharedEdge>* into_j,
               std::vector<SharedEdge>* from_j) {
  const int i = ctx.id;
  if (auto it = ctx.outgoing.find(j); it != ctx.outgoing.end()) {
    for (Entry e : it->second.entries()) {
      into_j->push_back({Left(i, e.col), Right(j, e.row)});
    }
  }
  if (auto it = ctx.incoming.find(j); it != ctx.incoming.end()) {
    for (Entry e : it->second.entries()) {
      from_j->push_back({Left(j, e.col), Right(i, e.row)});
    }
  }
}

std::string Describe(const SharedEdge& e) {
  return ToString(e.first) + "->" + ToString(e.second);
}

// SCC-count style gossip: every agent learns one value per subsystem.
Task<CountMap> Gossip(Agent& self, std::int64_t own_value) {
  CountMap known;
  known.counts[self.id()] = own_value;
  for (int k = 0; k < self.r(); ++k) {
    for (int j : self.Neighbors()) self.Send(j, known);
    for (int j : self.Neighbors()) {
      Payload p = co_await self.Recv(j);
      const CountMap theirs = As<CountMap>(std::move(p), j);
      for (const auto& [id, value] : theirs.counts) known.counts[id] = value;
    }
  }
  co_return known;
}

Task<bool> AndConsensus(Agent& self, bool value) {
  for (int k = 0; k < self.r(); ++k) {
    for (int j : self.Neighbors()) self.Send(j, value);
    bool all = value;
    for (int j : self.Neighbors()) {
      Payload p = co_await self.Recv(j);
      all = As<bool>(std::move(p), j) && all;
    }
    value = all;
  }
  co_return value;
}

Task<std::int64_t> MaxConsensus(Agent& self, std::int64_t value) {
  for (int k = 0; k < self.r(); ++k) {
    for (int j : self.Neighbors()) self.Send(j, value);
    std::int64_t best = value;
    for (int j : self.Neighbors()) {
      Payload p = co_await self.Recv(j);
      best = std::max(best, As<std::int64_t>(std::move(p), j));
    }
    value = best;
  }
  co_return value;
}

// Greedy coloring in id order: wait for the colors of lower-id conflicting
// neighbors, take the smallest free color, announce it to higher-id ones.
Task<int> GreedyColor(Agent& self, const std::vector<int>& conflicts) {
  std::set<std::int64_t> taken;
  for (int j : conflicts) {
    if (j > self.id()) continue;
    Payload p = co_await self.Recv(j);
    taken.insert(As<std::int64_t>(std::move(p), j));
  }
  std::int64_t color = 0;
  while (taken.count(color) != 0) ++color;
  for (int j : conflicts) {
    if (j > self.id()) self.Send(j, color);
  }
  co_return static_cast<int>(color);
}

// Push-relabel state of one region. Excess of boundary vertices holds the
// amount pushed into them since the last exchange.
class RegionState {
 public:
  RegionState(const Region& region, int cross_length, int dead_label)
      : region_(region),
        dead_(dead_label),
        length_(region.edges.size(), 1),
        flow_(region.edges.size(), 0),
        excess_(region.num_vertices(), 0),
        label_(region.num_vertices(), 0),
        adjacency_(region.num_vertices()) {
    for (std::size_t e = 0; e < region.edges.size(); ++e) {
      adjacency_[region.edges[e].tail].push_back(static_cast<int>(e));
      adjacency_[region.edges[e].head].push_back(static_cast<int>(e));
      if (region.edges[e].tail >= 2 && region.edges[e].head >= 2) {
        const SharedVertex& tail = region.vertex(region.edges[e].tail);
        const SharedVertex& head = region.vertex(region.edges[e].head);
        edge_index_[{tail, head}] = static_cast<int>(e);
        if (tail.subsystem != head.subsystem) length_[e] = cross_length;
      }
    }
    label_[kSource] = dead_;
    label_[kSink] = 0;
    for (int v = 2; v < region.num_vertices(); ++v) {
      label_[v] = region.vertex(v).side == Side::kRight ? 1 : 2;
    }
    for (std::size_t e = 0; e < region.edges.size(); ++e) {
      if (region.edges[e].tail == kSource) {
        flow_[e] = 1;
        ++excess_[region.edges[e].head];
      }
    }
  }

  int label(int v) const { return label_[v]; }
  std::int64_t excess(int v) const { return excess_[v]; }
  int flow(int e) const { return flow_[e]; }

  bool Active(int v) const {
    return region_.Owns(v) && excess_[v] > 0 && label_[v] < dead_;
  }

  bool AnyActive() const {
    for (int v = 2; v < region_.num_vertices(); ++v) {
      if (Active(v)) return true;
    }
    return false;
  }

  int TInflow() const {
    int total = 0;
    for (std::size_t e = 0; e < region_.edges.size(); ++e) {
      if (region_.edges[e].head == kSink) total += flow_[e];
    }
    return total;
  }

  // Discharges own vertices, highest label first, until none is active.
  // Labels of boundary copies stay fixed.
  void Discharge() {
    for (;;) {
      int best = -1;
      for (int v = 2; v < region_.num_vertices(); ++v) {
        if (Active(v) && (best < 0 || label_[v] > label_[best])) best = v;
      }
      if (best < 0) return;
      DischargeVertex(best);
    }
  }

  // Outgoing exchange for neighbor j over the shared set with j. Clears
  // the pending excess and change marks it reports.
  BoundaryExchange Outgoing(int j, const std::vector<int>& shared_vertices,
                            const std::vector<int>& shared_edges) {
    BoundaryExchange out;
    for (int v : shared_vertices) {
      const SharedVertex& sv = region_.vertex(v);
      if (sv.subsystem == region_.owner) {
        if (dirty_labels_.count(v) != 0) out.vertices.push_back({sv, 0, label_[v]});
      } else if (sv.subsystem == j && excess_[v] > 0) {
        out.vertices.push_back({sv, excess_[v], label_[v]});
        excess_[v] = 0;
      }
    }
    for (int e : shared_edges) {
      if (dirty_edges_.count(e) == 0) continue;
      out.edges.push_back({region_.vertex(region_.edges[e].tail),
                           region_.vertex(region_.edges[e].head), flow_[e]});
    }
    return out;
  }

  void ClearMarks() {
    dirty_labels_.clear();
    dirty_edges_.clear();
  }

  void Apply(const BoundaryExchange& in, int from) {
    for (const VertexUpdate& u : in.vertices) {
      const int v = region_.IndexOf(u.vertex);
      if (v < 0) {
        throw ProtocolError("agent " + std::to_string(from) +
                            " updated vertex " + ToString(u.vertex) +
                            " outside region " + std::to_string(region_.owner));
      }
      if (u.vertex.subsystem == from) {
        label_[v] = u.label;
      } else if (u.vertex.subsystem == region_.owner) {
        if (u.excess_delta < 0) {
          throw ProtocolError("negative excess delta from agent " +
                              std::to_string(from));
        }
        excess_[v] += u.excess_delta;
      } else {
        throw ProtocolError("agent " + std::to_string(from) +
                            " reported third-party vertex " +
                            ToString(u.vertex));
      }
    }
    for (const EdgeFlow& f : in.edges) {
      auto it = edge_index_.find({f.tail, f.head});
      if (it == edge_index_.end()) {
        throw ProtocolError("agent " + std::to_string(from) +
                            " reported unknown arc " +
                            Describe({f.tail, f.head}));
      }
      if (f.flow < 0 || f.flow > 1) {
        throw Error("capacity violation on arc " + Describe({f.tail, f.head}));
      }
      flow_[it->second] = static_cast<int>(f.flow);
    }
  }

  json Snapshot() const {
    json labels = json::object();
    json excess = json::object();
    json pending = json::object();
    json saturated = json::array();
    json sink = json::array();
    for (int v = 2; v < region_.num_vertices(); ++v) {
      const std::string name = ToString(region_.vertex(v));
      if (region_.Owns(v)) {
        labels[name] = label_[v];
        if (excess_[v] != 0) excess[name] = excess_[v];
      } else if (excess_[v] != 0) {
        pending[name] = excess_[v];
      }
    }
    for (std::size_t e = 0; e < region_.edges.size(); ++e) {
      const RegionEdge& edge = region_.edges[e];
      if (flow_[e] == 0 || edge.tail == kSource) continue;
      if (edge.head == kSink) {
        sink.push_back(ToString(region_.vertex(edge.tail)));
      } else {
        saturated.push_back(Describe(
            {region_.vertex(edge.tail), region_.vertex(edge.head)}));
      }
    }
    return {{"labels", labels},     {"excess", excess},
            {"pending", pending},   {"saturated", saturated},
            {"saturated_sink", sink}, {"t_inflow", TInflow()}};
  }

 private:
  void DischargeVertex(int v) {
    while (excess_[v] > 0 && label_[v] < dead_) {
      for (int e : adjacency_[v]) {
        const RegionEdge& edge = region_.edges[e];
        const bool forward = edge.tail == v;
        const int w = forward ? edge.head : edge.tail;
        const int residual = forward ? 1 - flow_[e] : flow_[e];
        if (residual <= 0 || label_[v] != label_[w] + length_[e]) continue;
        flow_[e] += forward ? 1 : -1;
        --excess_[v];
        if (w != kSink && w != kSource) ++excess_[w];
        dirty_edges_.insert(e);
        if (excess_[v] == 0) return;
      }
      int lowest = dead_;
      for (int e : adjacency_[v]) {
        const RegionEdge& edge = region_.edges[e];
        const bool forward = edge.tail == v;
        const int w = forward ? edge.head : edge.tail;
        const int residual = forward ? 1 - flow_[e] : flow_[e];
        if (residual > 0) lowest = std::min(lowest, label_[w] + length_[e]);
      }
      label_[v] = std::min(dead_, std::max(lowest, label_[v] + 1));
      dirty_labels_.insert(v);
    }
  }

  const Region& region_;
  int dead_;
  std::vector<int> length_;
  std::vector<int> flow_;
  std::vector<std::int64_t> excess_;
  std::vector<int> label_;
  std::vector<std::vector<int>> adjacency_;
  std::map<SharedEdge, int> edge_index_;
  std::set<int> dirty_labels_;
  std::set<int> dirty_edges_;
};

}  // namespace

Task<ReachedResult> Reached(Agent& self, ReachedOptions options) {
  ReachedResult result;
  const Subsystem& own = self.own();
  result.scc_count = static_cast<int>(
      graph::StronglyConnectedComponents(StateDigraph(own.A)).components.size());
  Task<CountMap> gossip = Gossip(self, result.scc_count);
  CountMap counts;
  counts = co_await gossip;
  for (const auto& [id, c] : counts.counts) {
    result.total_scc_count += static_cast<int>(c);
  }

  std::vector<char> rchd(own.n, 0);
  for (int x : own.B.NonzeroRows()) rchd[x] = 1;
  self.Snapshot("reached", {{"iteration", 0}, {"rchd", own.B.NonzeroRows()}});

  const int total = result.total_scc_count + options.extra_iterations;
  for (int k = 1; k <= total; ++k) {
    bool grew = false;
    for (int j : self.OutNeighbors()) {
      IndexSet visible;
      for (int l : self.context().outgoing.at(j).NonzeroCols()) {
        if (rchd[l]) visible.items.push_back(l);
      }
      self.Send(j, std::move(visible));
    }
    for (int j : self.InNeighbors()) {
      Payload p = co_await self.Recv(j);
      const IndexSet avail = As<IndexSet>(std::move(p), j);
      std::vector<char> is_avail(self.context().incoming.at(j).cols(), 0);
      for (int l : avail.items) is_avail.at(l) = 1;
      for (Entry e : self.context().incoming.at(j).entries()) {
        if (is_avail[e.col] && !rchd[e.row]) {
          rchd[e.row] = 1;
          grew = true;
        }
      }
    }
    for (int step = 0; step < own.n; ++step) {
      std::vector<char> next = rchd;
      for (Entry e : own.A.entries()) {
        if (rchd[e.col]) next[e.row] = 1;
      }
      if (next == rchd) break;
      rchd = std::move(next);
      grew = true;
    }
    if (grew) {
      if (k <= result.total_scc_count) {
        result.last_growth = k;
      } else {
        result.grew_after_fixpoint = true;
      }
    }
    std::vector<int> now;
    for (int x = 0; x < own.n; ++x) {
      if (rchd[x]) now.push_back(x);
    }
    self.Snapshot("reached", {{"iteration", k}, {"rchd", now}});
  }

  for (int x = 0; x < own.n; ++x) {
    if (rchd[x]) result.rchd.push_back(x);
  }
  result.reached = static_cast<int>(result.rchd.size()) == own.n;
  co_return result;
}

runtime::RunResult<ReachedResult> RunReached(const InterconnectedSystem& sys,
                                             ReachedOptions options) {
  RequireWeaklyConnected(sys);
  runtime::AgentProgram<ReachedResult> program = [options](Agent& self) {
    return Reached(self, options);
  };
  return runtime::Run(sys, program);
}

int Region::IndexOf(const SharedVertex& v) const {
  const int n_own_end = [&] {
    int k = 0;
    while (k < static_cast<int>(vertices.size()) &&
           vertices[k].subsystem == owner) {
      ++k;
    }
    return k;
  }();
  for (int k = 0; k < n_own_end; ++k) {
    if (vertices[k] == v) return k + 2;
  }
  auto it = std::lower_bound(vertices.begin() + n_own_end, vertices.end(), v);
  if (it != vertices.end() && *it == v) {
    return static_cast<int>(it - vertices.begin()) + 2;
  }
  return -1;
}

Region BuildRegion(const AgentContext& ctx, bool simplify) {
  Region region;
  const int i = ctx.id;
  const Subsystem& own = ctx.own;
  region.owner = i;
  for (int k = 0; k < own.n; ++k) region.vertices.push_back(Left(i, k));
  for (int k = 0; k < own.p; ++k) region.vertices.push_back(Input(i, k));
  for (int k = 0; k < own.n; ++k) region.vertices.push_back(Right(i, k));
  const int left0 = 2;
  const int input0 = left0 + own.n;
  const int right0 = input0 + own.p;

  std::vector<SharedEdge> cross;
  for (const auto& [j, E] : ctx.outgoing) {
    std::vector<SharedEdge> into_j, from_j;
    CrossArcs(ctx, j, &into_j, &from_j);
    cross.insert(cross.end(), into_j.begin(), into_j.end());
  }
  if (!simplify) {
    for (const auto& [j, E] : ctx.incoming) {
      std::vector<SharedEdge> into_j, from_j;
      CrossArcs(ctx, j, &into_j, &from_j);
      cross.insert(cross.end(), from_j.begin(), from_j.end());
    }
  }
  std::set<SharedVertex> boundary;
  for (const SharedEdge& e : cross) {
    if (e.first.subsystem != i) boundary.insert(e.first);
    if (e.second.subsystem != i) boundary.insert(e.second);
  }
  region.vertices.insert(region.vertices.end(), boundary.begin(),
                         boundary.end());

  for (int k = 0; k < own.n; ++k) region.edges.push_back({kSource, left0 + k});
  for (int k = 0; k < own.p; ++k) region.edges.push_back({kSource, input0 + k});
  for (Entry e : own.A.entries()) {
    region.edges.push_back({left0 + e.col, right0 + e.row});
  }
  for (Entry e : own.B.entries()) {
    region.edges.push_back({input0 + e.col, right0 + e.row});
  }
  for (const SharedEdge& e : cross) {
    region.edges.push_back({region.IndexOf(e.first), region.IndexOf(e.second)});
  }
  for (int k = 0; k < own.n; ++k) region.edges.push_back({right0 + k, kSink});
  return region;
}

SharedSet SharedBetween(const AgentContext& ctx, int j, bool simplify) {
  std::vector<SharedEdge> into_j, from_j;
  CrossArcs(ctx, j, &into_j, &from_j);
  SharedSet shared;
  std::set<SharedVertex> vertices;
  for (const auto* list : {&into_j, &from_j}) {
    for (const SharedEdge& e : *list) {
      if (!simplify) vertices.insert(e.first);
      vertices.insert(e.second);
      if (!simplify) shared.edges.push_back(e);
    }
  }
  shared.vertices.assign(vertices.begin(), vertices.end());
  std::sort(shared.edges.begin(), shared.edges.end());
  return shared;
}

void CheckHandshake(const SharedSet& expected, const BoundaryExchange& received,
                    int self, int from) {
  const std::string who = "region construction mismatch between agents " +
                          std::to_string(self) + " and " +
                          std::to_string(from) + ": ";
  std::vector<SharedVertex> vertices;
  for (const VertexUpdate& u : received.vertices) vertices.push_back(u.vertex);
  std::vector<SharedEdge> edges;
  for (const EdgeFlow& f : received.edges) edges.push_back({f.tail, f.head});
  for (std::size_t k = 0; k < std::max(vertices.size(), expected.vertices.size());
       ++k) {
    if (k >= vertices.size()) {
      throw ProtocolError(who + "missing vertex " +
                          ToString(expected.vertices[k]));
    }
    if (k >= expected.vertices.size() || vertices[k] != expected.vertices[k]) {
      throw ProtocolError(who + "unexpected vertex " + ToString(vertices[k]));
    }
  }
  for (std::size_t k = 0; k < std::max(edges.size(), expected.edges.size());
       ++k) {
    if (k >= edges.size()) {
      throw ProtocolError(who + "missing arc " + Describe(expected.edges[k]));
    }
    if (k >= expected.edges.size() || edges[k] != expected.edges[k]) {
      throw ProtocolError(who + "unexpected arc " + Describe(edges[k]));
    }
  }
}

int BoundaryVertexCount(const InterconnectedSystem& sys, bool simplify) {
  std::map<SharedVertex, int> holders;
  for (int i = 0; i < sys.num_subsystems(); ++i) {
    const Region region = BuildRegion(runtime::MakeContext(sys, i), simplify);
    for (const SharedVertex& v : region.vertices) ++holders[v];
  }
  int count = 0;
  for (const auto& [v, c] : holders) {
    if (c > 1) ++count;
  }
  return count;
}

Task<PrdResult> Prd(Agent& self, PrdOptions options) {
  PrdResult result;
  const bool simplify = options.fig5_simplify;
  const Region region = BuildRegion(self.context(), simplify);

  std::map<int, SharedSet> expected;
  std::set<SharedVertex> own_shared;
  for (int j : self.Neighbors()) {
    expected[j] = SharedBetween(self.context(), j, simplify);
    for (const SharedVertex& v : expected[j].vertices) {
      if (v.subsystem == self.id()) own_shared.insert(v);
    }
  }

  // Arcs between regions have length V, the number of vertices of the
  // whole network, and every other arc length 1. A simple residual path
  // then has length below V * (beta + 1), which is the dead label.
  Task<CountMap> size_gossip = Gossip(self, 2 * self.own().n + self.own().p);
  CountMap sizes;
  sizes = co_await size_gossip;
  Task<CountMap> shared_gossip =
      Gossip(self, static_cast<std::int64_t>(own_shared.size()));
  CountMap shared_counts;
  shared_counts = co_await shared_gossip;
  std::int64_t total_vertices = 2;
  for (const auto& [id, size] : sizes.counts) total_vertices += size;
  std::int64_t beta = 0;
  for (const auto& [id, count] : shared_counts.counts) beta += count;
  result.cross_length = static_cast<int>(total_vertices);
  result.dead_label = static_cast<int>(total_vertices * (beta + 1));
  const int max_sweeps =
      options.max_sweeps > 0
          ? options.max_sweeps
          : static_cast<int>(std::min<std::int64_t>(
                std::numeric_limits<int>::max(),
                total_vertices * result.dead_label + 16));

  // Shared identities are checked with every neighbor before any flow moves.
  std::map<int, std::vector<int>> shared_vertices;
  std::map<int, std::vector<int>> shared_edges;
  RegionState state(region, result.cross_length, result.dead_label);
  for (int j : self.Neighbors()) {
    const SharedSet& set = expected[j];
    BoundaryExchange hello;
    for (const SharedVertex& v : set.vertices) {
      const int idx = region.IndexOf(v);
      shared_vertices[j].push_back(idx);
      hello.vertices.push_back({v, 0, state.label(idx)});
    }
    for (const SharedEdge& e : set.edges) {
      for (std::size_t k = 0; k < region.edges.size(); ++k) {
        const RegionEdge& edge = region.edges[k];
        if (edge.tail >= 2 && edge.head >= 2 &&
            region.vertex(edge.tail) == e.first &&
            region.vertex(edge.head) == e.second) {
          shared_edges[j].push_back(static_cast<int>(k));
        }
      }
      hello.edges.push_back({e.first, e.second, 0});
    }
    self.Send(j, std::move(hello));
  }
  for (int j : self.Neighbors()) {
    Payload p = co_await self.Recv(j);
    CheckHandshake(expected[j], As<BoundaryExchange>(std::move(p), j),
                   self.id(), j);
  }

  // Regions sharing arcs never discharge in the same slot.
  std::vector<int> conflicts;
  if (!simplify) conflicts = self.Neighbors();
  Task<int> coloring = GreedyColor(self, conflicts);
  result.color = co_await coloring;
  Task<std::int64_t> max_color = MaxConsensus(self, result.color);
  result.num_colors = static_cast<int>(co_await max_color) + 1;

  json init = state.Snapshot();
  init["sweep"] = 0;
  init["phase"] = "init";
  init["color"] = result.color;
  self.Snapshot("prd", std::move(init));

  for (;;) {
    if (result.sweeps >= max_sweeps) {
      throw Error("region discharge did not quiesce within " +
                  std::to_string(max_sweeps) + " sweeps");
    }
    ++result.sweeps;
    for (int c = 0; c < result.num_colors; ++c) {
      if (c == result.color) {
        state.Discharge();
        json snap = state.Snapshot();
        snap["sweep"] = result.sweeps;
        snap["phase"] = "discharge";
        snap["color"] = c;
        self.Snapshot("prd", std::move(snap));
      }
      for (int j : self.Neighbors()) {
        self.Send(j, state.Outgoing(j, shared_vertices[j], shared_edges[j]));
      }
      state.ClearMarks();
      for (int j : self.Neighbors()) {
        Payload p = co_await self.Recv(j);
        state.Apply(As<BoundaryExchange>(std::move(p), j), j);
      }
    }
    result.t_inflow_by_sweep.push_back(state.TInflow());
    json snap = state.Snapshot();
    snap["sweep"] = result.sweeps;
    snap["phase"] = "exchange";
    snap["color"] = result.color;
    self.Snapshot("prd", std::move(snap));

    Task<bool> quiet = AndConsensus(self, !state.AnyActive());
    if (co_await quiet) break;
  }
  result.t_inflow = state.TInflow();
  co_return result;
}

Task<ControlledResult> Controlled(Agent& self, ControlledOptions options) {
  ControlledResult result;
  Task<ReachedResult> reach =
      Reached(self, {.extra_iterations = options.reach_extra_iterations});
  result.reach = co_await reach;
  Task<PrdResult> prd = Prd(self, {.fig5_simplify = options.fig5_simplify,
                                   .max_sweeps = options.max_sweeps});
  result.prd = co_await prd;
  result.matched = result.prd.t_inflow == self.own().n;
  result.initial = result.reach.reached && result.matched;
  self.Snapshot("controlled", {{"rchd", result.reach.reached},
                               {"mchd", result.matched},
                               {"ctld", result.initial}});
  Task<bool> consensus = AndConsensus(self, result.initial);
  result.verdict = co_await consensus;
  co_return result;
}

runtime::RunResult<ControlledResult> RunControlled(
    const InterconnectedSystem& sys, ControlledOptions options) {
  RequireWeaklyConnected(sys);
  runtime::AgentProgram<ControlledResult> program = [options](Agent& self) {
    return Controlled(self, options);
  };
  return runtime::Run(sys, program);
}

}  // namespace structctl::distributed

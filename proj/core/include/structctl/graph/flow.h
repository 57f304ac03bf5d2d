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

#ifndef STRUCTCTL_GRAPH_FLOW_H_
#define STRUCTCTL_GRAPH_FLOW_H_

#include <cstdint>
#include <string>
#include <vector>

#include "structctl/graph/matching.h"

namespace structctl::graph {

// A capacitated network with a distinguished source and sink, carrying a
// preflow, per-vertex excess and per-vertex labels (heights).
class FlowNetwork {
 public:
  FlowNetwork() = default;
  FlowNetwork(int num_vertices, int source, int sink);

  // Returns the arc index. Capacities must be non-negative.
  int AddArc(int tail, int head, std::int64_t capacity);

  int num_vertices() const { return static_cast<int>(excess_.size()); }
  int num_arcs() const { return static_cast<int>(tail_.size()); }
  int source() const { return source_; }
  int sink() const { return sink_; }

  int Tail(int arc) const { return tail_[arc]; }
  int Head(int arc) const { return head_[arc]; }
  std::int64_t Capacity(int arc) const { return capacity_[arc]; }
  std::int64_t Flow(int arc) const { return flow_[arc]; }
  std::int64_t Excess(int v) const { return excess_[v]; }
  int Label(int v) const { return label_[v]; }

  // Excess accumulated at the sink.
  std::int64_t Value() const { return excess_[sink_]; }

  // Empty when 0 <= flow <= capacity on every arc and excess equals
  // inflow - outflow and is non-negative away from the source; otherwise a
  // description of the first violation.
  std::string PreflowViolation() const;

 private:
  friend FlowNetwork MaxPreflow(FlowNetwork net);

  int source_ = 0;
  int sink_ = 0;
  std::vector<int> tail_;
  std::vector<int> head_;
  std::vector<std::int64_t> capacity_;
  std::vector<std::int64_t> flow_;
  std::vector<std::int64_t> excess_;
  std::vector<int> label_;
};

// Maximum preflow by highest-label push-relabel with the gap heuristic.
// Source arcs are saturated up front; vertices whose label reaches
// num_vertices() are abandoned, so stranded excess is never sent back to the
// source. On return Value() is the maximum flow value. Existing flow on the
// input is discarded.
FlowNetwork MaxPreflow(FlowNetwork net);

// Unit network of a bipartite graph: source 0, left vertex l at 1 + l, right
// vertex r at 1 + left_size + r, sink last. Arcs: source to every left
// vertex, every edge left to right, every right vertex to the sink.
FlowNetwork UnitMatchingNetwork(const BipartiteGraph& b);

}  // namespace structctl::graph

#endif  // STRUCTCTL_GRAPH_FLOW_H_

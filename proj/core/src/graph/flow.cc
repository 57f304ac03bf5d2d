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

#include "structctl/graph/flow.h"

#include <algorithm>
#include <deque>
#include <sstream>

#include "structctl/errors.h"

namespace structctl::graph {

FlowNetwork::FlowNetwork(int num_vertices, int source, int sink)
    : source_(source),
      sink_(sink),
      excess_(num_vertices, 0),
      label_(num_vertices, 0) {
  if (num_vertices < 2 || source < 0 || sink < 0 || source >= num_vertices ||
      sink >= num_vertices || source == sink) {
    throw DimensionError("flow network needs distinct source and sink");
  }
}

int FlowNetwork::AddArc(int tail, int head, std::int64_t capacity) {
  if (tail < 0 || head < 0 || tail >= num_vertices() ||
      head >= num_vertices()) {
    throw DimensionError("arc endpoint out of range");
  }
  if (capacity < 0) throw DimensionError("negative capacity");
  tail_.push_back(tail);
  head_.push_back(head);
  capacity_.push_back(capacity);
  flow_.push_back(0);
  return num_arcs() - 1;
}

std::string FlowNetwork::PreflowViolation() const {
  std::vector<std::int64_t> balance(num_vertices(), 0);
  for (int a = 0; a < num_arcs(); ++a) {
    if (flow_[a] < 0 || flow_[a] > capacity_[a]) {
      std::ostringstream os;
      os << "arc " << a << " carries " << flow_[a] << " of capacity "
         << capacity_[a];
      return os.str();
    }
    balance[tail_[a]] -= flow_[a];
    balance[head_[a]] += flow_[a];
  }
  for (int v = 0; v < num_vertices(); ++v) {
    if (v == source_) continue;
    if (balance[v] != excess_[v] || excess_[v] < 0) {
      std::ostringstream os;
      os << "vertex " << v << " has excess " << excess_[v] << " but balance "
         << balance[v];
      return os.str();
    }
  }
  return "";
}

namespace {

// Residual arc e refers to network arc e / 2, forward when e is even.
struct Residual {
  std::vector<int> begin;
  std::vector<int> arcs;
};

Residual BuildResidual(const FlowNetwork& net) {
  const int n = net.num_vertices();
  Residual res;
  res.begin.assign(n + 1, 0);
  for (int a = 0; a < net.num_arcs(); ++a) {
    ++res.begin[net.Tail(a) + 1];
    ++res.begin[net.Head(a) + 1];
  }
  for (int v = 0; v < n; ++v) res.begin[v + 1] += res.begin[v];
  res.arcs.resize(res.begin[n]);
  std::vector<int> fill(res.begin.begin(), res.begin.end() - 1);
  for (int a = 0; a < net.num_arcs(); ++a) {
    res.arcs[fill[net.Tail(a)]++] = 2 * a;
    res.arcs[fill[net.Head(a)]++] = 2 * a + 1;
  }
  return res;
}

}  // namespace

FlowNetwork MaxPreflow(FlowNetwork net) {
  const int n = net.num_vertices();
  const int s = net.source_;
  const int t = net.sink_;
  auto& flow = net.flow_;
  auto& excess = net.excess_;
  auto& label = net.label_;
  std::fill(flow.begin(), flow.end(), 0);
  std::fill(excess.begin(), excess.end(), 0);

  const Residual res = BuildResidual(net);
  auto to = [&](int e) { return e & 1 ? net.tail_[e >> 1] : net.head_[e >> 1]; };
  auto capacity = [&](int e) {
    const int a = e >> 1;
    return e & 1 ? flow[a] : net.capacity_[a] - flow[a];
  };
  auto push = [&](int v, int e, std::int64_t delta) {
    const int a = e >> 1;
    flow[a] += e & 1 ? -delta : delta;
    excess[v] -= delta;
    excess[to(e)] += delta;
  };

  for (int i = res.begin[s]; i < res.begin[s + 1]; ++i) {
    const int e = res.arcs[i];
    if (!(e & 1) && to(e) != s) push(s, e, capacity(e));
  }

  // Exact distances to the sink in the residual graph.
  std::fill(label.begin(), label.end(), n);
  label[t] = 0;
  std::deque<int> queue = {t};
  while (!queue.empty()) {
    const int w = queue.front();
    queue.pop_front();
    for (int i = res.begin[w]; i < res.begin[w + 1]; ++i) {
      const int back = res.arcs[i] ^ 1;
      const int v = to(res.arcs[i]);
      if (v == s || label[v] != n || capacity(back) <= 0) continue;
      label[v] = label[w] + 1;
      queue.push_back(v);
    }
  }
  label[s] = n;

  std::vector<std::vector<int>> active(n);
  std::vector<int> count(n + 1, 0);
  for (int v = 0; v < n; ++v) ++count[label[v]];
  int highest = -1;
  auto activate = [&](int v) {
    if (v == s || v == t || label[v] >= n) return;
    active[label[v]].push_back(v);
    highest = std::max(highest, label[v]);
  };
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) activate(v);
  }

  std::vector<int> current(res.begin.begin(), res.begin.end() - 1);
  while (highest >= 0) {
    if (active[highest].empty()) {
      --highest;
      continue;
    }
    const int v = active[highest].back();
    active[highest].pop_back();
    // Stale entries come from gap relabels and repeated activations.
    if (excess[v] == 0 || label[v] != highest) continue;

    while (excess[v] > 0 && label[v] < n) {
      if (current[v] == res.begin[v + 1]) {
        const int old = label[v];
        int next = n;
        for (int i = res.begin[v]; i < res.begin[v + 1]; ++i) {
          const int e = res.arcs[i];
          if (capacity(e) > 0) next = std::min(next, label[to(e)] + 1);
        }
        next = std::min(next, n);
        --count[old];
        label[v] = next;
        ++count[next];
        current[v] = res.begin[v];
        if (count[old] == 0 && old < n) {
          for (int w = 0; w < n; ++w) {
            if (w != s && label[w] > old && label[w] < n) {
              --count[label[w]];
              label[w] = n;
              ++count[n];
            }
          }
        }
        continue;
      }
      const int e = res.arcs[current[v]];
      const int w = to(e);
      if (capacity(e) > 0 && label[v] == label[w] + 1) {
        const bool was_idle = excess[w] == 0;
        push(v, e, std::min(excess[v], capacity(e)));
        if (was_idle) activate(w);
      } else {
        ++current[v];
      }
    }
    if (excess[v] > 0) activate(v);
  }
  return net;
}

FlowNetwork UnitMatchingNetwork(const BipartiteGraph& b) {
  const int left = b.left_size();
  const int right = b.right_size();
  const int sink = left + right + 1;
  FlowNetwork net(left + right + 2, 0, sink);
  for (int l = 0; l < left; ++l) net.AddArc(0, 1 + l, 1);
  for (int l = 0; l < left; ++l) {
    for (int r : b.RightNeighbors(l)) net.AddArc(1 + l, 1 + left + r, 1);
  }
  for (int r = 0; r < right; ++r) net.AddArc(1 + left + r, sink, 1);
  return net;
}

}  // namespace structctl::graph

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

#include "structctl/system.h"

#include <algorithm>
#include <string>

#include "structctl/errors.h"

namespace structctl {

namespace {

std::string Dims(const SparsityPattern& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

InterconnectedSystem InterconnectedSystem::Create(
    std::vector<Subsystem> subsystems,
    std::vector<Interconnection> connections) {
  const int r = static_cast<int>(subsystems.size());
  if (r == 0) throw ValidationError("system has no subsystems");
  std::sort(subsystems.begin(), subsystems.end(),
            [](const Subsystem& a, const Subsystem& b) { return a.id < b.id; });
  for (int i = 0; i < r; ++i) {
    const Subsystem& s = subsystems[i];
    if (s.id != i) {
      throw ValidationError("subsystem ids must be exactly 0.." +
                            std::to_string(r - 1) + "; found id " +
                            std::to_string(s.id));
    }
    const std::string name = "subsystem " + std::to_string(i);
    if (s.n <= 0) throw DimensionError(name + ": n must be positive");
    if (s.p < 0) throw DimensionError(name + ": p must be non-negative");
    if (s.A.rows() != s.n || s.A.cols() != s.n) {
      throw DimensionError(name + ": A is " + Dims(s.A) + ", expected " +
                           std::to_string(s.n) + "x" + std::to_string(s.n));
    }
    if (s.B.rows() != s.n || s.B.cols() != s.p) {
      throw DimensionError(name + ": B is " + Dims(s.B) + ", expected " +
                           std::to_string(s.n) + "x" + std::to_string(s.p));
    }
  }

  std::sort(connections.begin(), connections.end(),
            [](const Interconnection& a, const Interconnection& b) {
              return std::pair(a.to, a.from) < std::pair(b.to, b.from);
            });
  for (std::size_t k = 0; k < connections.size(); ++k) {
    const Interconnection& c = connections[k];
    const std::string name = "connection " + std::to_string(c.from) + "->" +
                             std::to_string(c.to);
    if (c.to < 0 || c.to >= r || c.from < 0 || c.from >= r) {
      throw ValidationError(name + ": unknown subsystem id");
    }
    if (c.to == c.from) throw ValidationError(name + ": self connection");
    if (k > 0 && connections[k - 1].to == c.to &&
        connections[k - 1].from == c.from) {
      throw ValidationError(name + ": duplicate connection");
    }
    if (c.E.empty()) throw ValidationError(name + ": E has no nonzeros");
    const int rows = subsystems[c.to].n;
    const int cols = subsystems[c.from].n;
    if (c.E.rows() != rows || c.E.cols() != cols) {
      throw DimensionError(name + ": E is " + Dims(c.E) + ", expected " +
                           std::to_string(rows) + "x" + std::to_string(cols));
    }
  }

  InterconnectedSystem sys;
  sys.subsystems_ = std::move(subsystems);
  sys.connections_ = std::move(connections);
  sys.in_.assign(r, {});
  sys.out_.assign(r, {});
  for (const Interconnection& c : sys.connections_) {
    sys.in_[c.to].push_back(c.from);
    sys.out_[c.from].push_back(c.to);
  }
  for (auto& list : sys.out_) std::sort(list.begin(), list.end());
  for (const Subsystem& s : sys.subsystems_) {
    sys.state_offset_.push_back(sys.state_offset_.back() + s.n);
    sys.input_offset_.push_back(sys.input_offset_.back() + s.p);
  }
  return sys;
}

const Interconnection* InterconnectedSystem::FindConnection(int to,
                                                            int from) const {
  auto it = std::lower_bound(
      connections_.begin(), connections_.end(), std::pair(to, from),
      [](const Interconnection& c, const std::pair<int, int>& key) {
        return std::pair(c.to, c.from) < key;
      });
  if (it == connections_.end() || it->to != to || it->from != from) {
    return nullptr;
  }
  return &*it;
}

std::vector<int> InterconnectedSystem::Neighbors(int id) const {
  std::vector<int> all(in_[id].begin(), in_[id].end());
  all.insert(all.end(), out_[id].begin(), out_[id].end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

int InterconnectedSystem::StateOwner(int x) const {
  auto it = std::upper_bound(state_offset_.begin(), state_offset_.end(), x);
  return static_cast<int>(it - state_offset_.begin()) - 1;
}

GlobalPattern AssembleGlobal(const InterconnectedSystem& sys) {
  std::vector<Entry> a;
  std::vector<Entry> b;
  for (const Subsystem& s : sys.subsystems()) {
    const int x0 = sys.state_offset(s.id);
    const int u0 = sys.input_offset(s.id);
    for (Entry e : s.A.entries()) a.push_back({x0 + e.row, x0 + e.col});
    for (Entry e : s.B.entries()) b.push_back({x0 + e.row, u0 + e.col});
  }
  for (const Interconnection& c : sys.connections()) {
    const int row0 = sys.state_offset(c.to);
    const int col0 = sys.state_offset(c.from);
    for (Entry e : c.E.entries()) a.push_back({row0 + e.row, col0 + e.col});
  }
  const int n = sys.total_states();
  return {SparsityPattern(n, n, std::move(a)),
          SparsityPattern(n, sys.total_inputs(), std::move(b))};
}

}  // namespace structctl

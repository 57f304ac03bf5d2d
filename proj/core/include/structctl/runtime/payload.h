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

#ifndef STRUCTCTL_RUNTIME_PAYLOAD_H_
#define STRUCTCTL_RUNTIME_PAYLOAD_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "structctl/errors.h"
#include "structctl/sparsity_pattern.h"

namespace structctl::runtime {

// Which copy of a vertex a flow region refers to.
enum class Side { kLeft, kRight, kInput };

// Global identity of a flow-network vertex: (subsystem, local index, side).
struct SharedVertex {
  int subsystem = 0;
  int local = 0;
  Side side = Side::kLeft;

  friend auto operator<=>(const SharedVertex&, const SharedVertex&) = default;
};
std::string ToString(const SharedVertex& v);

struct VertexUpdate {
  SharedVertex vertex;
  std::int64_t excess_delta = 0;
  int label = 0;

  friend bool operator==(const VertexUpdate&, const VertexUpdate&) = default;
};

struct EdgeFlow {
  SharedVertex tail;
  SharedVertex head;
  std::int64_t flow = 0;

  friend bool operator==(const EdgeFlow&, const EdgeFlow&) = default;
};

// Flow state a region hands to a neighbor after a discharge: excess pushed
// into the neighbor's vertices, labels of the sender's own vertices and the
// current flow on edges both regions contain.
struct BoundaryExchange {
  std::vector<VertexUpdate> vertices;
  std::vector<EdgeFlow> edges;

  friend bool operator==(const BoundaryExchange&,
                         const BoundaryExchange&) = default;
};

struct IndexSet {
  std::vector<int> items;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

struct CountMap {
  std::map<int, std::int64_t> counts;

  friend bool operator==(const CountMap&, const CountMap&) = default;
};

using Payload = std::variant<bool, std::int64_t, SparsityPattern, IndexSet,
                             CountMap, BoundaryExchange>;

// "bool", "int", "pattern", "index_set", "count_map", "boundary".
const char* PayloadTypeName(const Payload& p);

// Number of scalar items carried (entries, indices, map pairs, ...).
std::size_t PayloadSize(const Payload& p);

nlohmann::json PayloadToJson(const Payload& p);
Payload PayloadFromJson(const nlohmann::json& j);

template <typename T>
const char* TypeName();
template <>
const char* TypeName<bool>();
template <>
const char* TypeName<std::int64_t>();
template <>
const char* TypeName<SparsityPattern>();
template <>
const char* TypeName<IndexSet>();
template <>
const char* TypeName<CountMap>();
template <>
const char* TypeName<BoundaryExchange>();

// Extracts a T from a received payload; throws ProtocolError naming the
// sender when the variant holds something else.
template <typename T>
T As(Payload p, int from) {
  if (T* value = std::get_if<T>(&p)) return std::move(*value);
  throw ProtocolError("payload from agent " + std::to_string(from) +
                      " is " + PayloadTypeName(p) + ", expected " +
                      TypeName<T>());
}

}  // namespace structctl::runtime

#endif  // STRUCTCTL_RUNTIME_PAYLOAD_H_

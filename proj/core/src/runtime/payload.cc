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

#include "structctl/runtime/payload.h"

#include <type_traits>

namespace structctl::runtime {

using nlohmann::json;

namespace {

const char* SideName(Side s) {
  switch (s) {
    case Side::kLeft:
      return "L";
    case Side::kRight:
      return "R";
    case Side::kInput:
      return "U";
  }
  return "?";
}

Side SideFromName(const std::string& s) {
  if (s == "L") return Side::kLeft;
  if (s == "R") return Side::kRight;
  if (s == "U") return Side::kInput;
  throw ParseError("side", "unknown vertex side '" + s + "'");
}

json VertexToJson(const SharedVertex& v) {
  return json::array({v.subsystem, v.local, SideName(v.side)});
}

SharedVertex VertexFromJson(const json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError("vertex", "expected [subsystem, local, side]");
  }
  return {j[0].get<int>(), j[1].get<int>(),
          SideFromName(j[2].get<std::string>())};
}

}  // namespace

std::string ToString(const SharedVertex& v) {
  return std::string(v.side == Side::kInput ? "u" : "x") +
         std::to_string(v.local) + "@" + std::to_string(v.subsystem) +
         (v.side == Side::kInput ? "" : SideName(v.side));
}

template <>
const char* TypeName<bool>() {
  return "bool";
}
template <>
const char* TypeName<std::int64_t>() {
  return "int";
}
template <>
const char* TypeName<SparsityPattern>() {
  return "pattern";
}
template <>
const char* TypeName<IndexSet>() {
  return "index_set";
}
template <>
const char* TypeName<CountMap>() {
  return "count_map";
}
template <>
const char* TypeName<BoundaryExchange>() {
  return "boundary";
}

const char* PayloadTypeName(const Payload& p) {
  return std::visit(
      [](const auto& v) { return TypeName<std::decay_t<decltype(v)>>(); }, p);
}

std::size_t PayloadSize(const Payload& p) {
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SparsityPattern>) {
          return v.nnz();
        } else if constexpr (std::is_same_v<T, IndexSet>) {
          return v.items.size();
        } else if constexpr (std::is_same_v<T, CountMap>) {
          return v.counts.size();
        } else if constexpr (std::is_same_v<T, BoundaryExchange>) {
          return v.vertices.size() + v.edges.size();
        } else {
          return 1;
        }
      },
      p);
}

json PayloadToJson(const Payload& p) {
  json out = json::object();
  out["type"] = PayloadTypeName(p);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SparsityPattern>) {
          json entries = json::array();
          for (Entry e : v.entries()) entries.push_back({e.row, e.col});
          out["rows"] = v.rows();
          out["cols"] = v.cols();
          out["entries"] = std::move(entries);
        } else if constexpr (std::is_same_v<T, IndexSet>) {
          out["value"] = v.items;
        } else if constexpr (std::is_same_v<T, CountMap>) {
          json pairs = json::array();
          for (const auto& [k, c] : v.counts) pairs.push_back({k, c});
          out["value"] = std::move(pairs);
        } else if constexpr (std::is_same_v<T, BoundaryExchange>) {
          json vertices = json::array();
          for (const VertexUpdate& u : v.vertices) {
            vertices.push_back({{"vertex", VertexToJson(u.vertex)},
                                {"excess", u.excess_delta},
                                {"label", u.label}});
          }
          json edges = json::array();
          for (const EdgeFlow& e : v.edges) {
            edges.push_back({{"tail", VertexToJson(e.tail)},
                             {"head", VertexToJson(e.head)},
                             {"flow", e.flow}});
          }
          out["vertices"] = std::move(vertices);
          out["edges"] = std::move(edges);
        } else {
          out["value"] = v;
        }
      },
      p);
  return out;
}

Payload PayloadFromJson(const json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "bool") return j.at("value").get<bool>();
    if (type == "int") return j.at("value").get<std::int64_t>();
    if (type == "pattern") {
      std::vector<Entry> entries;
      for (const json& e : j.at("entries")) {
        entries.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
      }
      return SparsityPattern(j.at("rows").get<int>(), j.at("cols").get<int>(),
                             std::move(entries));
    }
    if (type == "index_set") {
      return IndexSet{j.at("value").get<std::vector<int>>()};
    }
    if (type == "count_map") {
      CountMap m;
      for (const json& e : j.at("value")) {
        m.counts[e.at(0).get<int>()] = e.at(1).get<std::int64_t>();
      }
      return m;
    }
    if (type == "boundary") {
      BoundaryExchange b;
      for (const json& u : j.at("vertices")) {
        b.vertices.push_back({VertexFromJson(u.at("vertex")),
                              u.at("excess").get<std::int64_t>(),
                              u.at("label").get<int>()});
      }
      for (const json& e : j.at("edges")) {
        b.edges.push_back({VertexFromJson(e.at("tail")),
                           VertexFromJson(e.at("head")),
                           e.at("flow").get<std::int64_t>()});
      }
      return b;
    }
    throw ParseError("payload.type", "unknown payload type '" + type + "'");
  } catch (const json::exception& e) {
    throw ParseError("payload", e.what());
  }
}

}  // namespace structctl::runtime

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

#include "structctl/io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "structctl/errors.h"

namespace structctl {

using nlohmann::json;

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path, e.what());
  }
}

void WriteJsonFile(const json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << doc.dump(2) << "\n";
  if (!out) throw Error("write failed for " + path);
}

void CheckKeys(const json& obj, std::initializer_list<const char*> required,
               std::initializer_list<const char*> allowed,
               const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return key == k; });
    if (!known) throw ParseError(where + "." + key, "unknown key");
  }
  for (const char* key : required) {
    if (!obj.contains(key)) {
      throw ParseError(where + "." + key, "missing required key");
    }
  }
}

int IntField(const json& obj, const char* key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw ParseError(where + "." + key, "expected an integer");
  }
  return v.get<int>();
}

SparsityPattern PatternFromJson(const json& j, int rows, int cols,
                                const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of [row, col]");
  std::vector<Entry> entries;
  entries.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    const json& pair = j[k];
    if (!pair.is_array() || pair.size() != 2 ||
        !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      throw ParseError(at, "expected a [row, col] integer pair");
    }
    const int r = pair[0].get<int>();
    const int c = pair[1].get<int>();
    if (r < 0 || r >= rows || c < 0 || c >= cols) {
      std::ostringstream os;
      os << "entry [" << r << ", " << c << "] outside " << rows << "x" << cols;
      throw ParseError(at, os.str());
    }
    entries.push_back({r, c});
  }
  return SparsityPattern(rows, cols, std::move(entries));
}

json PatternToJson(const SparsityPattern& m) {
  json out = json::array();
  for (Entry e : m.entries()) out.push_back({e.row, e.col});
  return out;
}

InterconnectedSystem SystemFromJson(const json& doc) {
  CheckKeys(doc, {"subsystems"}, {"subsystems", "connections"}, "$");
  const json& subs = doc.at("subsystems");
  if (!subs.is_array()) throw ParseError("$.subsystems", "expected an array");

  std::vector<Subsystem> subsystems;
  std::vector<int> sizes;
  for (std::size_t k = 0; k < subs.size(); ++k) {
    const std::string at = "$.subsystems[" + std::to_string(k) + "]";
    const json& s = subs[k];
    CheckKeys(s, {"id", "n", "p", "A", "B"}, {"id", "n", "p", "A", "B"}, at);
    Subsystem sub;
    sub.id = IntField(s, "id", at);
    sub.n = IntField(s, "n", at);
    sub.p = IntField(s, "p", at);
    if (sub.n <= 0) throw ParseError(at + ".n", "must be positive");
    if (sub.p < 0) throw ParseError(at + ".p", "must be non-negative");
    sub.A = PatternFromJson(s.at("A"), sub.n, sub.n, at + ".A");
    sub.B = PatternFromJson(s.at("B"), sub.n, sub.p, at + ".B");
    subsystems.push_back(std::move(sub));
  }
  auto size_of = [&](int id) -> int {
    for (const Subsystem& s : subsystems) {
      if (s.id == id) return s.n;
    }
    return -1;
  };

  std::vector<Interconnection> connections;
  if (doc.contains("connections")) {
    const json& conns = doc.at("connections");
    if (!conns.is_array()) {
      throw ParseError("$.connections", "expected an array");
    }
    for (std::size_t k = 0; k < conns.size(); ++k) {
      const std::string at = "$.connections[" + std::to_string(k) + "]";
      const json& c = conns[k];
      CheckKeys(c, {"to", "from", "E"}, {"to", "from", "E"}, at);
      Interconnection conn;
      conn.to = IntField(c, "to", at);
      conn.from = IntField(c, "from", at);
      const int rows = size_of(conn.to);
      const int cols = size_of(conn.from);
      if (rows < 0) throw ParseError(at + ".to", "unknown subsystem id");
      if (cols < 0) throw ParseError(at + ".from", "unknown subsystem id");
      conn.E = PatternFromJson(c.at("E"), rows, cols, at + ".E");
      connections.push_back(std::move(conn));
    }
  }
  try {
    return InterconnectedSystem::Create(std::move(subsystems),
                                        std::move(connections));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("$", e.what());
  }
}

json SystemToJson(const InterconnectedSystem& sys) {
  json subs = json::array();
  for (const Subsystem& s : sys.subsystems()) {
    json one = json::object();
    one["id"] = s.id;
    one["n"] = s.n;
    one["p"] = s.p;
    one["A"] = PatternToJson(s.A);
    one["B"] = PatternToJson(s.B);
    subs.push_back(std::move(one));
  }
  json conns = json::array();
  for (const Interconnection& c : sys.connections()) {
    json one = json::object();
    one["to"] = c.to;
    one["from"] = c.from;
    one["E"] = PatternToJson(c.E);
    conns.push_back(std::move(one));
  }
  json doc = json::object();
  doc["subsystems"] = std::move(subs);
  doc["connections"] = std::move(conns);
  return doc;
}

InterconnectedSystem LoadSystem(const std::string& path) {
  return SystemFromJson(ReadJsonFile(path));
}

void SaveSystem(const InterconnectedSystem& sys, const std::string& path) {
  WriteJsonFile(SystemToJson(sys), path);
}

}  // namespace structctl

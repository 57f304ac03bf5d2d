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

// JSON system files. Layout (0-based indices, keys exactly as shown):
//
//   {"subsystems": [{"id": 0, "n": 2, "p": 1, "A": [[1, 0]], "B": [[0, 0]]}],
//    "connections": [{"to": 1, "from": 0, "E": [[0, 1]]}]}
//
// Pattern entries are [row, col] pairs. Unknown keys are rejected and every
// diagnostic carries the JSON path of the offending value.

#ifndef STRUCTCTL_IO_H_
#define STRUCTCTL_IO_H_

#include <string>

#include <nlohmann/json.hpp>

#include "structctl/sparsity_pattern.h"
#include "structctl/system.h"

namespace structctl {

// Throws ParseError on I/O failure or malformed JSON (with line/column).
nlohmann::json ReadJsonFile(const std::string& path);
void WriteJsonFile(const nlohmann::json& doc, const std::string& path);

// Strict decoding of a [[r, c], ...] array into a rows x cols pattern.
// `where` prefixes diagnostics.
SparsityPattern PatternFromJson(const nlohmann::json& j, int rows, int cols,
                                const std::string& where);
nlohmann::json PatternToJson(const SparsityPattern& m);

// Throws ParseError for shape or key problems and for any ValidationError or
// DimensionError raised while building the system.
InterconnectedSystem SystemFromJson(const nlohmann::json& doc);
nlohmann::json SystemToJson(const InterconnectedSystem& sys);

InterconnectedSystem LoadSystem(const std::string& path);
void SaveSystem(const InterconnectedSystem& sys, const std::string& path);

// Checks that `obj` is an object whose keys are all in `allowed` and that
// every key in `required` is present.
void CheckKeys(const nlohmann::json& obj,
               std::initializer_list<const char*> required,
               std::initializer_list<const char*> allowed,
               const std::string& where);

// Reads obj[key] as an int, throwing ParseError at where.key otherwise.
int IntField(const nlohmann::json& obj, const char* key,
             const std::string& where);

}  // namespace structctl

#endif  // STRUCTCTL_IO_H_

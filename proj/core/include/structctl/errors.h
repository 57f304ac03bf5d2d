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

#ifndef STRUCTCTL_ERRORS_H_
#define STRUCTCTL_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace structctl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pattern or block sizes that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A system that violates a structural invariant (duplicate ids, duplicate
// connections, self connections, empty connection matrices, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. `where` is a JSON path such as
// "subsystems[1].A[3]" or "line 4".
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// An algorithm was called outside of its hypotheses.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A serial-only algorithm was given a non-serial system.
class NotSerialError : public PreconditionError {
 public:
  NotSerialError(const std::string& what, std::vector<int> offenders)
      : PreconditionError(what), offenders_(std::move(offenders)) {}
  const std::vector<int>& offenders() const { return offenders_; }

 private:
  std::vector<int> offenders_;
};

// An agent program broke the message-passing contract (payload type
// mismatch, message to a non-neighbor, ...).
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Every unfinished agent waits for a message that can never arrive.
class DeadlockError : public ProtocolError {
 public:
  DeadlockError(const std::string& what, std::vector<int> blocked)
      : ProtocolError(what), blocked_(std::move(blocked)) {}
  const std::vector<int>& blocked() const { return blocked_; }

 private:
  std::vector<int> blocked_;
};

}  // namespace structctl

#endif  // STRUCTCTL_ERRORS_H_

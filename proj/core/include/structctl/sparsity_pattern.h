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

#ifndef STRUCTCTL_SPARSITY_PATTERN_H_
#define STRUCTCTL_SPARSITY_PATTERN_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace structctl {

// A (row, col) coordinate of a structurally nonzero entry, 0-based.
struct Entry {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Entry&, const Entry&) = default;
};

// Binary matrix stored as a sorted set of nonzero coordinates (row-major
// order). Immutable once constructed; all graph builders iterate entries().
class SparsityPattern {
 public:
  SparsityPattern() = default;

  // An all-zero rows x cols pattern. Negative sizes throw DimensionError.
  SparsityPattern(int rows, int cols);

  // Throws DimensionError when an entry is out of range. Duplicate entries
  // are collapsed.
  SparsityPattern(int rows, int cols, std::vector<Entry> entries);
  SparsityPattern(int rows, int cols, std::initializer_list<Entry> entries);

  static SparsityPattern Identity(int n);

  // Builds from a dense 0/1 row list; every row must have the same length.
  static SparsityPattern FromDense(
      const std::vector<std::vector<int>>& dense);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const Entry> entries() const { return entries_; }

  bool Contains(int row, int col) const;
  bool RowHasNonzero(int row) const;
  bool ColHasNonzero(int col) const;

  // Rows (resp. columns) holding at least one nonzero, ascending.
  std::vector<int> NonzeroRows() const;
  std::vector<int> NonzeroCols() const;

  SparsityPattern Transposed() const;

  // Entry-wise OR of two equally sized patterns.
  SparsityPattern Or(const SparsityPattern& other) const;

  std::vector<std::vector<int>> ToDense() const;
  std::string DebugString() const;

  friend bool operator==(const SparsityPattern&,
                         const SparsityPattern&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Entry> entries_;
};

// Kronecker product of two patterns (block (i,j) of the result is `rhs` when
// lhs(i,j) is nonzero).
SparsityPattern Kronecker(const SparsityPattern& lhs,
                          const SparsityPattern& rhs);

}  // namespace structctl

#endif  // STRUCTCTL_SPARSITY_PATTERN_H_

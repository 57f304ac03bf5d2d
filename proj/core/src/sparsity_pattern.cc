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

#include "structctl/sparsity_pattern.h"

#include <algorithm>
#include <sstream>

#include "structctl/errors.h"

namespace structctl {

SparsityPattern::SparsityPattern(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw DimensionError("negative pattern size " + std::to_string(rows) +
                         "x" + std::to_string(cols));
  }
}

SparsityPattern::SparsityPattern(int rows, int cols, std::vector<Entry> entries)
    : SparsityPattern(rows, cols) {
  for (const Entry& e : entries) {
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols) {
      throw DimensionError("entry (" + std::to_string(e.row) + "," +
                           std::to_string(e.col) + ") outside " +
                           std::to_string(rows) + "x" + std::to_string(cols));
    }
  }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  entries_ = std::move(entries);
}

SparsityPattern::SparsityPattern(int rows, int cols,
                                 std::initializer_list<Entry> entries)
    : SparsityPattern(rows, cols, std::vector<Entry>(entries)) {}

SparsityPattern SparsityPattern::Identity(int n) {
  std::vector<Entry> entries;
  entries.reserve(n);
  for (int i = 0; i < n; ++i) entries.push_back({i, i});
  return SparsityPattern(n, n, std::move(entries));
}

SparsityPattern SparsityPattern::FromDense(
    const std::vector<std::vector<int>>& dense) {
  const int rows = static_cast<int>(dense.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(dense.front().size());
  std::vector<Entry> entries;
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(dense[r].size()) != cols) {
      throw DimensionError("ragged dense matrix at row " + std::to_string(r));
    }
    for (int c = 0; c < cols; ++c) {
      if (dense[r][c] != 0) entries.push_back({r, c});
    }
  }
  return SparsityPattern(rows, cols, std::move(entries));
}

bool SparsityPattern::Contains(int row, int col) const {
  return std::binary_search(entries_.begin(), entries_.end(), Entry{row, col});
}

bool SparsityPattern::RowHasNonzero(int row) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{row, 0});
  return it != entries_.end() && it->row == row;
}

bool SparsityPattern::ColHasNonzero(int col) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [col](const Entry& e) { return e.col == col; });
}

std::vector<int> SparsityPattern::NonzeroRows() const {
  std::vector<int> out;
  for (const Entry& e : entries_) {
    if (out.empty() || out.back() != e.row) out.push_back(e.row);
  }
  return out;
}

std::vector<int> SparsityPattern::NonzeroCols() const {
  std::vector<char> seen(cols_, 0);
  for (const Entry& e : entries_) seen[e.col] = 1;
  std::vector<int> out;
  for (int c = 0; c < cols_; ++c) {
    if (seen[c]) out.push_back(c);
  }
  return out;
}

SparsityPattern SparsityPattern::Transposed() const {
  std::vector<Entry> t;
  t.reserve(entries_.size());
  for (const Entry& e : entries_) t.push_back({e.col, e.row});
  return SparsityPattern(cols_, rows_, std::move(t));
}

SparsityPattern SparsityPattern::Or(const SparsityPattern& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("Or of " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " and " +
                         std::to_string(other.rows_) + "x" +
                         std::to_string(other.cols_));
  }
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  std::set_union(entries_.begin(), entries_.end(), other.entries_.begin(),
                 other.entries_.end(), std::back_inserter(merged));
  return SparsityPattern(rows_, cols_, std::move(merged));
}

std::vector<std::vector<int>> SparsityPattern::ToDense() const {
  std::vector<std::vector<int>> dense(rows_, std::vector<int>(cols_, 0));
  for (const Entry& e : entries_) dense[e.row][e.col] = 1;
  return dense;
}

std::string SparsityPattern::DebugString() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " {";
  bool first = true;
  for (const Entry& e : entries_) {
    os << (first ? "" : ", ") << "(" << e.row << "," << e.col << ")";
    first = false;
  }
  os << "}";
  return os.str();
}

SparsityPattern Kronecker(const SparsityPattern& lhs,
                          const SparsityPattern& rhs) {
  std::vector<Entry> out;
  out.reserve(lhs.nnz() * rhs.nnz());
  for (const Entry& a : lhs.entries()) {
    for (const Entry& b : rhs.entries()) {
      out.push_back({a.row * rhs.rows() + b.row, a.col * rhs.cols() + b.col});
    }
  }
  return SparsityPattern(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols(),
                         std::move(out));
}

}  // namespace structctl

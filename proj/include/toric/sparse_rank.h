// Copyright 2026 The Authors.
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

// Rank of sparse rational matrices by fraction-free row reduction.
//
// Rows are cleared of denominators and kept primitive (content 1). Two
// entry points compute the same number: RankSerial is the reference, and
// RankParallel reduces blocks of incoming rows concurrently against the
// frozen echelon basis before inserting them one at a time.

#ifndef TORIC_SPARSE_RANK_H_
#define TORIC_SPARSE_RANK_H_

#include <utility>
#include <vector>

#include "toric/exact_linalg.h"

namespace toric {

// Sorted by column, no zero entries.
using SparseRow = std::vector<std::pair<int, Integer>>;
using SparseRationalRow = std::vector<std::pair<int, Rational>>;

// Scales by the lcm of denominators and divides by the content.
SparseRow ToPrimitiveIntegerRow(const SparseRationalRow& row);

class EchelonBasis {
 public:
  explicit EchelonBasis(int columns) : pivots_(columns) {}

  // Eliminates every leading entry that has a pivot. Read-only on the basis.
  SparseRow Reduce(SparseRow row) const;
  // Reduces and inserts; returns false if the row was dependent.
  bool Insert(SparseRow row);

  int rank() const { return rank_; }
  int columns() const { return static_cast<int>(pivots_.size()); }

 private:
  std::vector<SparseRow> pivots_;  // indexed by leading column; empty = none
  int rank_ = 0;
};

int RankSerial(const std::vector<SparseRow>& rows, int columns);

// `block` rows are reduced concurrently per round; 0 picks a default.
int RankParallel(const std::vector<SparseRow>& rows, int columns, int block = 0);

}  // namespace toric

#endif  // TORIC_SPARSE_RANK_H_

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

#include <omp.h>

#include <algorithm>

#include "toric/sparse_rank.h"

namespace toric {

int RankParallel(const std::vector<SparseRow>& rows, int columns, int block) {
  if (block <= 0) block = std::max(16, 8 * omp_get_max_threads());
  EchelonBasis basis(columns);
  const long total = static_cast<long>(rows.size());
  std::vector<SparseRow> reduced(static_cast<std::size_t>(block));
  for (long start = 0; start < total; start += block) {
    const long count = std::min<long>(block, total - start);
    // The basis is frozen during this loop; each row reduces independently.
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) {
      reduced[static_cast<std::size_t>(k)] = basis.Reduce(rows[static_cast<std::size_t>(start + k)]);
    }
    // Rows may still collide with pivots added earlier in this block.
    for (long k = 0; k < count; ++k) {
      SparseRow& row = reduced[static_cast<std::size_t>(k)];
      if (!row.empty()) basis.Insert(std::move(row));
      row.clear();
    }
  }
  return basis.rank();
}

}  // namespace toric

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

#include <stdexcept>

#include "toric/sparse_rank.h"

namespace toric {
namespace {

void MakePrimitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [col, x] : row) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [col, x] : row) x /= g;
  }
}

// row <- (p/g) row - (a/g) pivot, with a, p the leading entries.
SparseRow Eliminate(const SparseRow& row, const SparseRow& pivot) {
  const Integer& a = row.front().second;
  const Integer& p = pivot.front().second;
  const Integer g = gcd(a, p);
  const Integer row_scale = p / g;
  const Integer pivot_scale = a / g;
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, row_scale * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -pivot_scale * pivot[j].second);
      ++j;
    } else {
      Integer x = row_scale * row[i].second - pivot_scale * pivot[j].second;
      if (x != 0) out.emplace_back(row[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  MakePrimitive(out);
  return out;
}

}  // namespace

SparseRow ToPrimitiveIntegerRow(const SparseRationalRow& row) {
  Integer denominator_lcm = 1;
  for (const auto& [col, q] : row) denominator_lcm = lcm(denominator_lcm, q.get_den());
  SparseRow out;
  out.reserve(row.size());
  for (const auto& [col, q] : row) {
    if (q == 0) continue;
    if (!out.empty() && out.back().first >= col) {
      throw std::invalid_argument("sparse row columns must be strictly increasing");
    }
    out.emplace_back(col, q.get_num() * (denominator_lcm / q.get_den()));
  }
  MakePrimitive(out);
  return out;
}

SparseRow EchelonBasis::Reduce(SparseRow row) const {
  while (!row.empty()) {
    const int lead = row.front().first;
    if (lead < 0 || lead >= columns()) throw std::out_of_range("column out of range");
    const SparseRow& pivot = pivots_[lead];
    if (pivot.empty()) break;
    row = Eliminate(row, pivot);
  }
  return row;
}

bool EchelonBasis::Insert(SparseRow row) {
  row = Reduce(std::move(row));
  if (row.empty()) return false;
  MakePrimitive(row);
  pivots_[row.front().first] = std::move(row);
  ++rank_;
  return true;
}

int RankSerial(const std::vector<SparseRow>& rows, int columns) {
  EchelonBasis basis(columns);
  for (const SparseRow& row : rows) basis.Insert(row);
  return basis.rank();
}

}  // namespace toric

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

#include "toric/matroid.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace toric {

Mask ToMask(const Subset& s) {
  Mask m = 0;
  for (int i : s) {
    if (i < 0 || i >= kMaxGroundSetSize) throw std::out_of_range("subset index out of range");
    m |= Mask{1} << i;
  }
  return m;
}

Subset FromMask(Mask m) {
  Subset s;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1) s.push_back(i);
  }
  return s;
}

int Popcount(Mask m) { return std::popcount(m); }

CharacterMatrix::CharacterMatrix(IntMatrix columns) : matrix_(std::move(columns)) {
  if (matrix_.cols() > kMaxGroundSetSize) {
    throw std::invalid_argument("at most " + std::to_string(kMaxGroundSetSize) +
                                " characters are supported");
  }
  for (int j = 0; j < matrix_.cols(); ++j) {
    const Integer c = Content(matrix_.Column(j));
    if (c == 0) throw std::invalid_argument("zero character at index " + std::to_string(j));
    if (c != 1) {
      throw std::invalid_argument("non-primitive character at index " + std::to_string(j));
    }
  }
}

ArithmeticMatroid::ArithmeticMatroid(CharacterMatrix characters)
    : characters_(std::move(characters)) {
  const Mask count = Mask{1} << size();
  rank_.resize(count);
  multiplicity_.resize(count);
  for (Mask m = 0; m < count; ++m) {
    const SnfDecomposition snf = SmithNormalForm(Columns(FromMask(m)));
    rank_[m] = snf.rank;
    Integer product = 1;
    for (const Integer& x : snf.Divisors()) product *= x;
    multiplicity_[m] = product;
  }
  // Size-lexicographic sweep; supersets of known circuits are skipped.
  std::vector<Mask> by_size(count);
  for (Mask m = 0; m < count; ++m) by_size[m] = m;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](Mask a, Mask b) { return Popcount(a) < Popcount(b); });
  for (Mask m : by_size) {
    if (IsIndependent(m)) continue;
    const bool has_circuit = std::any_of(circuit_masks_.begin(), circuit_masks_.end(),
                                         [m](Mask c) { return (c & m) == c; });
    if (!has_circuit) circuit_masks_.push_back(m);
  }
  for (Mask c : circuit_masks_) circuits_.push_back(FromMask(c));
  std::sort(circuits_.begin(), circuits_.end());
  circuit_masks_.clear();
  for (const Subset& c : circuits_) circuit_masks_.push_back(ToMask(c));
}

Mask ArithmeticMatroid::CheckedMask(const Subset& s) const {
  for (int i : s) {
    if (i < 0 || i >= size()) throw std::out_of_range("element " + std::to_string(i) + " not in E");
  }
  return ToMask(s);
}

IntMatrix ArithmeticMatroid::Columns(const Subset& s) const {
  return characters_.matrix().SelectColumns(s);
}

bool ArithmeticMatroid::IsUnimodular() const {
  return std::all_of(multiplicity_.begin(), multiplicity_.end(),
                     [](const Integer& m) { return m == 1; });
}

bool ArithmeticMatroid::IsCircuit(const Subset& s) const {
  return std::binary_search(circuits_.begin(), circuits_.end(), s);
}

CircuitDependency ArithmeticMatroid::Dependency(const Subset& circuit) const {
  if (!IsCircuit(circuit)) throw std::invalid_argument("not a circuit");
  const IntMatrix kernel = KernelLattice(Columns(circuit));
  // A circuit has a one-dimensional kernel; HNF makes the first entry positive.
  CircuitDependency dep;
  dep.circuit = circuit;
  for (std::size_t k = 0; k < circuit.size(); ++k) {
    const Integer& n = kernel(static_cast<int>(k), 0);
    dep.coefficients[circuit[k]] = n;
    dep.signs[circuit[k]] = sgn(n);
  }
  return dep;
}

std::vector<Subset> ArithmeticMatroid::NbcSets(int k, Mask within) const {
  std::vector<Mask> broken;
  for (Mask c : circuit_masks_) {
    if ((c & within) == c) broken.push_back(c & (c - 1));  // drop the lowest bit
  }
  std::vector<Subset> out;
  for (Mask m = within;; m = (m - 1) & within) {
    if (Popcount(m) == k) {
      const bool clean = std::none_of(broken.begin(), broken.end(),
                                      [m](Mask b) { return (b & m) == b; });
      if (clean) out.push_back(FromMask(m));
    }
    if (m == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> ArithmeticMatroid::CorankOneSubsets() const {
  std::vector<Subset> out;
  for (Mask m = 1; m <= ground(); ++m) {
    if (rank_[m] + 1 == Popcount(m)) out.push_back(FromMask(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subset ArithmeticMatroid::UniqueCircuit(const Subset& x) const {
  const Mask m = CheckedMask(x);
  if (Rank(m) + 1 != Popcount(m)) throw std::invalid_argument("subset is not of corank one");
  for (std::size_t k = 0; k < circuits_.size(); ++k) {
    if ((circuit_masks_[k] & m) == circuit_masks_[k]) return circuits_[k];
  }
  throw std::logic_error("corank-one subset without a circuit");
}

}  // namespace toric

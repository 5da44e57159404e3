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

#ifndef TORIC_MATROID_H_
#define TORIC_MATROID_H_

#include <cstdint>
#include <map>
#include <vector>

#include "toric/exact_linalg.h"

namespace toric {

// Subsets of the ground set E = {0, ..., n-1} are sorted index vectors in
// the public API and bitmasks internally.
using Subset = std::vector<int>;
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSetSize = 16;

Mask ToMask(const Subset& s);
Subset FromMask(Mask m);
int Popcount(Mask m);

// d x n integer matrix whose columns are nonzero primitive characters.
class CharacterMatrix {
 public:
  // Throws std::invalid_argument on zero or non-primitive columns.
  explicit CharacterMatrix(IntMatrix columns);

  const IntMatrix& matrix() const { return matrix_; }
  int dimension() const { return matrix_.rows(); }
  int size() const { return matrix_.cols(); }
  IntVector Character(int i) const { return matrix_.Column(i); }

 private:
  IntMatrix matrix_;
};

// A minimal dependency sum n_i chi_i = 0 over a circuit, primitive and
// normalized so that the coefficient of min(C) is positive.
struct CircuitDependency {
  Subset circuit;
  std::map<int, Integer> coefficients;
  std::map<int, int> signs;  // c_i = sign(n_i)
};

// The matroid of the characters together with the multiplicity function.
// Rank and multiplicity are tabulated for every subset at construction, so
// the object is immutable and can be shared across threads.
class ArithmeticMatroid {
 public:
  explicit ArithmeticMatroid(CharacterMatrix characters);

  const CharacterMatrix& characters() const { return characters_; }
  int size() const { return characters_.size(); }
  int dimension() const { return characters_.dimension(); }
  Mask ground() const { return (Mask{1} << size()) - 1; }

  int Rank(const Subset& s) const { return Rank(CheckedMask(s)); }
  int Rank(Mask m) const { return rank_[m]; }
  const Integer& Multiplicity(const Subset& s) const { return Multiplicity(CheckedMask(s)); }
  const Integer& Multiplicity(Mask m) const { return multiplicity_[m]; }
  bool IsIndependent(Mask m) const { return rank_[m] == Popcount(m); }
  bool IsIndependent(const Subset& s) const { return IsIndependent(CheckedMask(s)); }
  // True when every subset has multiplicity 1.
  bool IsUnimodular() const;

  // Inclusion-minimal dependent subsets, each sorted, list sorted.
  const std::vector<Subset>& Circuits() const { return circuits_; }
  bool IsCircuit(const Subset& s) const;
  CircuitDependency Dependency(const Subset& circuit) const;

  // Cardinality-k subsets of `within` containing no broken circuit
  // C \ {min C} for a circuit C contained in `within`.
  std::vector<Subset> NbcSets(int k, Mask within) const;
  std::vector<Subset> NbcSets(int k) const { return NbcSets(k, ground()); }

  // Subsets X with rank |X| - 1, i.e. X = C + F with C the unique circuit.
  std::vector<Subset> CorankOneSubsets() const;
  // The unique circuit inside a corank-one subset.
  Subset UniqueCircuit(const Subset& x) const;

  IntMatrix Columns(const Subset& s) const;

 private:
  Mask CheckedMask(const Subset& s) const;

  CharacterMatrix characters_;
  std::vector<int> rank_;
  std::vector<Integer> multiplicity_;
  std::vector<Subset> circuits_;
  std::vector<Mask> circuit_masks_;
};

}  // namespace toric

#endif  // TORIC_MATROID_H_

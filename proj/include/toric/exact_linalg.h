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

// Exact integer and rational linear algebra over arbitrary-precision GMP
// numbers. Nothing in this library touches floating point.

#ifndef TORIC_EXACT_LINALG_H_
#define TORIC_EXACT_LINALG_H_

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
// Coordinates in Q^d; every entry is kept in canonical (reduced) form.
using RatVector = std::vector<Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);

  static IntMatrix Identity(int n);
  static IntMatrix FromRows(std::initializer_list<std::initializer_list<long>> rows);
  // `rows` is needed so that an empty column list still has a height.
  static IntMatrix FromColumns(int rows, const std::vector<IntVector>& columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Integer& operator()(int r, int c) { return entries_[Index(r, c)]; }
  const Integer& operator()(int r, int c) const { return entries_[Index(r, c)]; }

  IntVector Column(int c) const;
  IntMatrix SelectColumns(std::span<const int> indices) const;
  IntMatrix FirstColumns(int count) const;
  IntMatrix Transpose() const;
  // Horizontal concatenation [*this | other]; heights must agree.
  IntMatrix Concat(const IntMatrix& other) const;

  void SwapRows(int a, int b);
  void SwapColumns(int a, int b);
  // row[target] += factor * row[source]
  void AddRowMultiple(int target, int source, const Integer& factor);
  // col[target] += factor * col[source]
  void AddColumnMultiple(int target, int source, const Integer& factor);
  void NegateRow(int r);
  void NegateColumn(int c);

  bool IsZero() const;
  std::string ToString() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t Index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> entries_;
};

IntVector operator*(const IntMatrix& a, const IntVector& x);
RatVector operator*(const IntMatrix& a, const RatVector& x);

// U * A * V == D with U, V unimodular. `u_inverse` is U^{-1}, tracked during
// the reduction because saturation needs it.
struct SnfDecomposition {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix u_inverse;
  int rank = 0;

  // The nonzero diagonal entries d_1 | d_2 | ... | d_rank.
  IntVector Divisors() const;
};

// Pivoting is deterministic: smallest nonzero magnitude, ties broken by
// row-major position.
SnfDecomposition SmithNormalForm(const IntMatrix& a);

// Product of the nonzero elementary divisors, i.e. the index of the column
// lattice in its saturation. Equals 1 for a matrix without columns.
Integer Multiplicity(const IntMatrix& a);

int Rank(const IntMatrix& a);
bool InRationalSpan(const IntMatrix& basis, const IntVector& v);

// Column-style Hermite normal form of the column lattice: lower triangular
// echelon, positive pivots, entries left of each pivot reduced into
// [0, pivot). Zero columns are dropped.
IntMatrix HermiteNormalForm(const IntMatrix& a);

// Basis (in HNF) of (Q-span of the columns) intersected with Z^rows.
IntMatrix Saturation(const IntMatrix& a);

// Basis (in HNF) of {v in Z^cols : a v = 0}.
IntMatrix KernelLattice(const IntMatrix& a);

Rational FractionalPart(const Rational& q);
bool IsIntegral(const Rational& q);
RatVector ReduceModOne(RatVector x);

// Canonical representative of the coset x + (Z^d + K) where K is the real
// subspace annihilated by the saturated lattice `direction`. Two points give
// the same representative iff every character in `direction` takes the same
// value on both, modulo Z.
RatVector CanonicalTranslation(const IntMatrix& direction, const RatVector& x);

// All solutions x in (R/Z)^d of a^T x = rhs (mod Z^cols), one canonical
// representative per connected component, sorted lexicographically. Empty if
// the system is inconsistent.
std::vector<RatVector> SolveCongruences(const IntMatrix& a, const RatVector& rhs);

// Connected components of the intersection of the kernels of the (linearly
// independent) columns of `a`, as canonical translation vectors.
std::vector<RatVector> TorsionCosets(const IntMatrix& a);

// Content (gcd of entries); zero for the zero vector.
Integer Content(const IntVector& v);
Rational Dot(const IntVector& a, const RatVector& b);

}  // namespace toric

#endif  // TORIC_EXACT_LINALG_H_

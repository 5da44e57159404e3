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

#include "toric/exact_linalg.h"

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace toric {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

IntMatrix IntMatrix::Identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::FromRows(std::initializer_list<std::initializer_list<long>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  IntMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged rows");
    int j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::FromColumns(int rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, static_cast<int>(columns.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(columns[j].size()) != rows) {
      throw std::invalid_argument("column length mismatch");
    }
    for (int i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::Column(int c) const {
  IntVector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

IntMatrix IntMatrix::SelectColumns(std::span<const int> indices) const {
  IntMatrix m(rows_, static_cast<int>(indices.size()));
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < rows_; ++i) m(i, j) = (*this)(i, indices[j]);
  }
  return m;
}

IntMatrix IntMatrix::FirstColumns(int count) const {
  IntMatrix m(rows_, count);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < count; ++j) m(i, j) = (*this)(i, j);
  }
  return m;
}

IntMatrix IntMatrix::Transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::Concat(const IntMatrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("height mismatch in Concat");
  IntMatrix m(rows_, cols_ + other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (int j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
  }
  return m;
}

void IntMatrix::SwapRows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::SwapColumns(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::AddRowMultiple(int target, int source, const Integer& factor) {
  if (factor == 0) return;
  for (int j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::AddColumnMultiple(int target, int source, const Integer& factor) {
  if (factor == 0) return;
  for (int i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::NegateRow(int r) {
  for (int j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::NegateColumn(int c) {
  for (int i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

bool IntMatrix::IsZero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer& x) { return x == 0; });
}

std::string IntMatrix::ToString() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.entries_ < b.entries_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in product");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != static_cast<int>(x.size())) throw std::invalid_argument("shape mismatch");
  IntVector y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  }
  return y;
}

RatVector operator*(const IntMatrix& a, const RatVector& x) {
  if (a.cols() != static_cast<int>(x.size())) throw std::invalid_argument("shape mismatch");
  RatVector y(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) y[i] += Rational(a(i, j)) * x[j];
    y[i].canonicalize();
  }
  return y;
}

IntVector SnfDecomposition::Divisors() const {
  IntVector out;
  for (int i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

namespace {

struct Position {
  int row;
  int col;
};

// Smallest nonzero |entry| in the trailing block starting at (t, t).
std::optional<Position> SmallestInBlock(const IntMatrix& m, int t) {
  std::optional<Position> best;
  for (int i = t; i < m.rows(); ++i) {
    for (int j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      if (!best || abs(m(i, j)) < abs(m(best->row, best->col))) best = Position{i, j};
    }
  }
  return best;
}

// Smallest nonzero |entry| in row t or column t of the trailing block.
std::optional<Position> SmallestInCross(const IntMatrix& m, int t) {
  std::optional<Position> best;
  auto consider = [&](int i, int j) {
    if (m(i, j) == 0) return;
    if (!best || abs(m(i, j)) < abs(m(best->row, best->col))) best = Position{i, j};
  };
  for (int j = t; j < m.cols(); ++j) consider(t, j);
  for (int i = t + 1; i < m.rows(); ++i) consider(i, t);
  return best;
}

// Tracks U, U^{-1}, V while row/column operations are applied to D.
class SnfWorkspace {
 public:
  explicit SnfWorkspace(const IntMatrix& a)
      : d(a),
        u(IntMatrix::Identity(a.rows())),
        u_inverse(IntMatrix::Identity(a.rows())),
        v(IntMatrix::Identity(a.cols())) {}

  void SwapRows(int a, int b) {
    d.SwapRows(a, b);
    u.SwapRows(a, b);
    u_inverse.SwapColumns(a, b);
  }
  void SwapColumns(int a, int b) {
    d.SwapColumns(a, b);
    v.SwapColumns(a, b);
  }
  // row[target] += f * row[source]
  void AddRow(int target, int source, const Integer& f) {
    d.AddRowMultiple(target, source, f);
    u.AddRowMultiple(target, source, f);
    u_inverse.AddColumnMultiple(source, target, -f);
  }
  void AddColumn(int target, int source, const Integer& f) {
    d.AddColumnMultiple(target, source, f);
    v.AddColumnMultiple(target, source, f);
  }
  void NegateRow(int r) {
    d.NegateRow(r);
    u.NegateRow(r);
    u_inverse.NegateColumn(r);
  }

  IntMatrix d, u, u_inverse, v;
};

}  // namespace

SnfDecomposition SmithNormalForm(const IntMatrix& a) {
  SnfWorkspace w(a);
  const int limit = std::min(a.rows(), a.cols());
  int t = 0;
  for (; t < limit; ++t) {
    auto pivot = SmallestInBlock(w.d, t);
    if (!pivot) break;
    w.SwapRows(t, pivot->row);
    w.SwapColumns(t, pivot->col);
    for (;;) {
      bool cross_clear = true;
      for (int i = t + 1; i < a.rows(); ++i) {
        if (w.d(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), w.d(i, t).get_mpz_t(), w.d(t, t).get_mpz_t());
        w.AddRow(i, t, -q);
        if (w.d(i, t) != 0) cross_clear = false;
      }
      for (int j = t + 1; j < a.cols(); ++j) {
        if (w.d(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), w.d(t, j).get_mpz_t(), w.d(t, t).get_mpz_t());
        w.AddColumn(j, t, -q);
        if (w.d(t, j) != 0) cross_clear = false;
      }
      if (!cross_clear) {
        auto next = SmallestInCross(w.d, t);
        w.SwapRows(t, next->row);
        w.SwapColumns(t, next->col);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and retry.
      std::optional<int> offending;
      for (int i = t + 1; i < a.rows() && !offending; ++i) {
        for (int j = t + 1; j < a.cols(); ++j) {
          if (!mpz_divisible_p(w.d(i, j).get_mpz_t(), w.d(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      w.AddRow(t, *offending, Integer(1));
    }
    if (w.d(t, t) < 0) w.NegateRow(t);
  }
  return SnfDecomposition{std::move(w.u), std::move(w.d), std::move(w.v),
                          std::move(w.u_inverse), t};
}

Integer Multiplicity(const IntMatrix& a) {
  Integer m = 1;
  for (const Integer& x : SmithNormalForm(a).Divisors()) m *= x;
  return m;
}

int Rank(const IntMatrix& a) {
  // Fraction-free elimination; only the rank is kept.
  IntMatrix m = a;
  int rank = 0;
  Integer previous = 1;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.SwapRows(rank, pivot);
    for (int r = rank + 1; r < m.rows(); ++r) {
      for (int k = c + 1; k < m.cols(); ++k) {
        m(r, k) = (m(rank, c) * m(r, k) - m(r, c) * m(rank, k)) / previous;
      }
      m(r, c) = 0;
    }
    previous = m(rank, c);
    ++rank;
  }
  return rank;
}

bool InRationalSpan(const IntMatrix& basis, const IntVector& v) {
  IntMatrix extended = basis.Concat(IntMatrix::FromColumns(basis.rows(), {v}));
  return Rank(extended) == Rank(basis);
}

IntMatrix HermiteNormalForm(const IntMatrix& a) {
  IntMatrix h = a;
  const int m = h.rows();
  const int n = h.cols();
  int k = 0;
  for (int i = 0; i < m && k < n; ++i) {
    for (int j = k + 1; j < n; ++j) {
      if (h(i, j) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(i, k).get_mpz_t(),
                 h(i, j).get_mpz_t());
      const Integer ak = h(i, k) / g;
      const Integer aj = h(i, j) / g;
      // [col_k, col_j] <- [s col_k + t col_j, -aj col_k + ak col_j]; det = 1.
      for (int r = 0; r < m; ++r) {
        Integer ck = h(r, k);
        Integer cj = h(r, j);
        h(r, k) = s * ck + t * cj;
        h(r, j) = ak * cj - aj * ck;
      }
    }
    if (h(i, k) == 0) continue;
    if (h(i, k) < 0) h.NegateColumn(k);
    for (int j = 0; j < k; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, k).get_mpz_t());
      h.AddColumnMultiple(j, k, -q);
    }
    ++k;
  }
  return h.FirstColumns(k);
}

IntMatrix Saturation(const IntMatrix& a) {
  SnfDecomposition snf = SmithNormalForm(a);
  return HermiteNormalForm(snf.u_inverse.FirstColumns(snf.rank));
}

IntMatrix KernelLattice(const IntMatrix& a) {
  SnfDecomposition snf = SmithNormalForm(a);
  std::vector<int> free_columns;
  for (int j = snf.rank; j < a.cols(); ++j) free_columns.push_back(j);
  return HermiteNormalForm(snf.v.SelectColumns(free_columns));
}

Rational FractionalPart(const Rational& q) {
  Integer floor;
  mpz_fdiv_q(floor.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(floor);
  r.canonicalize();
  return r;
}

bool IsIntegral(const Rational& q) { return q.get_den() == 1; }

RatVector ReduceModOne(RatVector x) {
  for (Rational& c : x) c = FractionalPart(c);
  return x;
}

Integer Content(const IntVector& v) {
  Integer g = 0;
  for (const Integer& x : v) g = gcd(g, x);
  return g;
}

Rational Dot(const IntVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch in Dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  s.canonicalize();
  return s;
}

RatVector CanonicalTranslation(const IntMatrix& direction, const RatVector& x) {
  const int d = direction.rows();
  const int r = direction.cols();
  if (static_cast<int>(x.size()) != d) throw std::invalid_argument("point dimension mismatch");
  // U S V = [I_r; 0] since S is saturated. With Q = U^{-1} diag(V^{-1}, I)
  // unimodular and Q[:, :r] = S, the representative solves
  // Q^T x0 = (S^T x mod 1, 0), i.e. x0 = U^T (V^T phi; 0).
  SnfDecomposition snf = SmithNormalForm(direction);
  for (const Integer& div : snf.Divisors()) {
    if (div != 1) throw std::invalid_argument("direction lattice is not saturated");
  }
  if (snf.rank != r) throw std::invalid_argument("direction columns are dependent");
  RatVector phi = ReduceModOne(direction.Transpose() * x);
  RatVector inner = snf.v.Transpose() * phi;
  inner.resize(d, Rational(0));
  return ReduceModOne(snf.u.Transpose() * inner);
}

std::vector<RatVector> SolveCongruences(const IntMatrix& a, const RatVector& rhs) {
  const int d = a.rows();
  const int k = a.cols();
  if (static_cast<int>(rhs.size()) != k) throw std::invalid_argument("rhs length mismatch");
  // U a^T V = D; with y = V^{-1} x the system decouples into d_i y_i = (U rhs)_i.
  SnfDecomposition snf = SmithNormalForm(a.Transpose());
  RatVector shifted = snf.u * rhs;
  for (int i = snf.rank; i < k; ++i) {
    if (!IsIntegral(shifted[i])) return {};
  }
  const IntMatrix direction = Saturation(a);
  const IntVector divisors = snf.Divisors();

  std::vector<RatVector> out;
  std::vector<long> counter(snf.rank, 0);
  std::vector<long> bound(snf.rank);
  for (int i = 0; i < snf.rank; ++i) {
    if (!divisors[i].fits_slong_p()) throw std::overflow_error("elementary divisor too large");
    bound[i] = divisors[i].get_si();
  }
  for (;;) {
    RatVector y(d, Rational(0));
    for (int i = 0; i < snf.rank; ++i) {
      y[i] = (shifted[i] + Rational(counter[i])) / Rational(divisors[i]);
      y[i].canonicalize();
    }
    out.push_back(CanonicalTranslation(direction, snf.v * y));
    int pos = 0;
    while (pos < snf.rank && ++counter[pos] == bound[pos]) counter[pos++] = 0;
    if (pos == snf.rank) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RatVector> TorsionCosets(const IntMatrix& a) {
  if (Rank(a) != a.cols()) throw std::invalid_argument("torsion cosets need independent columns");
  return SolveCongruences(a, RatVector(a.cols(), Rational(0)));
}

}  // namespace toric

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

// Brute-force oracles and random instances shared by the tests. Nothing here
// calls into SNF, HNF or the layer machinery.

#ifndef TORIC_TESTS_ORACLES_H_
#define TORIC_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "toric/exact_linalg.h"
#include "toric/matroid.h"

namespace toric::oracle {

// Laplace expansion along the first row.
inline Integer Determinant(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    const Integer term = m[0][c] * Determinant(minor);
    det += c % 2 == 0 ? term : Integer(-term);
  }
  return det;
}

inline std::vector<std::vector<int>> Combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      out.push_back(pick);
      return;
    }
    for (int i = start; i < n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

// All k x k minors.
inline std::vector<Integer> Minors(const IntMatrix& a, int k) {
  std::vector<Integer> out;
  for (const auto& rows : Combinations(a.rows(), k)) {
    for (const auto& cols : Combinations(a.cols(), k)) {
      std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
      for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) m[r][c] = a(rows[r], cols[c]);
      }
      out.push_back(Determinant(m));
    }
  }
  return out;
}

// Rank as the largest k with a nonzero k x k minor.
inline int RankByMinors(const IntMatrix& a) {
  int rank = 0;
  for (int k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    bool nonzero = false;
    for (const Integer& m : Minors(a, k)) nonzero = nonzero || m != 0;
    if (!nonzero) break;
    rank = k;
  }
  return rank;
}

// gcd of the rank-sized minors.
inline Integer MultiplicityByMinors(const IntMatrix& a) {
  const int r = RankByMinors(a);
  if (r == 0) return 1;
  Integer g = 0;
  for (const Integer& m : Minors(a, r)) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
  }
  return g;
}

// Rank of a dense rational matrix by plain Gaussian elimination.
inline int DenseRationalRank(std::vector<std::vector<Rational>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Rank of a column subset by minors.
inline int SubsetRank(const IntMatrix& chi, const Subset& s) {
  return RankByMinors(chi.SelectColumns(s));
}

// Circuits from the minors-based rank function.
inline std::vector<Subset> BruteCircuits(const IntMatrix& chi) {
  std::vector<Subset> out;
  const int n = chi.cols();
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    const Subset s = FromMask(m);
    if (SubsetRank(chi, s) == static_cast<int>(s.size())) continue;
    bool minimal = true;
    for (int i : s) {
      Subset t;
      for (int j : s) {
        if (j != i) t.push_back(j);
      }
      if (SubsetRank(chi, t) != static_cast<int>(t.size())) minimal = false;
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// k-subsets within `within` avoiding every broken circuit inside `within`.
inline std::vector<Subset> BruteNbc(const IntMatrix& chi, const Subset& within, int k) {
  std::vector<Subset> broken;
  for (const Subset& c : BruteCircuits(chi)) {
    if (std::includes(within.begin(), within.end(), c.begin(), c.end())) {
      broken.emplace_back(c.begin() + 1, c.end());
    }
  }
  std::vector<Subset> out;
  for (const auto& pick : Combinations(static_cast<int>(within.size()), k)) {
    Subset s;
    for (int i : pick) s.push_back(within[i]);
    if (SubsetRank(chi, s) != k) continue;
    bool ok = true;
    for (const Subset& b : broken) {
      if (std::includes(s.begin(), s.end(), b.begin(), b.end())) ok = false;
    }
    if (ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Poincare polynomial through the arithmetic characteristic polynomial
// chi(q) = sum_A (-1)^|A| m(A) q^{d - rk A} and Poin(t) = (-t)^d chi(-(1+t)/t).
inline std::vector<std::int64_t> PoincareByCharacteristic(const IntMatrix& chi) {
  const int d = chi.rows();
  const int n = chi.cols();
  std::vector<std::int64_t> q_coeff(d + 1, 0);  // coefficient of q^e
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    const Subset s = FromMask(m);
    const IntMatrix cols = chi.SelectColumns(s);
    const int rank = RankByMinors(cols);
    const std::int64_t mult = MultiplicityByMinors(cols).get_si();
    q_coeff[d - rank] += (s.size() % 2 == 0 ? 1 : -1) * mult;
  }
  // (-t)^d * (-(1+t)/t)^e = (-1)^{d+e} t^{d-e} (1+t)^e
  std::vector<std::int64_t> poin(d + 1, 0);
  for (int e = 0; e <= d; ++e) {
    std::int64_t binom = 1;
    for (int i = 0; i <= e; ++i) {
      poin[d - e + i] += ((d + e) % 2 == 0 ? 1 : -1) * q_coeff[e] * binom;
      binom = binom * (e - i) / (i + 1);
    }
  }
  return poin;
}

// Covering degree of X = C + F as a lattice index: with L = lcm a_i, the
// lattice spanned by the a_i-th roots of chi_i scaled by L has index L^r
// divided by the degree inside the saturation of span(X).
inline Integer CoveringDegreeByIndex(const IntMatrix& chi, const Subset& x,
                                     const std::map<int, Integer>& a) {
  Integer l = 1;
  for (const auto& [i, a_i] : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a_i.get_mpz_t());
  IntMatrix scaled(chi.rows(), static_cast<int>(x.size()));
  for (std::size_t k = 0; k < x.size(); ++k) {
    const Integer factor = l / a.at(x[k]);
    for (int r = 0; r < chi.rows(); ++r) scaled(r, static_cast<int>(k)) = chi(r, x[k]) * factor;
  }
  const int rank = RankByMinors(scaled);
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), l.get_mpz_t(), rank);
  return power / MultiplicityByMinors(scaled);
}

// Random d x n matrix with primitive nonzero columns and entries in
// [-bound, bound]; if `essential`, resampled until the columns span Q^d.
inline IntMatrix RandomCharacters(std::mt19937_64& rng, int d, int n, int bound, bool essential) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  while (true) {
    std::vector<IntVector> cols;
    while (static_cast<int>(cols.size()) < n) {
      IntVector v(d);
      for (Integer& x : v) x = entry(rng);
      if (Content(v) == 1) cols.push_back(v);
    }
    IntMatrix chi = IntMatrix::FromColumns(d, cols);
    if (!essential || RankByMinors(chi) == d) return chi;
  }
}

// The suite of random essential arrangements with d <= 3, |E| <= 5 and
// entries in [-3, 3].
inline std::vector<IntMatrix> RandomSuite(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<IntMatrix> out;
  for (int i = 0; i < count; ++i) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const int n = d + static_cast<int>(rng() % (6 - d));
    out.push_back(RandomCharacters(rng, d, n, 3, true));
  }
  return out;
}

}  // namespace toric::oracle

#endif  // TORIC_TESTS_ORACLES_H_

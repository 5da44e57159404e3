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

#include "toric/layers.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace toric {
namespace {

bool IsSubsetOf(const Subset& small, const Subset& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Layer LayerFromCanonical(const ArithmeticMatroid& arrangement, const IntMatrix& direction,
                         RatVector translation) {
  Layer w;
  w.direction = direction;
  w.translation = std::move(translation);
  w.codim = direction.cols();
  const bool full = w.codim == arrangement.dimension();
  for (int i = 0; i < arrangement.size(); ++i) {
    const IntVector chi = arrangement.characters().Character(i);
    if (!full && !InRationalSpan(direction, chi)) continue;
    if (IsIntegral(Dot(chi, w.translation))) w.support.push_back(i);
  }
  return w;
}

std::vector<Layer> LayersThrough(const ArithmeticMatroid& arrangement, const IntMatrix& columns,
                                 const RatVector& rhs) {
  const IntMatrix direction = Saturation(columns);
  std::vector<Layer> out;
  for (RatVector& t : SolveCongruences(columns, rhs)) {
    out.push_back(LayerFromCanonical(arrangement, direction, std::move(t)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

bool operator<(const Layer& a, const Layer& b) {
  if (a.codim != b.codim) return a.codim < b.codim;
  if (a.translation != b.translation) return a.translation < b.translation;
  return a.support < b.support;
}

Layer TorusLayer(const ArithmeticMatroid& arrangement) {
  Layer t;
  t.direction = IntMatrix(arrangement.dimension(), 0);
  t.translation = RatVector(arrangement.dimension(), Rational(0));
  return t;
}

Layer MakeLayer(const ArithmeticMatroid& arrangement, const IntMatrix& direction,
                const RatVector& point) {
  return LayerFromCanonical(arrangement, direction, CanonicalTranslation(direction, point));
}

std::vector<Layer> LayersOf(const ArithmeticMatroid& arrangement, const Subset& a) {
  if (!arrangement.IsIndependent(a)) throw std::invalid_argument("LayersOf needs an independent set");
  return LayersThrough(arrangement, arrangement.Columns(a),
                       RatVector(a.size(), Rational(0)));
}

bool Contains(const Layer& outer, const Layer& inner) {
  if (outer.codim > inner.codim) return false;
  if (!IsSubsetOf(outer.support, inner.support)) return false;
  const bool inner_is_point = inner.codim == inner.direction.rows();
  for (int c = 0; c < outer.direction.cols(); ++c) {
    const IntVector s = outer.direction.Column(c);
    if (!inner_is_point && !InRationalSpan(inner.direction, s)) return false;
    RatVector diff(inner.translation.size());
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = inner.translation[k] - outer.translation[k];
    if (!IsIntegral(Dot(s, diff))) return false;
  }
  return true;
}

std::vector<Layer> IntersectLayers(const ArithmeticMatroid& arrangement, const Layer& w,
                                   const Layer& w_prime) {
  RatVector rhs = w.direction.Transpose() * w.translation;
  const RatVector rhs_prime = w_prime.direction.Transpose() * w_prime.translation;
  rhs.insert(rhs.end(), rhs_prime.begin(), rhs_prime.end());
  return LayersThrough(arrangement, w.direction.Concat(w_prime.direction), rhs);
}

std::vector<Subset> LocalArrangement::NbcSets(const ArithmeticMatroid& arrangement,
                                              int k) const {
  return arrangement.NbcSets(k, ToMask(support));
}

LocalArrangement MakeLocalArrangement(const ArithmeticMatroid& arrangement, const Layer& w) {
  LocalArrangement local;
  local.support = w.support;
  local.rank = arrangement.Rank(w.support);
  for (const Subset& c : arrangement.Circuits()) {
    if (IsSubsetOf(c, w.support)) local.circuits.push_back(c);
  }
  return local;
}

LayerPoset::LayerPoset(const ArithmeticMatroid& arrangement) {
  std::set<Layer> unique;
  unique.insert(TorusLayer(arrangement));
  for (Mask m = 1; m <= arrangement.ground(); ++m) {
    if (!arrangement.IsIndependent(m)) continue;
    for (Layer& w : LayersOf(arrangement, FromMask(m))) unique.insert(std::move(w));
  }
  layers_.assign(unique.begin(), unique.end());
  const int n = size();
  int max_codim = 0;
  for (const Layer& w : layers_) max_codim = std::max(max_codim, w.codim);
  by_codim_.assign(max_codim + 1, {});
  position_in_codim_.resize(n);
  for (int i = 0; i < n; ++i) {
    position_in_codim_[i] = static_cast<int>(by_codim_[layers_[i].codim].size());
    by_codim_[layers_[i].codim].push_back(i);
  }
  leq_.assign(static_cast<std::size_t>(n) * n, false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || Contains(layers_[i], layers_[j])) {
        leq_[static_cast<std::size_t>(i) * n + j] = true;
        if (layers_[j].codim == layers_[i].codim + 1) covers_.emplace_back(i, j);
      }
    }
  }
}

int LayerPoset::IndexOf(const Layer& w) const {
  auto it = std::lower_bound(layers_.begin(), layers_.end(), w);
  if (it == layers_.end() || !(*it == w)) return -1;
  return static_cast<int>(it - layers_.begin());
}

std::string LayerPoset::Label(int i) const {
  return "L" + std::to_string(layers_[i].codim) + "_" + std::to_string(position_in_codim_[i]);
}

std::vector<int> LayerPoset::MinimalUpperBounds(const Subset& a) const {
  std::vector<int> bounds;
  for (int i = 0; i < size(); ++i) {
    if (IsSubsetOf(a, layers_[i].support)) bounds.push_back(i);
  }
  std::vector<int> out;
  for (int i : bounds) {
    const bool minimal = std::none_of(bounds.begin(), bounds.end(),
                                      [&](int j) { return j != i && Leq(j, i); });
    if (minimal) out.push_back(i);
  }
  return out;
}

EssentialArrangement Essentialize(const CharacterMatrix& characters) {
  const IntMatrix& chi = characters.matrix();
  const IntMatrix span = Saturation(chi);
  const int r = span.cols();
  const SnfDecomposition snf = SmithNormalForm(span);
  // U S V = [I; 0]: the coordinates of chi in the basis S are V (U chi)[:r].
  const IntMatrix u_chi = snf.u * chi;
  IntMatrix head(r, chi.cols());
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < chi.cols(); ++j) head(i, j) = u_chi(i, j);
  }
  return EssentialArrangement{CharacterMatrix(snf.v * head), chi.rows() - r};
}

CoveringData ComputeCoveringData(const ArithmeticMatroid& arrangement, const Subset& x) {
  const Mask xm = ToMask(x);
  if (arrangement.Rank(x) + 1 != static_cast<int>(x.size())) {
    throw std::invalid_argument("covering data needs exactly one circuit");
  }
  CoveringData cover;
  cover.circuit = arrangement.UniqueCircuit(x);
  const Mask cm = ToMask(cover.circuit);
  cover.free = FromMask(xm & ~cm);
  const Integer& m_x = arrangement.Multiplicity(xm);
  for (int i : cover.circuit) {
    Integer a = m_x;
    for (int j : cover.circuit) {
      if (j != i) a *= arrangement.Multiplicity(cm & ~(Mask{1} << j));
    }
    cover.a[i] = a;
  }
  for (int i : cover.free) cover.a[i] = m_x;

  bool first = true;
  for (int i : cover.circuit) {
    Integer product = 1;
    for (const auto& [j, a] : cover.a) {
      if (j != i) product *= a;
    }
    const Integer& m = arrangement.Multiplicity(xm & ~(Mask{1} << i));
    if (!mpz_divisible_p(product.get_mpz_t(), m.get_mpz_t())) {
      throw std::logic_error("covering degree is not an integer");
    }
    const Integer degree = product / m;
    if (first) {
      cover.degree = degree;
      first = false;
    } else if (degree != cover.degree) {
      throw std::logic_error("covering degree depends on the chosen circuit element");
    }
  }
  return cover;
}

Rational CoverPreimageCount(const ArithmeticMatroid& arrangement, const CoveringData& cover,
                            const Subset& a, int j) {
  Mask x = ToMask(cover.circuit) | ToMask(cover.free);
  const Mask am = ToMask(a);
  Rational count(arrangement.Multiplicity(am), arrangement.Multiplicity(x & ~(Mask{1} << j)));
  count.canonicalize();
  for (const auto& [i, a_i] : cover.a) {
    if (i != j && !(am & (Mask{1} << i))) count *= Rational(a_i);
  }
  return count;
}

std::vector<std::int64_t> LocalNbcCounts(const ArithmeticMatroid& arrangement,
                                         const LayerPoset& poset) {
  std::vector<std::int64_t> n(arrangement.dimension() + 1, 0);
  for (int k = 0; k <= poset.MaxCodim(); ++k) {
    for (int i : poset.WithCodim(k)) {
      const LocalArrangement local = MakeLocalArrangement(arrangement, poset.layer(i));
      n[k] += static_cast<std::int64_t>(local.NbcSets(arrangement, k).size());
    }
  }
  return n;
}

std::vector<std::int64_t> PoincarePolynomial(const ArithmeticMatroid& arrangement,
                                             const LayerPoset& poset) {
  const int d = arrangement.dimension();
  const std::vector<std::int64_t> n = LocalNbcCounts(arrangement, poset);
  std::vector<std::int64_t> poly(d + 1, 0);
  for (int j = 0; j <= d; ++j) {
    // N_j t^j (1+t)^{d-j}
    for (int i = 0; i <= d - j; ++i) poly[j + i] += n[j] * Binomial(d - j, i);
  }
  return poly;
}

std::vector<std::int64_t> PoincarePolynomial(const ArithmeticMatroid& arrangement) {
  return PoincarePolynomial(arrangement, LayerPoset(arrangement));
}

}  // namespace toric

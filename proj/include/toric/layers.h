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

// Layers of a central toric arrangement: connected components of
// intersections of hypertori, their poset, and the arithmetic of the
// unimodular cover attached to a single circuit.
//
// A point of the compact torus is written x in (R/Z)^d, so that the
// character chi takes the value exp(2 pi i chi.x). A layer is the coset
// {x : s.x = s.t (mod Z) for all s in D} of the subtorus annihilated by its
// saturated direction lattice D, labeled by a canonical translation t.

#ifndef TORIC_LAYERS_H_
#define TORIC_LAYERS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "toric/exact_linalg.h"
#include "toric/matroid.h"

namespace toric {

struct Layer {
  Subset support;       // {i : W lies in H_i}
  IntMatrix direction;  // saturated lattice, column HNF, d x codim
  RatVector translation;
  int codim = 0;

  // Layers are the same subset of the torus iff these agree.
  friend bool operator==(const Layer& a, const Layer& b) {
    return a.direction == b.direction && a.translation == b.translation;
  }
  // Canonical order: codimension, translation label, support. The support
  // determines the direction, so this is a total order on layers.
  friend bool operator<(const Layer& a, const Layer& b);
};

// The whole torus (empty intersection).
Layer TorusLayer(const ArithmeticMatroid& arrangement);

// Builds the layer through `point` with the given direction and completes
// its support by scanning every character.
Layer MakeLayer(const ArithmeticMatroid& arrangement, const IntMatrix& direction,
                const RatVector& point);

// The m(A) components of the intersection of H_i, i in A, for independent A,
// sorted by translation.
std::vector<Layer> LayersOf(const ArithmeticMatroid& arrangement, const Subset& a);

// True iff `inner` is contained in `outer` as subsets of the torus.
bool Contains(const Layer& outer, const Layer& inner);

// Connected components of W and W' intersected; empty when disjoint.
std::vector<Layer> IntersectLayers(const ArithmeticMatroid& arrangement, const Layer& w,
                                   const Layer& w_prime);

// Linear arrangement in the tangent space at a generic point of a layer,
// given by the hyperplanes indexed by its support.
struct LocalArrangement {
  Subset support;
  std::vector<Subset> circuits;
  int rank = 0;

  // nbc sets of the local matroid with the order inherited from E.
  std::vector<Subset> NbcSets(const ArithmeticMatroid& arrangement, int k) const;
};

LocalArrangement MakeLocalArrangement(const ArithmeticMatroid& arrangement, const Layer& w);

// Layers ordered by reverse inclusion, stored in canonical order. Index 0 is
// the torus.
class LayerPoset {
 public:
  explicit LayerPoset(const ArithmeticMatroid& arrangement);

  const std::vector<Layer>& layers() const { return layers_; }
  int size() const { return static_cast<int>(layers_.size()); }
  const Layer& layer(int i) const { return layers_[i]; }
  const std::vector<int>& WithCodim(int k) const { return by_codim_.at(k); }
  int MaxCodim() const { return static_cast<int>(by_codim_.size()) - 1; }

  // -1 if absent.
  int IndexOf(const Layer& w) const;
  // i <= j in the poset, i.e. layer i contains layer j.
  bool Leq(int i, int j) const { return leq_[static_cast<std::size_t>(i) * size() + j]; }
  // Pairs (i, j) with j covering i.
  const std::vector<std::pair<int, int>>& Covers() const { return covers_; }
  // "L<codim>_<index within codim>", the default display name.
  std::string Label(int i) const;
  // Minimal upper bounds of the atoms {H_i : i in a}.
  std::vector<int> MinimalUpperBounds(const Subset& a) const;

 private:
  std::vector<Layer> layers_;
  std::vector<std::vector<int>> by_codim_;
  std::vector<int> position_in_codim_;
  std::vector<bool> leq_;
  std::vector<std::pair<int, int>> covers_;
};

struct EssentialArrangement {
  CharacterMatrix characters;
  int deficit = 0;  // d - rank(E)
};

// Re-expresses the characters in a basis of the saturation of their span.
EssentialArrangement Essentialize(const CharacterMatrix& characters);

// Arithmetic of the unimodular cover attached to X = C + F with a single
// circuit C, computed inside the saturation of the span of X.
struct CoveringData {
  Subset circuit;
  Subset free;
  std::map<int, Integer> a;
  Integer degree;
};

CoveringData ComputeCoveringData(const ArithmeticMatroid& arrangement, const Subset& x);

// Number of preimages of a point of a layer generated by A that lie in one
// layer of the cover: m(A)/m(X\{j}) * prod_{i in X\(A+j)} a_i, j in C \ A.
Rational CoverPreimageCount(const ArithmeticMatroid& arrangement, const CoveringData& cover,
                            const Subset& a, int j);

// Coefficients of the Poincare polynomial sum_j N_j (t+1)^{d-j} t^j with
// N_j the number of codim-j nbc sets summed over codim-j layers.
std::vector<std::int64_t> PoincarePolynomial(const ArithmeticMatroid& arrangement,
                                             const LayerPoset& poset);
std::vector<std::int64_t> PoincarePolynomial(const ArithmeticMatroid& arrangement);

// N_j for j = 0..d.
std::vector<std::int64_t> LocalNbcCounts(const ArithmeticMatroid& arrangement,
                                         const LayerPoset& poset);

}  // namespace toric

#endif  // TORIC_LAYERS_H_

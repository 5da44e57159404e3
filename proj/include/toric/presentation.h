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

// Symbolic presentation of the rational cohomology ring of the complement of
// an essential central toric arrangement.
//
// The generator e(W, A; B) stands for the class (-1)^{l(A,B)} wbar_{W,A} psi_B:
// W is a layer that is a component of the intersection of H_a, a in A, and
// B is disjoint from A with A + B independent. Its degree is |A| + |B|.
// e(T, {}; {}) is the unit, e(T, {}; {i}) is psi_i and e(H_i, {i}; {}) is
// wbar_i.

#ifndef TORIC_PRESENTATION_H_
#define TORIC_PRESENTATION_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toric/exact_linalg.h"
#include "toric/layers.h"
#include "toric/matroid.h"

namespace toric {

struct GeneratorSymbol {
  int layer = 0;  // index into the builder's LayerPoset
  Subset a;
  Subset b;

  int Degree() const { return static_cast<int>(a.size() + b.size()); }

  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
  // Degree first, then A, B and the layer.
  friend bool operator<(const GeneratorSymbol& x, const GeneratorSymbol& y);
};

// Exact rational linear combination of symbols; zero coefficients are never
// stored.
class LinComb {
 public:
  using Terms = std::map<GeneratorSymbol, Rational>;

  LinComb() = default;
  static LinComb Single(GeneratorSymbol s, Rational coefficient = 1);

  void Add(const GeneratorSymbol& s, const Rational& coefficient);
  void AddScaled(const LinComb& other, const Rational& factor);
  LinComb Scaled(const Rational& factor) const;

  const Terms& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational Coefficient(const GeneratorSymbol& s) const;

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  Terms terms_;
};

// Number of inversions of the concatenation (A, B) relative to A + B sorted.
// Throws if A and B overlap.
int InversionLength(const Subset& a, const Subset& b);

struct CircuitRelation {
  Subset x;
  Subset circuit;
  int layer = 0;  // component L of the intersection over X
  LinComb relation;
};

// Plain data: everything needed to compute graded dimensions of the quotient
// algebra. Product rules are stored for every pair of generators whose
// degrees add up to at most `dimension`; absent pairs multiply to zero.
struct Presentation {
  int dimension = 0;  // rank of the essential arrangement
  int deficit = 0;    // torus factor split off by essentialization
  std::vector<std::string> layer_labels;
  std::vector<GeneratorSymbol> generators;  // sorted
  std::map<std::pair<int, int>, LinComb> product_rules;
  std::vector<LinComb> toro_relations;
  std::vector<CircuitRelation> circuit_relations;

  // -1 if not a generator.
  int IndexOf(const GeneratorSymbol& s) const;
  const LinComb* Product(int left, int right) const;
};

// Relation builders over an essential arrangement. Intersections of layers
// are memoized, so a builder is not safe to share between threads.
class PresentationBuilder {
 public:
  explicit PresentationBuilder(ArithmeticMatroid arrangement);

  const ArithmeticMatroid& arrangement() const { return arrangement_; }
  const LayerPoset& poset() const { return poset_; }

  int TorusIndex() const { return 0; }
  // Index of the layer H_i.
  int HypertorusIndex(int i) const;
  // The component of the intersection over A that contains layer `inside`.
  int ComponentContaining(const Subset& a, int inside) const;
  // Poset indices of the components of the intersection over independent A.
  const std::vector<int>& ComponentsOf(const Subset& a) const;
  bool IsValid(const GeneratorSymbol& s) const;

  std::vector<GeneratorSymbol> Generators(int max_degree) const;

  LinComb Product(const GeneratorSymbol& g, const GeneratorSymbol& h) const;
  LinComb Product(const LinComb& r, const GeneratorSymbol& h) const;

  // sum n_i e(T, {}; {i}); throws if `dependency` is not in the kernel.
  LinComb ToroRelation(const IntVector& dependency) const;

  // The relation attached to a corank-one X and a component L of the
  // intersection over X.
  LinComb CircuitRelationFor(const Subset& x, int layer) const;

  // Specialization to unimodular arrangements where every intersection is
  // connected; built without any multiplicity bookkeeping.
  LinComb UnimodularCircuitRelation(const Subset& circuit) const;

  // Expresses e(W, A; B) in the integral generators eta(L, A\C, B+C); the
  // returned symbols are to be read in that basis.
  LinComb IntegralBasisChange(const GeneratorSymbol& s) const;

  Presentation Build(int deficit = 0) const;

 private:
  const std::vector<int>& Intersection(int w, int w_prime) const;

  ArithmeticMatroid arrangement_;
  LayerPoset poset_;
  std::vector<int> hypertori_;
  std::vector<std::vector<int>> components_;  // by mask; empty if dependent
  mutable std::map<std::pair<int, int>, std::vector<int>> intersections_;
};

// Essentializes when needed and builds the full presentation.
Presentation BuildPresentation(const CharacterMatrix& characters);

}  // namespace toric

#endif  // TORIC_PRESENTATION_H_

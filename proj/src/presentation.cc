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

#include "toric/presentation.h"

#include <algorithm>
#include <stdexcept>

namespace toric {
namespace {

Subset Union(const Subset& x, const Subset& y) {
  Subset out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

int CountAtMost(const Subset& s, int j) {
  return static_cast<int>(std::upper_bound(s.begin(), s.end(), j) - s.begin());
}

int SignOf(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

bool operator<(const GeneratorSymbol& x, const GeneratorSymbol& y) {
  if (x.Degree() != y.Degree()) return x.Degree() < y.Degree();
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  return x.layer < y.layer;
}

LinComb LinComb::Single(GeneratorSymbol s, Rational coefficient) {
  LinComb c;
  c.Add(s, coefficient);
  return c;
}

void LinComb::Add(const GeneratorSymbol& s, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

void LinComb::AddScaled(const LinComb& other, const Rational& factor) {
  if (factor == 0) return;
  for (const auto& [s, c] : other.terms_) Add(s, c * factor);
}

LinComb LinComb::Scaled(const Rational& factor) const {
  LinComb out;
  out.AddScaled(*this, factor);
  return out;
}

Rational LinComb::Coefficient(const GeneratorSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

int InversionLength(const Subset& a, const Subset& b) {
  int inversions = 0;
  for (int x : a) {
    for (int y : b) {
      if (x == y) throw std::invalid_argument("InversionLength needs disjoint sets");
      if (x > y) ++inversions;
    }
  }
  return inversions;
}

int Presentation::IndexOf(const GeneratorSymbol& s) const {
  auto it = std::lower_bound(generators.begin(), generators.end(), s);
  if (it == generators.end() || !(*it == s)) return -1;
  return static_cast<int>(it - generators.begin());
}

const LinComb* Presentation::Product(int left, int right) const {
  auto it = product_rules.find({left, right});
  return it == product_rules.end() ? nullptr : &it->second;
}

PresentationBuilder::PresentationBuilder(ArithmeticMatroid arrangement)
    : arrangement_(std::move(arrangement)), poset_(arrangement_) {
  components_.resize(static_cast<std::size_t>(arrangement_.ground()) + 1);
  for (Mask m = 0; m <= arrangement_.ground(); ++m) {
    if (!arrangement_.IsIndependent(m)) continue;
    for (const Layer& w : LayersOf(arrangement_, FromMask(m))) {
      components_[m].push_back(poset_.IndexOf(w));
    }
  }
  for (int i = 0; i < arrangement_.size(); ++i) {
    hypertori_.push_back(components_[Mask{1} << i].front());
  }
}

const std::vector<int>& PresentationBuilder::ComponentsOf(const Subset& a) const {
  const Mask m = ToMask(a);
  if (m > arrangement_.ground() || !arrangement_.IsIndependent(m)) {
    throw std::invalid_argument("components are only tabulated for independent sets");
  }
  return components_[m];
}

int PresentationBuilder::HypertorusIndex(int i) const { return hypertori_.at(i); }

const std::vector<int>& PresentationBuilder::Intersection(int w, int w_prime) const {
  auto key = std::make_pair(w, w_prime);
  auto it = intersections_.find(key);
  if (it != intersections_.end()) return it->second;
  std::vector<int> out;
  if (w == TorusIndex()) {
    out = {w_prime};
  } else if (w_prime == TorusIndex()) {
    out = {w};
  } else {
    for (const Layer& l : IntersectLayers(arrangement_, poset_.layer(w), poset_.layer(w_prime))) {
      const int index = poset_.IndexOf(l);
      if (index < 0) throw std::logic_error("intersection component missing from the poset");
      out.push_back(index);
    }
  }
  return intersections_.emplace(key, std::move(out)).first->second;
}

int PresentationBuilder::ComponentContaining(const Subset& a, int inside) const {
  for (int w : ComponentsOf(a)) {
    if (Contains(poset_.layer(w), poset_.layer(inside))) return w;
  }
  throw std::invalid_argument("no component of the intersection contains the layer");
}

bool PresentationBuilder::IsValid(const GeneratorSymbol& s) const {
  if (s.layer < 0 || s.layer >= poset_.size()) return false;
  if (!std::is_sorted(s.a.begin(), s.a.end()) || !std::is_sorted(s.b.begin(), s.b.end())) {
    return false;
  }
  for (int i : s.a) {
    if (i < 0 || i >= arrangement_.size()) return false;
  }
  for (int i : s.b) {
    if (i < 0 || i >= arrangement_.size()) return false;
  }
  const Subset all = Union(s.a, s.b);
  if (all.size() != s.a.size() + s.b.size()) return false;
  if (!arrangement_.IsIndependent(all)) return false;
  const Layer& w = poset_.layer(s.layer);
  return w.codim == static_cast<int>(s.a.size()) &&
         std::includes(w.support.begin(), w.support.end(), s.a.begin(), s.a.end());
}

std::vector<GeneratorSymbol> PresentationBuilder::Generators(int max_degree) const {
  std::vector<GeneratorSymbol> out;
  for (Mask set = 0; set <= arrangement_.ground(); ++set) {
    if (Popcount(set) > max_degree || !arrangement_.IsIndependent(set)) continue;
    for (Mask a = set;; a = (a - 1) & set) {
      const Subset a_set = FromMask(a);
      const Subset b_set = FromMask(set & ~a);
      for (int w : components_[a]) out.push_back(GeneratorSymbol{w, a_set, b_set});
      if (a == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LinComb PresentationBuilder::Product(const GeneratorSymbol& g, const GeneratorSymbol& h) const {
  const Subset left = Union(g.a, g.b);
  const Subset right = Union(h.a, h.b);
  const Subset all = Union(left, right);
  LinComb out;
  if (all.size() != left.size() + right.size()) return out;  // repeated index
  if (!arrangement_.IsIndependent(all)) return out;
  const Rational sign = SignOf(InversionLength(left, right));
  const Subset a = Union(g.a, h.a);
  const Subset b = Union(g.b, h.b);
  for (int l : Intersection(g.layer, h.layer)) out.Add(GeneratorSymbol{l, a, b}, sign);
  return out;
}

LinComb PresentationBuilder::Product(const LinComb& r, const GeneratorSymbol& h) const {
  LinComb out;
  for (const auto& [g, c] : r.terms()) out.AddScaled(Product(g, h), c);
  return out;
}

LinComb PresentationBuilder::ToroRelation(const IntVector& dependency) const {
  if (static_cast<int>(dependency.size()) != arrangement_.size()) {
    throw std::invalid_argument("dependency length differs from the number of characters");
  }
  const IntVector image = arrangement_.characters().matrix() * dependency;
  for (const Integer& x : image) {
    if (x != 0) throw std::invalid_argument("not a linear dependency among the characters");
  }
  LinComb out;
  for (int i = 0; i < arrangement_.size(); ++i) {
    out.Add(GeneratorSymbol{TorusIndex(), {}, {i}}, Rational(dependency[i]));
  }
  return out;
}

LinComb PresentationBuilder::CircuitRelationFor(const Subset& x, int layer) const {
  const Mask xm = ToMask(x);
  if (arrangement_.Rank(x) + 1 != static_cast<int>(x.size())) {
    throw std::invalid_argument("X must have rank |X| - 1");
  }
  const Layer& l = poset_.layer(layer);
  if (l.codim != arrangement_.Rank(xm) ||
      !std::includes(l.support.begin(), l.support.end(), x.begin(), x.end())) {
    throw std::invalid_argument("layer is not a component of the intersection over X");
  }
  const Subset circuit = arrangement_.UniqueCircuit(x);
  const CircuitDependency dep = arrangement_.Dependency(circuit);
  LinComb out;
  for (int j : circuit) {
    const Mask others = ToMask(circuit) & ~(Mask{1} << j);
    for (Mask b = others;; b = (b - 1) & others) {
      if (Popcount(b) % 2 == 0) {
        const Mask a = xm & ~b & ~(Mask{1} << j);
        const Subset a_set = FromMask(a);
        const Subset b_set = FromMask(b);
        int c_b = 1;
        for (int i : b_set) c_b *= dep.signs.at(i);
        Rational coefficient(arrangement_.Multiplicity(a), arrangement_.Multiplicity(a | b));
        coefficient.canonicalize();
        coefficient *= SignOf(CountAtMost(a_set, j)) * c_b;
        out.Add(GeneratorSymbol{ComponentContaining(a_set, layer), a_set, b_set}, coefficient);
      }
      if (b == 0) break;
    }
  }
  return out;
}

LinComb PresentationBuilder::UnimodularCircuitRelation(const Subset& circuit) const {
  if (!arrangement_.IsUnimodular()) throw std::invalid_argument("arrangement is not unimodular");
  const CircuitDependency dep = arrangement_.Dependency(circuit);
  LinComb out;
  for (int j : circuit) {
    Subset rest;
    for (int i : circuit) {
      if (i != j) rest.push_back(i);
    }
    // Split rest = A + B over all 2^|rest| choices, keeping even |B|.
    const int k = static_cast<int>(rest.size());
    for (int bits = 0; bits < (1 << k); ++bits) {
      Subset a_set;
      Subset b_set;
      int c_b = 1;
      for (int t = 0; t < k; ++t) {
        if (bits & (1 << t)) {
          b_set.push_back(rest[t]);
          c_b *= dep.signs.at(rest[t]);
        } else {
          a_set.push_back(rest[t]);
        }
      }
      if (b_set.size() % 2 != 0) continue;
      const int w = ComponentsOf(a_set).front();
      out.Add(GeneratorSymbol{w, a_set, b_set}, Rational(SignOf(CountAtMost(a_set, j)) * c_b));
    }
  }
  return out;
}

LinComb PresentationBuilder::IntegralBasisChange(const GeneratorSymbol& s) const {
  if (!IsValid(s)) throw std::invalid_argument("not a valid generator");
  const Mask a = ToMask(s.a);
  LinComb out;
  for (Mask c = a;; c = (c - 1) & a) {
    const Subset rest = FromMask(a & ~c);
    Rational coefficient(arrangement_.Multiplicity(a & ~c), arrangement_.Multiplicity(a));
    coefficient.canonicalize();
    coefficient *= SignOf(Popcount(c)) * (1 << Popcount(a & ~c));
    const Subset b = Union(s.b, FromMask(c));
    out.Add(GeneratorSymbol{ComponentContaining(rest, s.layer), rest, b}, coefficient);
    if (c == 0) break;
  }
  return out;
}

Presentation PresentationBuilder::Build(int deficit) const {
  Presentation p;
  p.dimension = arrangement_.Rank(arrangement_.ground());
  if (p.dimension != arrangement_.dimension()) {
    throw std::invalid_argument("presentation builder needs an essential arrangement");
  }
  p.deficit = deficit;
  for (int i = 0; i < poset_.size(); ++i) p.layer_labels.push_back(poset_.Label(i));
  p.generators = Generators(p.dimension);

  const int count = static_cast<int>(p.generators.size());
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (p.generators[i].Degree() + p.generators[j].Degree() > p.dimension) continue;
      LinComb prod = Product(p.generators[i], p.generators[j]);
      if (!prod.IsZero()) p.product_rules.emplace(std::make_pair(i, j), std::move(prod));
    }
  }

  const IntMatrix kernel = KernelLattice(arrangement_.characters().matrix());
  for (int c = 0; c < kernel.cols(); ++c) p.toro_relations.push_back(ToroRelation(kernel.Column(c)));

  for (const Subset& x : arrangement_.CorankOneSubsets()) {
    const Subset circuit = arrangement_.UniqueCircuit(x);
    Subset basis;
    for (int i : x) {
      if (i != circuit.front()) basis.push_back(i);
    }
    for (int l : ComponentsOf(basis)) {
      const Subset& support = poset_.layer(l).support;
      if (!std::includes(support.begin(), support.end(), x.begin(), x.end())) continue;
      p.circuit_relations.push_back(CircuitRelation{x, circuit, l, CircuitRelationFor(x, l)});
    }
  }
  return p;
}

Presentation BuildPresentation(const CharacterMatrix& characters) {
  EssentialArrangement essential = Essentialize(characters);
  PresentationBuilder builder{ArithmeticMatroid(std::move(essential.characters))};
  return builder.Build(essential.deficit);
}

}  // namespace toric

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

#include "toric/verifier.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "toric/layers.h"

namespace toric {
namespace {

std::int64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::string Render(const GradedDims& dims) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? ", " : "") << dims[i];
  out << "]";
  return out.str();
}

// r * s expanded through the stored product rules.
SparseRationalRow ProductRow(const Presentation& p, const LinComb& r, int s) {
  LinComb out;
  for (const auto& [g, c] : r.terms()) {
    const int g_index = p.IndexOf(g);
    if (g_index < 0) throw std::invalid_argument("relation uses an unknown symbol");
    if (const LinComb* rule = p.Product(g_index, s)) out.AddScaled(*rule, c);
  }
  SparseRationalRow row;
  for (const auto& [g, c] : out.terms()) row.emplace_back(p.IndexOf(g), c);
  std::sort(row.begin(), row.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return row;
}

int RelationDegree(const LinComb& r) {
  return r.IsZero() ? -1 : r.terms().begin()->first.Degree();
}

// Top Betti number of the complement of the central hyperplane arrangement
// with ground set `support`, from Whitney's formula for its characteristic
// polynomial.
std::int64_t TopBetti(const ArithmeticMatroid& arrangement, Mask support, int rank) {
  std::int64_t sum = 0;
  for (Mask s = support;; s = (s - 1) & support) {
    if (arrangement.Rank(s) == rank) sum += (Popcount(s) + rank) % 2 == 0 ? 1 : -1;
    if (s == 0) break;
  }
  return sum;
}

// A basis of the whole ground set containing A, chosen greedily by index.
Subset CompleteToBasis(const ArithmeticMatroid& arrangement, const Subset& a) {
  Mask m = ToMask(a);
  for (int i = 0; i < arrangement.size(); ++i) {
    const Mask next = m | (Mask{1} << i);
    if (next != m && arrangement.IsIndependent(next)) m = next;
  }
  return FromMask(m & ~ToMask(a));
}

Check MakeCheck(std::string name, bool passed, std::string detail = "") {
  return Check{std::move(name), passed, std::move(detail)};
}

}  // namespace

GradedDims TimesTorus(const GradedDims& dims, int power) {
  GradedDims out = dims;
  for (int step = 0; step < power; ++step) {
    out.push_back(0);
    for (std::size_t i = out.size() - 1; i > 0; --i) out[i] += out[i - 1];
  }
  return out;
}

std::vector<std::vector<SparseRow>> RelationRowsByDegree(const Presentation& p) {
  const int d = p.dimension;
  std::vector<const LinComb*> relations;
  for (const LinComb& r : p.toro_relations) relations.push_back(&r);
  for (const CircuitRelation& r : p.circuit_relations) relations.push_back(&r.relation);

  std::vector<std::pair<int, int>> pairs;  // (relation, symbol)
  for (int r = 0; r < static_cast<int>(relations.size()); ++r) {
    const int deg = RelationDegree(*relations[r]);
    if (deg < 0) continue;
    for (int s = 0; s < static_cast<int>(p.generators.size()); ++s) {
      if (deg + p.generators[s].Degree() <= d) pairs.emplace_back(r, s);
    }
  }

  std::vector<SparseRow> rows(pairs.size());
  const int count = static_cast<int>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    rows[i] = ToPrimitiveIntegerRow(ProductRow(p, *relations[pairs[i].first], pairs[i].second));
  }

  std::vector<std::vector<SparseRow>> by_degree(d + 1);
  for (int i = 0; i < count; ++i) {
    const int k = RelationDegree(*relations[pairs[i].first]) +
                  p.generators[pairs[i].second].Degree();
    if (!rows[i].empty()) by_degree[k].push_back(std::move(rows[i]));
  }
  return by_degree;
}

GradedDims QuotientDimensions(const Presentation& p, RankKernel kernel) {
  const int d = p.dimension;
  const std::vector<std::vector<SparseRow>> by_degree = RelationRowsByDegree(p);
  GradedDims dims(d + 1, 0);
  for (const GeneratorSymbol& g : p.generators) ++dims[g.Degree()];
  const int columns = static_cast<int>(p.generators.size());
  for (int k = 0; k <= d; ++k) {
    const int rank = kernel == RankKernel::kParallel ? RankParallel(by_degree[k], columns)
                                                     : RankSerial(by_degree[k], columns);
    dims[k] -= rank;
  }
  return TimesTorus(dims, p.deficit);
}

GradedDims GradedDecompositionDims(const CharacterMatrix& characters) {
  const ArithmeticMatroid arrangement(characters);
  const LayerPoset poset(arrangement);
  const int d = arrangement.dimension();
  GradedDims beta(d + 1, 0);
  for (const Layer& w : poset.layers()) {
    // H*(W) has Poincare polynomial (1+t)^{d-k}; the local factor sits in degree k.
    const int k = w.codim;
    const std::int64_t top = TopBetti(arrangement, ToMask(w.support), k);
    for (int j = k; j <= d; ++j) beta[j] += top * Binomial(d - k, j - k);
  }
  return beta;
}

GradedDims SpanningSetCounts(const CharacterMatrix& characters) {
  const EssentialArrangement essential = Essentialize(characters);
  const ArithmeticMatroid arrangement(essential.characters);
  const LayerPoset poset(arrangement);
  GradedDims counts(arrangement.dimension() + 1, 0);
  for (const Layer& w : poset.layers()) {
    const LocalArrangement local = MakeLocalArrangement(arrangement, w);
    for (const Subset& a : local.NbcSets(arrangement, w.codim)) {
      const int complement = static_cast<int>(CompleteToBasis(arrangement, a).size());
      for (int b = 0; b <= complement; ++b) counts[w.codim + b] += Binomial(complement, b);
    }
  }
  return TimesTorus(counts, essential.deficit);
}

bool VerifyReport::Passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VerifyReport Verify(const CharacterMatrix& characters) {
  VerifyReport report;
  const ArithmeticMatroid ambient(characters);
  const LayerPoset ambient_poset(ambient);
  const int d = ambient.dimension();

  report.poincare = PoincarePolynomial(ambient, ambient_poset);
  report.decomposition = GradedDecompositionDims(characters);

  const EssentialArrangement essential = Essentialize(characters);
  const PresentationBuilder builder{ArithmeticMatroid(essential.characters)};
  const Presentation presentation = builder.Build(essential.deficit);
  report.quotient = QuotientDimensions(presentation);

  report.checks.push_back(MakeCheck(
      "three_way_agreement",
      report.poincare == report.quotient && report.quotient == report.decomposition,
      "poincare " + Render(report.poincare) + ", quotient " + Render(report.quotient) +
          ", decomposition " + Render(report.decomposition)));

  {
    std::int64_t at_minus_one = 0;
    for (int j = 0; j <= d; ++j) at_minus_one += (j % 2 == 0 ? 1 : -1) * report.poincare[j];
    const std::vector<std::int64_t> n = LocalNbcCounts(ambient, ambient_poset);
    const std::int64_t expected = (d % 2 == 0 ? 1 : -1) * n[d];
    report.checks.push_back(MakeCheck("euler_characteristic", at_minus_one == expected,
                                      "Poin(-1) = " + std::to_string(at_minus_one) +
                                          ", (-1)^d N_d = " + std::to_string(expected)));
  }

  {
    bool counts_ok = true;
    bool bounds_ok = true;
    std::string detail;
    for (Mask m = 1; m <= ambient.ground(); ++m) {
      if (!ambient.IsIndependent(m)) continue;
      const Subset a = FromMask(m);
      const std::vector<Layer> components = LayersOf(ambient, a);
      if (Integer(static_cast<long>(components.size())) != ambient.Multiplicity(m)) {
        counts_ok = false;
        detail = "mask " + std::to_string(m);
      }
      std::vector<int> expected;
      for (const Layer& w : components) expected.push_back(ambient_poset.IndexOf(w));
      std::sort(expected.begin(), expected.end());
      if (ambient_poset.MinimalUpperBounds(a) != expected) bounds_ok = false;
    }
    report.checks.push_back(MakeCheck("layer_count_equals_multiplicity", counts_ok, detail));
    report.checks.push_back(MakeCheck("minimal_upper_bounds_are_components", bounds_ok));
  }

  const ArithmeticMatroid& essential_matroid = builder.arrangement();
  {
    bool degree_ok = true;
    bool preimages_ok = true;
    std::string detail;
    for (const Subset& x : essential_matroid.CorankOneSubsets()) {
      CoveringData cover;
      try {
        cover = ComputeCoveringData(essential_matroid, x);
      } catch (const std::logic_error& e) {
        degree_ok = false;
        detail = e.what();
        continue;
      }
      const Mask xm = ToMask(x);
      for (int j : cover.circuit) {
        const Mask others = ToMask(cover.circuit) & ~(Mask{1} << j);
        for (Mask b = others;; b = (b - 1) & others) {
          if (Popcount(b) % 2 == 0) {
            const Subset a = FromMask(xm & ~b & ~(Mask{1} << j));
            const Rational count = CoverPreimageCount(essential_matroid, cover, a, j);
            if (count <= 0 || !IsIntegral(count)) preimages_ok = false;
          }
          if (b == 0) break;
        }
      }
    }
    report.checks.push_back(MakeCheck("covering_degree_independent_of_i", degree_ok, detail));
    report.checks.push_back(MakeCheck("cover_preimage_counts_integral", preimages_ok));
  }

  {
    bool unit_ok = true;
    bool denominators_ok = true;
    for (const CircuitRelation& r : presentation.circuit_relations) {
      Integer bound = 1;
      const Mask xm = ToMask(r.x);
      for (int j : r.circuit) {
        const Integer& m = essential_matroid.Multiplicity(xm & ~(Mask{1} << j));
        mpz_lcm(bound.get_mpz_t(), bound.get_mpz_t(), m.get_mpz_t());
      }
      LinComb eta;
      for (const auto& [g, c] : r.relation.terms()) {
        if (g.b.empty() && c != 1 && c != -1) unit_ok = false;
        eta.AddScaled(builder.IntegralBasisChange(g), c);
      }
      for (const auto& [g, c] : eta.terms()) {
        if (!mpz_divisible_p(bound.get_mpz_t(), c.get_den_mpz_t())) denominators_ok = false;
      }
    }
    report.checks.push_back(MakeCheck("empty_b_coefficients_are_units", unit_ok));
    report.checks.push_back(MakeCheck("integral_rewrite_denominators", denominators_ok));
  }

  {
    bool commutative = true;
    const int count = static_cast<int>(presentation.generators.size());
    for (int i = 0; i < count && commutative; ++i) {
      for (int j = 0; j < count; ++j) {
        const LinComb* left = presentation.Product(i, j);
        const LinComb* right = presentation.Product(j, i);
        if ((left == nullptr) != (right == nullptr)) {
          commutative = false;
          break;
        }
        if (left == nullptr) continue;
        const int sign = presentation.generators[i].Degree() *
                                         presentation.generators[j].Degree() % 2 == 0 ? 1 : -1;
        if (!(*left == right->Scaled(sign))) {
          commutative = false;
          break;
        }
      }
    }
    report.checks.push_back(MakeCheck("graded_commutativity", commutative));
  }

  {
    const GradedDims spanning = SpanningSetCounts(characters);
    report.checks.push_back(MakeCheck("spanning_set_bound", spanning == report.poincare,
                                      "spanning " + Render(spanning)));
  }
  return report;
}

}  // namespace toric

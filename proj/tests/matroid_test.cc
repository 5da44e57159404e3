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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.h"
#include "toric/layers.h"
#include "toric/matroid.h"

namespace toric {
namespace {

ArithmeticMatroid B() { return ArithmeticMatroid(CharacterMatrix(IntMatrix::FromRows({{3, 0, 1}, {1, 1, 0}}))); }
ArithmeticMatroid BPrime() {
  return ArithmeticMatroid(CharacterMatrix(IntMatrix::FromRows({{1, 0, 1}, {1, 1, 0}})));
}

TEST_CASE("character validation") {
  CHECK_THROWS_WITH_AS(CharacterMatrix(IntMatrix::FromRows({{1, 0}, {0, 0}})),
                       "zero character at index 1", std::invalid_argument);
  CHECK_THROWS_WITH_AS(CharacterMatrix(IntMatrix::FromRows({{2}, {4}})),
                       "non-primitive character at index 0", std::invalid_argument);
}

TEST_CASE("multiplicities of the three-point arrangement") {
  const ArithmeticMatroid b = B();
  CHECK(b.Multiplicity(Subset{0, 1}) == 3);
  CHECK(b.Multiplicity(Subset{}) == 1);
  for (const Subset& s : {Subset{0}, Subset{1}, Subset{2}, Subset{0, 2}, Subset{1, 2}, Subset{0, 1, 2}}) {
    CHECK(b.Multiplicity(s) == 1);
  }
  CHECK(BPrime().IsUnimodular());
  CHECK_FALSE(b.IsUnimodular());
}

TEST_CASE("circuits") {
  CHECK(B().Circuits() == std::vector<Subset>{{0, 1, 2}});
  const ArithmeticMatroid free(CharacterMatrix(IntMatrix::Identity(3)));
  CHECK(free.Circuits().empty());
  const ArithmeticMatroid parallel(CharacterMatrix(IntMatrix::FromRows({{1, 1}, {0, 0}})));
  CHECK(parallel.Circuits() == std::vector<Subset>{{0, 1}});
}

TEST_CASE("circuit dependencies") {
  const CircuitDependency b = B().Dependency({0, 1, 2});
  CHECK(b.coefficients.at(0) == 1);
  CHECK(b.coefficients.at(1) == -1);
  CHECK(b.coefficients.at(2) == -3);
  CHECK(b.signs == std::map<int, int>{{0, 1}, {1, -1}, {2, -1}});

  const CircuitDependency bp = BPrime().Dependency({0, 1, 2});
  CHECK(bp.coefficients.at(0) == 1);
  CHECK(bp.coefficients.at(1) == -1);
  CHECK(bp.coefficients.at(2) == -1);

  const ArithmeticMatroid parallel(CharacterMatrix(IntMatrix::FromRows({{1, 1}, {0, 0}})));
  const CircuitDependency pd = parallel.Dependency({0, 1});
  CHECK(pd.coefficients.at(0) == 1);
  CHECK(pd.coefficients.at(1) == -1);
  CHECK_THROWS_AS(B().Dependency({0, 1}), std::invalid_argument);
}

TEST_CASE("nbc sets of the three-point arrangement") {
  const ArithmeticMatroid b = B();
  CHECK(b.NbcSets(2) == std::vector<Subset>{{0, 1}, {0, 2}});
  CHECK(b.NbcSets(0) == std::vector<Subset>{{}});
  CHECK(b.NbcSets(1) == std::vector<Subset>{{0}, {1}, {2}});
}

TEST_CASE("corank-one subsets") {
  const ArithmeticMatroid c(CharacterMatrix(
      IntMatrix::FromRows({{1, 0, 1, 1}, {0, 1, 1, -1}, {0, 0, 0, 3}})));
  CHECK(c.CorankOneSubsets() == std::vector<Subset>{{0, 1, 2}, {0, 1, 2, 3}});
  CHECK(c.UniqueCircuit({0, 1, 2, 3}) == Subset{0, 1, 2});
}

TEST_CASE("random matroids against brute-force oracles") {
  int trial = 0;
  for (const IntMatrix& chi : oracle::RandomSuite(101, 120)) {
    CAPTURE(trial++);
    const ArithmeticMatroid m{CharacterMatrix(chi)};
    CHECK(m.Circuits() == oracle::BruteCircuits(chi));
    Subset all;
    for (int i = 0; i < m.size(); ++i) all.push_back(i);
    for (Mask s = 0; s <= m.ground(); ++s) {
      const IntMatrix cols = chi.SelectColumns(FromMask(s));
      CHECK(m.Rank(s) == oracle::RankByMinors(cols));
      CHECK(m.Multiplicity(s) == oracle::MultiplicityByMinors(cols));
    }
    for (int k = 0; k <= m.dimension(); ++k) {
      const std::vector<Subset> nbc = m.NbcSets(k);
      CHECK(nbc == oracle::BruteNbc(chi, all, k));
      for (const Subset& s : nbc) CHECK(m.IsIndependent(s));
    }
    for (const Subset& c : m.Circuits()) {
      // Dropping the minimum gives a broken circuit; any element returns it to a circuit.
      CHECK(m.IsIndependent(Subset(c.begin() + 1, c.end())));
      const CircuitDependency dep = m.Dependency(c);
      CHECK(dep.coefficients.at(c.front()) > 0);
      IntVector sum(m.dimension(), 0);
      for (int i : c) {
        for (int r = 0; r < m.dimension(); ++r) sum[r] += dep.coefficients.at(i) * chi(r, i);
      }
      for (const Integer& x : sum) CHECK(x == 0);
      // n_i det[C \ j] = +- n_j det[C \ i], with determinants taken in a
      // basis of the saturated span of C.
      const EssentialArrangement local = Essentialize(CharacterMatrix(chi.SelectColumns(c)));
      const IntMatrix& basis = local.characters.matrix();
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
          std::vector<int> without_i, without_j;
          for (std::size_t k = 0; k < c.size(); ++k) {
            if (k != i) without_i.push_back(static_cast<int>(k));
            if (k != j) without_j.push_back(static_cast<int>(k));
          }
          const Integer det_i = oracle::MultiplicityByMinors(basis.SelectColumns(without_i));
          const Integer det_j = oracle::MultiplicityByMinors(basis.SelectColumns(without_j));
          CHECK(abs(dep.coefficients.at(c[i]) * det_j) == abs(dep.coefficients.at(c[j]) * det_i));
        }
      }
    }
  }
}

}  // namespace
}  // namespace toric

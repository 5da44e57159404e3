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

#include <random>

#include "oracles.h"
#include "toric/layers.h"
#include "toric/verifier.h"

namespace toric {
namespace {

CharacterMatrix Chars(std::initializer_list<std::initializer_list<long>> rows) {
  return CharacterMatrix(IntMatrix::FromRows(rows));
}

TEST_CASE("quotient dimensions of the reference arrangements") {
  CHECK(QuotientDimensions(BuildPresentation(Chars({{3, 0, 1}, {1, 1, 0}}))) == GradedDims{1, 5, 8});
  CHECK(QuotientDimensions(BuildPresentation(Chars({{1, 0, 1}, {1, 1, 0}}))) == GradedDims{1, 5, 6});
  CHECK(QuotientDimensions(BuildPresentation(CharacterMatrix(IntMatrix(2, 0)))) ==
        GradedDims{1, 2, 1});
}

TEST_CASE("graded decomposition of the reference arrangements") {
  CHECK(GradedDecompositionDims(Chars({{3, 0, 1}, {1, 1, 0}})) == GradedDims{1, 5, 8});
  CHECK(GradedDecompositionDims(Chars({{1, 0, 1}, {1, 1, 0}})) == GradedDims{1, 5, 6});
  CHECK(GradedDecompositionDims(CharacterMatrix(IntMatrix(2, 0))) == GradedDims{1, 2, 1});
}

TEST_CASE("torus factor") {
  CHECK(TimesTorus({1, 1}, 2) == GradedDims{1, 3, 3, 1});
  CHECK(TimesTorus({1, 5, 8}, 0) == GradedDims{1, 5, 8});
  // A single hypertorus in (C*)^2: the complement is C* x (C* minus a point).
  const CharacterMatrix line = Chars({{1}, {0}});
  CHECK(QuotientDimensions(BuildPresentation(line)) == GradedDims{1, 3, 2});
  CHECK(GradedDecompositionDims(line) == GradedDims{1, 3, 2});
  CHECK(SpanningSetCounts(line) == GradedDims{1, 3, 2});
}

TEST_CASE("verify passes on the reference arrangements") {
  const VerifyReport b = Verify(Chars({{3, 0, 1}, {1, 1, 0}}));
  CHECK(b.Passed());
  CHECK(b.quotient == GradedDims{1, 5, 8});
  const VerifyReport bp = Verify(Chars({{1, 0, 1}, {1, 1, 0}}));
  CHECK(bp.Passed());
  CHECK(bp.quotient == GradedDims{1, 5, 6});
  const VerifyReport c = Verify(Chars({{1, 0, 1, 1}, {0, 1, 1, -1}, {0, 0, 0, 3}}));
  CHECK(c.Passed());
  CHECK(c.quotient == c.poincare);
}

TEST_CASE("serial and parallel rank kernels give the same quotient") {
  int trial = 0;
  for (const IntMatrix& chi : oracle::RandomSuite(606, 40)) {
    CAPTURE(trial++);
    const Presentation p = BuildPresentation(CharacterMatrix(chi));
    CHECK(QuotientDimensions(p, RankKernel::kSerial) == QuotientDimensions(p, RankKernel::kParallel));
  }
}

TEST_CASE("random 2 x 3 arrangements pass verify") {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 60; ++trial) {
    CAPTURE(trial);
    const IntMatrix chi = oracle::RandomCharacters(rng, 2, 3, 3, false);
    const VerifyReport report = Verify(CharacterMatrix(chi));
    CHECK(report.Passed());
    CHECK(report.poincare == oracle::PoincareByCharacteristic(chi));
  }
}

TEST_CASE("euler characteristic: alternating sum equals the signed top nbc count") {
  for (const IntMatrix& chi : oracle::RandomSuite(808, 80)) {
    const ArithmeticMatroid m{CharacterMatrix(chi)};
    const LayerPoset poset(m);
    const std::vector<std::int64_t> poin = PoincarePolynomial(m, poset);
    const std::vector<std::int64_t> n = LocalNbcCounts(m, poset);
    const int d = m.dimension();
    std::int64_t alternating = 0;
    for (int j = 0; j <= d; ++j) alternating += (j % 2 == 0 ? 1 : -1) * poin[j];
    CHECK(alternating == (d % 2 == 0 ? 1 : -1) * n[d]);
  }
  // With a split torus factor the alternating sum vanishes.
  const GradedDims split = SpanningSetCounts(Chars({{1, 0}, {1, 1}, {0, 0}}));
  std::int64_t alternating = 0;
  for (std::size_t j = 0; j < split.size(); ++j) alternating += (j % 2 == 0 ? 1 : -1) * split[j];
  CHECK(alternating == 0);
}

TEST_CASE("non-essential random arrangements") {
  std::mt19937_64 rng(909);
  int checked = 0;
  while (checked < 30) {
    const IntMatrix chi = oracle::RandomCharacters(rng, 3, 1 + static_cast<int>(rng() % 2), 2, false);
    if (oracle::RankByMinors(chi) == 3) continue;
    ++checked;
    const VerifyReport report = Verify(CharacterMatrix(chi));
    CHECK(report.Passed());
    CHECK(report.poincare == oracle::PoincareByCharacteristic(chi));
    CHECK(report.quotient.size() == 4);
  }
}

}  // namespace
}  // namespace toric

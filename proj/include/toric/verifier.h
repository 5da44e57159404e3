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

// Cross-checks of the presentation against purely combinatorial counts.

#ifndef TORIC_VERIFIER_H_
#define TORIC_VERIFIER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "toric/matroid.h"
#include "toric/presentation.h"
#include "toric/sparse_rank.h"

namespace toric {

// Graded dimensions indexed by cohomological degree 0..d.
using GradedDims = std::vector<std::int64_t>;

enum class RankKernel { kSerial, kParallel };

// Rows r * s for every relation r and generator s with deg r + deg s <= d,
// bucketed by degree and expressed in generator indices. Built in parallel.
std::vector<std::vector<SparseRow>> RelationRowsByDegree(const Presentation& p);

// Dimension in each degree of the span of the generators modulo the ideal
// spanned by relation * generator products, tensored with the cohomology of
// the split-off torus factor.
GradedDims QuotientDimensions(const Presentation& p, RankKernel kernel = RankKernel::kParallel);

// Sum over layers W of codim k of (1 + t)^{d - k} t^k times the top Betti
// number of the local arrangement at W, the latter from Whitney's formula
// rather than from nbc sets.
GradedDims GradedDecompositionDims(const CharacterMatrix& characters);

// Generators e(W, A; B) with A an nbc basis of the local arrangement of W and
// B inside a fixed complement of A in a basis, counted by degree.
GradedDims SpanningSetCounts(const CharacterMatrix& characters);

// Multiplies by (1 + t)^power.
GradedDims TimesTorus(const GradedDims& dims, int power);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  GradedDims poincare;
  GradedDims quotient;
  GradedDims decomposition;
  std::vector<Check> checks;

  bool Passed() const;
};

VerifyReport Verify(const CharacterMatrix& characters);

}  // namespace toric

#endif  // TORIC_VERIFIER_H_

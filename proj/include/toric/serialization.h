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

// JSON input specs and JSON / text renderings of every result type. All
// JSON documents carry "schema": "toric-os/1"; rationals are "p/q" strings.

#ifndef TORIC_SERIALIZATION_H_
#define TORIC_SERIALIZATION_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "toric/layers.h"
#include "toric/matroid.h"
#include "toric/presentation.h"
#include "toric/verifier.h"

namespace toric {

inline constexpr char kSchema[] = "toric-os/1";

// Malformed or unsupported input.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ArrangementSpec {
  int dimension = 0;
  std::vector<IntVector> characters;
  std::vector<std::string> names;  // empty or one per character
  std::vector<int> order;          // empty or a permutation of the indices
  std::map<std::string, std::string> layer_names;  // default label -> name
};

// Accepts "d" or "dimension", "characters", and the optional "names",
// "order", "central" and "layer_names". Throws SpecError.
ArrangementSpec ParseArrangementSpec(const std::string& text);

// Validates the characters, divides by the content when `normalize` is set,
// and applies `order` (position k receives the character order[k]). The
// spec's own order is used when `order` is empty. Names follow the columns.
CharacterMatrix ResolveCharacters(ArrangementSpec& spec, bool normalize,
                                  const std::vector<int>& order = {});

std::string RationalToString(const Rational& q);
Rational RationalFromString(const std::string& s);

nlohmann::json MatroidToJson(const ArithmeticMatroid& arrangement,
                             const std::vector<std::string>& names);
std::string MatroidToText(const ArithmeticMatroid& arrangement);

nlohmann::json LayersToJson(const LayerPoset& poset,
                            const std::map<std::string, std::string>& layer_names);
std::string LayersToText(const LayerPoset& poset,
                         const std::map<std::string, std::string>& layer_names);

nlohmann::json PoincareToJson(const GradedDims& coefficients);
// "[1, 5, 8]"
std::string PoincareToText(const GradedDims& coefficients);

nlohmann::json PresentationToJson(const Presentation& p);
Presentation PresentationFromJson(const nlohmann::json& j);

// "e(L1_0;{0};{})" with the layer renamed through `layer_names`.
std::string SymbolToText(const GeneratorSymbol& s, const std::vector<std::string>& labels,
                         const std::map<std::string, std::string>& layer_names);
// "e(...) - e(...) + 1/3 e(...) = 0"
std::string RelationToText(const LinComb& r, const std::vector<std::string>& labels,
                           const std::map<std::string, std::string>& layer_names);
std::string PresentationToText(const Presentation& p,
                               const std::map<std::string, std::string>& layer_names);

nlohmann::json ReportToJson(const VerifyReport& report);
std::string ReportToText(const VerifyReport& report);

}  // namespace toric

#endif  // TORIC_SERIALIZATION_H_

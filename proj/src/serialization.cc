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

#include "toric/serialization.h"

#include <algorithm>
#include <sstream>

namespace toric {
namespace {

using nlohmann::json;

json IntegerToJson(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json SubsetToJson(const Subset& s) { return json(s); }

Subset SubsetFromJson(const json& j) {
  Subset s = j.get<Subset>();
  if (!std::is_sorted(s.begin(), s.end())) throw SpecError("subset is not sorted");
  return s;
}

std::string SetText(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string DisplayName(const std::string& label,
                        const std::map<std::string, std::string>& layer_names) {
  auto it = layer_names.find(label);
  return it == layer_names.end() ? label : it->second;
}

json TermsToJson(const Presentation& p, const LinComb& c) {
  json terms = json::array();
  for (const auto& [g, q] : c.terms()) {
    terms.push_back({{"coefficient", RationalToString(q)}, {"generator", p.IndexOf(g)}});
  }
  return terms;
}

LinComb TermsFromJson(const std::vector<GeneratorSymbol>& generators, const json& j) {
  LinComb c;
  for (const json& t : j) {
    const int index = t.at("generator").get<int>();
    if (index < 0 || index >= static_cast<int>(generators.size())) {
      throw SpecError("generator index out of range");
    }
    c.Add(generators[index], RationalFromString(t.at("coefficient").get<std::string>()));
  }
  return c;
}

}  // namespace

ArrangementSpec ParseArrangementSpec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("malformed spec: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("malformed spec: expected a JSON object");
  ArrangementSpec spec;
  try {
    const json* d = j.contains("d") ? &j["d"] : j.contains("dimension") ? &j["dimension"] : nullptr;
    if (d == nullptr || !d->is_number_integer() || d->get<int>() < 0) {
      throw SpecError("malformed spec: missing nonnegative integer field \"d\"");
    }
    spec.dimension = d->get<int>();
    if (j.contains("central") && !j["central"].get<bool>()) {
      throw SpecError("non-central arrangement is not supported");
    }
    if (!j.contains("characters") || !j["characters"].is_array()) {
      throw SpecError("malformed spec: missing array field \"characters\"");
    }
    for (const json& c : j["characters"]) {
      if (!c.is_array() || static_cast<int>(c.size()) != spec.dimension) {
        throw SpecError("malformed spec: character of the wrong length");
      }
      IntVector chi;
      for (const json& x : c) {
        if (!x.is_number_integer()) throw SpecError("malformed spec: non-integer entry");
        chi.emplace_back(static_cast<long>(x.get<std::int64_t>()));
      }
      spec.characters.push_back(std::move(chi));
    }
    if (j.contains("names")) spec.names = j["names"].get<std::vector<std::string>>();
    if (j.contains("order")) spec.order = j["order"].get<std::vector<int>>();
    if (j.contains("layer_names")) {
      spec.layer_names = j["layer_names"].get<std::map<std::string, std::string>>();
    }
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed spec: ") + e.what());
  }
  if (!spec.names.empty() && spec.names.size() != spec.characters.size()) {
    throw SpecError("malformed spec: names and characters differ in length");
  }
  if (static_cast<int>(spec.characters.size()) > kMaxGroundSetSize) {
    throw SpecError("too many characters (at most " + std::to_string(kMaxGroundSetSize) + ")");
  }
  return spec;
}

CharacterMatrix ResolveCharacters(ArrangementSpec& spec, bool normalize,
                                  const std::vector<int>& order) {
  const int n = static_cast<int>(spec.characters.size());
  for (int i = 0; i < n; ++i) {
    IntVector& chi = spec.characters[i];
    const Integer content = Content(chi);
    if (content == 0) throw SpecError("zero character at index " + std::to_string(i));
    if (content != 1) {
      if (!normalize) throw SpecError("non-primitive character at index " + std::to_string(i));
      for (Integer& x : chi) x /= content;
    }
  }
  const std::vector<int>& perm = order.empty() ? spec.order : order;
  if (!perm.empty()) {
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;
    if (sorted != identity) throw SpecError("order is not a permutation of the indices");
    std::vector<IntVector> characters;
    std::vector<std::string> names;
    for (int k : perm) {
      characters.push_back(spec.characters[k]);
      if (!spec.names.empty()) names.push_back(spec.names[k]);
    }
    spec.characters = std::move(characters);
    spec.names = std::move(names);
    spec.order.clear();
  }
  return CharacterMatrix(IntMatrix::FromColumns(spec.dimension, spec.characters));
}

std::string RationalToString(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational RationalFromString(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw SpecError("bad rational \"" + s + "\"");
  q.canonicalize();
  return q;
}

json MatroidToJson(const ArithmeticMatroid& arrangement, const std::vector<std::string>& names) {
  json j;
  j["schema"] = kSchema;
  j["d"] = arrangement.dimension();
  json characters = json::array();
  for (int i = 0; i < arrangement.size(); ++i) {
    json chi = json::array();
    for (const Integer& x : arrangement.characters().Character(i)) chi.push_back(IntegerToJson(x));
    characters.push_back(chi);
  }
  j["characters"] = characters;
  if (!names.empty()) j["names"] = names;
  json circuits = json::array();
  for (const Subset& c : arrangement.Circuits()) {
    const CircuitDependency dep = arrangement.Dependency(c);
    json coefficients = json::array();
    for (int i : c) coefficients.push_back(IntegerToJson(dep.coefficients.at(i)));
    circuits.push_back({{"elements", SubsetToJson(c)}, {"dependency", coefficients}});
  }
  j["circuits"] = circuits;
  json table = json::array();
  for (Mask m = 0; m <= arrangement.ground(); ++m) {
    table.push_back({{"subset", SubsetToJson(FromMask(m))},
                     {"rank", arrangement.Rank(m)},
                     {"multiplicity", IntegerToJson(arrangement.Multiplicity(m))}});
  }
  j["multiplicities"] = table;
  return j;
}

std::string MatroidToText(const ArithmeticMatroid& arrangement) {
  std::ostringstream out;
  out << "circuits:\n";
  for (const Subset& c : arrangement.Circuits()) {
    const CircuitDependency dep = arrangement.Dependency(c);
    out << "  " << SetText(c) << "  dependency";
    for (int i : c) out << " " << dep.coefficients.at(i);
    out << "\n";
  }
  out << "subsets (rank, multiplicity):\n";
  for (Mask m = 0; m <= arrangement.ground(); ++m) {
    out << "  " << SetText(FromMask(m)) << "  " << arrangement.Rank(m) << "  "
        << arrangement.Multiplicity(m) << "\n";
  }
  return out.str();
}

json LayersToJson(const LayerPoset& poset,
                  const std::map<std::string, std::string>& layer_names) {
  json j;
  j["schema"] = kSchema;
  json nodes = json::array();
  for (int i = 0; i < poset.size(); ++i) {
    const Layer& w = poset.layer(i);
    json translation = json::array();
    for (const Rational& t : w.translation) translation.push_back(RationalToString(t));
    nodes.push_back({{"id", i},
                     {"label", poset.Label(i)},
                     {"name", DisplayName(poset.Label(i), layer_names)},
                     {"codim", w.codim},
                     {"support", SubsetToJson(w.support)},
                     {"translation", translation}});
  }
  j["nodes"] = nodes;
  json covers = json::array();
  for (const auto& [lower, upper] : poset.Covers()) covers.push_back({lower, upper});
  j["covers"] = covers;
  return j;
}

std::string LayersToText(const LayerPoset& poset,
                         const std::map<std::string, std::string>& layer_names) {
  std::ostringstream out;
  for (int i = 0; i < poset.size(); ++i) {
    const Layer& w = poset.layer(i);
    out << DisplayName(poset.Label(i), layer_names) << "  codim " << w.codim << "  support "
        << SetText(w.support) << "  translation (";
    for (std::size_t k = 0; k < w.translation.size(); ++k) {
      out << (k ? ", " : "") << w.translation[k];
    }
    out << ")\n";
  }
  for (const auto& [lower, upper] : poset.Covers()) {
    out << DisplayName(poset.Label(lower), layer_names) << " < "
        << DisplayName(poset.Label(upper), layer_names) << "\n";
  }
  return out.str();
}

json PoincareToJson(const GradedDims& coefficients) {
  return {{"schema", kSchema}, {"poincare", coefficients}};
}

std::string PoincareToText(const GradedDims& coefficients) {
  std::string out = "[";
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    out += (i ? ", " : "") + std::to_string(coefficients[i]);
  }
  return out + "]";
}

json PresentationToJson(const Presentation& p) {
  json j;
  j["schema"] = kSchema;
  j["dimension"] = p.dimension;
  j["deficit"] = p.deficit;
  j["layers"] = p.layer_labels;
  json generators = json::array();
  for (const GeneratorSymbol& g : p.generators) {
    generators.push_back({{"layer", g.layer}, {"a", SubsetToJson(g.a)}, {"b", SubsetToJson(g.b)}});
  }
  j["generators"] = generators;
  json products = json::array();
  for (const auto& [key, value] : p.product_rules) {
    products.push_back({{"left", key.first}, {"right", key.second}, {"terms", TermsToJson(p, value)}});
  }
  j["products"] = products;
  json toro = json::array();
  for (const LinComb& r : p.toro_relations) toro.push_back(TermsToJson(p, r));
  j["toro_relations"] = toro;
  json circuit = json::array();
  for (const CircuitRelation& r : p.circuit_relations) {
    circuit.push_back({{"x", SubsetToJson(r.x)},
                       {"circuit", SubsetToJson(r.circuit)},
                       {"layer", r.layer},
                       {"terms", TermsToJson(p, r.relation)}});
  }
  j["circuit_relations"] = circuit;
  return j;
}

Presentation PresentationFromJson(const json& j) {
  Presentation p;
  try {
    if (j.at("schema").get<std::string>() != kSchema) throw SpecError("unknown schema");
    p.dimension = j.at("dimension").get<int>();
    p.deficit = j.at("deficit").get<int>();
    p.layer_labels = j.at("layers").get<std::vector<std::string>>();
    for (const json& g : j.at("generators")) {
      p.generators.push_back(
          GeneratorSymbol{g.at("layer").get<int>(), SubsetFromJson(g.at("a")), SubsetFromJson(g.at("b"))});
    }
    if (!std::is_sorted(p.generators.begin(), p.generators.end())) {
      throw SpecError("generators are not in canonical order");
    }
    for (const json& r : j.at("products")) {
      p.product_rules.emplace(std::make_pair(r.at("left").get<int>(), r.at("right").get<int>()),
                              TermsFromJson(p.generators, r.at("terms")));
    }
    for (const json& r : j.at("toro_relations")) p.toro_relations.push_back(TermsFromJson(p.generators, r));
    for (const json& r : j.at("circuit_relations")) {
      p.circuit_relations.push_back(CircuitRelation{SubsetFromJson(r.at("x")),
                                                    SubsetFromJson(r.at("circuit")),
                                                    r.at("layer").get<int>(),
                                                    TermsFromJson(p.generators, r.at("terms"))});
    }
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed presentation: ") + e.what());
  }
  return p;
}

std::string SymbolToText(const GeneratorSymbol& s, const std::vector<std::string>& labels,
                         const std::map<std::string, std::string>& layer_names) {
  return "e(" + DisplayName(labels.at(s.layer), layer_names) + ";" + SetText(s.a) + ";" +
         SetText(s.b) + ")";
}

std::string RelationToText(const LinComb& r, const std::vector<std::string>& labels,
                           const std::map<std::string, std::string>& layer_names) {
  if (r.IsZero()) return "0 = 0";
  std::string out;
  bool first = true;
  for (const auto& [g, q] : r.terms()) {
    const bool negative = q < 0;
    const Rational magnitude = negative ? Rational(-q) : q;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += magnitude.get_str() + " ";
    out += SymbolToText(g, labels, layer_names);
    first = false;
  }
  return out + " = 0";
}

std::string PresentationToText(const Presentation& p,
                               const std::map<std::string, std::string>& layer_names) {
  std::ostringstream out;
  out << "dimension " << p.dimension << ", split torus factor " << p.deficit << "\n";
  std::vector<int> per_degree(p.dimension + 1, 0);
  for (const GeneratorSymbol& g : p.generators) ++per_degree[g.Degree()];
  out << "generators per degree:";
  for (int k : per_degree) out << " " << k;
  out << "\n";
  out << "toro relations:\n";
  for (const LinComb& r : p.toro_relations) {
    out << "  " << RelationToText(r, p.layer_labels, layer_names) << "\n";
  }
  out << "circuit relations:\n";
  for (const CircuitRelation& r : p.circuit_relations) {
    out << "  [X=" << SetText(r.x) << ", C=" << SetText(r.circuit) << ", L="
        << DisplayName(p.layer_labels.at(r.layer), layer_names) << "] "
        << RelationToText(r.relation, p.layer_labels, layer_names) << "\n";
  }
  return out.str();
}

json ReportToJson(const VerifyReport& report) {
  json j;
  j["schema"] = kSchema;
  j["passed"] = report.Passed();
  j["poincare"] = report.poincare;
  j["quotient"] = report.quotient;
  j["decomposition"] = report.decomposition;
  json checks = json::array();
  for (const Check& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  j["checks"] = checks;
  return j;
}

std::string ReportToText(const VerifyReport& report) {
  std::ostringstream out;
  out << "poincare      " << PoincareToText(report.poincare) << "\n";
  out << "quotient      " << PoincareToText(report.quotient) << "\n";
  out << "decomposition " << PoincareToText(report.decomposition) << "\n";
  for (const Check& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << (report.Passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace toric

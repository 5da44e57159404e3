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

// toric_os: cohomology presentations of central toric arrangements.
//
//   toric_os <matroid|layers|poincare|presentation|verify> SPEC.json
//            [--normalize] [--order i,j,k] [--json|--text] [-o FILE]
//
// Exit status: 0 on success, 1 when verify finds a mismatch, 2 on a bad spec.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toric/layers.h"
#include "toric/presentation.h"
#include "toric/serialization.h"
#include "toric/verifier.h"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitSpecError = 2;

struct Options {
  std::string spec_file;
  bool normalize = false;
  std::vector<int> order;
  bool json = false;
  bool text = false;
  std::string output;
  std::string presentation_file;
};

std::string ReadFile(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw toric::SpecError("cannot read " + path);
  buffer << in.rdbuf();
  return buffer.str();
}

void Emit(const Options& options, const std::string& content) {
  if (options.output.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(options.output);
  if (!out) throw toric::SpecError("cannot write " + options.output);
  out << content;
}

std::string Dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int Run(const std::string& command, const Options& options) {
  toric::ArrangementSpec spec = toric::ParseArrangementSpec(ReadFile(options.spec_file));
  const toric::CharacterMatrix characters =
      toric::ResolveCharacters(spec, options.normalize, options.order);

  if (command == "matroid") {
    const toric::ArithmeticMatroid arrangement(characters);
    Emit(options, options.json ? Dump(toric::MatroidToJson(arrangement, spec.names))
                               : toric::MatroidToText(arrangement));
  } else if (command == "layers") {
    const toric::ArithmeticMatroid arrangement(characters);
    const toric::LayerPoset poset(arrangement);
    Emit(options, options.text ? toric::LayersToText(poset, spec.layer_names)
                               : Dump(toric::LayersToJson(poset, spec.layer_names)));
  } else if (command == "poincare") {
    const toric::GradedDims poin = toric::PoincarePolynomial(toric::ArithmeticMatroid(characters));
    Emit(options, options.json ? Dump(toric::PoincareToJson(poin))
                               : toric::PoincareToText(poin) + "\n");
  } else if (command == "presentation") {
    const toric::Presentation p = toric::BuildPresentation(characters);
    Emit(options, options.json ? Dump(toric::PresentationToJson(p))
                               : toric::PresentationToText(p, spec.layer_names));
  } else if (command == "verify") {
    toric::VerifyReport report = toric::Verify(characters);
    if (!options.presentation_file.empty()) {
      const toric::Presentation p = toric::PresentationFromJson(
          nlohmann::json::parse(ReadFile(options.presentation_file)));
      const toric::GradedDims reparsed = toric::QuotientDimensions(p);
      report.checks.push_back(toric::Check{"reparsed_presentation_dims",
                                           reparsed == report.quotient,
                                           "reparsed " + toric::PoincareToText(reparsed)});
    }
    Emit(options, options.json ? Dump(toric::ReportToJson(report)) : toric::ReportToText(report));
    return report.Passed() ? 0 : kExitMismatch;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology presentations of central toric arrangements"};
  app.require_subcommand(1);
  Options options;
  std::string command;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"matroid", "circuits and the multiplicity table"},
      {"layers", "poset of layers"},
      {"poincare", "Poincare polynomial coefficients"},
      {"presentation", "generators, products and relations"},
      {"verify", "three-way dimension check and invariant checks"},
  };
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("spec", options.spec_file, "arrangement spec (JSON, '-' for stdin)")->required();
    sub->add_flag("--normalize", options.normalize, "divide characters by their content");
    sub->add_option("--order", options.order, "ground set order, e.g. 2,0,1")->delimiter(',');
    auto* json = sub->add_flag("--json", options.json, "JSON output");
    sub->add_flag("--text", options.text, "text output")->excludes(json);
    sub->add_option("-o,--output", options.output, "write output to a file");
    if (name == "verify") {
      sub->add_option("--presentation", options.presentation_file,
                      "also re-verify a presentation JSON produced earlier");
    }
    sub->callback([&command, name = name] { command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitSpecError;
  }
  try {
    return Run(command, options);
  } catch (const toric::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpecError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kExitSpecError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpecError;
  }
}

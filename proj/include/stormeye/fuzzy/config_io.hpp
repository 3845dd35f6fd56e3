/*   Copyright 2026 The stormeye authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#pragma once

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stormeye/errors.hpp"
#include "stormeye/fuzzy/engine.hpp"

namespace stormeye::fuzzy {

/// Declarative form of an inference system, as stored in the JSON definition
/// file (see docs/formats.md). Mutable so that calibration can adjust
/// breakpoints and rebuild; build() produces the immutable engine.
struct FisDefinition {
  std::vector<LinguisticVariable> inputs;
  std::vector<LinguisticVariable> output;  // exactly one; vector avoids a default ctor
  std::vector<Rule> rules;
  Defuzzifier defuzzifier = Defuzzifier::COA;
  int sample_count = InferenceSystem::kDefaultSampleCount;
  bool clamp_inputs = true;

  [[nodiscard]] InferenceSystem build() const {
    if (output.size() != 1)
      throw ConfigError("FIS definition: exactly one output variable required");
    return InferenceSystem(inputs, output.front(), rules, sample_count, clamp_inputs,
                           defuzzifier);
  }

  [[nodiscard]] LinguisticVariable& variable(const std::string& name) {
    for (auto& v : inputs)
      if (v.name() == name) return v;
    for (auto& v : output)
      if (v.name() == name) return v;
    throw ConfigError("FIS definition: no variable named '" + name + "'");
  }
};

namespace detail {

inline nlohmann::ordered_json term_to_json(const MembershipFunction& mf) {
  nlohmann::ordered_json j;
  j["label"] = mf.label();
  j["shape"] = mf.shape() == MembershipFunction::Shape::Triangular ? "triangular"
                                                                   : "trapezoidal";
  const auto pts = mf.breakpoints();
  std::vector<double> declared(pts.begin(), pts.begin() + mf.breakpoint_count());
  j["points"] = declared;
  return j;
}

inline MembershipFunction term_from_json(const nlohmann::json& j) {
  const std::string label = j.at("label").get<std::string>();
  const std::string shape = j.at("shape").get<std::string>();
  const std::vector<double> pts = j.at("points").get<std::vector<double>>();
  if (shape == "triangular") {
    if (pts.size() != 3)
      throw ConfigError("term '" + label + "': triangular shape needs 3 points");
    return MembershipFunction::triangular(label, pts[0], pts[1], pts[2]);
  }
  if (shape == "trapezoidal") {
    if (pts.size() != 4)
      throw ConfigError("term '" + label + "': trapezoidal shape needs 4 points");
    return MembershipFunction::trapezoidal(label, pts[0], pts[1], pts[2], pts[3]);
  }
  throw ConfigError("term '" + label + "': unknown shape '" + shape + "'");
}

inline nlohmann::ordered_json variable_to_json(const LinguisticVariable& var) {
  nlohmann::ordered_json j;
  j["name"] = var.name();
  j["range"] = std::vector<double>{var.lo(), var.hi()};
  j["unit"] = var.unit();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : var.terms()) j["terms"].push_back(term_to_json(t));
  return j;
}

inline LinguisticVariable variable_from_json(const nlohmann::json& j) {
  const std::string name = j.at("name").get<std::string>();
  const auto range = j.at("range").get<std::vector<double>>();
  if (range.size() != 2)
    throw ConfigError("variable '" + name + "': range must be [lo, hi]");
  std::vector<MembershipFunction> terms;
  for (const auto& t : j.at("terms")) terms.push_back(term_from_json(t));
  return LinguisticVariable(name, range[0], range[1],
                            j.value("unit", std::string{}), std::move(terms));
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const FisDefinition& def) {
  nlohmann::ordered_json j;
  j["inputs"] = nlohmann::ordered_json::array();
  for (const auto& v : def.inputs) j["inputs"].push_back(detail::variable_to_json(v));
  if (def.output.size() != 1)
    throw ConfigError("FIS definition: exactly one output variable required");
  j["output"] = detail::variable_to_json(def.output.front());
  j["rules"] = nlohmann::ordered_json::array();
  for (const auto& r : def.rules) {
    nlohmann::ordered_json jr;
    jr["if"] = nlohmann::ordered_json::object();
    for (const auto& [var, term] : r.antecedents) jr["if"][var] = term;
    jr["then"] = nlohmann::ordered_json::object();
    jr["then"][r.consequent.first] = r.consequent.second;
    j["rules"].push_back(jr);
  }
  j["defuzzifier"] = to_string(def.defuzzifier);
  j["sample_count"] = def.sample_count;
  j["clamp_inputs"] = def.clamp_inputs;
  return j;
}

inline FisDefinition fis_from_json(const nlohmann::ordered_json& j) {
  FisDefinition def;
  try {
    for (const auto& v : j.at("inputs")) def.inputs.push_back(detail::variable_from_json(v));
    def.output.push_back(detail::variable_from_json(j.at("output")));
    for (const auto& jr : j.at("rules")) {
      Rule rule;
      for (const auto& [var, term] : jr.at("if").items())
        rule.antecedents.emplace_back(var, term.get<std::string>());
      const auto& then = jr.at("then");
      if (then.size() != 1)
        throw ConfigError("rule: 'then' must name exactly one output term");
      for (const auto& [var, term] : then.items())
        rule.consequent = {var, term.get<std::string>()};
      def.rules.push_back(std::move(rule));
    }
    def.defuzzifier = defuzzifier_from_string(j.value("defuzzifier", std::string{"COA"}));
    def.sample_count = j.value("sample_count", InferenceSystem::kDefaultSampleCount);
    def.clamp_inputs = j.value("clamp_inputs", true);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string{"FIS definition: "} + e.what());
  }
  return def;
}

inline FisDefinition load_fis(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open FIS definition file: " + path);
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse FIS definition file " + path + ": " + e.what());
  }
  return fis_from_json(j);
}

inline void save_fis(const FisDefinition& def, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write FIS definition file: " + path);
  out << to_json(def).dump(2) << '\n';
}

}  // namespace stormeye::fuzzy

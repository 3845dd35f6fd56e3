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

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stormeye/errors.hpp"
#include "stormeye/fuzzy/config_io.hpp"
#include "stormeye/fuzzy/engine.hpp"
#include "stormeye/storm/crisp_inputs.hpp"

namespace stormeye::storm {

/// The 16-rule base of the storm system. Rules 1, 2, 7 and 12 keep their
/// short antecedent lists: they decide on the leading variables alone and are
/// deliberately not expanded into all completions.
inline std::vector<fuzzy::Rule> canonical_rules() {
  using R = fuzzy::Rule;
  const std::string D = kMoistureDensity, W = kWindSpeed, PD = kPressureDrop,
                    EP = kEstimatedCentralPressure, EYE = kEyeOutput;
  const std::string absent = "Absent", present = "Present";
  std::vector<R> rules;
  auto add = [&](std::vector<R::Clause> ants, const std::string& verdict) {
    rules.push_back(R{std::move(ants), {EYE, verdict}});
  };
  add({{D, "Low"}}, absent);                                                    // 1
  add({{D, "High"}, {W, "Min"}, {PD, "Min"}}, absent);                          // 2
  add({{D, "High"}, {W, "Min"}, {PD, "Avg"}, {EP, "Avg"}}, absent);             // 3
  add({{D, "High"}, {W, "Min"}, {PD, "Avg"}, {EP, "Max"}}, present);            // 4
  add({{D, "High"}, {W, "Min"}, {PD, "Max"}, {EP, "Avg"}}, present);            // 5
  add({{D, "High"}, {W, "Min"}, {PD, "Max"}, {EP, "Max"}}, absent);             // 6
  add({{D, "High"}, {W, "Max"}, {PD, "Min"}}, absent);                          // 7
  add({{D, "High"}, {W, "Max"}, {PD, "Avg"}, {EP, "Avg"}}, present);            // 8
  add({{D, "High"}, {W, "Max"}, {PD, "Avg"}, {EP, "Max"}}, present);            // 9
  add({{D, "High"}, {W, "Max"}, {PD, "Max"}, {EP, "Avg"}}, present);            // 10
  add({{D, "High"}, {W, "Max"}, {PD, "Max"}, {EP, "Max"}}, absent);             // 11
  add({{D, "High"}, {W, "Extreme"}, {PD, "Min"}}, absent);                      // 12
  add({{D, "High"}, {W, "Extreme"}, {PD, "Avg"}, {EP, "Avg"}}, present);        // 13
  add({{D, "High"}, {W, "Extreme"}, {PD, "Avg"}, {EP, "Max"}}, absent);         // 14
  add({{D, "High"}, {W, "Extreme"}, {PD, "Max"}, {EP, "Avg"}}, present);        // 15
  add({{D, "High"}, {W, "Extreme"}, {PD, "Max"}, {EP, "Max"}}, absent);         // 16
  return rules;
}

/// Shipped default definition. Shoulder terms saturate at the universe
/// edges, interior terms are triangles. These breakpoints are calibration
/// starting points, not ground truth; the calibrator owns the final values
/// (see configs/storm_fis.calibrated.json).
inline fuzzy::FisDefinition default_definition() {
  using MF = fuzzy::MembershipFunction;
  fuzzy::FisDefinition def;
  def.inputs.emplace_back(
      kMoistureDensity, kMoistureLo, kMoistureHi, "%",
      std::vector<MF>{MF::trapezoidal("Low", 1, 1, 30, 60),
                      MF::trapezoidal("High", 30, 60, 100, 100)});
  def.inputs.emplace_back(
      kWindSpeed, kWindLo, kWindHi, "kt",
      std::vector<MF>{MF::trapezoidal("Min", 20, 20, 50, 80),
                      MF::triangular("Max", 50, 80, 110),
                      MF::trapezoidal("Extreme", 80, 110, 130, 130)});
  def.inputs.emplace_back(
      kPressureDrop, kPressureDropLo, kPressureDropHi, "hPa",
      std::vector<MF>{MF::trapezoidal("Min", 1, 1, 20, 40),
                      MF::triangular("Avg", 20, 40, 60),
                      MF::trapezoidal("Max", 40, 60, 80, 80)});
  def.inputs.emplace_back(
      kEstimatedCentralPressure, kCentralPressureLo, kCentralPressureHi, "hPa",
      std::vector<MF>{MF::trapezoidal("Avg", 900, 900, 940, 980),
                      MF::trapezoidal("Max", 940, 980, 1000, 1000)});
  // Output shoulders overlap around the presence threshold so the universe
  // has no coverage gap at 0.5.
  def.output.emplace_back(
      kEyeOutput, 0.0, 1.0, "",
      std::vector<MF>{MF::trapezoidal("Absent", 0.0, 0.0, 0.3, 0.55),
                      MF::trapezoidal("Present", 0.45, 0.7, 1.0, 1.0)});
  def.rules = canonical_rules();
  def.defuzzifier = fuzzy::Defuzzifier::COA;
  return def;
}

/// Crisp output at or above this value is reported as "eye present".
inline constexpr double kDefaultPresenceThreshold = 0.5;

/// Outcome of judging one block: crisp output in [0,1], presence flag, and
/// the rules that fired (1-based rule numbers, strengths in (0,1]).
struct EyeVerdict {
  double crisp = 0.0;
  bool present = false;
  std::vector<std::pair<int, double>> fired_rules;
  std::vector<double> all_strengths;  // per-rule trace, zeros included
};

/// The storm inference system: the four meteorological inputs, the Eye
/// output and the 16-rule base, wrapped around the generic Mamdani engine.
/// Immutable; judge() is safe for concurrent use.
class StormFis {
 public:
  /// Validates that the definition carries exactly the expected variable and
  /// term sets plus the canonical rule base, then builds the engine.
  explicit StormFis(const fuzzy::FisDefinition& def,
                    double presence_threshold = kDefaultPresenceThreshold)
      : engine_(validated(def).build()), presence_threshold_(presence_threshold) {}

  [[nodiscard]] const fuzzy::InferenceSystem& engine() const { return engine_; }
  [[nodiscard]] double presence_threshold() const { return presence_threshold_; }

  /// Fuzzify, fire the 16 rules, defuzzify with COA. A "no rule fired"
  /// outcome is coerced to {crisp 0, absent, empty trace}.
  [[nodiscard]] EyeVerdict judge(const CrispInputs& inputs) const {
    const auto result = engine_.evaluate(inputs.as_map());
    EyeVerdict verdict;
    verdict.all_strengths = result.strengths;
    for (const auto& firing : result.fired())
      verdict.fired_rules.emplace_back(static_cast<int>(firing.rule_index) + 1,
                                       firing.strength);
    try {
      verdict.crisp = fuzzy::defuzzify(result.aggregated, engine_.default_defuzzifier());
    } catch (const NoRuleFired&) {
      return EyeVerdict{0.0, false, {}, result.strengths};
    }
    verdict.present = verdict.crisp >= presence_threshold_;
    return verdict;
  }

  static constexpr int kRuleCount = 16;

 private:
  static const fuzzy::FisDefinition& validated(const fuzzy::FisDefinition& def) {
    check_terms(def, kMoistureDensity, {"Low", "High"});
    check_terms(def, kWindSpeed, {"Min", "Max", "Extreme"});
    check_terms(def, kPressureDrop, {"Min", "Avg", "Max"});
    check_terms(def, kEstimatedCentralPressure, {"Avg", "Max"});
    if (def.output.size() != 1 || def.output.front().name() != kEyeOutput)
      throw ConfigError("storm FIS: output variable must be '" + std::string(kEyeOutput) +
                        "'");
    check_term_list(def.output.front(), {"Absent", "Present"});
    const auto canonical = canonical_rules();
    if (def.rules != canonical)
      throw ConfigError("storm FIS: rule base does not match the canonical 16 rules");
    for (const auto& v : def.inputs)
      if (auto gap = v.coverage_gap())
        throw ConfigError("storm FIS: variable '" + v.name() + "' has a coverage gap near " +
                          std::to_string(*gap));
    if (auto gap = def.output.front().coverage_gap())
      throw ConfigError("storm FIS: output variable has a coverage gap near " +
                        std::to_string(*gap));
    return def;
  }

  static void check_terms(const fuzzy::FisDefinition& def, const std::string& name,
                          const std::vector<std::string>& labels) {
    for (const auto& v : def.inputs) {
      if (v.name() == name) {
        check_term_list(v, labels);
        return;
      }
    }
    throw ConfigError("storm FIS: missing input variable '" + name + "'");
  }

  static void check_term_list(const fuzzy::LinguisticVariable& v,
                              const std::vector<std::string>& labels) {
    if (v.terms().size() != labels.size())
      throw ConfigError("storm FIS: variable '" + v.name() + "' must have exactly " +
                        std::to_string(labels.size()) + " terms");
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (v.terms()[i].label() != labels[i])
        throw ConfigError("storm FIS: variable '" + v.name() + "' expects term '" +
                          labels[i] + "' at position " + std::to_string(i + 1) +
                          ", found '" + v.terms()[i].label() + "'");
  }

  fuzzy::InferenceSystem engine_;
  double presence_threshold_;
};

}  // namespace stormeye::storm

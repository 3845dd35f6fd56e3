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

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stormeye/errors.hpp"
#include "stormeye/fuzzy/aggregate.hpp"
#include "stormeye/fuzzy/rule.hpp"
#include "stormeye/fuzzy/variable.hpp"

namespace stormeye::fuzzy {

enum class Defuzzifier { COA, SOM, LOM, MOM };

inline const char* to_string(Defuzzifier d) {
  switch (d) {
    case Defuzzifier::COA: return "COA";
    case Defuzzifier::SOM: return "SOM";
    case Defuzzifier::LOM: return "LOM";
    case Defuzzifier::MOM: return "MOM";
  }
  return "COA";
}

inline Defuzzifier defuzzifier_from_string(const std::string& name) {
  if (name == "COA") return Defuzzifier::COA;
  if (name == "SOM") return Defuzzifier::SOM;
  if (name == "LOM") return Defuzzifier::LOM;
  if (name == "MOM") return Defuzzifier::MOM;
  throw ConfigError("unknown defuzzifier '" + name + "' (expected COA, SOM, LOM or MOM)");
}

/// Samples within this distance of the maximum count as maximal when picking
/// maxima plateaus (SOM/LOM/MOM). Guards against floating-point fuzz on what
/// is mathematically a flat clipped plateau.
inline constexpr double kMaximumTieTolerance = 1e-9;

/// Reduce an aggregated set to one crisp value. Throws NoRuleFired on an
/// identically-zero set; a zero set carries no information to point at.
inline double defuzzify(const AggregatedFuzzySet& set, Defuzzifier method) {
  if (set.all_zero()) throw NoRuleFired();
  const auto& mu = set.samples();
  const std::size_t n = mu.size();

  if (method == Defuzzifier::COA) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      num += set.x_at(i) * mu[i];
      den += mu[i];
    }
    return num / den;
  }

  const double peak = set.max_value();
  const double floor = peak - kMaximumTieTolerance;
  switch (method) {
    case Defuzzifier::SOM:
      for (std::size_t i = 0; i < n; ++i)
        if (mu[i] >= floor) return set.x_at(i);
      break;
    case Defuzzifier::LOM:
      for (std::size_t i = n; i-- > 0;)
        if (mu[i] >= floor) return set.x_at(i);
      break;
    case Defuzzifier::MOM: {
      double sum = 0.0;
      std::size_t count = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (mu[i] >= floor) {
          sum += set.x_at(i);
          ++count;
        }
      }
      return sum / static_cast<double>(count);
    }
    default: break;
  }
  throw Error("defuzzify: unreachable");
}

/// One rule's firing strength, index aligned with the rule base (0-based).
struct RuleFiring {
  std::size_t rule_index;
  double strength;
};

/// Result of evaluating a rule base on crisp inputs: the max-aggregated
/// clipped output set plus the full per-rule strength trace (zeros included).
struct EvaluationResult {
  AggregatedFuzzySet aggregated;
  std::vector<double> strengths;

  [[nodiscard]] std::vector<RuleFiring> fired() const {
    std::vector<RuleFiring> out;
    for (std::size_t i = 0; i < strengths.size(); ++i)
      if (strengths[i] > 0.0) out.push_back({i, strengths[i]});
    return out;
  }
};

/// A complete Mamdani inference system: input variables, one output variable,
/// a rule base, and the discretization used for the output set.
///
/// Operators are the canonical Mamdani set: AND = min, implication = min
/// (consequent clipping), aggregation = pointwise max.
///
/// Immutable once built; evaluate()/defuzzify() allocate only locals, so a
/// built system is safe to share across threads.
class InferenceSystem {
 public:
  InferenceSystem(std::vector<LinguisticVariable> inputs, LinguisticVariable output,
                  std::vector<Rule> rules, int sample_count = kDefaultSampleCount,
                  bool clamp_inputs = true,
                  Defuzzifier default_defuzzifier = Defuzzifier::COA)
      : inputs_(std::move(inputs)), output_(std::move(output)), rules_(std::move(rules)),
        sample_count_(sample_count), clamp_inputs_(clamp_inputs),
        default_defuzzifier_(default_defuzzifier) {
    validate();
    cache_output_term_samples();
  }

  static constexpr int kDefaultSampleCount = 1001;

  [[nodiscard]] const std::vector<LinguisticVariable>& inputs() const { return inputs_; }
  [[nodiscard]] const LinguisticVariable& output() const { return output_; }
  [[nodiscard]] const std::vector<Rule>& rules() const { return rules_; }
  [[nodiscard]] int sample_count() const { return sample_count_; }
  [[nodiscard]] bool clamps_inputs() const { return clamp_inputs_; }
  [[nodiscard]] Defuzzifier default_defuzzifier() const { return default_defuzzifier_; }

  [[nodiscard]] const LinguisticVariable& input(const std::string& name) const {
    for (const auto& v : inputs_)
      if (v.name() == name) return v;
    throw ConfigError("no input variable named '" + name + "'");
  }

  /// Term degrees for one input variable, honoring the clamping policy.
  [[nodiscard]] std::map<std::string, double> fuzzify(const std::string& variable,
                                                      double x) const {
    const LinguisticVariable& var = input(variable);
    return var.fuzzify(clamp_inputs_ ? var.clamp(x) : x);
  }

  /// Fires every rule against the crisp inputs and max-aggregates the clipped
  /// consequents over the output universe.
  [[nodiscard]] EvaluationResult evaluate(const std::map<std::string, double>& crisp) const {
    std::vector<double> values(inputs_.size());
    for (std::size_t v = 0; v < inputs_.size(); ++v) {
      const auto it = crisp.find(inputs_[v].name());
      if (it == crisp.end())
        throw ConfigError("evaluate: missing crisp value for input variable '" +
                          inputs_[v].name() + "'");
      values[v] = clamp_inputs_ ? inputs_[v].clamp(it->second) : it->second;
      if (!inputs_[v].contains(values[v]))
        throw RangeError("evaluate: value for '" + inputs_[v].name() + "' outside universe");
    }

    std::vector<double> strengths(rules_.size());
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      double strength = 1.0;
      for (const auto& [var_name, term_label] : rules_[r].antecedents) {
        const std::size_t v = input_index(var_name);
        strength = std::min(strength, inputs_[v].term(term_label).grade(values[v]));
        if (strength == 0.0) break;
      }
      strengths[r] = strength;
    }

    std::vector<double> agg(static_cast<std::size_t>(sample_count_), 0.0);
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      if (strengths[r] == 0.0) continue;
      const std::vector<double>& term = output_term_samples_[consequent_term_index_[r]];
      for (std::size_t i = 0; i < agg.size(); ++i)
        agg[i] = std::max(agg[i], std::min(strengths[r], term[i]));
    }

    return EvaluationResult{AggregatedFuzzySet(output_.lo(), output_.hi(), std::move(agg)),
                            std::move(strengths)};
  }

  /// evaluate + defuzzify with the configured method.
  [[nodiscard]] double infer(const std::map<std::string, double>& crisp) const {
    return fuzzy::defuzzify(evaluate(crisp).aggregated, default_defuzzifier_);
  }

 private:
  void validate() const {
    if (rules_.empty()) throw ConfigError("inference system: empty rule base");
    if (inputs_.empty()) throw ConfigError("inference system: no input variables");
    if (sample_count_ < 2) throw ConfigError("inference system: sample_count must be >= 2");
    for (const auto& rule : rules_) {
      if (rule.antecedents.empty())
        throw ConfigError("inference system: rule with empty antecedent list");
      std::vector<std::string> seen;
      for (const auto& [var_name, term_label] : rule.antecedents) {
        if (std::find(seen.begin(), seen.end(), var_name) != seen.end())
          throw ConfigError("inference system: rule references variable '" + var_name +
                            "' in more than one antecedent");
        seen.push_back(var_name);
        if (!input(var_name).has_term(term_label))
          throw ConfigError("inference system: rule references unknown term '" + term_label +
                            "' of variable '" + var_name + "'");
      }
      if (rule.consequent.first != output_.name())
        throw ConfigError("inference system: rule consequent variable '" +
                          rule.consequent.first + "' is not the output variable");
      if (!output_.has_term(rule.consequent.second))
        throw ConfigError("inference system: rule consequent references unknown term '" +
                          rule.consequent.second + "'");
    }
  }

  void cache_output_term_samples() {
    output_term_samples_.clear();
    for (const auto& term : output_.terms()) {
      std::vector<double> samples(static_cast<std::size_t>(sample_count_));
      for (std::size_t i = 0; i < samples.size(); ++i) {
        const double x = output_.lo() + (output_.hi() - output_.lo()) *
                                            static_cast<double>(i) /
                                            static_cast<double>(samples.size() - 1);
        samples[i] = term.grade(x);
      }
      output_term_samples_.push_back(std::move(samples));
    }
    consequent_term_index_.clear();
    for (const auto& rule : rules_) {
      std::size_t index = 0;
      for (std::size_t t = 0; t < output_.terms().size(); ++t)
        if (output_.terms()[t].label() == rule.consequent.second) index = t;
      consequent_term_index_.push_back(index);
    }
  }

  [[nodiscard]] std::size_t input_index(const std::string& name) const {
    for (std::size_t v = 0; v < inputs_.size(); ++v)
      if (inputs_[v].name() == name) return v;
    throw ConfigError("no input variable named '" + name + "'");
  }

  std::vector<LinguisticVariable> inputs_;
  LinguisticVariable output_;
  std::vector<Rule> rules_;
  int sample_count_;
  bool clamp_inputs_;
  Defuzzifier default_defuzzifier_;

  std::vector<std::vector<double>> output_term_samples_;
  std::vector<std::size_t> consequent_term_index_;
};

}  // namespace stormeye::fuzzy

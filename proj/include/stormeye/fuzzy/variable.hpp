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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stormeye/errors.hpp"
#include "stormeye/fuzzy/membership.hpp"

namespace stormeye::fuzzy {

/// A named crisp universe [lo, hi] with an ordered list of labeled terms.
class LinguisticVariable {
 public:
  LinguisticVariable(std::string name, double lo, double hi, std::string unit,
                     std::vector<MembershipFunction> terms)
      : name_(std::move(name)), lo_(lo), hi_(hi), unit_(std::move(unit)),
        terms_(std::move(terms)) {
    if (!(lo_ < hi_))
      throw ConfigError("variable '" + name_ + "': universe must satisfy lo < hi");
    if (terms_.empty())
      throw ConfigError("variable '" + name_ + "': needs at least one term");
    for (const auto& t : terms_) {
      if (!t.valid_within(lo_, hi_))
        throw ConfigError("variable '" + name_ + "': term '" + t.label() +
                          "' has breakpoints outside the universe");
      if (std::count_if(terms_.begin(), terms_.end(),
                        [&](const auto& o) { return o.label() == t.label(); }) != 1)
        throw ConfigError("variable '" + name_ + "': duplicate term label '" + t.label() + "'");
    }
  }

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] double lo() const { return lo_; }
  [[nodiscard]] double hi() const { return hi_; }
  [[nodiscard]] const std::string& unit() const { return unit_; }
  [[nodiscard]] const std::vector<MembershipFunction>& terms() const { return terms_; }

  [[nodiscard]] bool has_term(const std::string& label) const {
    return find_term(label) != nullptr;
  }

  [[nodiscard]] const MembershipFunction& term(const std::string& label) const {
    const MembershipFunction* t = find_term(label);
    if (t == nullptr)
      throw ConfigError("variable '" + name_ + "': unknown term '" + label + "'");
    return *t;
  }

  [[nodiscard]] double clamp(double x) const { return std::clamp(x, lo_, hi_); }

  [[nodiscard]] bool contains(double x) const { return x >= lo_ && x <= hi_; }

  /// Degrees of all terms at x. Throws RangeError when x is outside the
  /// universe; callers that want clamping clamp first.
  [[nodiscard]] std::map<std::string, double> fuzzify(double x) const {
    if (!contains(x))
      throw RangeError("variable '" + name_ + "': value " + std::to_string(x) +
                       " outside universe [" + std::to_string(lo_) + ", " +
                       std::to_string(hi_) + "]");
    std::map<std::string, double> degrees;
    for (const auto& t : terms_) degrees[t.label()] = t.grade(x);
    return degrees;
  }

  /// First x of an even sweep where no term has positive membership, if any.
  [[nodiscard]] std::optional<double> coverage_gap(int sweep_points = 1000) const {
    for (int i = 0; i < sweep_points; ++i) {
      const double x = lo_ + (hi_ - lo_) * i / (sweep_points - 1);
      double best = 0.0;
      for (const auto& t : terms_) best = std::max(best, t.grade(x));
      if (!(best > 0.0)) return x;
    }
    return std::nullopt;
  }

  /// Replaces the term with the same label (calibration support).
  void replace_term(const MembershipFunction& mf) {
    for (auto& t : terms_) {
      if (t.label() == mf.label()) {
        if (!mf.valid_within(lo_, hi_))
          throw ConfigError("variable '" + name_ + "': replacement term '" + mf.label() +
                            "' leaves the universe");
        t = mf;
        return;
      }
    }
    throw ConfigError("variable '" + name_ + "': no term '" + mf.label() + "' to replace");
  }

 private:
  [[nodiscard]] const MembershipFunction* find_term(const std::string& label) const {
    for (const auto& t : terms_)
      if (t.label() == label) return &t;
    return nullptr;
  }

  std::string name_;
  double lo_, hi_;
  std::string unit_;
  std::vector<MembershipFunction> terms_;
};

}  // namespace stormeye::fuzzy

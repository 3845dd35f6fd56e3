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
#include <utility>
#include <vector>

#include "stormeye/errors.hpp"

namespace stormeye::fuzzy {

/// Discretized fuzzy output set: membership values at uniformly spaced sample
/// points over a closed universe, endpoints included. This is what the
/// defuzzifiers consume.
class AggregatedFuzzySet {
 public:
  AggregatedFuzzySet(double lo, double hi, std::vector<double> samples)
      : lo_(lo), hi_(hi), samples_(std::move(samples)) {
    if (!(lo_ < hi_)) throw ConfigError("aggregated set: universe must satisfy lo < hi");
    if (samples_.size() < 2) throw ConfigError("aggregated set: needs at least 2 samples");
    for (double v : samples_)
      if (v < 0.0 || v > 1.0)
        throw ConfigError("aggregated set: sample value outside [0,1]");
  }

  [[nodiscard]] double lo() const { return lo_; }
  [[nodiscard]] double hi() const { return hi_; }
  [[nodiscard]] std::size_t sample_count() const { return samples_.size(); }
  [[nodiscard]] const std::vector<double>& samples() const { return samples_; }

  /// Sample position i; i == 0 maps to lo and i == count-1 maps to hi.
  [[nodiscard]] double x_at(std::size_t i) const {
    return lo_ + (hi_ - lo_) * static_cast<double>(i) /
                     static_cast<double>(samples_.size() - 1);
  }

  [[nodiscard]] double max_value() const {
    return *std::max_element(samples_.begin(), samples_.end());
  }

  [[nodiscard]] bool all_zero() const {
    return std::all_of(samples_.begin(), samples_.end(), [](double v) { return v == 0.0; });
  }

 private:
  double lo_, hi_;
  std::vector<double> samples_;
};

}  // namespace stormeye::fuzzy

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

#include <array>
#include <string>
#include <utility>

#include "stormeye/errors.hpp"

namespace stormeye::fuzzy {

/// A labeled piecewise-linear fuzzy term: triangular(a,b,c) or
/// trapezoidal(a,b,c,d). Both are stored as four breakpoints; a triangle is
/// the degenerate trapezoid with b == c. Breakpoints must be non-decreasing.
class MembershipFunction {
 public:
  enum class Shape { Triangular, Trapezoidal };

  static MembershipFunction triangular(std::string label, double a, double b, double c) {
    return MembershipFunction(std::move(label), Shape::Triangular, a, b, b, c);
  }

  static MembershipFunction trapezoidal(std::string label, double a, double b, double c,
                                        double d) {
    return MembershipFunction(std::move(label), Shape::Trapezoidal, a, b, c, d);
  }

  /// Membership degree at x. Piecewise linear, continuous, in [0,1].
  /// Vertical edges (a == b or c == d) saturate from the flat side, so a
  /// left-shoulder trapezoid (lo, lo, c, d) grades 1 at the universe edge.
  [[nodiscard]] double grade(double x) const {
    if (x < a_ || x > d_) return 0.0;
    if (x < b_) return (x - a_) / (b_ - a_);
    if (x <= c_) return 1.0;
    return (d_ - x) / (d_ - c_);
  }

  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] Shape shape() const { return shape_; }

  /// Declared breakpoints: 3 values for a triangle, 4 for a trapezoid.
  [[nodiscard]] std::array<double, 4> breakpoints() const {
    if (shape_ == Shape::Triangular) return {a_, b_, d_, d_};
    return {a_, b_, c_, d_};
  }
  [[nodiscard]] int breakpoint_count() const { return shape_ == Shape::Triangular ? 3 : 4; }

  [[nodiscard]] double support_lo() const { return a_; }
  [[nodiscard]] double support_hi() const { return d_; }

  /// Rebuild with one declared breakpoint replaced (used by calibration).
  /// Index is into the declared list: 0..2 for triangles, 0..3 for trapezoids.
  [[nodiscard]] MembershipFunction with_breakpoint(int index, double value) const {
    std::array<double, 4> pts = breakpoints();
    pts[static_cast<std::size_t>(index)] = value;
    if (shape_ == Shape::Triangular) return triangular(label_, pts[0], pts[1], pts[2]);
    return trapezoidal(label_, pts[0], pts[1], pts[2], pts[3]);
  }

  /// True when breakpoints are non-decreasing and lie inside [lo, hi].
  [[nodiscard]] bool valid_within(double lo, double hi) const {
    return a_ <= b_ && b_ <= c_ && c_ <= d_ && a_ >= lo && d_ <= hi;
  }

 private:
  MembershipFunction(std::string label, Shape shape, double a, double b, double c, double d)
      : label_(std::move(label)), shape_(shape), a_(a), b_(b), c_(c), d_(d) {
    if (!(a_ <= b_ && b_ <= c_ && c_ <= d_))
      throw ConfigError("membership function '" + label_ + "': breakpoints must be non-decreasing");
  }

  std::string label_;
  Shape shape_;
  double a_, b_, c_, d_;
};

}  // namespace stormeye::fuzzy

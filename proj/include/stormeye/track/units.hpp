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

#include "stormeye/errors.hpp"

namespace stormeye::track {

/// One knot in meters per second.
inline constexpr double kMetersPerSecondPerKnot = 0.514444;

inline double knots_to_mps(double knots) {
  if (knots < 0.0) throw RangeError("knots_to_mps: negative speed");
  return knots * kMetersPerSecondPerKnot;
}

inline double mps_to_knots(double mps) {
  if (mps < 0.0) throw RangeError("mps_to_knots: negative speed");
  return mps / kMetersPerSecondPerKnot;
}

}  // namespace stormeye::track

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

#include <cstdint>

#include "stormeye/errors.hpp"
#include "stormeye/image/image.hpp"

namespace stormeye::img {

/// Center of gravity of the set pixels, 1-based: a lone pixel in the first
/// column and row sits at (1,1). Sums run in integers, so the result is the
/// exact rational mean rounded once.
inline Centroid center_of_gravity(const BinaryImage& img) {
  std::uint64_t mass = 0;
  std::uint64_t sum_x = 0;
  std::uint64_t sum_y = 0;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (img.at(x, y)) {
        ++mass;
        sum_x += static_cast<std::uint64_t>(x) + 1;
        sum_y += static_cast<std::uint64_t>(y) + 1;
      }
    }
  }
  if (mass == 0) throw NoMassError();
  return Centroid{static_cast<double>(sum_x) / static_cast<double>(mass),
                  static_cast<double>(sum_y) / static_cast<double>(mass)};
}

}  // namespace stormeye::img

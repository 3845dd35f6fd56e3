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

#include "stormeye/errors.hpp"
#include "stormeye/image/image.hpp"

namespace stormeye::img {

namespace detail {

// Square structuring elements are separable: a horizontal then a vertical
// 1-D pass gives the same result as the full (2r+1)^2 window. erode_value=1
// computes erosion (AND over window, out of bounds counts 0), erode_value=0
// dilation (OR over window).
inline BinaryImage square_filter(const BinaryImage& in, int radius, bool erode_pass) {
  const int w = in.width(), h = in.height();
  BinaryImage horizontal(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      bool value = erode_pass;
      for (int dx = -radius; dx <= radius; ++dx) {
        const int xx = x + dx;
        const bool p = (xx >= 0 && xx < w) ? in.at(xx, y) != 0 : false;
        value = erode_pass ? (value && p) : (value || p);
      }
      horizontal.set(x, y, value);
    }
  }
  BinaryImage out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      bool value = erode_pass;
      for (int dy = -radius; dy <= radius; ++dy) {
        const int yy = y + dy;
        const bool p = (yy >= 0 && yy < h) ? horizontal.at(x, yy) != 0 : false;
        value = erode_pass ? (value && p) : (value || p);
      }
      out.set(x, y, value);
    }
  }
  return out;
}

}  // namespace detail

/// Erosion with a square structuring element of side 2*radius+1; pixels
/// outside the image count as 0, so shapes touching the border erode there.
inline BinaryImage erode(const BinaryImage& in, int radius) {
  if (radius < 1) throw ArgumentError("erode: structuring-element radius must be >= 1");
  return detail::square_filter(in, radius, true);
}

/// Dilation with the same structuring element and border convention.
inline BinaryImage dilate(const BinaryImage& in, int radius) {
  if (radius < 1) throw ArgumentError("dilate: structuring-element radius must be >= 1");
  return detail::square_filter(in, radius, false);
}

/// Noise removal by morphological opening (erode, then dilate). Speckle
/// smaller than the structuring element disappears; shapes at least as fat
/// as the element survive unchanged. Idempotent and never adds mass.
inline BinaryImage denoise(const BinaryImage& in, int se_radius = 1) {
  return dilate(erode(in, se_radius), se_radius);
}

}  // namespace stormeye::img

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

// Independent reference implementations used as test oracles. These must not
// share code paths with the library: each one recomputes its answer by the
// most literal route available.

#include <array>
#include <cstdint>
#include <functional>

#include "stormeye/image/image.hpp"

namespace oracles {

/// Center-of-area by trapezoid-rule integration of an analytic membership
/// callable, typically run at 10x the engine's sample density.
inline double coa_trapezoid(const std::function<double(double)>& mu, double lo, double hi,
                            int samples) {
  double num = 0.0, den = 0.0;
  const double h = (hi - lo) / (samples - 1);
  double prev_x = lo, prev_m = mu(lo);
  for (int i = 1; i < samples; ++i) {
    const double x = lo + (hi - lo) * i / (samples - 1);
    const double m = mu(x);
    num += 0.5 * h * (prev_x * prev_m + x * m);
    den += 0.5 * h * (prev_m + m);
    prev_x = x;
    prev_m = m;
  }
  return num / den;
}

/// Otsu by brute force: for every threshold t in 0..255 recompute both class
/// weights and means from scratch (as probabilities, unlike the streaming
/// implementation) and scan for the maximum between-class variance.
inline int otsu_scan(const std::array<std::uint64_t, 256>& hist) {
  std::uint64_t total = 0;
  for (const auto c : hist) total += c;
  if (total == 0) return -1;

  double best_sigma = -1.0;
  int best_t = -1;
  for (int t = 0; t < 256; ++t) {
    std::uint64_t n0 = 0, n1 = 0;
    double sum0 = 0.0, sum1 = 0.0;
    for (int v = 0; v < t; ++v) {
      n0 += hist[static_cast<std::size_t>(v)];
      sum0 += static_cast<double>(v) * static_cast<double>(hist[static_cast<std::size_t>(v)]);
    }
    for (int v = t; v < 256; ++v) {
      n1 += hist[static_cast<std::size_t>(v)];
      sum1 += static_cast<double>(v) * static_cast<double>(hist[static_cast<std::size_t>(v)]);
    }
    if (n0 == 0 || n1 == 0) continue;
    const double w0 = static_cast<double>(n0) / static_cast<double>(total);
    const double w1 = static_cast<double>(n1) / static_cast<double>(total);
    const double mu0 = sum0 / static_cast<double>(n0);
    const double mu1 = sum1 / static_cast<double>(n1);
    const double sigma = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
    if (sigma > best_sigma) {
      best_sigma = sigma;
      best_t = t;
    }
  }
  return best_t;
}

/// Center of gravity by the naive double loop, accumulating in doubles.
/// 1-based coordinates, x horizontal.
inline stormeye::img::Centroid centroid_naive(const stormeye::img::BinaryImage& img) {
  double mass = 0.0, sx = 0.0, sy = 0.0;
  for (int j = 1; j <= img.height(); ++j) {
    for (int i = 1; i <= img.width(); ++i) {
      if (img.at(i - 1, j - 1)) {
        mass += 1.0;
        sx += i;
        sy += j;
      }
    }
  }
  return stormeye::img::Centroid{sx / mass, sy / mass};
}

}  // namespace oracles

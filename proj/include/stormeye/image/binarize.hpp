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
#include <cstdint>
#include <string>

#include "stormeye/errors.hpp"
#include "stormeye/image/image.hpp"

namespace stormeye::img {

/// Threshold selection: a fixed level or Otsu's histogram method.
struct Threshold {
  enum class Method { Fixed, Otsu };

  Method method = Method::Otsu;
  int value = 128;  // used by Fixed only

  static Threshold fixed(int t) {
    if (t < 0 || t > 255) throw ArgumentError("fixed threshold must be in [0,255]");
    return Threshold{Method::Fixed, t};
  }
  static Threshold otsu() { return Threshold{Method::Otsu, 0}; }
};

struct BinarizeResult {
  BinaryImage image;
  int threshold = 0;          // the level actually applied
  bool otsu_fallback = false; // constant image: fell back to fixed(128)
};

inline std::array<std::uint64_t, 256> histogram(const GrayImage& img) {
  std::array<std::uint64_t, 256> hist{};
  for (std::uint8_t p : img.pixels()) ++hist[p];
  return hist;
}

/// Otsu's threshold: the level t maximizing the between-class variance of the
/// split {p < t} / {p >= t}, computed with running cumulative moments. Ties
/// resolve to the smallest t. Returns -1 for a single-level histogram, where
/// no split separates anything.
inline int otsu_threshold(const std::array<std::uint64_t, 256>& hist) {
  std::uint64_t total = 0;
  double total_weighted = 0.0;
  for (int v = 0; v < 256; ++v) {
    total += hist[static_cast<std::size_t>(v)];
    total_weighted += static_cast<double>(v) * static_cast<double>(hist[static_cast<std::size_t>(v)]);
  }
  if (total == 0) return -1;

  double best_sigma = -1.0;
  int best_t = -1;
  std::uint64_t below_count = 0;
  double below_weighted = 0.0;
  for (int t = 0; t < 256; ++t) {
    if (t > 0) {
      below_count += hist[static_cast<std::size_t>(t - 1)];
      below_weighted += static_cast<double>(t - 1) *
                        static_cast<double>(hist[static_cast<std::size_t>(t - 1)]);
    }
    const std::uint64_t above_count = total - below_count;
    if (below_count == 0 || above_count == 0) continue;
    const double w0 = static_cast<double>(below_count);
    const double w1 = static_cast<double>(above_count);
    const double mu0 = below_weighted / w0;
    const double mu1 = (total_weighted - below_weighted) / w1;
    const double sigma = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
    if (sigma > best_sigma) {
      best_sigma = sigma;
      best_t = t;
    }
  }
  return best_t;
}

/// Grayscale to binary: pixel becomes 1 iff its intensity is at or above the
/// threshold (bright, cold cloud tops). A constant image defeats Otsu; it
/// falls back to fixed(128) and flags the result.
inline BinarizeResult binarize(const GrayImage& img, const Threshold& threshold) {
  int level = threshold.value;
  bool fallback = false;
  if (threshold.method == Threshold::Method::Otsu) {
    level = otsu_threshold(histogram(img));
    if (level < 0) {
      level = 128;
      fallback = true;
    }
  }
  BinaryImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      out.set(x, y, img.at(x, y) >= level);
  return BinarizeResult{std::move(out), level, fallback};
}

}  // namespace stormeye::img

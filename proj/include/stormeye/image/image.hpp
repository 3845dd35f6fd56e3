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
#include <utility>
#include <vector>

#include "stormeye/errors.hpp"

namespace stormeye::img {

/// 8-bit grayscale raster, row-major. Width counts horizontal pixels,
/// height vertical ones. Storage is 0-based; the geometric convention used
/// by the centroid is 1-based.
class GrayImage {
 public:
  GrayImage(int width, int height, std::uint8_t fill = 0)
      : width_(width), height_(height),
        pixels_(checked_size(width, height), fill) {}

  GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
      : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (pixels_.size() != checked_size(width, height))
      throw ArgumentError("GrayImage: pixel buffer does not match dimensions");
  }

  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] int height() const { return height_; }

  [[nodiscard]] std::uint8_t at(int x, int y) const {
    return pixels_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
                   static_cast<std::size_t>(x)];
  }
  void set(int x, int y, std::uint8_t v) {
    pixels_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(x)] = v;
  }

  [[nodiscard]] const std::vector<std::uint8_t>& pixels() const { return pixels_; }

  [[nodiscard]] GrayImage crop(int x0, int y0, int w, int h) const {
    if (x0 < 0 || y0 < 0 || w < 1 || h < 1 || x0 + w > width_ || y0 + h > height_)
      throw ArgumentError("GrayImage::crop: window outside image");
    GrayImage out(w, h);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) out.set(x, y, at(x0 + x, y0 + y));
    return out;
  }

 private:
  static std::size_t checked_size(int width, int height) {
    if (width < 1 || height < 1)
      throw ArgumentError("GrayImage: dimensions must be at least 1x1");
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }

  int width_, height_;
  std::vector<std::uint8_t> pixels_;
};

/// Binary raster with pixel values 0/1, same layout as GrayImage.
class BinaryImage {
 public:
  BinaryImage(int width, int height, std::uint8_t fill = 0)
      : width_(width), height_(height),
        pixels_(checked_size(width, height), fill ? std::uint8_t{1} : std::uint8_t{0}) {}

  [[nodiscard]] int width() const { return width_; }
  [[nodiscard]] int height() const { return height_; }

  [[nodiscard]] std::uint8_t at(int x, int y) const {
    return pixels_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
                   static_cast<std::size_t>(x)];
  }
  void set(int x, int y, bool v) {
    pixels_[static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(x)] = v ? 1 : 0;
  }

  [[nodiscard]] const std::vector<std::uint8_t>& pixels() const { return pixels_; }

  [[nodiscard]] std::uint64_t mass() const {
    std::uint64_t count = 0;
    for (std::uint8_t p : pixels_) count += p;
    return count;
  }

  [[nodiscard]] GrayImage to_gray(std::uint8_t on = 255) const {
    GrayImage out(width_, height_);
    for (int y = 0; y < height_; ++y)
      for (int x = 0; x < width_; ++x) out.set(x, y, at(x, y) ? on : 0);
    return out;
  }

  [[nodiscard]] bool operator==(const BinaryImage&) const = default;

 private:
  static std::size_t checked_size(int width, int height) {
    if (width < 1 || height < 1)
      throw ArgumentError("BinaryImage: dimensions must be at least 1x1");
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }

  int width_, height_;
  std::vector<std::uint8_t> pixels_;
};

/// Mass-weighted mean pixel position, 1-based: the first pixel's center is
/// (1,1), x runs horizontally.
struct Centroid {
  double x = 0.0;
  double y = 0.0;
};

}  // namespace stormeye::img

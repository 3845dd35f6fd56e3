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
#include <fstream>
#include <string>
#include <vector>

#include "stormeye/errors.hpp"
#include "stormeye/image/image.hpp"

namespace stormeye::img {

namespace detail {

// Next whitespace-delimited token, skipping '#' comments to end of line.
inline std::string pgm_token(std::istream& in, const std::string& path) {
  std::string token;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {}
      continue;
    }
    if (std::isspace(c)) {
      if (!token.empty()) return token;
      continue;
    }
    token.push_back(static_cast<char>(c));
  }
  if (token.empty()) throw IoError("truncated PGM header in " + path);
  return token;
}

inline int pgm_int(std::istream& in, const std::string& path) {
  const std::string token = pgm_token(in, path);
  try {
    return std::stoi(token);
  } catch (const std::exception&) {
    throw IoError("bad PGM header value '" + token + "' in " + path);
  }
}

}  // namespace detail

/// Reads a P2 (ASCII) or P5 (binary) PGM. Samples deeper than 8 bits are
/// rescaled linearly onto 0..255.
inline GrayImage read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open PGM file: " + path);

  const std::string magic = detail::pgm_token(in, path);
  if (magic != "P2" && magic != "P5")
    throw IoError("unsupported PGM magic '" + magic + "' in " + path);
  const int width = detail::pgm_int(in, path);
  const int height = detail::pgm_int(in, path);
  const int maxval = detail::pgm_int(in, path);
  if (width < 1 || height < 1 || maxval < 1 || maxval > 65535)
    throw IoError("bad PGM dimensions in " + path);

  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<std::uint8_t> pixels(count);
  auto rescale = [maxval](long v) {
    if (maxval == 255) return static_cast<std::uint8_t>(v);
    return static_cast<std::uint8_t>((v * 255 + maxval / 2) / maxval);
  };

  if (magic == "P2") {
    for (std::size_t i = 0; i < count; ++i) {
      const int v = detail::pgm_int(in, path);
      if (v < 0 || v > maxval) throw IoError("PGM sample out of range in " + path);
      pixels[i] = rescale(v);
    }
  } else {
    // P5: exactly one whitespace byte separates the header from the raster.
    const int bytes_per_sample = maxval > 255 ? 2 : 1;
    std::vector<std::uint8_t> raw(count * static_cast<std::size_t>(bytes_per_sample));
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size())
      throw IoError("truncated PGM raster in " + path);
    for (std::size_t i = 0; i < count; ++i) {
      const long v = bytes_per_sample == 1
                         ? raw[i]
                         : (static_cast<long>(raw[2 * i]) << 8) | raw[2 * i + 1];
      if (v > maxval) throw IoError("PGM sample out of range in " + path);
      pixels[i] = rescale(v);
    }
  }
  return GrayImage(width, height, std::move(pixels));
}

/// Writes an 8-bit binary (P5) PGM.
inline void write_pgm(const GrayImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write PGM file: " + path);
  out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels().data()),
            static_cast<std::streamsize>(img.pixels().size()));
  if (!out) throw IoError("failed writing PGM raster to " + path);
}

}  // namespace stormeye::img

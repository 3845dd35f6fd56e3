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
#include <string>

#include "stormeye/errors.hpp"
#include "stormeye/image/pgm_io.hpp"
#include "stormeye/image/png_io.hpp"

namespace stormeye::img {

inline std::string lowercase_extension(const std::string& path) {
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return {};
  std::string ext = path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

/// Loads a grayscale frame by extension: .png, .pgm (P2/P5).
inline GrayImage load_image(const std::string& path) {
  const std::string ext = lowercase_extension(path);
  if (ext == "png") return read_png(path);
  if (ext == "pgm") return read_pgm(path);
  throw IoError("unsupported image extension '" + ext + "' for " + path);
}

/// Saves by extension, same formats as load_image.
inline void save_image(const GrayImage& img, const std::string& path) {
  const std::string ext = lowercase_extension(path);
  if (ext == "png") return write_png(img, path);
  if (ext == "pgm") return write_pgm(img, path);
  throw IoError("unsupported image extension '" + ext + "' for " + path);
}

}  // namespace stormeye::img

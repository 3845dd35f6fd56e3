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

#include <string>

#include "stormeye/image/binarize.hpp"

namespace stormeye::locate {

/// Knobs of the per-frame refinement pipeline.
struct PipelineConfig {
  img::Threshold threshold = img::Threshold::otsu();
  int se_radius = 1;           // structuring-element radius for opening
  int crop_margin_cells = 1;   // extra cells around the selected block
  bool debug_images = false;   // write crop/binary/denoised PNGs
  std::string debug_dir = ".";
};

}  // namespace stormeye::locate

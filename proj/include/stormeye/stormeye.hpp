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

// Umbrella header for the whole toolkit.

#include "stormeye/errors.hpp"

#include "stormeye/fuzzy/aggregate.hpp"
#include "stormeye/fuzzy/config_io.hpp"
#include "stormeye/fuzzy/engine.hpp"
#include "stormeye/fuzzy/membership.hpp"
#include "stormeye/fuzzy/rule.hpp"
#include "stormeye/fuzzy/variable.hpp"

#include "stormeye/storm/calibrate.hpp"
#include "stormeye/storm/crisp_inputs.hpp"
#include "stormeye/storm/storm_fis.hpp"

#include "stormeye/image/binarize.hpp"
#include "stormeye/image/centroid.hpp"
#include "stormeye/image/image.hpp"
#include "stormeye/image/image_io.hpp"
#include "stormeye/image/morphology.hpp"
#include "stormeye/image/pgm_io.hpp"
#include "stormeye/image/png_io.hpp"

#include "stormeye/geo/focus_grid.hpp"
#include "stormeye/geo/geopoint.hpp"

#include "stormeye/locate/locator.hpp"
#include "stormeye/locate/observations.hpp"
#include "stormeye/locate/pipeline_config.hpp"

#include "stormeye/track/compare.hpp"
#include "stormeye/track/csv_io.hpp"
#include "stormeye/track/geojson.hpp"
#include "stormeye/track/track.hpp"
#include "stormeye/track/units.hpp"

#include "stormeye/synth/generator.hpp"

namespace stormeye {
inline constexpr const char* kVersion = "0.1.0";
}

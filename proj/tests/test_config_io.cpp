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

#include <catch2/catch_amalgamated.hpp>

#include "stormeye/fuzzy/config_io.hpp"
#include "stormeye/storm/storm_fis.hpp"
#include "support/tmpdir.hpp"

using namespace stormeye;

#ifndef STORMEYE_SOURCE_DIR
#define STORMEYE_SOURCE_DIR "."
#endif

namespace {
const std::string kSourceDir = STORMEYE_SOURCE_DIR;
}

TEST_CASE("FIS definition round-trips losslessly through JSON") {
  const auto def = storm::default_definition();
  const auto j = fuzzy::to_json(def);
  const auto back = fuzzy::fis_from_json(j);
  CHECK(fuzzy::to_json(back) == j);
  CHECK(back.rules == def.rules);
  CHECK(back.sample_count == def.sample_count);
  CHECK(back.clamp_inputs == def.clamp_inputs);
  CHECK(back.defuzzifier == def.defuzzifier);
  REQUIRE(back.inputs.size() == def.inputs.size());
  for (std::size_t v = 0; v < def.inputs.size(); ++v) {
    CHECK(back.inputs[v].name() == def.inputs[v].name());
    CHECK(back.inputs[v].lo() == def.inputs[v].lo());
    CHECK(back.inputs[v].hi() == def.inputs[v].hi());
    CHECK(back.inputs[v].unit() == def.inputs[v].unit());
    REQUIRE(back.inputs[v].terms().size() == def.inputs[v].terms().size());
    for (std::size_t t = 0; t < def.inputs[v].terms().size(); ++t) {
      CHECK(back.inputs[v].terms()[t].label() == def.inputs[v].terms()[t].label());
      CHECK(back.inputs[v].terms()[t].shape() == def.inputs[v].terms()[t].shape());
      CHECK(back.inputs[v].terms()[t].breakpoints() ==
            def.inputs[v].terms()[t].breakpoints());
    }
  }
}

TEST_CASE("FIS definition file round-trip") {
  testutil::TempDir tmp("fisio");
  const auto def = storm::default_definition();
  fuzzy::save_fis(def, tmp.file("fis.json"));
  const auto loaded = fuzzy::load_fis(tmp.file("fis.json"));
  CHECK(fuzzy::to_json(loaded) == fuzzy::to_json(def));
}

TEST_CASE("shipped default config matches the built-in definition") {
  const auto shipped = fuzzy::load_fis(kSourceDir + "/configs/storm_fis.default.json");
  CHECK(fuzzy::to_json(shipped) == fuzzy::to_json(storm::default_definition()));
}

TEST_CASE("shipped calibrated config builds a valid storm FIS") {
  const auto shipped = fuzzy::load_fis(kSourceDir + "/configs/storm_fis.calibrated.json");
  CHECK_NOTHROW(storm::StormFis(shipped));
}

TEST_CASE("malformed definitions are rejected with config errors") {
  auto base = fuzzy::to_json(storm::default_definition());

  auto bad_shape = base;
  bad_shape["inputs"][0]["terms"][0]["shape"] = "bell";
  CHECK_THROWS_AS(fuzzy::fis_from_json(bad_shape), ConfigError);

  auto bad_points = base;
  bad_points["inputs"][0]["terms"][0]["points"] = {1.0, 2.0};
  CHECK_THROWS_AS(fuzzy::fis_from_json(bad_points), ConfigError);

  auto bad_defuzz = base;
  bad_defuzz["defuzzifier"] = "centroid-ish";
  CHECK_THROWS_AS(fuzzy::fis_from_json(bad_defuzz), ConfigError);

  auto missing = base;
  missing.erase("rules");
  CHECK_THROWS_AS(fuzzy::fis_from_json(missing), ConfigError);

  auto bad_range = base;
  bad_range["inputs"][0]["range"] = {100.0, 1.0};
  CHECK_THROWS_AS(fuzzy::fis_from_json(bad_range), ConfigError);

  CHECK_THROWS_AS(fuzzy::load_fis("/nonexistent/path.json"), IoError);
}

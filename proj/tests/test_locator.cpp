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

#include <algorithm>
#include <random>

#include "stormeye/locate/locator.hpp"
#include "stormeye/synth/generator.hpp"
#include "support/tmpdir.hpp"

using namespace stormeye;
using locate::BlockObservation;
using storm::CrispInputs;

namespace {

const CrispInputs kFavorable{75.0, 120.0, 37.5, 923.0};
const CrispInputs kHopeless{5.0, 30.0, 5.0, 990.0};  // moisture-low rule only

const storm::StormFis& shared_fis() {
  static const storm::StormFis fis(storm::default_definition());
  return fis;
}

}  // namespace

TEST_CASE("select_block picks the only present block") {
  const geo::FocusGrid grid(geo::GeoPoint{15.0, 72.6});
  std::vector<BlockObservation> obs;
  obs.emplace_back(3, 4, kHopeless);
  obs.emplace_back(9, 9, kFavorable);
  obs.emplace_back(12, 2, kHopeless);
  const auto picked = locate::select_block(grid, obs, shared_fis());
  REQUIRE(picked.has_value());
  CHECK(picked->row == 9);
  CHECK(picked->col == 9);
  CHECK(picked->verdict.present);
}

TEST_CASE("select_block reports absence when nothing is present") {
  const geo::FocusGrid grid(geo::GeoPoint{15.0, 72.6});
  std::vector<BlockObservation> obs;
  obs.emplace_back(3, 4, kHopeless);
  obs.emplace_back(9, 9, kHopeless);
  CHECK_FALSE(locate::select_block(grid, obs, shared_fis()).has_value());
}

TEST_CASE("crisp ties break toward the grid center, then row-major") {
  const geo::FocusGrid grid(geo::GeoPoint{15.0, 72.6});
  std::vector<BlockObservation> obs;
  obs.emplace_back(3, 3, kFavorable);
  obs.emplace_back(8, 9, kFavorable);  // same crisp value, nearer the center
  const auto picked = locate::select_block(grid, obs, shared_fis());
  REQUIRE(picked.has_value());
  CHECK(picked->row == 8);
  CHECK(picked->col == 9);

  // Symmetric pair at equal distance: row-major order decides.
  std::vector<BlockObservation> mirrored;
  mirrored.emplace_back(9, 8, kFavorable);
  mirrored.emplace_back(7, 8, kFavorable);
  const auto first = locate::select_block(grid, mirrored, shared_fis());
  REQUIRE(first.has_value());
  CHECK(first->row == 7);
  CHECK(first->col == 8);
}

TEST_CASE("select_block is order-independent") {
  const geo::FocusGrid grid(geo::GeoPoint{15.0, 72.6});
  std::vector<BlockObservation> obs;
  obs.emplace_back(3, 3, kFavorable);
  obs.emplace_back(8, 9, kFavorable);
  obs.emplace_back(5, 5, CrispInputs{80.0, 100.0, 30.0, 930.0});
  obs.emplace_back(11, 13, kHopeless);

  std::mt19937 rng(47);
  const auto reference = locate::select_block(grid, obs, shared_fis());
  REQUIRE(reference.has_value());
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(obs.begin(), obs.end(), rng);
    const auto picked = locate::select_block(grid, obs, shared_fis());
    REQUIRE(picked.has_value());
    CHECK(picked->row == reference->row);
    CHECK(picked->col == reference->col);
  }
}

TEST_CASE("select_block argument validation") {
  const geo::FocusGrid grid(geo::GeoPoint{15.0, 72.6});
  CHECK_THROWS_AS(locate::select_block(grid, {}, shared_fis()), ArgumentError);
  std::vector<BlockObservation> dup;
  dup.emplace_back(3, 3, kFavorable);
  dup.emplace_back(3, 3, kHopeless);
  CHECK_THROWS_AS(locate::select_block(grid, dup, shared_fis()), ArgumentError);
  CHECK_THROWS_AS(BlockObservation(0, 3, kFavorable), RangeError);
  CHECK_THROWS_AS(BlockObservation(3, 16, kFavorable), RangeError);
}

TEST_CASE("refine_eye recovers a synthetic disc center") {
  synth::SynthOptions opt;
  opt.seed = 11;
  const auto bundle = synth::generate_bundle(opt);
  const auto& scene = bundle.frames.front();
  const geo::FocusGrid grid(scene.grid_center);

  const auto refined =
      locate::refine_eye(grid, scene.truth_row, scene.truth_col, scene.frame);
  CHECK_FALSE(refined.degraded);
  CHECK(std::abs(refined.point.lat - scene.truth.lat) < 0.02);
  CHECK(std::abs(refined.point.lon - scene.truth.lon) < 0.02);

  const auto extent = grid.extent();
  CHECK(extent.contains(refined.point));
}

TEST_CASE("an all-dark crop falls back to the block center") {
  const geo::FocusGrid grid(geo::GeoPoint{15.0, 72.6});
  const img::GrayImage dark(330, 330, 0);
  const auto refined = locate::refine_eye(grid, 4, 11, dark);
  CHECK(refined.degraded);
  const auto cell = grid.cell_bounds(4, 11);
  CHECK(refined.point.lat == Catch::Approx(cell.center().lat).margin(1e-12));
  CHECK(refined.point.lon == Catch::Approx(cell.center().lon).margin(1e-12));
}

TEST_CASE("a shifted disc moves the refined eye by the same amount") {
  synth::SynthOptions opt;
  opt.seed = 13;
  opt.salt_count = 0;  // keep the two scenes identical except for the disc
  const geo::GeoPoint center{15.0, 72.6};
  const geo::FocusGrid grid(center);
  const geo::GeoPoint truth{15.1, 72.4};  // inside cell (8,8), room to shift
  const geo::GeoPoint shifted{15.1, 72.5};

  const auto frame_a = synth::render_scene(grid, truth, 0.18, opt, 999);
  const auto frame_b = synth::render_scene(grid, shifted, 0.18, opt, 999);
  const auto eye_a = locate::refine_eye(grid, 8, 8, frame_a);
  const auto eye_b = locate::refine_eye(grid, 8, 8, frame_b);
  REQUIRE_FALSE(eye_a.degraded);
  REQUIRE_FALSE(eye_b.degraded);
  // 0.1 degrees is exactly 10 pixels at the default resolution; allow 1 px.
  CHECK(std::abs((eye_b.point.lon - eye_a.point.lon) - 0.1) < 0.01);
  CHECK(std::abs(eye_b.point.lat - eye_a.point.lat) < 0.01);
}

TEST_CASE("locate_frame runs the whole flow deterministically") {
  synth::SynthOptions opt;
  opt.seed = 19;
  const auto bundle = synth::generate_bundle(opt);
  const auto& scene = bundle.frames.front();

  const auto a = locate::locate_frame(scene.grid_center, scene.fields, scene.frame,
                                      shared_fis());
  const auto b = locate::locate_frame(scene.grid_center, scene.fields, scene.frame,
                                      shared_fis());
  REQUIRE(a.present());
  REQUIRE(b.present());
  CHECK(a.block->row == scene.truth_row);
  CHECK(a.block->col == scene.truth_col);
  CHECK(a.eye->point.lat == b.eye->point.lat);  // bit-identical
  CHECK(a.eye->point.lon == b.eye->point.lon);

  // End to end the located eye stays within one cell of the truth.
  CHECK(std::abs(a.eye->point.lat - scene.truth.lat) < geo::FocusGrid::kCellDegrees);
  CHECK(std::abs(a.eye->point.lon - scene.truth.lon) < geo::FocusGrid::kCellDegrees);
}

TEST_CASE("debug images land in the requested directory") {
  synth::SynthOptions opt;
  opt.seed = 23;
  const auto bundle = synth::generate_bundle(opt);
  const auto& scene = bundle.frames.front();
  const geo::FocusGrid grid(scene.grid_center);

  testutil::TempDir tmp("debug");
  locate::PipelineConfig cfg;
  cfg.debug_images = true;
  cfg.debug_dir = tmp.path().string();
  locate::refine_eye(grid, scene.truth_row, scene.truth_col, scene.frame, cfg);
  CHECK(std::filesystem::exists(tmp.path() / "crop.png"));
  CHECK(std::filesystem::exists(tmp.path() / "binary.png"));
  CHECK(std::filesystem::exists(tmp.path() / "denoised.png"));
}

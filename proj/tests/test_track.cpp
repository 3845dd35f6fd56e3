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

#include <cmath>

#include "stormeye/storm/crisp_inputs.hpp"
#include "stormeye/track/compare.hpp"
#include "stormeye/track/csv_io.hpp"
#include "stormeye/track/geojson.hpp"
#include "stormeye/track/track.hpp"
#include "stormeye/track/units.hpp"
#include "support/tmpdir.hpp"

using namespace stormeye;
using geo::GeoPoint;
using track::Source;
using track::Track;
using track::TrackPoint;

#ifndef STORMEYE_SOURCE_DIR
#define STORMEYE_SOURCE_DIR "."
#endif

namespace {
const std::string kSourceDir = STORMEYE_SOURCE_DIR;

Track simple_track(std::initializer_list<GeoPoint> points, Source source = Source::IMD) {
  Track t;
  int i = 0;
  for (const auto& p : points) {
    TrackPoint tp;
    tp.timestamp = "t" + std::to_string(i++);
    tp.position = p;
    tp.source = source;
    t.points.push_back(tp);
  }
  return t;
}

}  // namespace

TEST_CASE("error percentage reproduces the published first-row values") {
  // First data row of the Tauktae table: IMD (11.6, 72.6), CIMSS
  // (12.16, 72.29), method (11.8, 72.48).
  const auto a = track::error_percentage({11.6, 72.6}, {12.16, 72.29});
  CHECK(a.lat_err_pct == Catch::Approx(4.8276).margin(5e-4));
  CHECK(std::abs(a.lat_err_pct - 4.82) < 0.02);   // printed, truncated
  CHECK(a.lon_err_pct == Catch::Approx(-0.427).margin(5e-4));

  const auto b = track::error_percentage({11.6, 72.6}, {11.8, 72.48});
  CHECK(b.lat_err_pct == Catch::Approx(1.7241).margin(5e-4));
  CHECK(b.lon_err_pct == Catch::Approx(-0.1653).margin(5e-4));
  CHECK(std::abs(b.lon_err_pct - (-0.16)) < 0.02);
}

TEST_CASE("error percentage edge behavior") {
  const auto zero = track::error_percentage({11.6, 72.6}, {11.6, 72.6});
  CHECK(zero.lat_err_pct == 0.0);
  CHECK(zero.lon_err_pct == 0.0);
  CHECK_THROWS_AS(track::error_percentage({0.0, 72.6}, {1.0, 72.0}), RangeError);
  CHECK_THROWS_AS(track::error_percentage({11.6, 0.0}, {11.0, 1.0}), RangeError);

  // Sign follows the candidate-minus-reference difference for positive refs.
  const auto north = track::error_percentage({10.0, 70.0}, {10.5, 69.5});
  CHECK(north.lat_err_pct > 0.0);
  CHECK(north.lon_err_pct < 0.0);
}

TEST_CASE("self-comparison yields zero rows and zero summary") {
  const Track t = simple_track({{10.0, 70.0}, {11.0, 71.0}, {12.0, 72.0}});
  const auto result = track::compare_tracks(t, t);
  REQUIRE(result.rows.size() == 3);
  for (const auto& row : result.rows) {
    CHECK(row.lat_err_pct == 0.0);
    CHECK(row.lon_err_pct == 0.0);
  }
  CHECK(result.mean_abs_lat_pct == 0.0);
  CHECK(result.max_abs_lon_pct == 0.0);
}

TEST_CASE("row matching requires equal lengths; timestamp matching lists orphans") {
  const Track a = simple_track({{10.0, 70.0}, {11.0, 71.0}});
  const Track b = simple_track({{10.0, 70.0}});
  CHECK_THROWS_AS(track::compare_tracks(a, b), AlignmentError);

  Track c = simple_track({{10.0, 70.0}, {11.0, 71.0}});
  c.points[1].timestamp = "weird";
  CHECK_THROWS_AS(track::compare_tracks(a, c, track::MatchBy::Timestamp), AlignmentError);
  try {
    track::compare_tracks(a, c, track::MatchBy::Timestamp);
  } catch (const AlignmentError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("t1") != std::string::npos);
    CHECK(msg.find("weird") != std::string::npos);
  }
}

TEST_CASE("tauktae fixture: every printed error cell reproduces within 0.02") {
  const auto fixture =
      track::read_comparison_fixture(kSourceDir + "/fixtures/tauktae.csv");
  REQUIRE(fixture.size() == 18);
  const Track imd = fixture.track(Source::IMD);
  const auto a = track::compare_tracks(imd, fixture.track(Source::CIMSS));
  const auto b = track::compare_tracks(imd, fixture.track(Source::METHOD));
  for (std::size_t i = 0; i < fixture.size(); ++i) {
    REQUIRE(std::abs(a.rows[i].lat_err_pct - fixture.printed_a_lat[i]) <= 0.02);
    REQUIRE(std::abs(a.rows[i].lon_err_pct - fixture.printed_a_lon[i]) <= 0.02);
    REQUIRE(std::abs(b.rows[i].lat_err_pct - fixture.printed_b_lat[i]) <= 0.02);
    REQUIRE(std::abs(b.rows[i].lon_err_pct - fixture.printed_b_lon[i]) <= 0.02);
  }
  // The repaired first-row longitude is what makes its printed val work.
  CHECK(fixture.imd[0].lon == 72.6);
  CHECK(a.rows[0].lon_err_pct == Catch::Approx(-0.427).margin(0.001));
}

TEST_CASE("yaas fixture: every printed error cell reproduces within 0.02") {
  const auto fixture = track::read_comparison_fixture(kSourceDir + "/fixtures/yaas.csv");
  REQUIRE(fixture.size() == 12);
  const Track imd = fixture.track(Source::IMD);
  const auto a = track::compare_tracks(imd, fixture.track(Source::CIMSS));
  const auto b = track::compare_tracks(imd, fixture.track(Source::METHOD));
  for (std::size_t i = 0; i < fixture.size(); ++i) {
    REQUIRE(std::abs(a.rows[i].lat_err_pct - fixture.printed_a_lat[i]) <= 0.02);
    REQUIRE(std::abs(a.rows[i].lon_err_pct - fixture.printed_a_lon[i]) <= 0.02);
    REQUIRE(std::abs(b.rows[i].lat_err_pct - fixture.printed_b_lat[i]) <= 0.02);
    REQUIRE(std::abs(b.rows[i].lon_err_pct - fixture.printed_b_lon[i]) <= 0.02);
  }
  CHECK(a.rows[0].lat_err_pct == Catch::Approx(0.06).margin(0.02));
  CHECK(a.rows[3].lat_err_pct == Catch::Approx(-0.55).margin(0.02));
}

TEST_CASE("assemble_track chains prior centers") {
  std::vector<track::LocatedEye> located{
      {"2021-05-14T00:00Z", {11.8, 72.48}, track::Quality::Normal},
      {"2021-05-14T06:00Z", {12.25, 72.42}, track::Quality::Normal},
      {"2021-05-14T12:00Z", {12.65, 72.4}, track::Quality::Degraded},
  };
  const Track t = track::assemble_track(located);
  REQUIRE(t.size() == 3);
  CHECK(t.points[0].source == Source::METHOD);
  CHECK_FALSE(t.points[0].prior_index.has_value());
  REQUIRE(t.points[1].prior_index.has_value());
  CHECK(*t.points[1].prior_index == 0);
  REQUIRE(t.points[2].prior_index.has_value());
  CHECK(*t.points[2].prior_index == 1);
  CHECK(t.points[2].quality == track::Quality::Degraded);

  const Track single = track::assemble_track({located.front()});
  CHECK(single.size() == 1);
  CHECK_FALSE(single.points[0].prior_index.has_value());

  CHECK_THROWS_AS(track::assemble_track({}), ArgumentError);
  std::vector<track::LocatedEye> unordered{
      {"2021-05-14T06:00Z", {11.8, 72.48}, track::Quality::Normal},
      {"2021-05-14T00:00Z", {12.25, 72.42}, track::Quality::Normal},
  };
  CHECK_THROWS_AS(track::assemble_track(unordered), OrderingError);
}

TEST_CASE("the method's own fixture coordinates form a monotone track") {
  const auto fixture =
      track::read_comparison_fixture(kSourceDir + "/fixtures/tauktae.csv");
  const Track proposed = fixture.track(Source::METHOD);
  REQUIRE(proposed.size() == 18);
  CHECK(proposed.points.front().position.lat == 11.8);
  CHECK(proposed.points.back().position.lat == 24.15);
  for (std::size_t i = 1; i < proposed.size(); ++i)
    CHECK(proposed.points[i].position.lat > proposed.points[i - 1].position.lat);
}

TEST_CASE("knot conversion") {
  CHECK(track::knots_to_mps(0.0) == 0.0);
  CHECK(track::knots_to_mps(100.0) == Catch::Approx(51.4444).margin(1e-9));
  CHECK(track::mps_to_knots(17.0) == Catch::Approx(33.04538492041894).margin(1e-9));
  // The genesis threshold (17 m/s) sits far above the 20 kt table floor.
  CHECK(track::mps_to_knots(storm::kGenesisWindMps) > storm::kLifePeriodMinKt);
  CHECK_THROWS_AS(track::knots_to_mps(-1.0), RangeError);
  CHECK_THROWS_AS(track::mps_to_knots(-1.0), RangeError);

  for (const double v : {0.0, 1.0, 17.0, 33.05, 100.0, 129.9})
    CHECK(track::mps_to_knots(track::knots_to_mps(v)) == Catch::Approx(v).margin(1e-12));
}

TEST_CASE("best-track CSV round trip") {
  testutil::TempDir tmp("csv");
  Track t = simple_track({{11.6, 72.6}, {12.2, 72.6}}, Source::IMD);
  t.points[0].timestamp = "2021-05-14T00:00Z";
  t.points[1].timestamp = "2021-05-14T06:00Z";
  track::write_track_csv(t, tmp.file("t.csv"));
  const Track back = track::read_track_csv(tmp.file("t.csv"));
  REQUIRE(back.size() == 2);
  CHECK(back.points[0].timestamp == "2021-05-14T00:00Z");
  CHECK(back.points[0].position.lat == 11.6);
  CHECK(back.points[1].position.lon == 72.6);
  CHECK(back.points[0].source == Source::IMD);

  {
    std::ofstream out(tmp.file("bad.csv"));
    out << "time,lat,lon\n1,2,3\n";
  }
  CHECK_THROWS_AS(track::read_track_csv(tmp.file("bad.csv")), IoError);
  {
    std::ofstream out(tmp.file("badrow.csv"));
    out << "timestamp,lat,lon,source\na,999,70,IMD\n";
  }
  CHECK_THROWS_AS(track::read_track_csv(tmp.file("badrow.csv")), RangeError);
}

TEST_CASE("GeoJSON carries the line plus per-point properties") {
  Track t = simple_track({{11.6, 72.6}, {12.2, 72.7}}, Source::METHOD);
  t.points[1].quality = track::Quality::Degraded;
  const auto j = track::track_to_geojson(t);
  CHECK(j.at("type") == "FeatureCollection");
  REQUIRE(j.at("features").size() == 3);  // line + 2 points
  const auto& line = j.at("features")[0];
  CHECK(line.at("geometry").at("type") == "LineString");
  // GeoJSON positions are [lon, lat].
  CHECK(line.at("geometry").at("coordinates")[0][0] == 72.6);
  CHECK(line.at("geometry").at("coordinates")[0][1] == 11.6);
  const auto& p2 = j.at("features")[2];
  CHECK(p2.at("properties").at("timestamp") == "t1");
  CHECK(p2.at("properties").at("quality") == "degraded");
}

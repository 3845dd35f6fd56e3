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

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stormeye/errors.hpp"
#include "stormeye/geo/focus_grid.hpp"
#include "stormeye/storm/crisp_inputs.hpp"

namespace stormeye::locate {

/// Crisp meteorological inputs for one grid cell. How these fields are
/// derived from sensor data is outside the toolkit; they arrive via the
/// fields file.
struct BlockObservation {
  int row = 0;
  int col = 0;
  storm::CrispInputs inputs;

  BlockObservation(int row_, int col_, storm::CrispInputs inputs_)
      : row(row_), col(col_), inputs(inputs_) {
    geo::FocusGrid::check_index(row, col);
  }
};

/// Fields file: a JSON array of {row, col, D, W, PD, EP}.
inline std::vector<BlockObservation> load_fields(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open fields file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse fields file " + path + ": " + e.what());
  }
  if (!j.is_array()) throw IoError("fields file must be a JSON array: " + path);
  std::vector<BlockObservation> obs;
  try {
    for (const auto& entry : j) {
      obs.emplace_back(entry.at("row").get<int>(), entry.at("col").get<int>(),
                       storm::CrispInputs{entry.at("D").get<double>(),
                                          entry.at("W").get<double>(),
                                          entry.at("PD").get<double>(),
                                          entry.at("EP").get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError("bad fields entry in " + path + ": " + e.what());
  }
  return obs;
}

inline void save_fields(const std::vector<BlockObservation>& obs, const std::string& path) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& o : obs) {
    nlohmann::ordered_json entry;
    entry["row"] = o.row;
    entry["col"] = o.col;
    entry["D"] = o.inputs.moisture_density;
    entry["W"] = o.inputs.wind_speed;
    entry["PD"] = o.inputs.pressure_drop;
    entry["EP"] = o.inputs.central_pressure;
    j.push_back(entry);
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write fields file: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace stormeye::locate

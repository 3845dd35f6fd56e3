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
#include <map>
#include <string>

namespace stormeye::storm {

// Canonical variable names of the storm inference system.
inline constexpr const char* kMoistureDensity = "MoistureDensity";
inline constexpr const char* kWindSpeed = "WindSpeed";
inline constexpr const char* kPressureDrop = "PressureDrop";
inline constexpr const char* kEstimatedCentralPressure = "EstimatedCentralPressure";
inline constexpr const char* kEyeOutput = "Eye";

// Input universes: moisture density in percent, wind speed in knots,
// pressure drop and central pressure in hPa.
inline constexpr double kMoistureLo = 1.0, kMoistureHi = 100.0;
inline constexpr double kWindLo = 20.0, kWindHi = 130.0;
inline constexpr double kPressureDropLo = 1.0, kPressureDropHi = 80.0;
inline constexpr double kCentralPressureLo = 900.0, kCentralPressureHi = 1000.0;

// Wind-speed thresholds quoted by different parts of the source material.
// They are mutually inconsistent (17 m/s is about 33 kt, not 20 kt); all
// three are exposed as named constants and deliberately not reconciled.
inline constexpr double kGenesisWindMps = 17.0;     // onset wind speed, m/s
inline constexpr double kLifePeriodMinKt = 20.0;    // life-period floor, kt
inline constexpr double kLifePeriodMaxKt = 130.0;   // life-period ceiling, kt

/// Per-block crisp meteorological inputs: moisture density D (%), wind speed
/// W (kt), pressure drop at the center PD (hPa), estimated central pressure
/// EP (hPa).
struct CrispInputs {
  double moisture_density = 0.0;
  double wind_speed = 0.0;
  double pressure_drop = 0.0;
  double central_pressure = 0.0;

  [[nodiscard]] CrispInputs clamped() const {
    return CrispInputs{
        std::clamp(moisture_density, kMoistureLo, kMoistureHi),
        std::clamp(wind_speed, kWindLo, kWindHi),
        std::clamp(pressure_drop, kPressureDropLo, kPressureDropHi),
        std::clamp(central_pressure, kCentralPressureLo, kCentralPressureHi),
    };
  }

  [[nodiscard]] std::map<std::string, double> as_map() const {
    return {
        {kMoistureDensity, moisture_density},
        {kWindSpeed, wind_speed},
        {kPressureDrop, pressure_drop},
        {kEstimatedCentralPressure, central_pressure},
    };
  }

  [[nodiscard]] bool operator==(const CrispInputs&) const = default;
};

}  // namespace stormeye::storm

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

// Minimal library walkthrough: build the storm FIS and judge a few blocks.

#include <cstdio>

#include "stormeye/storm/storm_fis.hpp"

int main() {
  using namespace stormeye;

  const storm::StormFis fis(storm::default_definition());

  const storm::CrispInputs cases[] = {
      {75.0, 120.0, 37.5, 923.0},  // intense storm, eye expected
      {10.0, 40.0, 5.0, 990.0},    // dry air: moisture-low rule dominates
      {80.0, 60.0, 10.0, 995.0},   // organized but shallow pressure drop
  };

  for (const auto& inputs : cases) {
    const storm::EyeVerdict verdict = fis.judge(inputs);
    std::printf("D=%5.1f W=%5.1f PD=%5.1f EP=%6.1f -> crisp %.4f, %s\n",
                inputs.moisture_density, inputs.wind_speed, inputs.pressure_drop,
                inputs.central_pressure, verdict.crisp,
                verdict.present ? "present" : "absent");
    for (const auto& [rule, strength] : verdict.fired_rules)
      std::printf("    rule %2d fired at %.3f\n", rule, strength);
  }
  return 0;
}

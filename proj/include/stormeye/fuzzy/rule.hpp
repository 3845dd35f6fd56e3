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
#include <utility>
#include <vector>

namespace stormeye::fuzzy {

/// One IF-THEN rule: a conjunction (AND) of (variable, term) antecedents and
/// a single (variable, term) consequent. OR-connectives are not supported.
struct Rule {
  using Clause = std::pair<std::string, std::string>;  // (variable name, term label)

  std::vector<Clause> antecedents;
  Clause consequent;

  [[nodiscard]] bool operator==(const Rule& other) const = default;
};

}  // namespace stormeye::fuzzy

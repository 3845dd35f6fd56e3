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

#include <stdexcept>
#include <string>

namespace stormeye {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A crisp value fell outside its admissible range (and clamping was off).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A caller passed a structurally invalid argument (empty list, duplicate
/// block index, malformed option string).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// An inference system, rule base or config file is inconsistent.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Defuzzification was asked for on an identically-zero aggregated set.
/// Callers that treat this as "eye absent" catch it explicitly.
class NoRuleFired : public Error {
 public:
  NoRuleFired() : Error("no rule fired: aggregated output set is identically zero") {}
};

/// A binary image with zero mass has no center of gravity.
class NoMassError : public Error {
 public:
  NoMassError() : Error("no mass: binary image contains no set pixels") {}
};

/// Two tracks could not be matched point-for-point.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

/// Track points were not strictly ordered by timestamp.
class OrderingError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read, written or parsed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace stormeye

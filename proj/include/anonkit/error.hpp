// Copyright 2026 The anonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANONKIT_ERROR_HPP_
#define ANONKIT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace anonkit {

// Every failure the engine can report. CLI exit codes are derived from
// these: NoSolution maps to 2, everything else to 1.
enum class Errc {
  HeaderMismatch,
  ParseError,
  EmptyDataset,
  IndexOutOfRange,
  UnsupportedFormat,
  NonFunctionalMapping,
  NonMonotone,
  RangeGap,
  RangeOverlap,
  UnmappedValue,
  InvalidParameter,
  AttributeNotSensitive,
  SchemaMismatch,
  ClassNotInPopulation,
  RowCountMismatch,
  NoQuasiIdentifiers,
  UnknownAttribute,
  ZeroDistinct,
  NoSolution,
  MissingHierarchy,
  StaleNode,
  UnknownNode,
  UnknownProperty,
  InvalidPlan,
  IoError,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace anonkit

#endif  // ANONKIT_ERROR_HPP_

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

#include "anonkit/error.hpp"

namespace anonkit {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::HeaderMismatch: return "HeaderMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::EmptyDataset: return "EmptyDataset";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
    case Errc::NonFunctionalMapping: return "NonFunctionalMapping";
    case Errc::NonMonotone: return "NonMonotone";
    case Errc::RangeGap: return "RangeGap";
    case Errc::RangeOverlap: return "RangeOverlap";
    case Errc::UnmappedValue: return "UnmappedValue";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::AttributeNotSensitive: return "AttributeNotSensitive";
    case Errc::SchemaMismatch: return "SchemaMismatch";
    case Errc::ClassNotInPopulation: return "ClassNotInPopulation";
    case Errc::RowCountMismatch: return "RowCountMismatch";
    case Errc::NoQuasiIdentifiers: return "NoQuasiIdentifiers";
    case Errc::UnknownAttribute: return "UnknownAttribute";
    case Errc::ZeroDistinct: return "ZeroDistinct";
    case Errc::NoSolution: return "NoSolution";
    case Errc::MissingHierarchy: return "MissingHierarchy";
    case Errc::StaleNode: return "StaleNode";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::UnknownProperty: return "UnknownProperty";
    case Errc::InvalidPlan: return "InvalidPlan";
    case Errc::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace anonkit

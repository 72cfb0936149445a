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

#ifndef ANONKIT_CSV_HPP_
#define ANONKIT_CSV_HPP_

#include <string>
#include <vector>

#include "anonkit/dataset.hpp"

namespace anonkit {

struct CsvOptions {
  char delimiter = ',';
  char quote = '"';
  // Token that parses to a Missing cell (and that Missing cells are written
  // back as). Default: empty field.
  std::string missing_token;
};

// Parses a UTF-8 CSV file whose header row must match the schema names in
// order. Cells are parsed to the declared types.
//
// Throws HeaderMismatch, ParseError (with row/column coordinates),
// EmptyDataset, IoError.
Dataset load_csv(const std::string& path,
                 const std::vector<AttributeSchema>& schema,
                 const CsvOptions& options = {});

// Same as load_csv, but quasi-identifier cells are read as the labels a
// generalization produced: any token is accepted as a nominal label and "*"
// parses to Suppressed. Use this to re-ingest an anonymized export whose QI
// columns no longer hold their declared raw types.
Dataset load_csv_generalized(const std::string& path,
                             const std::vector<AttributeSchema>& schema,
                             const CsvOptions& options = {});

void write_csv(const Dataset& d, const std::string& path,
               const CsvOptions& options = {});

std::string csv_to_string(const Dataset& d, const CsvOptions& options = {});

// Loads the JSON schema file: a list of attributes with name, data_type
// (nominal|ordinal|discrete|continuous), role (identifier|quasi_identifier|
// sensitive|insensitive), optional "order" for ordinals, optional
// "hierarchy" file path and "locale" tag. The optional top-level
// "dataset_format" must be "plaintext"; proprietary or encrypted inputs are
// rejected.
std::vector<AttributeSchema> load_schema(const std::string& path);

}  // namespace anonkit

#endif  // ANONKIT_CSV_HPP_

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

#ifndef ANONKIT_DATASET_HPP_
#define ANONKIT_DATASET_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "anonkit/value.hpp"

namespace anonkit {

// How a column participates in anonymization. Identifier columns are
// dropped, quasi-identifiers are generalized and drive equivalence classes,
// sensitive columns feed the diversity/closeness checks, and insensitive
// columns pass through untouched.
enum class AttributeRole {
  Identifier,
  QuasiIdentifier,
  Sensitive,
  Insensitive,
};

std::string_view attribute_role_name(AttributeRole role);

struct AttributeSchema {
  std::string name;
  ValueKind data_type = ValueKind::Nominal;
  AttributeRole role = AttributeRole::Insensitive;
  // Declared label order, required for ordinal columns; rank = index.
  std::vector<std::string> ordinal_order;
  // Optional hierarchy file reference (resolved relative to the schema file).
  std::string hierarchy_ref;
  // Optional language/region tag, e.g. "en-US".
  std::string locale;
};

// Immutable typed table. All transforming operations return new datasets;
// concurrent reads are safe.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<AttributeSchema> schema,
          std::vector<std::vector<Value>> records);

  std::size_t n() const { return records_.size(); }
  std::size_t attribute_count() const { return schema_.size(); }
  const std::vector<AttributeSchema>& schema() const { return schema_; }
  const std::vector<std::vector<Value>>& records() const { return records_; }

  const AttributeSchema& attribute(std::size_t col) const;
  // Throws UnknownAttribute.
  std::size_t attribute_index(const std::string& name) const;
  bool has_attribute(const std::string& name) const;

  const std::vector<Value>& row(std::size_t i) const;
  const Value& cell(std::size_t row, std::size_t col) const;

  // Column indices of quasi-identifier attributes, in schema order.
  std::vector<std::size_t> qi_indices() const;
  std::vector<std::string> qi_names() const;

  // Removes every Identifier-role column. Record order and count are kept.
  Dataset drop_identifiers() const;

  // The row's cells restricted to quasi-identifier columns, in schema order.
  std::vector<Value> qi_projection(std::size_t row) const;

  // New dataset with the selected rows, in the given order.
  Dataset select_rows(const std::vector<std::size_t>& rows) const;

  // New dataset without the given rows (indices must be in range).
  Dataset remove_rows(const std::vector<std::size_t>& rows) const;

  // Order-sensitive digest of schema and cell contents; used to detect that
  // a search result is applied to the dataset it was computed from.
  std::uint64_t digest() const;

 private:
  std::vector<AttributeSchema> schema_;
  std::vector<std::vector<Value>> records_;
};

Dataset drop_identifiers(const Dataset& d);
std::vector<Value> qi_projection(const Dataset& d, std::size_t row);
Dataset suppress_records(const Dataset& d, const std::vector<std::size_t>& rows);

}  // namespace anonkit

#endif  // ANONKIT_DATASET_HPP_

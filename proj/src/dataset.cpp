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

#include "anonkit/dataset.hpp"

#include <algorithm>
#include <unordered_set>

#include "anonkit/digest.hpp"

namespace anonkit {

std::string_view value_kind_name(ValueKind kind) {
  switch (kind) {
    case ValueKind::Missing:
      return "missing";
    case ValueKind::Nominal:
      return "nominal";
    case ValueKind::Ordinal:
      return "ordinal";
    case ValueKind::Discrete:
      return "discrete";
    case ValueKind::Continuous:
      return "continuous";
    case ValueKind::Suppressed:
      return "suppressed";
  }
  return "?";
}

std::string_view attribute_role_name(AttributeRole role) {
  switch (role) {
    case AttributeRole::Identifier:
      return "identifier";
    case AttributeRole::QuasiIdentifier:
      return "quasi_identifier";
    case AttributeRole::Sensitive:
      return "sensitive";
    case AttributeRole::Insensitive:
      return "insensitive";
  }
  return "?";
}

Dataset::Dataset(std::vector<AttributeSchema> schema,
                 std::vector<std::vector<Value>> records)
    : schema_(std::move(schema)), records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& row = records_[i];
    if (row.size() != schema_.size()) {
      fail(Errc::ParseError,
           "row " + std::to_string(i) + " has " + std::to_string(row.size()) +
               " cells, schema declares " + std::to_string(schema_.size()));
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      const Value& v = row[c];
      if (v.is_missing() || v.is_suppressed()) continue;
      // Generalized cells are nominal labels regardless of the declared
      // column type, so nominal is accepted everywhere.
      if (v.kind() != schema_[c].data_type && v.kind() != ValueKind::Nominal) {
        fail(Errc::ParseError,
             "row " + std::to_string(i) + ", column \"" + schema_[c].name +
                 "\": cell kind " + std::string(value_kind_name(v.kind())) +
                 " does not match declared type " +
                 std::string(value_kind_name(schema_[c].data_type)));
      }
    }
  }
}

const AttributeSchema& Dataset::attribute(std::size_t col) const {
  if (col >= schema_.size()) {
    fail(Errc::IndexOutOfRange, "attribute index " + std::to_string(col));
  }
  return schema_[col];
}

std::size_t Dataset::attribute_index(const std::string& name) const {
  for (std::size_t i = 0; i < schema_.size(); ++i) {
    if (schema_[i].name == name) return i;
  }
  fail(Errc::UnknownAttribute, "no attribute named \"" + name + "\"");
}

bool Dataset::has_attribute(const std::string& name) const {
  return std::any_of(schema_.begin(), schema_.end(),
                     [&](const AttributeSchema& a) { return a.name == name; });
}

const std::vector<Value>& Dataset::row(std::size_t i) const {
  if (i >= records_.size()) {
    fail(Errc::IndexOutOfRange,
         "row " + std::to_string(i) + " of " + std::to_string(records_.size()));
  }
  return records_[i];
}

const Value& Dataset::cell(std::size_t row_idx, std::size_t col) const {
  return row(row_idx).at(col);
}

std::vector<std::size_t> Dataset::qi_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < schema_.size(); ++i) {
    if (schema_[i].role == AttributeRole::QuasiIdentifier) out.push_back(i);
  }
  return out;
}

std::vector<std::string> Dataset::qi_names() const {
  std::vector<std::string> out;
  for (const auto& a : schema_) {
    if (a.role == AttributeRole::QuasiIdentifier) out.push_back(a.name);
  }
  return out;
}

Dataset Dataset::drop_identifiers() const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < schema_.size(); ++i) {
    if (schema_[i].role != AttributeRole::Identifier) keep.push_back(i);
  }
  std::vector<AttributeSchema> schema;
  schema.reserve(keep.size());
  for (std::size_t i : keep) schema.push_back(schema_[i]);

  std::vector<std::vector<Value>> records;
  records.reserve(records_.size());
  for (const auto& row : records_) {
    std::vector<Value> out;
    out.reserve(keep.size());
    for (std::size_t i : keep) out.push_back(row[i]);
    records.push_back(std::move(out));
  }
  return Dataset(std::move(schema), std::move(records));
}

std::vector<Value> Dataset::qi_projection(std::size_t row_idx) const {
  const auto& r = row(row_idx);
  std::vector<Value> out;
  for (std::size_t i : qi_indices()) out.push_back(r[i]);
  return out;
}

Dataset Dataset::select_rows(const std::vector<std::size_t>& rows) const {
  std::vector<std::vector<Value>> records;
  records.reserve(rows.size());
  for (std::size_t i : rows) records.push_back(row(i));
  return Dataset(schema_, std::move(records));
}

Dataset Dataset::remove_rows(const std::vector<std::size_t>& rows) const {
  std::unordered_set<std::size_t> drop;
  for (std::size_t i : rows) {
    if (i >= records_.size()) {
      fail(Errc::IndexOutOfRange,
           "row " + std::to_string(i) + " of " +
               std::to_string(records_.size()));
    }
    drop.insert(i);
  }
  std::vector<std::size_t> keep;
  keep.reserve(records_.size() - drop.size());
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (!drop.count(i)) keep.push_back(i);
  }
  return select_rows(keep);
}

std::uint64_t Dataset::digest() const {
  Fnv1a h;
  for (const auto& a : schema_) {
    h.update(a.name);
    h.update(value_kind_name(a.data_type));
    h.update(attribute_role_name(a.role));
  }
  for (const auto& row : records_) {
    for (const auto& v : row) {
      h.update(v.key());
      h.update("\x1f");
    }
    h.update("\n");
  }
  return h.value();
}

Dataset drop_identifiers(const Dataset& d) { return d.drop_identifiers(); }

std::vector<Value> qi_projection(const Dataset& d, std::size_t row) {
  return d.qi_projection(row);
}

Dataset suppress_records(const Dataset& d,
                         const std::vector<std::size_t>& rows) {
  return d.remove_rows(rows);
}

}  // namespace anonkit

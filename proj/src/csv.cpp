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

#include "anonkit/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace anonkit {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open \"" + path + "\"");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Splits CSV text into rows of fields. Quoted fields may contain the
// delimiter, doubled quotes, and newlines. CRLF line ends are accepted.
std::vector<std::vector<std::string>> split_csv(const std::string& text,
                                                const CsvOptions& opt) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool row_started = false;

  auto end_field = [&] {
    row.push_back(field);
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
    row_started = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == opt.quote) {
        if (i + 1 < text.size() && text[i + 1] == opt.quote) {
          field.push_back(opt.quote);
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == opt.quote && field.empty()) {
      in_quotes = true;
      row_started = true;
    } else if (c == opt.delimiter) {
      end_field();
      row_started = true;
    } else if (c == '\n') {
      if (row_started || !field.empty() || !row.empty()) end_row();
      else if (!rows.empty()) continue;  // tolerate blank lines
      else end_row();
    } else if (c == '\r') {
      // swallowed; \n handles the row end
    } else {
      field.push_back(c);
      row_started = true;
    }
  }
  if (in_quotes) fail(Errc::ParseError, "unterminated quoted field");
  if (row_started || !field.empty() || !row.empty()) end_row();
  return rows;
}

Value parse_cell(const std::string& token, const AttributeSchema& attr,
                 const CsvOptions& opt, std::size_t row, bool generalized) {
  if (token == opt.missing_token) return Value::missing();

  auto cell_error = [&](const std::string& what) -> Value {
    fail(Errc::ParseError, "row " + std::to_string(row) + ", col \"" +
                               attr.name + "\": " + what);
  };

  if (generalized && attr.role == AttributeRole::QuasiIdentifier) {
    if (token == "*") return Value::suppressed();
    return Value::nominal(token);
  }

  switch (attr.data_type) {
    case ValueKind::Nominal:
      return Value::nominal(token);
    case ValueKind::Ordinal: {
      for (std::size_t r = 0; r < attr.ordinal_order.size(); ++r) {
        if (attr.ordinal_order[r] == token) {
          return Value::ordinal(token, static_cast<int>(r));
        }
      }
      return cell_error("\"" + token + "\" is not in the declared order");
    }
    case ValueKind::Discrete: {
      errno = 0;
      char* end = nullptr;
      long long v = std::strtoll(token.c_str(), &end, 10);
      if (errno != 0 || end == token.c_str() || *end != '\0') {
        return cell_error("\"" + token + "\" is not an integer");
      }
      return Value::discrete(v, token);
    }
    case ValueKind::Continuous: {
      errno = 0;
      char* end = nullptr;
      double v = std::strtod(token.c_str(), &end);
      if (errno != 0 || end == token.c_str() || *end != '\0' ||
          !std::isfinite(v)) {
        return cell_error("\"" + token + "\" is not a finite number");
      }
      return Value::continuous(v, token);
    }
    default:
      return cell_error("column declares unsupported type");
  }
}

Dataset load_csv_impl(const std::string& path,
                      const std::vector<AttributeSchema>& schema,
                      const CsvOptions& opt, bool generalized) {
  auto rows = split_csv(read_file(path), opt);
  if (rows.empty()) fail(Errc::EmptyDataset, "\"" + path + "\" has no header");

  const auto& header = rows.front();
  if (header.size() != schema.size()) {
    fail(Errc::HeaderMismatch,
         "header has " + std::to_string(header.size()) +
             " columns, schema declares " + std::to_string(schema.size()));
  }
  for (std::size_t i = 0; i < schema.size(); ++i) {
    if (header[i] != schema[i].name) {
      fail(Errc::HeaderMismatch, "column " + std::to_string(i) + " is \"" +
                                     header[i] + "\", schema declares \"" +
                                     schema[i].name + "\"");
    }
  }
  if (rows.size() == 1) {
    fail(Errc::EmptyDataset, "\"" + path + "\" has a header but no rows");
  }

  std::vector<std::vector<Value>> records;
  records.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& raw = rows[r];
    if (raw.size() != schema.size()) {
      fail(Errc::ParseError, "row " + std::to_string(r) + " has " +
                                 std::to_string(raw.size()) +
                                 " fields, expected " +
                                 std::to_string(schema.size()));
    }
    std::vector<Value> record;
    record.reserve(schema.size());
    for (std::size_t c = 0; c < schema.size(); ++c) {
      record.push_back(parse_cell(raw[c], schema[c], opt, r, generalized));
    }
    records.push_back(std::move(record));
  }
  return Dataset(schema, std::move(records));
}

bool needs_quoting(const std::string& field, const CsvOptions& opt) {
  for (char c : field) {
    if (c == opt.delimiter || c == opt.quote || c == '\n' || c == '\r') {
      return true;
    }
  }
  return false;
}

void write_field(std::ostream& out, const std::string& field,
                 const CsvOptions& opt) {
  if (!needs_quoting(field, opt)) {
    out << field;
    return;
  }
  out << opt.quote;
  for (char c : field) {
    if (c == opt.quote) out << opt.quote;
    out << c;
  }
  out << opt.quote;
}

}  // namespace

Dataset load_csv(const std::string& path,
                 const std::vector<AttributeSchema>& schema,
                 const CsvOptions& options) {
  return load_csv_impl(path, schema, options, /*generalized=*/false);
}

Dataset load_csv_generalized(const std::string& path,
                             const std::vector<AttributeSchema>& schema,
                             const CsvOptions& options) {
  return load_csv_impl(path, schema, options, /*generalized=*/true);
}

std::string csv_to_string(const Dataset& d, const CsvOptions& options) {
  std::ostringstream out;
  for (std::size_t c = 0; c < d.attribute_count(); ++c) {
    if (c) out << options.delimiter;
    write_field(out, d.schema()[c].name, options);
  }
  out << '\n';
  for (const auto& row : d.records()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << options.delimiter;
      std::string field = row[c].display(options.missing_token);
      if (row.size() == 1 && field.empty()) {
        // A bare empty line would read back as a blank line, not a record.
        out << options.quote << options.quote;
      } else {
        write_field(out, field, options);
      }
    }
    out << '\n';
  }
  return out.str();
}

void write_csv(const Dataset& d, const std::string& path,
               const CsvOptions& options) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::IoError, "cannot write \"" + path + "\"");
  out << csv_to_string(d, options);
}

std::vector<AttributeSchema> load_schema(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::IoError, "schema \"" + path + "\": " + e.what());
  }

  std::string format = doc.value("dataset_format", "plaintext");
  if (format != "plaintext") {
    fail(Errc::UnsupportedFormat,
         "dataset_format \"" + format +
             "\" is not ingestible; only plaintext CSV is supported");
  }

  if (!doc.contains("attributes") || !doc["attributes"].is_array()) {
    fail(Errc::IoError, "schema \"" + path + "\" lacks an attributes array");
  }

  std::vector<AttributeSchema> schema;
  for (const auto& item : doc["attributes"]) {
    AttributeSchema attr;
    attr.name = item.value("name", "");
    if (attr.name.empty()) {
      fail(Errc::IoError, "schema attribute without a name");
    }

    std::string type = item.value("data_type", "");
    if (type == "nominal") attr.data_type = ValueKind::Nominal;
    else if (type == "ordinal") attr.data_type = ValueKind::Ordinal;
    else if (type == "discrete") attr.data_type = ValueKind::Discrete;
    else if (type == "continuous") attr.data_type = ValueKind::Continuous;
    else {
      fail(Errc::IoError, "attribute \"" + attr.name +
                              "\": unknown data_type \"" + type + "\"");
    }

    std::string role = item.value("role", "");
    if (role == "identifier") attr.role = AttributeRole::Identifier;
    else if (role == "quasi_identifier") attr.role = AttributeRole::QuasiIdentifier;
    else if (role == "sensitive") attr.role = AttributeRole::Sensitive;
    else if (role == "insensitive") attr.role = AttributeRole::Insensitive;
    else {
      fail(Errc::IoError,
           "attribute \"" + attr.name + "\": unknown role \"" + role + "\"");
    }

    if (item.contains("order")) {
      for (const auto& label : item["order"]) {
        attr.ordinal_order.push_back(label.get<std::string>());
      }
    }
    if (attr.data_type == ValueKind::Ordinal && attr.ordinal_order.empty()) {
      fail(Errc::IoError, "ordinal attribute \"" + attr.name +
                              "\" requires an order list");
    }

    attr.hierarchy_ref = item.value("hierarchy", "");
    attr.locale = item.value("locale", "");
    schema.push_back(std::move(attr));
  }
  if (schema.empty()) fail(Errc::IoError, "schema declares no attributes");
  return schema;
}

}  // namespace anonkit

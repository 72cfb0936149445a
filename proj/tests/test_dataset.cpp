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

#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "anonkit/csv.hpp"
#include "helpers.hpp"

using namespace anonkit;
using anonkit::testing::attr;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "anonkit_test_" + std::to_string(counter++) + ".csv";
    std::ofstream out(path, std::ios::binary);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::vector<AttributeSchema> toy_schema() {
  return {attr("age", ValueKind::Discrete, AttributeRole::QuasiIdentifier),
          attr("sex", ValueKind::Nominal, AttributeRole::QuasiIdentifier),
          attr("dx", ValueKind::Nominal, AttributeRole::Sensitive)};
}

}  // namespace

TEST_CASE("load_csv parses declared types") {
  TempFile f("age,sex,dx\n30,M,flu\n31,M,flu\n40,F,covid\n");
  Dataset d = load_csv(f.path, toy_schema());
  CHECK(d.n() == 3);
  CHECK(d.cell(0, 0).as_int() == 30);
  CHECK(d.cell(2, 1).text() == "F");
}

TEST_CASE("load_csv reports cell coordinates on type mismatch") {
  TempFile f("age,sex,dx\n30,M,flu\nabc,M,flu\n");
  try {
    load_csv(f.path, toy_schema());
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
    CHECK(std::string(e.what()).find("age") != std::string::npos);
  }
}

TEST_CASE("load_csv rejects header mismatch and empty input") {
  TempFile wrong("age,gender,dx\n30,M,flu\n");
  CHECK_THROWS_AS(load_csv(wrong.path, toy_schema()), Error);

  TempFile header_only("age,sex,dx\n");
  try {
    load_csv(header_only.path, toy_schema());
    FAIL("expected EmptyDataset");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyDataset);
  }
}

TEST_CASE("missing token and quoting") {
  TempFile f("age,sex,dx\n30,\"M,x\",\n");
  CsvOptions opt;
  Dataset d = load_csv(f.path, toy_schema(), opt);
  CHECK(d.cell(0, 1).text() == "M,x");
  CHECK(d.cell(0, 2).is_missing());
}

TEST_CASE("csv round trip preserves tokens") {
  TempFile f("age,sex,dx\n007,M,flu\n30,\"a\"\"b\",covid\n41,F,\n");
  CsvOptions opt;
  Dataset d = load_csv(f.path, toy_schema(), opt);

  TempFile out("");
  write_csv(d, out.path, opt);
  Dataset again = load_csv(out.path, toy_schema(), opt);
  REQUIRE(again.n() == d.n());
  for (std::size_t i = 0; i < d.n(); ++i) {
    for (std::size_t c = 0; c < d.attribute_count(); ++c) {
      CHECK(d.cell(i, c).display() == again.cell(i, c).display());
      CHECK(d.cell(i, c) == again.cell(i, c));
    }
  }
  // Leading zeros survive verbatim.
  CHECK(again.cell(0, 0).display() == "007");
}

TEST_CASE("single-column round trip keeps missing rows") {
  Dataset d({attr("age", ValueKind::Discrete, AttributeRole::QuasiIdentifier)},
            {{Value::discrete(30)}, {Value::missing()}, {Value::discrete(41)}});
  TempFile out("");
  write_csv(d, out.path);
  Dataset again = load_csv(
      out.path,
      {attr("age", ValueKind::Discrete, AttributeRole::QuasiIdentifier)});
  REQUIRE(again.n() == 3);
  CHECK(again.cell(1, 0).is_missing());
}

TEST_CASE("drop_identifiers removes every identifier column") {
  Dataset d({attr("mrn", ValueKind::Nominal, AttributeRole::Identifier),
             attr("age", ValueKind::Discrete, AttributeRole::QuasiIdentifier)},
            {{Value::nominal("x"), Value::discrete(30)},
             {Value::nominal("y"), Value::discrete(41)}});
  Dataset out = d.drop_identifiers();
  CHECK(out.attribute_count() == 1);
  CHECK(out.schema()[0].name == "age");
  CHECK(out.n() == 2);

  SUBCASE("identity when no identifiers") {
    Dataset same = out.drop_identifiers();
    CHECK(same.attribute_count() == out.attribute_count());
    CHECK(same.n() == out.n());
  }
  SUBCASE("idempotent") {
    Dataset twice = d.drop_identifiers().drop_identifiers();
    CHECK(twice.attribute_count() == 1);
  }
  SUBCASE("all columns identifiers leaves empty rows") {
    Dataset all({attr("a", ValueKind::Nominal, AttributeRole::Identifier)},
                {{Value::nominal("x")}, {Value::nominal("y")}});
    Dataset none = all.drop_identifiers();
    CHECK(none.attribute_count() == 0);
    CHECK(none.n() == 2);
  }
}

TEST_CASE("qi_projection selects quasi-identifier cells in schema order") {
  Dataset d({attr("mrn", ValueKind::Nominal, AttributeRole::Identifier),
             attr("age", ValueKind::Discrete, AttributeRole::QuasiIdentifier),
             attr("sex", ValueKind::Nominal, AttributeRole::QuasiIdentifier),
             attr("dx", ValueKind::Nominal, AttributeRole::Sensitive)},
            {{Value::nominal("7"), Value::discrete(30), Value::nominal("M"),
              Value::nominal("flu")}});
  auto proj = d.qi_projection(0);
  REQUIRE(proj.size() == 2);
  CHECK(proj[0].as_int() == 30);
  CHECK(proj[1].text() == "M");

  SUBCASE("empty when no quasi-identifiers") {
    Dataset plain({attr("dx", ValueKind::Nominal, AttributeRole::Sensitive)},
                  {{Value::nominal("flu")}});
    CHECK(plain.qi_projection(0).empty());
  }
  SUBCASE("out of range") {
    CHECK_THROWS_AS(d.qi_projection(1), Error);
  }
  SUBCASE("same arity for every row") {
    Dataset two({attr("age", ValueKind::Discrete,
                      AttributeRole::QuasiIdentifier)},
                {{Value::discrete(1)}, {Value::missing()}});
    CHECK(two.qi_projection(0).size() == two.qi_projection(1).size());
  }
}

TEST_CASE("suppress_records removes rows and keeps order") {
  Dataset d = anonkit::testing::discrete_qi_dataset({10, 20, 30});
  Dataset out = suppress_records(d, {2});
  REQUIRE(out.n() == 2);
  CHECK(out.cell(0, 0).as_int() == 10);
  CHECK(out.cell(1, 0).as_int() == 20);

  CHECK(suppress_records(d, {}).n() == 3);
  CHECK(suppress_records(d, {0, 1, 2}).n() == 0);
  CHECK_THROWS_AS(suppress_records(d, {3}), Error);
}

TEST_CASE("schema file loading") {
  SUBCASE("valid schema") {
    std::vector<AttributeSchema> schema =
        load_schema(std::string(ANONKIT_DATA_DIR) + "/toy/schema.json");
    REQUIRE(schema.size() == 4);
    CHECK(schema[0].role == AttributeRole::Identifier);
    CHECK(schema[1].data_type == ValueKind::Discrete);
    CHECK(schema[1].hierarchy_ref == "age_intervals.json");
    CHECK(schema[1].locale == "en-US");
  }
  SUBCASE("non-plaintext formats are rejected") {
    TempFile f(R"({"dataset_format": "encrypted", "attributes": []})");
    try {
      load_schema(f.path);
      FAIL("expected UnsupportedFormat");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::UnsupportedFormat);
    }
  }
  SUBCASE("ordinal attributes need an order") {
    TempFile f(R"({"attributes": [
      {"name": "sev", "data_type": "ordinal", "role": "sensitive"}]})");
    CHECK_THROWS_AS(load_schema(f.path), Error);
  }
}

TEST_CASE("ordinal parsing uses the declared order") {
  AttributeSchema sev = attr("sev", ValueKind::Ordinal, AttributeRole::Sensitive);
  sev.ordinal_order = {"mild", "moderate", "severe"};
  TempFile f("sev\nsevere\nmild\n");
  Dataset d = load_csv(f.path, {sev});
  CHECK(d.cell(0, 0).rank() == 2);
  CHECK(d.cell(1, 0).rank() == 0);

  TempFile bad("sev\nunheard-of\n");
  CHECK_THROWS_AS(load_csv(bad.path, {sev}), Error);
}

TEST_CASE("value equality separates missing and suppressed") {
  CHECK(Value::missing() == Value::missing());
  CHECK(Value::suppressed() == Value::suppressed());
  CHECK(Value::missing() != Value::suppressed());
  CHECK(Value::nominal("*") != Value::suppressed());
  CHECK(Value::discrete(3) != Value::continuous(3.0));
}

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

#include <random>

#include "anonkit/partition.hpp"
#include "helpers.hpp"

using namespace anonkit;
using namespace anonkit::testing;

namespace {

Dataset two_qi_rows() {
  return Dataset(
      {attr("age", ValueKind::Discrete, AttributeRole::QuasiIdentifier),
       attr("sex", ValueKind::Nominal, AttributeRole::QuasiIdentifier)},
      {{Value::discrete(30), Value::nominal("M")},
       {Value::discrete(30), Value::nominal("M")},
       {Value::discrete(40), Value::nominal("F")}});
}

}  // namespace

TEST_CASE("partition groups rows by QI projection") {
  Dataset d = two_qi_rows();
  Partition part = Partition::of(d);

  // Oracle: pairwise row comparison.
  CHECK(part.class_count() == oracle_class_count(d));
  REQUIRE(part.class_count() == 2);
  CHECK(part.classes()[0].size() == 2);
  CHECK(part.classes()[1].size() == 1);

  CHECK(part.ces(0) == oracle_ces_qi(d, 0));
  CHECK(part.ces(0) == 2);
  CHECK(part.ces(2) == oracle_ces_qi(d, 2));
  CHECK(part.ces(2) == 1);
  CHECK(part.min_ces() == 1);

  SUBCASE("deterministic first-occurrence order") {
    CHECK(part.classes()[0].rows == std::vector<std::size_t>{0, 1});
    CHECK(part.classes()[1].rows == std::vector<std::size_t>{2});
  }
  SUBCASE("row out of range") {
    CHECK_THROWS_AS(part.ces(3), Error);
  }
}

TEST_CASE("zero quasi-identifiers yield a single class") {
  Dataset d({attr("dx", ValueKind::Nominal, AttributeRole::Sensitive)},
            {{Value::nominal("flu")},
             {Value::nominal("covid")},
             {Value::nominal("flu")},
             {Value::nominal("flu")}});
  Partition part = Partition::of(d);
  CHECK(part.class_count() == 1);
  CHECK(part.ces(0) == 4);
  CHECK(part.min_ces() == 4);
}

TEST_CASE("all-distinct rows partition into singletons") {
  Dataset d = discrete_qi_dataset({1, 2, 3, 4});
  Partition part = Partition::of(d);
  CHECK(part.class_count() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(part.ces(i) == 1);
}

TEST_CASE("missing equals missing, suppressed equals suppressed") {
  Dataset d(
      {attr("age", ValueKind::Discrete, AttributeRole::QuasiIdentifier)},
      {{Value::missing()}, {Value::missing()}, {Value::suppressed()},
       {Value::suppressed()}, {Value::discrete(1)}});
  Partition part = Partition::of(d);
  CHECK(part.class_count() == 3);
  CHECK(part.ces(0) == 2);
  CHECK(part.ces(2) == 2);
  CHECK(part.ces(4) == 1);
}

TEST_CASE("empty partition has no min CES") {
  Dataset d({attr("age", ValueKind::Discrete, AttributeRole::QuasiIdentifier)},
            {});
  Partition part = Partition::of(d);
  try {
    part.min_ces();
    FAIL("expected EmptyDataset");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyDataset);
  }
}

TEST_CASE("class sizes sum to n and reciprocal CES sums to j") {
  std::mt19937 rng(23);
  for (int round = 0; round < 25; ++round) {
    auto inst = random_instance(rng, 60, 3);
    Partition part = Partition::of(inst.data);

    std::size_t total = 0;
    for (const auto& ec : part.classes()) total += ec.size();
    CHECK(total == inst.data.n());

    double reciprocal_sum = 0.0;
    for (std::size_t i = 0; i < part.n(); ++i) {
      reciprocal_sum += 1.0 / static_cast<double>(part.ces(i));
    }
    CHECK(reciprocal_sum ==
          doctest::Approx(static_cast<double>(part.class_count()))
              .epsilon(1e-9));
  }
}

TEST_CASE("ces agrees with the pairwise oracle on random data") {
  std::mt19937 rng(29);
  for (int round = 0; round < 25; ++round) {
    auto inst = random_instance(rng, 50, 4);
    Partition part = Partition::of(inst.data);
    for (std::size_t i = 0; i < inst.data.n(); ++i) {
      CHECK(part.ces(i) == oracle_ces_qi(inst.data, i));
    }
  }
}

TEST_CASE("generalizing never decreases any CES (pruning keystone)") {
  std::mt19937 rng(31);
  for (int round = 0; round < 40; ++round) {
    auto inst = random_instance(rng, 40, 3);
    auto bounds = scheme_bounds(inst.data, inst.hierarchies);
    auto [lo, hi] = random_scheme_pair(rng, bounds);

    Partition fine = Partition::of(generalize(inst.data, lo, inst.hierarchies));
    Partition coarse =
        Partition::of(generalize(inst.data, hi, inst.hierarchies));
    for (std::size_t i = 0; i < inst.data.n(); ++i) {
      CHECK(coarse.ces(i) >= fine.ces(i));
    }
  }
}

TEST_CASE("every coarse class is a union of fine classes") {
  std::mt19937 rng(37);
  auto inst = random_instance(rng, 50, 2);
  auto bounds = scheme_bounds(inst.data, inst.hierarchies);
  auto [lo, hi] = random_scheme_pair(rng, bounds);

  Partition fine = Partition::of(generalize(inst.data, lo, inst.hierarchies));
  Partition coarse = Partition::of(generalize(inst.data, hi, inst.hierarchies));
  // Two rows in one fine class must land in one coarse class.
  for (const auto& ec : fine.classes()) {
    for (std::size_t r : ec.rows) {
      CHECK(coarse.class_of(r) == coarse.class_of(ec.rows.front()));
    }
  }
}

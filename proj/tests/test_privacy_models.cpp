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

#include "anonkit/metrics.hpp"
#include "anonkit/privacy_models.hpp"
#include "helpers.hpp"

using namespace anonkit;
using namespace anonkit::testing;

TEST_CASE("k-anonymity verdicts") {
  // class sizes {2, 3}
  Dataset d = discrete_qi_dataset({1, 1, 2, 2, 2});
  Partition part = Partition::of(d);

  CHECK(check_k_anonymity(part, 2).satisfied);
  ModelVerdict v = check_k_anonymity(part, 3);
  CHECK_FALSE(v.satisfied);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].observed == 2);

  SUBCASE("k=1 always holds: unanonymized data is still 1-anonymous") {
    Dataset all_distinct = discrete_qi_dataset({1, 2, 3});
    CHECK(check_k_anonymity(Partition::of(all_distinct), 1).satisfied);
  }
  SUBCASE("invalid k") {
    CHECK_THROWS_AS(check_k_anonymity(part, 0), Error);
  }
}

TEST_CASE("distinct l-diversity verdicts") {
  SUBCASE("one distinct value violates l=2") {
    Dataset d = qi_sensitive_dataset({{"a", "flu"}, {"a", "flu"}});
    ModelVerdict v =
        check_l_diversity(Partition::of(d), d, 2, "dx");
    CHECK_FALSE(v.satisfied);
    CHECK(v.violations[0].observed == 1);
  }
  SUBCASE("two distinct values satisfy l=2") {
    Dataset d = qi_sensitive_dataset({{"a", "flu"}, {"a", "covid"}});
    CHECK(check_l_diversity(Partition::of(d), d, 2, "dx").satisfied);
  }
  SUBCASE("l=1 holds for any class with a sensitive value") {
    Dataset d = qi_sensitive_dataset({{"a", "flu"}, {"b", "flu"}});
    CHECK(check_l_diversity(Partition::of(d), d, 1, "dx").satisfied);
  }
  SUBCASE("missing sensitive values do not count") {
    Dataset d({attr("qi", ValueKind::Nominal, AttributeRole::QuasiIdentifier),
               attr("dx", ValueKind::Nominal, AttributeRole::Sensitive)},
              {{Value::nominal("a"), Value::nominal("flu")},
               {Value::nominal("a"), Value::missing()}});
    ModelVerdict v = check_l_diversity(Partition::of(d), d, 2, "dx");
    CHECK_FALSE(v.satisfied);
  }
  SUBCASE("attribute must have the sensitive role") {
    Dataset d = qi_sensitive_dataset({{"a", "flu"}});
    try {
      check_l_diversity(Partition::of(d), d, 1, "qi");
      FAIL("expected AttributeNotSensitive");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::AttributeNotSensitive);
    }
  }
}

TEST_CASE("t-closeness with nominal total variation") {
  // overall {A: 0.5, B: 0.5}; class g1 = {A, A} has distance 0.5
  Dataset d = qi_sensitive_dataset(
      {{"g1", "A"}, {"g1", "A"}, {"g2", "B"}, {"g2", "B"}});
  Partition part = Partition::of(d);

  CHECK(t_closeness_distance(part, d, 0, "dx") == doctest::Approx(0.5));
  CHECK_FALSE(check_t_closeness(part, d, 0.4, "dx").satisfied);
  CHECK(check_t_closeness(part, d, 0.5, "dx").satisfied);

  SUBCASE("single-class partition has distance zero") {
    Dataset one = qi_sensitive_dataset({{"g", "A"}, {"g", "B"}});
    Partition p = Partition::of(one);
    CHECK(t_closeness_distance(p, one, 0, "dx") == doctest::Approx(0.0));
    CHECK(check_t_closeness(p, one, 0.0, "dx").satisfied);
  }
  SUBCASE("t=1 always satisfied") {
    CHECK(check_t_closeness(part, d, 1.0, "dx").satisfied);
  }
  SUBCASE("t=0 satisfied only when classes mirror the global distribution") {
    Dataset mirrored = qi_sensitive_dataset(
        {{"g1", "A"}, {"g1", "B"}, {"g2", "A"}, {"g2", "B"}});
    Partition p = Partition::of(mirrored);
    CHECK(check_t_closeness(p, mirrored, 0.0, "dx").satisfied);
    CHECK_FALSE(check_t_closeness(part, d, 0.0, "dx").satisfied);
  }
}

TEST_CASE("t-closeness uses the ordered distance for ranked attributes") {
  // Ordinal severity; class {mild, mild} vs overall thirds.
  AttributeSchema sev = attr("sev", ValueKind::Ordinal, AttributeRole::Sensitive);
  sev.ordinal_order = {"mild", "moderate", "severe"};
  Dataset d({attr("qi", ValueKind::Nominal, AttributeRole::QuasiIdentifier), sev},
            {{Value::nominal("g1"), Value::ordinal("mild", 0)},
             {Value::nominal("g1"), Value::ordinal("mild", 0)},
             {Value::nominal("g2"), Value::ordinal("moderate", 1)},
             {Value::nominal("g2"), Value::ordinal("moderate", 1)},
             {Value::nominal("g3"), Value::ordinal("severe", 2)},
             {Value::nominal("g3"), Value::ordinal("severe", 2)}});
  Partition part = Partition::of(d);
  // Ordered EMD of {mild:1} vs uniform thirds over 3 ranks:
  // cumulative gaps 2/3 and 1/3, ground step 1/2 -> (2/3 + 1/3) / 2 = 0.5
  CHECK(t_closeness_distance(part, d, 0, "sev") == doctest::Approx(0.5));
  // The extreme class {severe} has the same distance by symmetry.
  CHECK(t_closeness_distance(part, d, 2, "sev") == doctest::Approx(0.5));
}

TEST_CASE("delta-presence probabilities") {
  HierarchySet hs;
  hs.emplace("age", decades_hierarchy());

  SUBCASE("ratio within bounds") {
    // sample: 2 records in decade 30-39; population: 10 such records.
    std::vector<std::int64_t> pop_ages;
    for (int i = 0; i < 10; ++i) pop_ages.push_back(30 + (i % 10));
    Dataset population = discrete_qi_dataset(pop_ages);
    Dataset sample = discrete_qi_dataset({31, 35});

    GeneralizationScheme scheme{{1}};
    Partition sample_part = Partition::of(generalize(sample, scheme, hs));
    ModelVerdict v =
        check_delta_presence(sample_part, population, scheme, hs, 0.0, 0.5);
    CHECK(v.satisfied);

    ModelVerdict tight =
        check_delta_presence(sample_part, population, scheme, hs, 0.0, 0.1);
    CHECK_FALSE(tight.satisfied);
    CHECK(tight.violations[0].observed == doctest::Approx(0.2));
  }
  SUBCASE("sample equal to population violates delta_max < 1") {
    Dataset population = discrete_qi_dataset({31, 35});
    Dataset sample = discrete_qi_dataset({31, 35});
    GeneralizationScheme scheme{{1}};
    Partition sample_part = Partition::of(generalize(sample, scheme, hs));
    ModelVerdict v =
        check_delta_presence(sample_part, population, scheme, hs, 0.0, 0.9);
    CHECK_FALSE(v.satisfied);
    CHECK(v.violations[0].observed == doctest::Approx(1.0));
  }
  SUBCASE("vacuous bounds always hold") {
    Dataset population = discrete_qi_dataset({31, 35, 44});
    Dataset sample = discrete_qi_dataset({31});
    GeneralizationScheme scheme{{1}};
    Partition sample_part = Partition::of(generalize(sample, scheme, hs));
    CHECK(check_delta_presence(sample_part, population, scheme, hs, 0.0, 1.0)
              .satisfied);
  }
  SUBCASE("sample class missing from the population") {
    Dataset population = discrete_qi_dataset({31});
    Dataset sample = discrete_qi_dataset({55});
    GeneralizationScheme scheme{{1}};
    Partition sample_part = Partition::of(generalize(sample, scheme, hs));
    try {
      check_delta_presence(sample_part, population, scheme, hs, 0.0, 1.0);
      FAIL("expected ClassNotInPopulation");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ClassNotInPopulation);
    }
  }
}

TEST_CASE("k-anonymity and distinct l-diversity are anti-monotone") {
  std::mt19937 rng(41);
  for (int round = 0; round < 30; ++round) {
    auto inst = random_instance(rng, 40, 2);
    auto bounds = scheme_bounds(inst.data, inst.hierarchies);
    auto [lo, hi] = random_scheme_pair(rng, bounds);

    Dataset fine = generalize(inst.data, lo, inst.hierarchies);
    Dataset coarse = generalize(inst.data, hi, inst.hierarchies);
    Partition fine_part = Partition::of(fine);
    Partition coarse_part = Partition::of(coarse);

    for (int k : {2, 3}) {
      if (check_k_anonymity(fine_part, k).satisfied) {
        CHECK(check_k_anonymity(coarse_part, k).satisfied);
      }
    }
    for (int l : {2, 3}) {
      if (check_l_diversity(fine_part, fine, l, "dx").satisfied) {
        CHECK(check_l_diversity(coarse_part, coarse, l, "dx").satisfied);
      }
    }
  }
}

TEST_CASE("k-anonymity matches the maximum-risk bound exactly") {
  std::mt19937 rng(43);
  for (int round = 0; round < 30; ++round) {
    auto inst = random_instance(rng, 30, 2);
    Partition part = Partition::of(inst.data);
    for (int k = 1; k <= 5; ++k) {
      bool holds = check_k_anonymity(part, k).satisfied;
      bool bound = maximum_rr(part) <= 100.0 / k + 1e-9;
      CHECK(holds == bound);
    }
  }
}

TEST_CASE("constraint parameter validation") {
  CHECK_THROWS_AS(PrivacyConstraint::k_anonymity(0), Error);
  CHECK_THROWS_AS(PrivacyConstraint::l_diversity(0, "dx"), Error);
  CHECK_THROWS_AS(PrivacyConstraint::t_closeness(1.5, "dx"), Error);
  CHECK_THROWS_AS(PrivacyConstraint::delta_presence(0.9, 0.1), Error);
  CHECK(PrivacyConstraint::k_anonymity(2).anti_monotone());
  CHECK_FALSE(PrivacyConstraint::t_closeness(0.5, "dx").anti_monotone());
}

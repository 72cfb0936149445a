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

#ifndef ANONKIT_TESTS_HELPERS_HPP_
#define ANONKIT_TESTS_HELPERS_HPP_

#include <map>
#include <random>
#include <string>
#include <vector>

#include "anonkit/dataset.hpp"
#include "anonkit/hierarchy.hpp"

namespace anonkit::testing {

inline AttributeSchema attr(std::string name, ValueKind type,
                            AttributeRole role) {
  AttributeSchema a;
  a.name = std::move(name);
  a.data_type = type;
  a.role = role;
  return a;
}

// One discrete quasi-identifier named "age"; handy for single-column cases.
inline Dataset discrete_qi_dataset(const std::vector<std::int64_t>& ages) {
  std::vector<std::vector<Value>> rows;
  for (auto v : ages) rows.push_back({Value::discrete(v)});
  return Dataset({attr("age", ValueKind::Discrete,
                       AttributeRole::QuasiIdentifier)},
                 std::move(rows));
}

// Nominal QI "qi" plus nominal sensitive "dx".
inline Dataset qi_sensitive_dataset(
    const std::vector<std::pair<std::string, std::string>>& rows_in) {
  std::vector<std::vector<Value>> rows;
  for (const auto& [qi, dx] : rows_in) {
    rows.push_back({Value::nominal(qi), Value::nominal(dx)});
  }
  return Dataset({attr("qi", ValueKind::Nominal,
                       AttributeRole::QuasiIdentifier),
                  attr("dx", ValueKind::Nominal, AttributeRole::Sensitive)},
                 std::move(rows));
}

// Decade intervals over [0, 120) with a single coarser level, as used by
// several lattice examples: level 1 = decades, level 2 = whole span,
// level 3 = "*".
inline Hierarchy decades_hierarchy(const std::string& attribute = "age") {
  std::vector<std::vector<Hierarchy::Range>> levels;
  std::vector<Hierarchy::Range> decades;
  for (int lo = 0; lo < 120; lo += 10) {
    decades.push_back({static_cast<double>(lo), static_cast<double>(lo + 10),
                       std::to_string(lo) + "-" + std::to_string(lo + 9)});
  }
  levels.push_back(decades);
  levels.push_back({{0.0, 120.0, "0-119"}});
  return Hierarchy::interval(attribute, levels);
}

// ---------------------------------------------------------------------------
// Independent oracles: pairwise row comparison, no hashing, no reuse of the
// partition machinery under test.

inline bool rows_equal_on(const Dataset& d, std::size_t a, std::size_t b,
                          const std::vector<std::size_t>& cols) {
  for (std::size_t c : cols) {
    if (!(d.cell(a, c) == d.cell(b, c))) return false;
  }
  return true;
}

inline std::size_t oracle_ces(const Dataset& d, std::size_t row,
                              const std::vector<std::size_t>& cols) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < d.n(); ++j) {
    if (rows_equal_on(d, row, j, cols)) ++count;
  }
  return count;
}

inline std::size_t oracle_ces_qi(const Dataset& d, std::size_t row) {
  return oracle_ces(d, row, d.qi_indices());
}

// Number of distinct QI projections, by pairwise comparison.
inline std::size_t oracle_class_count(const Dataset& d) {
  auto cols = d.qi_indices();
  std::size_t j = 0;
  for (std::size_t i = 0; i < d.n(); ++i) {
    bool first = true;
    for (std::size_t k = 0; k < i; ++k) {
      if (rows_equal_on(d, i, k, cols)) {
        first = false;
        break;
      }
    }
    if (first) ++j;
  }
  return j;
}

inline double oracle_average_rr(const Dataset& d) {
  double sum = 0.0;
  for (std::size_t i = 0; i < d.n(); ++i) {
    sum += 100.0 / static_cast<double>(oracle_ces_qi(d, i));
  }
  return sum / static_cast<double>(d.n());
}

inline double oracle_maximum_rr(const Dataset& d) {
  std::size_t smallest = d.n();
  for (std::size_t i = 0; i < d.n(); ++i) {
    smallest = std::min(smallest, oracle_ces_qi(d, i));
  }
  return 100.0 / static_cast<double>(smallest);
}

// ---------------------------------------------------------------------------
// Random instances. Hierarchy labels are fresh per level so a generalized
// label never collides with a level-0 token.

struct RandomInstance {
  Dataset data;
  HierarchySet hierarchies;
};

inline Hierarchy random_categorical_hierarchy(std::mt19937& rng,
                                              const std::string& attribute,
                                              int base_labels,
                                              int declared_levels) {
  std::map<std::string, std::vector<std::string>> table;
  std::vector<int> group(base_labels);
  for (int i = 0; i < base_labels; ++i) group[i] = i;
  for (int v = 0; v < base_labels; ++v) {
    table["v" + std::to_string(v)] = {};
  }
  int groups = base_labels;
  for (int level = 1; level <= declared_levels; ++level) {
    std::uniform_int_distribution<int> shrink(1, std::max(1, groups / 2));
    int next_groups = shrink(rng);
    for (int v = 0; v < base_labels; ++v) {
      group[v] = group[v] % next_groups;
      table["v" + std::to_string(v)].push_back(
          "g" + std::to_string(level) + "_" + std::to_string(group[v]));
    }
    groups = next_groups;
  }
  return Hierarchy::categorical(attribute, table);
}

inline Hierarchy random_interval_hierarchy(std::mt19937& rng,
                                           const std::string& attribute,
                                           int declared_levels) {
  // Dyadic boundaries over [0, 64): each level halves the range count, so
  // nesting holds by construction.
  std::uniform_int_distribution<int> start(2, 4);
  int log_ranges = start(rng);  // level 1 has 2^log_ranges ranges
  std::vector<std::vector<Hierarchy::Range>> levels;
  for (int level = 1; level <= declared_levels && log_ranges >= 0;
       ++level, --log_ranges) {
    int count = 1 << log_ranges;
    double width = 64.0 / count;
    std::vector<Hierarchy::Range> ranges;
    for (int i = 0; i < count; ++i) {
      ranges.push_back({i * width, (i + 1) * width,
                        "r" + std::to_string(level) + "_" +
                            std::to_string(i)});
    }
    levels.push_back(std::move(ranges));
  }
  return Hierarchy::interval(attribute, levels);
}

// A dataset of qi_count quasi-identifiers (mixed nominal/discrete) plus one
// sensitive column, with matching hierarchies. max 5% missing cells.
inline RandomInstance random_instance(std::mt19937& rng, std::size_t n,
                                      int qi_count, bool with_missing = true) {
  std::vector<AttributeSchema> schema;
  HierarchySet hierarchies;
  std::vector<int> vocabulary;  // 0 marks a discrete attribute

  for (int q = 0; q < qi_count; ++q) {
    std::string name = "q" + std::to_string(q);
    bool discrete = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    if (discrete) {
      vocabulary.push_back(0);
      schema.push_back(
          attr(name, ValueKind::Discrete, AttributeRole::QuasiIdentifier));
      hierarchies.emplace(
          name, random_interval_hierarchy(
                    rng, name,
                    std::uniform_int_distribution<int>(1, 3)(rng)));
    } else {
      int base = std::uniform_int_distribution<int>(2, 8)(rng);
      vocabulary.push_back(base);
      schema.push_back(
          attr(name, ValueKind::Nominal, AttributeRole::QuasiIdentifier));
      hierarchies.emplace(
          name, random_categorical_hierarchy(
                    rng, name, base,
                    std::uniform_int_distribution<int>(1, 2)(rng)));
    }
  }
  schema.push_back(attr("dx", ValueKind::Nominal, AttributeRole::Sensitive));

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<Value>> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Value> row;
    for (int q = 0; q < qi_count; ++q) {
      if (with_missing && unit(rng) < 0.05) {
        row.push_back(Value::missing());
        continue;
      }
      if (vocabulary[q] == 0) {
        row.push_back(Value::discrete(
            std::uniform_int_distribution<std::int64_t>(0, 63)(rng)));
      } else {
        row.push_back(Value::nominal(
            "v" + std::to_string(std::uniform_int_distribution<int>(
                      0, vocabulary[q] - 1)(rng))));
      }
    }
    row.push_back(Value::nominal(
        "s" + std::to_string(std::uniform_int_distribution<int>(0, 4)(rng))));
    rows.push_back(std::move(row));
  }
  return {Dataset(schema, std::move(rows)), std::move(hierarchies)};
}

// Component-wise pair z <= z' within the hierarchy bounds.
inline std::pair<GeneralizationScheme, GeneralizationScheme> random_scheme_pair(
    std::mt19937& rng, const std::vector<int>& bounds) {
  GeneralizationScheme lo, hi;
  for (int b : bounds) {
    int upper = std::uniform_int_distribution<int>(0, b)(rng);
    int lower = std::uniform_int_distribution<int>(0, upper)(rng);
    hi.levels.push_back(upper);
    lo.levels.push_back(lower);
  }
  return {lo, hi};
}

}  // namespace anonkit::testing

#endif  // ANONKIT_TESTS_HELPERS_HPP_

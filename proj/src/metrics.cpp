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

#include "anonkit/metrics.hpp"

#include <cmath>
#include <set>
#include <unordered_map>

#include "anonkit/privacy_models.hpp"

namespace anonkit {

double individual_rr(const Partition& part, std::size_t row) {
  return 100.0 / static_cast<double>(part.ces(row));
}

double average_rr(const Partition& part) {
  if (part.n() == 0) fail(Errc::EmptyDataset, "no records");
  double sum = 0.0;
  for (std::size_t i = 0; i < part.n(); ++i) sum += individual_rr(part, i);
  return sum / static_cast<double>(part.n());
}

double maximum_rr(int k) {
  if (k < 1) fail(Errc::InvalidParameter, "k must be >= 1");
  return 100.0 / static_cast<double>(k);
}

double maximum_rr(const Partition& part) {
  return 100.0 / static_cast<double>(part.min_ces());
}

double nue(const Dataset& d, const Dataset& dz,
           const std::vector<std::string>& attributes) {
  if (d.n() != dz.n()) {
    fail(Errc::RowCountMismatch,
         "entropy comparison needs aligned rows: " + std::to_string(d.n()) +
             " vs " + std::to_string(dz.n()) +
             " (compute on the surviving subset after record suppression)");
  }
  Partition in = Partition::by_attributes(d, attributes);
  Partition out = Partition::by_attributes(dz, attributes);

  double n = static_cast<double>(d.n());
  double numerator = 0.0;
  double normalizer = 0.0;
  for (std::size_t i = 0; i < d.n(); ++i) {
    double ces_in = static_cast<double>(in.ces(i));
    double ces_out = static_cast<double>(out.ces(i));
    numerator += std::log2(ces_out / ces_in);
    normalizer += std::log2(n / ces_in);
  }
  if (normalizer == 0.0) return 100.0;  // already a single class
  return (1.0 - numerator / normalizer) * 100.0;
}

namespace {

bool cell_modified(const Value& before, const Value& after) {
  bool miss_before = before.is_missing();
  bool miss_after = after.is_missing();
  if (miss_before || miss_after) return miss_before != miss_after;
  return before.display() != after.display();
}

}  // namespace

double ig(const Dataset& d, const Dataset& dz) {
  if (d.n() != dz.n()) {
    fail(Errc::RowCountMismatch, "aligned rows required: " +
                                     std::to_string(d.n()) + " vs " +
                                     std::to_string(dz.n()));
  }
  auto qi = d.qi_indices();
  if (qi.empty()) fail(Errc::NoQuasiIdentifiers, "no quasi-identifiers");

  std::size_t modified = 0;
  for (std::size_t i = 0; i < d.n(); ++i) {
    for (std::size_t c : qi) {
      if (cell_modified(d.cell(i, c), dz.cell(i, c))) ++modified;
    }
  }
  double cells = static_cast<double>(d.n() * qi.size());
  return (1.0 - static_cast<double>(modified) / cells) * 100.0;
}

namespace {

std::size_t distinct_count(const Dataset& d, std::size_t col) {
  std::set<std::string> keys;
  for (std::size_t i = 0; i < d.n(); ++i) keys.insert(d.cell(i, col).key());
  return keys.size();
}

}  // namespace

double gg(const Dataset& d, const Dataset& dz, const std::string& attribute) {
  std::size_t before = distinct_count(d, d.attribute_index(attribute));
  std::size_t after = distinct_count(dz, dz.attribute_index(attribute));
  if (before == 0) {
    fail(Errc::ZeroDistinct, "column \"" + attribute + "\" has no values");
  }
  return static_cast<double>(after) / static_cast<double>(before) * 100.0;
}

AttackProfile attack_profile(const Partition& part, const Dataset* sample,
                             const Dataset* population,
                             const GeneralizationScheme* scheme,
                             const HierarchySet* hierarchies) {
  AttackProfile profile;
  profile.prosecutor = maximum_rr(part);
  profile.marketer = average_rr(part);

  if (population && scheme && hierarchies) {
    if (sample) require_shared_qi_schema(*sample, *population);
    Dataset generalized_pop = generalize(*population, *scheme, *hierarchies);
    Partition pop_part = Partition::of(generalized_pop);

    std::unordered_map<std::string, std::size_t> pop_counts;
    for (const auto& ec : pop_part.classes()) {
      std::string key;
      for (const auto& v : ec.key) {
        key += v.key();
        key += '\x1f';
      }
      pop_counts[key] = ec.size();
    }

    double worst = 0.0;
    for (const auto& ec : part.classes()) {
      std::string key;
      for (const auto& v : ec.key) {
        key += v.key();
        key += '\x1f';
      }
      auto it = pop_counts.find(key);
      if (it == pop_counts.end()) {
        fail(Errc::ClassNotInPopulation,
             "sample class has no generalized counterpart in the population");
      }
      worst = std::max(worst, 100.0 / static_cast<double>(it->second));
    }
    profile.journalist = worst;
  }
  return profile;
}

RiskReport risk_report(const Partition& part, bool include_individual,
                       const Dataset* sample, const Dataset* population,
                       const GeneralizationScheme* scheme,
                       const HierarchySet* hierarchies) {
  RiskReport report;
  report.average = average_rr(part);
  report.maximum = maximum_rr(part);
  report.attack = attack_profile(part, sample, population, scheme, hierarchies);
  if (include_individual) {
    report.individual.reserve(part.n());
    for (std::size_t i = 0; i < part.n(); ++i) {
      report.individual.push_back(individual_rr(part, i));
    }
  }
  return report;
}

LossReport loss_report(const Dataset& d, const Dataset& dz) {
  LossReport report;
  auto names = d.qi_names();
  report.nue_overall = names.empty() ? 100.0 : nue(d, dz, names);
  for (const auto& name : names) {
    report.nue_per_attribute.emplace_back(name, nue(d, dz, {name}));
    report.gg_per_attribute.emplace_back(name, gg(d, dz, name));
  }
  report.ig = names.empty() ? 100.0 : ig(d, dz);
  return report;
}

}  // namespace anonkit

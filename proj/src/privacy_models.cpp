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

#include "anonkit/privacy_models.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace anonkit {

namespace {

std::size_t sensitive_column(const Dataset& d, const std::string& name) {
  std::size_t col = d.attribute_index(name);
  if (d.schema()[col].role != AttributeRole::Sensitive) {
    fail(Errc::AttributeNotSensitive,
         "attribute \"" + name + "\" has role " +
             std::string(attribute_role_name(d.schema()[col].role)));
  }
  return col;
}

// Per-key probability mass of the non-missing sensitive values in `rows`.
std::map<std::string, double> distribution(const Dataset& d, std::size_t col,
                                           const std::vector<std::size_t>& rows,
                                           std::map<std::string, double>* axis) {
  std::map<std::string, double> dist;
  std::size_t total = 0;
  for (std::size_t r : rows) {
    const Value& v = d.cell(r, col);
    if (v.is_missing()) continue;
    dist[v.key()] += 1.0;
    if (axis && !axis->count(v.key())) (*axis)[v.key()] = v.numeric();
    ++total;
  }
  if (total > 0) {
    for (auto& [key, mass] : dist) mass /= static_cast<double>(total);
  }
  return dist;
}

std::vector<std::size_t> all_rows(std::size_t n) {
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  return rows;
}

double total_variation(const std::map<std::string, double>& p,
                       const std::map<std::string, double>& q) {
  double sum = 0.0;
  for (const auto& [key, mass] : p) {
    auto it = q.find(key);
    sum += std::abs(mass - (it == q.end() ? 0.0 : it->second));
  }
  for (const auto& [key, mass] : q) {
    if (!p.count(key)) sum += mass;
  }
  return sum / 2.0;
}

// Ordered earth-mover distance with unit span: bins sorted by their numeric
// position, ground distance 1/(m-1) between neighbors. Equals the mean
// absolute difference of the two CDFs, and lies in [0, 1].
double ordered_emd(const std::map<std::string, double>& p,
                   const std::map<std::string, double>& q,
                   const std::map<std::string, double>& axis) {
  std::vector<std::pair<double, std::string>> bins;
  bins.reserve(axis.size());
  for (const auto& [key, pos] : axis) bins.emplace_back(pos, key);
  std::sort(bins.begin(), bins.end());

  std::size_t m = bins.size();
  if (m <= 1) return 0.0;

  double cum = 0.0;
  double dist = 0.0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const std::string& key = bins[i].second;
    auto pi = p.find(key);
    auto qi = q.find(key);
    cum += (pi == p.end() ? 0.0 : pi->second) -
           (qi == q.end() ? 0.0 : qi->second);
    dist += std::abs(cum);
  }
  return dist / static_cast<double>(m - 1);
}

double class_distance(const Partition& part, const Dataset& d,
                      std::size_t class_index, std::size_t col) {
  std::map<std::string, double> axis;
  bool ordered = d.schema()[col].data_type != ValueKind::Nominal;
  auto overall = distribution(d, col, all_rows(d.n()), ordered ? &axis : nullptr);
  auto local = distribution(d, col, part.classes()[class_index].rows,
                            ordered ? &axis : nullptr);
  if (local.empty() || overall.empty()) return 0.0;
  return ordered ? ordered_emd(local, overall, axis)
                 : total_variation(local, overall);
}

std::string key_string(const std::vector<Value>& key) {
  std::string out;
  for (const auto& v : key) {
    out += v.display("<missing>");
    out += '|';
  }
  return out;
}

}  // namespace

PrivacyConstraint PrivacyConstraint::k_anonymity(int k) {
  if (k < 1) fail(Errc::InvalidParameter, "k must be >= 1");
  PrivacyConstraint c;
  c.model = Model::KAnonymity;
  c.k = k;
  return c;
}

PrivacyConstraint PrivacyConstraint::l_diversity(int l, std::string sensitive) {
  if (l < 1) fail(Errc::InvalidParameter, "l must be >= 1");
  PrivacyConstraint c;
  c.model = Model::LDiversity;
  c.l = l;
  c.sensitive_attribute = std::move(sensitive);
  return c;
}

PrivacyConstraint PrivacyConstraint::t_closeness(double t,
                                                 std::string sensitive) {
  if (!(t >= 0.0 && t <= 1.0)) {
    fail(Errc::InvalidParameter, "t must lie in [0, 1]");
  }
  PrivacyConstraint c;
  c.model = Model::TCloseness;
  c.t = t;
  c.sensitive_attribute = std::move(sensitive);
  return c;
}

PrivacyConstraint PrivacyConstraint::delta_presence(double delta_min,
                                                    double delta_max) {
  if (!(delta_min >= 0.0 && delta_min <= delta_max && delta_max <= 1.0)) {
    fail(Errc::InvalidParameter, "need 0 <= delta_min <= delta_max <= 1");
  }
  PrivacyConstraint c;
  c.model = Model::DeltaPresence;
  c.delta_min = delta_min;
  c.delta_max = delta_max;
  return c;
}

std::string PrivacyConstraint::describe() const {
  std::ostringstream out;
  switch (model) {
    case Model::KAnonymity:
      out << "k-anonymity(k=" << k << ")";
      break;
    case Model::LDiversity:
      out << "l-diversity(l=" << l << ", " << sensitive_attribute << ")";
      break;
    case Model::TCloseness:
      out << "t-closeness(t=" << t << ", " << sensitive_attribute << ")";
      break;
    case Model::DeltaPresence:
      out << "delta-presence([" << delta_min << ", " << delta_max << "])";
      break;
  }
  return out.str();
}

ModelVerdict check_k_anonymity(const Partition& part, int k) {
  if (k < 1) fail(Errc::InvalidParameter, "k must be >= 1");
  ModelVerdict verdict;
  for (std::size_t i = 0; i < part.classes().size(); ++i) {
    const auto& ec = part.classes()[i];
    if (ec.size() < static_cast<std::size_t>(k)) {
      verdict.violations.push_back(
          {i, static_cast<double>(ec.size()),
           "class " + key_string(ec.key) + " has size " +
               std::to_string(ec.size()) + " < k=" + std::to_string(k)});
    }
  }
  verdict.satisfied = verdict.violations.empty();
  return verdict;
}

ModelVerdict check_l_diversity(const Partition& part, const Dataset& d, int l,
                               const std::string& sensitive) {
  if (l < 1) fail(Errc::InvalidParameter, "l must be >= 1");
  std::size_t col = sensitive_column(d, sensitive);

  ModelVerdict verdict;
  for (std::size_t i = 0; i < part.classes().size(); ++i) {
    const auto& ec = part.classes()[i];
    std::set<std::string> distinct;
    for (std::size_t r : ec.rows) {
      const Value& v = d.cell(r, col);
      if (!v.is_missing()) distinct.insert(v.key());
    }
    if (distinct.size() < static_cast<std::size_t>(l)) {
      verdict.violations.push_back(
          {i, static_cast<double>(distinct.size()),
           "class " + key_string(ec.key) + " has " +
               std::to_string(distinct.size()) + " distinct \"" + sensitive +
               "\" values < l=" + std::to_string(l)});
    }
  }
  verdict.satisfied = verdict.violations.empty();
  return verdict;
}

double t_closeness_distance(const Partition& part, const Dataset& d,
                            std::size_t class_index,
                            const std::string& sensitive) {
  if (class_index >= part.classes().size()) {
    fail(Errc::IndexOutOfRange, "class " + std::to_string(class_index));
  }
  return class_distance(part, d, class_index, sensitive_column(d, sensitive));
}

ModelVerdict check_t_closeness(const Partition& part, const Dataset& d,
                               double t, const std::string& sensitive) {
  if (!(t >= 0.0 && t <= 1.0)) {
    fail(Errc::InvalidParameter, "t must lie in [0, 1]");
  }
  std::size_t col = sensitive_column(d, sensitive);

  ModelVerdict verdict;
  for (std::size_t i = 0; i < part.classes().size(); ++i) {
    double dist = class_distance(part, d, i, col);
    if (dist > t + 1e-12) {
      std::ostringstream detail;
      detail << "class " << key_string(part.classes()[i].key)
             << " distribution distance " << dist << " > t=" << t;
      verdict.violations.push_back({i, dist, detail.str()});
    }
  }
  verdict.satisfied = verdict.violations.empty();
  return verdict;
}

void require_shared_qi_schema(const Dataset& sample,
                              const Dataset& population) {
  auto a = sample.qi_names();
  auto b = population.qi_names();
  if (a != b) {
    fail(Errc::SchemaMismatch,
         "sample and population declare different quasi-identifier sets");
  }
  for (const auto& name : a) {
    if (sample.schema()[sample.attribute_index(name)].data_type !=
        population.schema()[population.attribute_index(name)].data_type) {
      fail(Errc::SchemaMismatch,
           "quasi-identifier \"" + name + "\" has different types in the "
           "sample and the population");
    }
  }
}

ModelVerdict check_delta_presence(const Partition& sample_part,
                                  const Dataset& population,
                                  const GeneralizationScheme& scheme,
                                  const HierarchySet& hierarchies,
                                  double delta_min, double delta_max) {
  if (!(delta_min >= 0.0 && delta_min <= delta_max && delta_max <= 1.0)) {
    fail(Errc::InvalidParameter, "need 0 <= delta_min <= delta_max <= 1");
  }

  Dataset generalized_pop = generalize(population, scheme, hierarchies);
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

  ModelVerdict verdict;
  for (std::size_t i = 0; i < sample_part.classes().size(); ++i) {
    const auto& ec = sample_part.classes()[i];
    std::string key;
    for (const auto& v : ec.key) {
      key += v.key();
      key += '\x1f';
    }
    auto it = pop_counts.find(key);
    if (it == pop_counts.end()) {
      fail(Errc::ClassNotInPopulation,
           "sample class " + key_string(ec.key) +
               " has no generalized counterpart in the population");
    }
    double prob =
        static_cast<double>(ec.size()) / static_cast<double>(it->second);
    if (prob < delta_min - 1e-12 || prob > delta_max + 1e-12) {
      std::ostringstream detail;
      detail << "class " << key_string(ec.key) << " presence probability "
             << prob << " outside [" << delta_min << ", " << delta_max << "]";
      verdict.violations.push_back({i, prob, detail.str()});
    }
  }
  verdict.satisfied = verdict.violations.empty();
  return verdict;
}

ModelVerdict check_constraint(const PrivacyConstraint& c,
                              const Partition& part, const Dataset& d,
                              const Dataset* population,
                              const GeneralizationScheme* scheme,
                              const HierarchySet* hierarchies) {
  switch (c.model) {
    case PrivacyConstraint::Model::KAnonymity:
      return check_k_anonymity(part, c.k);
    case PrivacyConstraint::Model::LDiversity:
      return check_l_diversity(part, d, c.l, c.sensitive_attribute);
    case PrivacyConstraint::Model::TCloseness:
      return check_t_closeness(part, d, c.t, c.sensitive_attribute);
    case PrivacyConstraint::Model::DeltaPresence:
      if (!population || !scheme || !hierarchies) {
        fail(Errc::InvalidParameter,
             "delta-presence requires a population table and the applied "
             "scheme");
      }
      require_shared_qi_schema(d, *population);
      return check_delta_presence(part, *population, *scheme, *hierarchies,
                                  c.delta_min, c.delta_max);
  }
  fail(Errc::InvalidParameter, "unknown privacy model");
}

}  // namespace anonkit

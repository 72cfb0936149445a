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

#ifndef ANONKIT_METRICS_HPP_
#define ANONKIT_METRICS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anonkit/hierarchy.hpp"
#include "anonkit/partition.hpp"

namespace anonkit {

// Re-identification risk of one record: (1 / CES) * 100.
double individual_rr(const Partition& part, std::size_t row);

// Mean of the individual risks, which collapses to (j / n) * 100.
double average_rr(const Partition& part);

// Risk of re-identifying at least one record: (1 / k) * 100.
double maximum_rr(int k);

// Same, with k taken as the partition's minimum CES.
double maximum_rr(const Partition& part);

// Non-uniform entropy utility, in percent: 100 means the class structure
// over `attributes` is unchanged, 0 means it collapsed to a single class.
// The loss fraction is sum(log2(CESout/CESin)) / sum(log2(n/CESin)); when
// the input is already one class the normalizer vanishes and the result is
// 100 by definition. Throws RowCountMismatch when d and dz are not aligned
// row for row.
double nue(const Dataset& d, const Dataset& dz,
           const std::vector<std::string>& attributes);

// Generalization intensity, in percent: the fraction of quasi-identifier
// cells whose displayed value survived anonymization. A cell counts as
// modified when its displayed label changed; identity-mapped labels count
// as unchanged. Throws RowCountMismatch, NoQuasiIdentifiers.
double ig(const Dataset& d, const Dataset& dz);

// Granularity of one column, in percent: distinct values after / distinct
// values before (Suppressed counts as one value). The row sets need not be
// aligned. Throws UnknownAttribute, ZeroDistinct.
double gg(const Dataset& d, const Dataset& dz, const std::string& attribute);

struct AttackProfile {
  // Target known to be in the set: bounded by the smallest class.
  double prosecutor = 0.0;
  // Mass re-identification: the expected fraction of records resolved.
  double marketer = 0.0;
  // Linkage against an external population; absent when no population table
  // was supplied.
  std::optional<double> journalist;
};

// Headline risk per attack model. The journalist entry needs the population
// generalized with the same scheme as the sample. Throws SchemaMismatch,
// ClassNotInPopulation.
AttackProfile attack_profile(const Partition& part,
                             const Dataset* sample = nullptr,
                             const Dataset* population = nullptr,
                             const GeneralizationScheme* scheme = nullptr,
                             const HierarchySet* hierarchies = nullptr);

struct RiskReport {
  std::vector<double> individual;  // filled when requested
  double average = 0.0;
  double maximum = 0.0;
  AttackProfile attack;
};

struct LossReport {
  double nue_overall = 100.0;
  std::vector<std::pair<std::string, double>> nue_per_attribute;
  double ig = 100.0;
  std::vector<std::pair<std::string, double>> gg_per_attribute;
};

RiskReport risk_report(const Partition& part, bool include_individual,
                       const Dataset* sample = nullptr,
                       const Dataset* population = nullptr,
                       const GeneralizationScheme* scheme = nullptr,
                       const HierarchySet* hierarchies = nullptr);

// Loss metrics of dz against d, per quasi-identifier attribute and overall.
LossReport loss_report(const Dataset& d, const Dataset& dz);

}  // namespace anonkit

#endif  // ANONKIT_METRICS_HPP_

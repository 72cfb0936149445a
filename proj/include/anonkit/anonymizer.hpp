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

#ifndef ANONKIT_ANONYMIZER_HPP_
#define ANONKIT_ANONYMIZER_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "anonkit/metrics.hpp"
#include "anonkit/privacy_models.hpp"

namespace anonkit {

struct SearchConfig {
  enum class Objective {
    Nue,                // overall non-uniform entropy (default)
    Ig,                 // generalization intensity
    GgMean,             // mean per-attribute granularity
    NueAvgRrTiebreak,   // entropy, equal scores broken by lower average risk
  };
  enum class Strategy { Exhaustive, PrunedBfs };

  std::vector<PrivacyConstraint> constraints;
  // Fraction of records that may be removed; the search never suppresses
  // more than floor(budget * n) rows.
  double suppression_budget = 0.0;
  Objective objective = Objective::Nue;
  Strategy strategy = Strategy::PrunedBfs;
  int workers = 1;
  // Population table for delta-presence (and the journalist risk entry).
  const Dataset* population = nullptr;
};

SearchConfig::Objective parse_objective(const std::string& name);
std::string_view objective_name(SearchConfig::Objective objective);

// One evaluated point of the generalization lattice.
struct LatticeNode {
  GeneralizationScheme scheme;
  bool evaluated = false;
  bool satisfied = false;
  std::vector<bool> constraint_ok;      // per configured constraint
  double loss_score = 0.0;              // objective value, 100 = no loss
  double average_risk = 0.0;            // average RR after suppression
  std::size_t suppressed_rows = 0;
  std::vector<std::size_t> suppressed_row_ids;  // original row indices
  std::uint64_t dataset_digest = 0;
};

struct SearchResult {
  bool found = false;
  LatticeNode best;
  // Every evaluated node, in breadth-first lattice order.
  std::vector<LatticeNode> evaluated;
  std::size_t lattice_size = 0;
  std::size_t skipped = 0;  // nodes pruned without evaluation
};

// Enumerates the lattice of per-attribute generalization levels, evaluating
// each node: generalize, greedily suppress whole violating classes
// (smallest first) within budget, re-partition, check every constraint, and
// score the configured loss metric over the surviving rows. Returns the
// satisfying node with the highest score; ties go to the lower level sum,
// then to the lexicographically smaller scheme.
//
// The pruned strategy skips strict generalizations of nodes that satisfied
// every constraint without suppression — only when all configured
// constraints are anti-monotone (k-anonymity, distinct l-diversity);
// t-closeness and delta-presence force full re-evaluation.
//
// found == false when no node satisfies the constraints within budget.
// Throws EmptyDataset, MissingHierarchy.
SearchResult search(const Dataset& d, const HierarchySet& hierarchies,
                    const SearchConfig& cfg);

// Replays a search node on the dataset it was computed from, returning the
// anonymized dataset and the audit list of suppressed row indices.
// Throws StaleNode when the dataset digest no longer matches.
std::pair<Dataset, std::vector<std::size_t>> apply(
    const Dataset& d, const LatticeNode& node, const HierarchySet& hierarchies);

// Machine-readable rendering of the full frontier for external audit.
nlohmann::ordered_json search_report_json(const SearchResult& result,
                                          const SearchConfig& cfg);

}  // namespace anonkit

#endif  // ANONKIT_ANONYMIZER_HPP_

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

#ifndef ANONKIT_PRIVACY_MODELS_HPP_
#define ANONKIT_PRIVACY_MODELS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "anonkit/hierarchy.hpp"
#include "anonkit/partition.hpp"

namespace anonkit {

// One privacy-model predicate with its parameter.
struct PrivacyConstraint {
  enum class Model { KAnonymity, LDiversity, TCloseness, DeltaPresence };

  Model model = Model::KAnonymity;
  int k = 1;
  int l = 1;
  double t = 1.0;
  double delta_min = 0.0;
  double delta_max = 1.0;
  std::string sensitive_attribute;  // l-diversity / t-closeness target

  static PrivacyConstraint k_anonymity(int k);
  static PrivacyConstraint l_diversity(int l, std::string sensitive);
  static PrivacyConstraint t_closeness(double t, std::string sensitive);
  static PrivacyConstraint delta_presence(double delta_min, double delta_max);

  // k-anonymity and distinct l-diversity can only become easier to satisfy
  // as generalization levels rise; t-closeness and delta-presence cannot be
  // assumed to, so the lattice search re-evaluates them at every node.
  bool anti_monotone() const {
    return model == Model::KAnonymity || model == Model::LDiversity;
  }

  std::string describe() const;
};

struct Violation {
  std::size_t class_index = 0;
  // Witness detail: observed size, distinct count, distance, or presence
  // probability, depending on the model.
  double observed = 0.0;
  std::string detail;
};

struct ModelVerdict {
  bool satisfied = true;
  std::vector<Violation> violations;
};

// min CES >= k. Throws InvalidParameter for k < 1.
ModelVerdict check_k_anonymity(const Partition& part, int k);

// Every class holds at least l distinct non-missing sensitive values.
// Throws AttributeNotSensitive, InvalidParameter.
ModelVerdict check_l_diversity(const Partition& part, const Dataset& d, int l,
                               const std::string& sensitive);

// Every class's sensitive-value distribution lies within distance t of the
// whole-set distribution: total variation for nominal attributes, the
// rank-ordered earth-mover distance for ordinal and numeric ones. Both
// distances live in [0, 1].
ModelVerdict check_t_closeness(const Partition& part, const Dataset& d,
                               double t, const std::string& sensitive);

// Distance used by check_t_closeness for the class with the given index.
double t_closeness_distance(const Partition& part, const Dataset& d,
                            std::size_t class_index,
                            const std::string& sensitive);

// Throws SchemaMismatch unless both datasets declare the same
// quasi-identifier names and types.
void require_shared_qi_schema(const Dataset& sample, const Dataset& population);

// For each class of the generalized sample, the probability that a
// population member generalizing to the same key is in the sample:
// sample count / population count. Satisfied when every probability lies in
// [delta_min, delta_max]. The population is generalized with the same
// scheme. Throws SchemaMismatch, ClassNotInPopulation.
ModelVerdict check_delta_presence(const Partition& sample_part,
                                  const Dataset& population,
                                  const GeneralizationScheme& scheme,
                                  const HierarchySet& hierarchies,
                                  double delta_min, double delta_max);

// Dispatches on the constraint's model. population may be null unless the
// constraint is delta-presence.
ModelVerdict check_constraint(const PrivacyConstraint& c,
                              const Partition& part, const Dataset& d,
                              const Dataset* population,
                              const GeneralizationScheme* scheme,
                              const HierarchySet* hierarchies);

}  // namespace anonkit

#endif  // ANONKIT_PRIVACY_MODELS_HPP_

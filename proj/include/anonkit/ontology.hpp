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

#ifndef ANONKIT_ONTOLOGY_HPP_
#define ANONKIT_ONTOLOGY_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "anonkit/error.hpp"

namespace anonkit {

// A labeled triple store covering the anonymization-study vocabulary:
// study designs, data and attribute types, risks, attacks, privacy models,
// preparation techniques, information metrics, and AI use types, connected
// by a small set of typed properties. Deliberately not a description-logic
// reasoner; plan validation needs lookups and closure checks only.
class OntologyGraph {
 public:
  struct Node {
    std::string name;        // canonical kebab-case id
    std::string cls;         // e.g. "PrivacyModel"
    std::string display;     // e.g. "k-Anonymity"
    std::string definition;
    std::vector<std::string> aliases;
    bool risk_metric = false;        // InformationMetric nodes only
    bool not_anonymization = false;  // privacy methods outside anonymization
    bool non_observational = false;  // StudyDesign nodes only
  };

  struct Triple {
    std::string subject;
    std::string property;
    std::string object;
  };

  // The built-in vocabulary and edge closure. The mitigates / threatens
  // edges and the non-k-anonymity preparation edges are editorial closure
  // over the narrative definitions; load_override can replace them.
  static OntologyGraph builtin();

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Triple>& triples() const { return triples_; }

  // Resolves a (case-insensitive, alias-aware) name to its node, or null.
  const Node* find(const std::string& name) const;
  // Same, but throws UnknownNode.
  const Node& resolve(const std::string& name) const;

  // All objects of (subject, property) triples, in insertion order.
  // Unknown names throw UnknownNode; a property name that does not exist,
  // or that cannot apply to the subject's class, throws UnknownProperty.
  std::vector<std::string> query(const std::string& subject,
                                 const std::string& property) const;

  // Display labels for a set of node ids.
  std::vector<std::string> display_all(const std::vector<std::string>& ids) const;

  void add_node(Node node);
  // Validates endpoints and the property's domain/range. Duplicates are
  // ignored.
  void add_triple(const std::string& subject, const std::string& property,
                  const std::string& object);
  void remove_triple(const std::string& subject, const std::string& property,
                     const std::string& object);

  // Merges a user knowledge file over this graph: nodes replace same-named
  // nodes, triples append, and "remove_triples" entries drop built-ins.
  void merge_override(const nlohmann::json& doc);

  // Full-scan integrity check: edge endpoints exist, domains/ranges hold.
  void verify_closure() const;

  // Version-pinned serialization; byte-identical across runs.
  nlohmann::ordered_json to_json() const;

  // Nearest node names for an unrecognized term.
  std::vector<std::string> suggestions(const std::string& term,
                                       std::size_t limit = 3) const;

 private:
  std::vector<Node> nodes_;
  std::vector<Triple> triples_;
};

// A concrete study configuration to be validated against the graph.
struct StudyPlan {
  struct ModelChoice {
    std::string name;
    nlohmann::json params;  // optional, e.g. {"k": 2}
  };

  std::string study_design;
  std::string use_type;
  std::vector<std::string> data_types;
  std::vector<std::pair<std::string, std::string>> attribute_roles;
  std::string risk_target;
  std::vector<std::string> attack_models;
  std::vector<ModelChoice> privacy_models;
  std::vector<std::string> preparation_techniques;
  std::vector<std::string> metrics;
};

// Parses the JSON plan file. Throws InvalidPlan on shape errors.
StudyPlan parse_plan(const nlohmann::json& doc);

struct PlanCheck {
  std::string id;
  bool passed = true;
  std::string explanation;
  std::vector<std::string> edges;  // edges consulted, rendered as text
};

struct PlanReport {
  bool all_passed = true;
  std::vector<PlanCheck> checks;
  std::vector<std::string> warnings;
};

// Runs the five structural checks: (models_mitigate_risk) every chosen
// privacy model mitigates the declared risk target; (attacks_covered) every
// declared attack threatens a risk some chosen model mitigates;
// (techniques_reachable) every preparation technique is reachable via
// has-preparation from a chosen model; (metrics_measurable) every metric is
// a risk metric or has-measure-reachable from a declared data type;
// (use_type_impacted) the declared use type is has-impact-reachable from a
// chosen metric. Unknown names throw UnknownNode.
PlanReport validate_plan(const OntologyGraph& g, const StudyPlan& plan);

nlohmann::ordered_json plan_report_json(const PlanReport& report);

}  // namespace anonkit

#endif  // ANONKIT_ONTOLOGY_HPP_

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

#include "anonkit/ontology.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace anonkit {

namespace {

std::string normalize(const std::string& name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) {
    if (c == ' ' || c == '_') {
      out.push_back('-');
    } else {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

struct PropertySignature {
  std::string domain;  // required subject class; empty = any
  std::string range;   // required object class; empty = any
};

const std::map<std::string, PropertySignature>& property_signatures() {
  static const std::map<std::string, PropertySignature> signatures = {
      {"has-preparation", {"PrivacyModel", "PreparationTechnique"}},
      {"has-measure", {"DataType", "InformationMetric"}},
      {"has-impact", {"InformationMetric", "UseType"}},
      {"mitigates", {"PrivacyModel", "RiskType"}},
      {"threatens", {"AttackType", "RiskType"}},
      {"subclass-of", {"", ""}},
  };
  return signatures;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t next = std::min({row[j] + 1, row[j - 1] + 1,
                                   diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = row[j];
      row[j] = next;
    }
  }
  return row[b.size()];
}

}  // namespace

const OntologyGraph::Node* OntologyGraph::find(const std::string& name) const {
  std::string wanted = normalize(name);
  for (const auto& node : nodes_) {
    if (node.name == wanted) return &node;
    for (const auto& alias : node.aliases) {
      if (normalize(alias) == wanted) return &node;
    }
  }
  return nullptr;
}

const OntologyGraph::Node& OntologyGraph::resolve(
    const std::string& name) const {
  const Node* node = find(name);
  if (!node) fail(Errc::UnknownNode, "\"" + name + "\" is not in the ontology");
  return *node;
}

std::vector<std::string> OntologyGraph::query(
    const std::string& subject, const std::string& property) const {
  const Node& s = resolve(subject);
  auto sig = property_signatures().find(normalize(property));
  if (sig == property_signatures().end()) {
    fail(Errc::UnknownProperty, "\"" + property + "\" is not a property");
  }
  const std::string& domain = sig->second.domain;
  if (!domain.empty() && s.cls != domain) {
    // A class with designated outgoing properties rejects mismatched ones;
    // classes that are never a property domain query vacuously to empty.
    bool class_has_properties = false;
    for (const auto& [name, other] : property_signatures()) {
      if (other.domain == s.cls) class_has_properties = true;
    }
    if (class_has_properties) {
      fail(Errc::UnknownProperty, "property \"" + sig->first +
                                      "\" does not apply to class " + s.cls);
    }
    return {};
  }

  std::vector<std::string> objects;
  for (const auto& t : triples_) {
    if (t.subject == s.name && t.property == sig->first) {
      objects.push_back(t.object);
    }
  }
  return objects;
}

std::vector<std::string> OntologyGraph::display_all(
    const std::vector<std::string>& ids) const {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(resolve(id).display);
  return out;
}

void OntologyGraph::add_node(Node node) {
  node.name = normalize(node.name);
  if (node.display.empty()) node.display = node.name;
  for (auto& existing : nodes_) {
    if (existing.name == node.name) {
      existing = std::move(node);
      return;
    }
  }
  nodes_.push_back(std::move(node));
}

void OntologyGraph::add_triple(const std::string& subject,
                               const std::string& property,
                               const std::string& object) {
  const Node& s = resolve(subject);
  const Node& o = resolve(object);
  auto sig = property_signatures().find(normalize(property));
  if (sig == property_signatures().end()) {
    fail(Errc::UnknownProperty, "\"" + property + "\" is not a property");
  }
  if (!sig->second.domain.empty() && s.cls != sig->second.domain) {
    fail(Errc::UnknownProperty, "property \"" + sig->first +
                                    "\" requires subject class " +
                                    sig->second.domain + ", got " + s.cls);
  }
  if (!sig->second.range.empty() && o.cls != sig->second.range) {
    fail(Errc::UnknownProperty, "property \"" + sig->first +
                                    "\" requires object class " +
                                    sig->second.range + ", got " + o.cls);
  }
  for (const auto& t : triples_) {
    if (t.subject == s.name && t.property == sig->first && t.object == o.name) {
      return;
    }
  }
  triples_.push_back({s.name, sig->first, o.name});
}

void OntologyGraph::remove_triple(const std::string& subject,
                                  const std::string& property,
                                  const std::string& object) {
  std::string s = normalize(subject);
  std::string p = normalize(property);
  std::string o = normalize(object);
  const Node* sn = find(s);
  const Node* on = find(o);
  if (sn) s = sn->name;
  if (on) o = on->name;
  triples_.erase(std::remove_if(triples_.begin(), triples_.end(),
                                [&](const Triple& t) {
                                  return t.subject == s && t.property == p &&
                                         t.object == o;
                                }),
                 triples_.end());
}

void OntologyGraph::merge_override(const nlohmann::json& doc) {
  if (doc.contains("nodes")) {
    for (const auto& item : doc["nodes"]) {
      Node node;
      node.name = item.at("name").get<std::string>();
      node.cls = item.at("class").get<std::string>();
      node.display = item.value("display", "");
      node.definition = item.value("definition", "");
      if (item.contains("aliases")) {
        for (const auto& a : item["aliases"]) {
          node.aliases.push_back(a.get<std::string>());
        }
      }
      node.risk_metric = item.value("risk_metric", false);
      node.not_anonymization = item.value("not_anonymization", false);
      node.non_observational = item.value("non_observational", false);
      add_node(std::move(node));
    }
  }
  if (doc.contains("remove_triples")) {
    for (const auto& item : doc["remove_triples"]) {
      remove_triple(item.at("subject").get<std::string>(),
                    item.at("property").get<std::string>(),
                    item.at("object").get<std::string>());
    }
  }
  if (doc.contains("triples")) {
    for (const auto& item : doc["triples"]) {
      add_triple(item.at("subject").get<std::string>(),
                 item.at("property").get<std::string>(),
                 item.at("object").get<std::string>());
    }
  }
  verify_closure();
}

void OntologyGraph::verify_closure() const {
  for (const auto& t : triples_) {
    const Node* s = find(t.subject);
    const Node* o = find(t.object);
    if (!s || !o) {
      fail(Errc::UnknownNode, "dangling edge endpoint in " + t.subject +
                                  " -" + t.property + "-> " + t.object);
    }
    auto sig = property_signatures().find(t.property);
    if (sig == property_signatures().end()) {
      fail(Errc::UnknownProperty, "\"" + t.property + "\" is not a property");
    }
    if ((!sig->second.domain.empty() && s->cls != sig->second.domain) ||
        (!sig->second.range.empty() && o->cls != sig->second.range)) {
      fail(Errc::UnknownProperty, "domain/range violation in " + t.subject +
                                      " -" + t.property + "-> " + t.object);
    }
  }
}

nlohmann::ordered_json OntologyGraph::to_json() const {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (const auto& n : nodes_) {
    nlohmann::ordered_json j;
    j["name"] = n.name;
    j["class"] = n.cls;
    j["display"] = n.display;
    j["definition"] = n.definition;
    if (!n.aliases.empty()) j["aliases"] = n.aliases;
    if (n.risk_metric) j["risk_metric"] = true;
    if (n.not_anonymization) j["not_anonymization"] = true;
    if (n.non_observational) j["non_observational"] = true;
    nodes.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  nlohmann::ordered_json triples = nlohmann::ordered_json::array();
  for (const auto& t : triples_) {
    nlohmann::ordered_json j;
    j["subject"] = t.subject;
    j["property"] = t.property;
    j["object"] = t.object;
    triples.push_back(std::move(j));
  }
  doc["triples"] = std::move(triples);
  return doc;
}

std::vector<std::string> OntologyGraph::suggestions(const std::string& term,
                                                    std::size_t limit) const {
  std::string wanted = normalize(term);
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& node : nodes_) {
    std::size_t best = edit_distance(wanted, node.name);
    for (const auto& alias : node.aliases) {
      best = std::min(best, edit_distance(wanted, normalize(alias)));
    }
    scored.emplace_back(best, node.name);
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < scored.size() && i < limit; ++i) {
    out.push_back(scored[i].second);
  }
  return out;
}

OntologyGraph OntologyGraph::builtin() {
  OntologyGraph g;
  auto node = [&](std::string name, std::string cls, std::string display,
                  std::string definition,
                  std::vector<std::string> aliases = {}) {
    Node n;
    n.name = std::move(name);
    n.cls = std::move(cls);
    n.display = std::move(display);
    n.definition = std::move(definition);
    n.aliases = std::move(aliases);
    g.add_node(std::move(n));
  };

  // Study designs.
  node("cross-sectional", "StudyDesign", "Cross-sectional",
       "Observational design that examines a dataset at a single point in "
       "time to estimate the frequency of an event and the association "
       "between exposure and outcome.");
  node("case-control", "StudyDesign", "Case-control",
       "Observational design comparing subjects with an outcome of interest "
       "against controls without it; suited to rare diseases and odds-ratio "
       "analysis.");
  node("cohort", "StudyDesign", "Cohort",
       "Observational design following a group over time to compare disease "
       "incidence between exposed and unexposed subjects.");
  {
    Node n;
    n.name = "case-report";
    n.cls = "StudyDesign";
    n.display = "Case report";
    n.definition =
        "Detailed description of isolated cases without data-centric "
        "analysis; systematic anonymization rarely applies.";
    n.non_observational = true;
    g.add_node(std::move(n));
  }
  {
    Node n;
    n.name = "experimental-study";
    n.cls = "StudyDesign";
    n.display = "Experimental study";
    n.definition =
        "Prospective follow-up of enrolled subjects (e.g. randomized "
        "trials); participants usually must stay re-identifiable for safety, "
        "so anonymization is generally unfeasible.";
    n.non_observational = true;
    n.aliases = {"randomized-clinical-trial"};
    g.add_node(std::move(n));
  }

  // Data types.
  node("nature", "DataType", "Nature",
       "Statistical nature of a variable: qualitative or quantitative.");
  node("qualitative", "DataType", "Qualitative",
       "Values that name or order categories rather than measure amounts.");
  node("quantitative", "DataType", "Quantitative",
       "Values that measure or count amounts.");
  node("nominal", "DataType", "Nominal",
       "Qualitative values naming unordered categories.");
  node("ordinal", "DataType", "Ordinal",
       "Qualitative values whose categories carry a declared order.");
  node("discrete", "DataType", "Discrete",
       "Quantitative values counted in whole numbers.");
  node("continuous", "DataType", "Continuous",
       "Quantitative values measured on a continuous scale.");
  node("structure", "DataType", "Structure",
       "Degree of organization of the stored data.");
  node("structured", "DataType", "Structured",
       "Rows and columns with a fixed schema: tables, spreadsheets.");
  node("semi-structured", "DataType", "Semi-structured",
       "Partially organized data such as tagged documents.");
  node("unstructured", "DataType", "Unstructured",
       "Free text, images, and other unorganized content.");
  node("raw", "DataType", "Raw",
       "Unprocessed source data as collected.");
  node("computation", "DataType", "Computation",
       "Machine representation of a value.");
  node("int", "DataType", "int",
       "Integer machine representation.", {"integer"});
  node("float", "DataType", "float",
       "Floating-point machine representation.");
  node("char", "DataType", "char",
       "Character/string machine representation.", {"string"});
  node("metadata", "DataType", "Metadata",
       "Data describing the data: labels and dictionaries.");
  node("taxonomy", "DataType", "Taxonomy",
       "Label vocabulary attached to variables.", {"labels"});
  node("dictionary", "DataType", "Dictionary",
       "Value dictionaries attached to variables.", {"dictionaries"});
  node("format", "DataType", "Format",
       "Digital format a dataset is stored in.", {"dataset-digital-format"});
  node("plaintext", "DataType", "Plaintext",
       "Open text encodings such as UTF-8; the only format this engine "
       "ingests.");
  node("proprietary", "DataType", "Proprietary",
       "Closed vendor formats; rejected at ingestion.");
  node("encrypted", "DataType", "Encrypted",
       "Ciphered dataset formats; rejected at ingestion.");
  node("localization", "DataType", "Localization",
       "Language, time zone, and reference values that vary by region.");
  node("portuguese-br", "DataType", "Portuguese-BR",
       "Brazilian Portuguese locale.", {"pt-br"});
  node("english-usa", "DataType", "English-USA",
       "US English locale.", {"en-us"});

  // Attribute types.
  node("identifier", "AttributeType", "Identifier",
       "Attribute pointing directly at the data subject (name, record "
       "number, document id); removed during anonymization.");
  node("indirect-identifier", "AttributeType", "Indirect identifier",
       "Attribute that can reveal identity in combination with others; "
       "treated by generalization-based privacy algorithms.",
       {"quasi-identifier"});
  node("sensitive", "AttributeType", "Sensitive",
       "Personal health or similar information whose values must not become "
       "attributable to a subject.", {"sensitive-personal-information"});
  node("insensitive", "AttributeType", "Insensitive",
       "Attribute that neither identifies a subject nor carries sensitive "
       "content; passes through unchanged. Engine extension to the three "
       "classical roles.");

  // Risk types.
  node("identity-disclosure", "RiskType", "Identity disclosure",
       "High-impact risk: a successful attacker learns everything the "
       "dataset holds about the re-identified subject.",
       {"re-identification"});
  node("attribute-disclosure", "RiskType", "Attribute disclosure",
       "Intermediate risk: some attribute values become attributable to a "
       "subject without full re-identification.");
  node("association-disclosure", "RiskType", "Association disclosure",
       "Lower-impact risk: an attacker learns whether a subject is present "
       "in the dataset at all.", {"membership-disclosure"});

  // Attack types.
  node("journalist", "AttackType", "Journalist",
       "Targets a specific subject by linking indirect identifiers against "
       "external public sources.");
  node("prosecutor", "AttackType", "Prosecutor",
       "Targets a specific subject using the prior knowledge that the "
       "subject is in the dataset.");
  node("merchant", "AttackType", "Merchant",
       "Untargeted attack aiming to re-identify as many records as "
       "possible.", {"marketer"});

  // Privacy models.
  node("k-anonymity", "PrivacyModel", "k-Anonymity",
       "Requires every record to be indistinguishable from at least k-1 "
       "others on its indirect identifiers.");
  node("l-diversity", "PrivacyModel", "l-Diversity",
       "Extends k-anonymity by requiring each equivalence class to hold at "
       "least l distinct sensitive values.");
  node("t-approximation", "PrivacyModel", "t-Approximation",
       "Bounds the distance between each class's sensitive-value "
       "distribution and the whole-set distribution by t.", {"t-closeness"});
  node("o-presence", "PrivacyModel", "o-Presence",
       "Bounds the probability that an individual from the population is "
       "present in the released sample.", {"delta-presence", "d-presence"});

  // Preparation techniques.
  node("suppression", "PreparationTechnique", "Suppression",
       "Deletion or full masking of records, variables, or individual "
       "values that could identify a subject.");
  node("grouping", "PreparationTechnique", "Grouping",
       "Replacement of values by coarser categories so that records sharing "
       "a category become indistinguishable.", {"generalization"});
  node("disturbance", "PreparationTechnique", "Disturbance",
       "Intentional modification of values with noise, as used for "
       "differential privacy; declared in the vocabulary but not executed "
       "by this engine.",
       {"perturbation", "noise-injection", "differential-privacy"});

  // Information metrics.
  auto metric = [&](std::string name, std::string display,
                    std::string definition, bool risk,
                    std::vector<std::string> aliases = {}) {
    Node n;
    n.name = std::move(name);
    n.cls = "InformationMetric";
    n.display = std::move(display);
    n.definition = std::move(definition);
    n.risk_metric = risk;
    n.aliases = std::move(aliases);
    g.add_node(std::move(n));
  };
  metric("rr", "RR",
         "Individual re-identification risk of a record: 100 divided by its "
         "equivalence-class size.", true, {"individual-rr"});
  metric("avg-rr", "Average RR",
         "Mean individual re-identification risk over the whole set.", true,
         {"average-rr"});
  metric("max-rr", "Maximum RR",
         "Risk that at least one record is re-identified: 100/k.", true,
         {"maximum-rr"});
  metric("nue", "NUE",
         "Non-uniform entropy: how much of the equivalence-class structure "
         "survives anonymization (100 = unchanged).", false);
  metric("ig", "IG",
         "Generalization intensity: share of quasi-identifier cells left "
         "unmodified (100 = none modified).", false);
  metric("gg", "GG",
         "Granularity: distinct values remaining in a variable relative to "
         "the original (100 = unchanged).", false);
  metric("specific-purpose", "Specific purpose",
         "Task-level comparison of models trained on differently prepared "
         "versions of the same dataset; exposed as paired exports, no model "
         "is trained in-engine.", false);

  // Use types.
  node("regression", "UseType", "Regression",
       "Fitting a model that predicts a quantitative variable from the "
       "others.", {"linear-regression-analysis"});
  node("classification", "UseType", "Classification",
       "Assigning records to predetermined classes based on observed "
       "variables.");
  node("information-retrieval", "UseType", "Information retrieval",
       "Selecting subpopulations with filter criteria or queries.",
       {"selection"});
  node("clustering", "UseType", "Clustering",
       "Grouping records into data-driven categories.");

  // Privacy methods that are not anonymization.
  auto excluded = [&](std::string name, std::string display,
                      std::string definition,
                      std::vector<std::string> aliases = {}) {
    Node n;
    n.name = std::move(name);
    n.cls = "NonAnonymizationMethod";
    n.display = std::move(display);
    n.definition = std::move(definition);
    n.not_anonymization = true;
    n.aliases = std::move(aliases);
    g.add_node(std::move(n));
  };
  excluded("pseudonymization", "Pseudonymization",
           "Replaces the holder's identifiers with an alternative key; "
           "reversible by whoever holds the key, so it is not an "
           "anonymization method.");
  excluded("encryption", "Encryption",
           "Makes the dataset secret but decryptable and re-identifiable, "
           "so it is not an anonymization method.",
           {"cryptography", "hash-function", "blockchain"});
  excluded("de-identification", "De-identification",
           "Removes a predefined list of items without a statistical "
           "guarantee, so it is not treated as anonymization here.");

  // Subclass skeleton of the data-type taxonomy.
  auto sub = [&](const std::string& child, const std::string& parent) {
    g.add_triple(child, "subclass-of", parent);
  };
  sub("qualitative", "nature");
  sub("quantitative", "nature");
  sub("nominal", "qualitative");
  sub("ordinal", "qualitative");
  sub("discrete", "quantitative");
  sub("continuous", "quantitative");
  sub("structured", "structure");
  sub("semi-structured", "structure");
  sub("unstructured", "structure");
  sub("raw", "structure");
  sub("int", "computation");
  sub("float", "computation");
  sub("char", "computation");
  sub("taxonomy", "metadata");
  sub("dictionary", "metadata");
  sub("plaintext", "format");
  sub("proprietary", "format");
  sub("encrypted", "format");
  sub("portuguese-br", "localization");
  sub("english-usa", "localization");

  // Which preparation techniques realize each model. The engine realizes
  // all four predicates through suppression and grouping.
  g.add_triple("k-anonymity", "has-preparation", "suppression");
  g.add_triple("k-anonymity", "has-preparation", "grouping");
  g.add_triple("l-diversity", "has-preparation", "suppression");
  g.add_triple("l-diversity", "has-preparation", "grouping");
  g.add_triple("t-approximation", "has-preparation", "suppression");
  g.add_triple("t-approximation", "has-preparation", "grouping");
  g.add_triple("o-presence", "has-preparation", "suppression");
  g.add_triple("o-presence", "has-preparation", "grouping");

  // Which loss metric reads on which data type.
  g.add_triple("nominal", "has-measure", "nue");
  g.add_triple("ordinal", "has-measure", "nue");
  g.add_triple("ordinal", "has-measure", "gg");
  g.add_triple("discrete", "has-measure", "ig");
  g.add_triple("discrete", "has-measure", "gg");
  g.add_triple("continuous", "has-measure", "ig");
  g.add_triple("continuous", "has-measure", "gg");

  // Which use types a metric informs. Risk metrics read on any use type.
  g.add_triple("nue", "has-impact", "classification");
  g.add_triple("ig", "has-impact", "classification");
  g.add_triple("ig", "has-impact", "regression");
  g.add_triple("gg", "has-impact", "information-retrieval");
  g.add_triple("gg", "has-impact", "clustering");
  for (const char* m : {"rr", "avg-rr", "max-rr"}) {
    for (const char* u :
         {"regression", "classification", "information-retrieval",
          "clustering"}) {
      g.add_triple(m, "has-impact", u);
    }
  }
  g.add_triple("specific-purpose", "has-impact", "classification");
  g.add_triple("specific-purpose", "has-impact", "regression");
  g.add_triple("specific-purpose", "has-impact", "clustering");

  // Editorial closure of the narrative risk relations.
  g.add_triple("k-anonymity", "mitigates", "identity-disclosure");
  g.add_triple("l-diversity", "mitigates", "attribute-disclosure");
  g.add_triple("t-approximation", "mitigates", "attribute-disclosure");
  g.add_triple("o-presence", "mitigates", "association-disclosure");
  g.add_triple("journalist", "threatens", "identity-disclosure");
  g.add_triple("prosecutor", "threatens", "identity-disclosure");
  g.add_triple("prosecutor", "threatens", "attribute-disclosure");
  g.add_triple("merchant", "threatens", "identity-disclosure");

  g.verify_closure();
  return g;
}

StudyPlan parse_plan(const nlohmann::json& doc) {
  if (!doc.is_object()) fail(Errc::InvalidPlan, "plan must be a JSON object");
  StudyPlan plan;
  try {
    plan.study_design = doc.at("study_design").get<std::string>();
    plan.use_type = doc.at("use_type").get<std::string>();
    for (const auto& t : doc.at("data_types")) {
      plan.data_types.push_back(t.get<std::string>());
    }
    if (doc.contains("attribute_roles")) {
      for (const auto& [column, role] : doc["attribute_roles"].items()) {
        plan.attribute_roles.emplace_back(column, role.get<std::string>());
      }
    }
    plan.risk_target = doc.at("risk_target").get<std::string>();
    for (const auto& a : doc.at("attack_models")) {
      plan.attack_models.push_back(a.get<std::string>());
    }
    for (const auto& m : doc.at("privacy_models")) {
      StudyPlan::ModelChoice choice;
      if (m.is_string()) {
        choice.name = m.get<std::string>();
      } else {
        choice.name = m.at("name").get<std::string>();
        choice.params = m;
        choice.params.erase("name");
      }
      plan.privacy_models.push_back(std::move(choice));
    }
    for (const auto& t : doc.at("preparation_techniques")) {
      plan.preparation_techniques.push_back(t.get<std::string>());
    }
    for (const auto& m : doc.at("metrics")) {
      plan.metrics.push_back(m.get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::InvalidPlan, e.what());
  }
  return plan;
}

namespace {

std::string edge_text(const std::string& s, const std::string& p,
                      const std::string& o) {
  return s + " -" + p + "-> " + o;
}

// The node plus everything reaching it via subclass-of.
std::set<std::string> with_descendants(const OntologyGraph& g,
                                       const std::string& root) {
  std::set<std::string> out{root};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& t : g.triples()) {
      if (t.property == "subclass-of" && out.count(t.object) &&
          !out.count(t.subject)) {
        out.insert(t.subject);
        grew = true;
      }
    }
  }
  return out;
}

}  // namespace

PlanReport validate_plan(const OntologyGraph& g, const StudyPlan& plan) {
  PlanReport report;

  // Resolve every referenced name up front so UnknownNode carries the
  // offending term.
  const auto& design = g.resolve(plan.study_design);
  const auto& use_type = g.resolve(plan.use_type);
  const auto& risk = g.resolve(plan.risk_target);
  std::vector<std::string> data_types;
  for (const auto& t : plan.data_types) data_types.push_back(g.resolve(t).name);
  std::vector<std::string> attacks;
  for (const auto& a : plan.attack_models) attacks.push_back(g.resolve(a).name);
  std::vector<const OntologyGraph::Node*> models;
  for (const auto& m : plan.privacy_models) models.push_back(&g.resolve(m.name));
  std::vector<const OntologyGraph::Node*> techniques;
  for (const auto& t : plan.preparation_techniques) {
    techniques.push_back(&g.resolve(t));
  }
  std::vector<const OntologyGraph::Node*> metrics;
  for (const auto& m : plan.metrics) metrics.push_back(&g.resolve(m));
  for (const auto& [column, role] : plan.attribute_roles) {
    const auto& node = g.resolve(role);
    if (node.cls != "AttributeType") {
      report.warnings.push_back("attribute \"" + column + "\" declares \"" +
                                node.name + "\", which is not an attribute "
                                "type");
    }
  }

  if (design.non_observational) {
    report.warnings.push_back(
        "study design \"" + design.name +
        "\" is not an observational design; systematic anonymization is "
        "generally unfeasible for it");
  }

  // (a) chosen models mitigate the declared risk target.
  {
    PlanCheck check;
    check.id = "models_mitigate_risk";
    check.passed = true;
    for (const auto* m : models) {
      if (m->cls != "PrivacyModel") {
        check.passed = false;
        check.explanation +=
            "\"" + m->name + "\" is not a privacy model" +
            (m->not_anonymization
                 ? " (it is a privacy method outside anonymization)"
                 : "") +
            "; ";
        continue;
      }
      auto mitigated = g.query(m->name, "mitigates");
      for (const auto& r : mitigated) {
        check.edges.push_back(edge_text(m->name, "mitigates", r));
      }
      if (std::find(mitigated.begin(), mitigated.end(), risk.name) ==
          mitigated.end()) {
        check.passed = false;
        check.explanation += "\"" + m->name + "\" does not mitigate \"" +
                             risk.name + "\"; ";
      }
    }
    if (check.passed) {
      check.explanation = "every chosen privacy model mitigates \"" +
                          risk.name + "\"";
    }
    report.checks.push_back(std::move(check));
  }

  // (b) every declared attack threatens a risk some chosen model mitigates.
  {
    PlanCheck check;
    check.id = "attacks_covered";
    check.passed = true;
    std::set<std::string> mitigated;
    for (const auto* m : models) {
      if (m->cls != "PrivacyModel") continue;
      for (const auto& r : g.query(m->name, "mitigates")) mitigated.insert(r);
    }
    for (const auto& a : attacks) {
      auto threatened = g.query(a, "threatens");
      for (const auto& r : threatened) {
        check.edges.push_back(edge_text(a, "threatens", r));
      }
      bool covered = std::any_of(threatened.begin(), threatened.end(),
                                 [&](const std::string& r) {
                                   return mitigated.count(r) > 0;
                                 });
      if (!covered) {
        check.passed = false;
        check.explanation += "no chosen model mitigates a risk threatened "
                             "by \"" + a + "\"; ";
      }
    }
    if (check.passed) {
      check.explanation =
          "every declared attack threatens a risk a chosen model mitigates";
    }
    report.checks.push_back(std::move(check));
  }

  // (c) every technique is has-preparation-reachable from a chosen model.
  {
    PlanCheck check;
    check.id = "techniques_reachable";
    check.passed = true;
    std::set<std::string> reachable;
    for (const auto* m : models) {
      if (m->cls != "PrivacyModel") continue;
      for (const auto& t : g.query(m->name, "has-preparation")) {
        reachable.insert(t);
        check.edges.push_back(edge_text(m->name, "has-preparation", t));
      }
    }
    for (const auto* t : techniques) {
      if (t->not_anonymization) {
        check.passed = false;
        check.explanation += "\"" + t->name + "\" is a privacy method "
                             "outside anonymization and cannot appear in an "
                             "anonymization plan; ";
        continue;
      }
      if (!reachable.count(t->name)) {
        check.passed = false;
        check.explanation += "\"" + t->name + "\" is not reachable via "
                             "has-preparation from any chosen model";
        if (t->name == "disturbance") {
          check.explanation += " (noise-based preparation is declared in "
                               "the vocabulary but excluded from this "
                               "engine)";
        }
        check.explanation += "; ";
      }
    }
    if (check.passed) {
      check.explanation =
          "every chosen technique is reachable from a chosen model";
    }
    report.checks.push_back(std::move(check));
  }

  // (d) every metric is a risk metric or measures a declared data type.
  {
    PlanCheck check;
    check.id = "metrics_measurable";
    check.passed = true;
    std::set<std::string> measurable;
    for (const auto& dt : data_types) {
      for (const auto& sub : with_descendants(g, dt)) {
        for (const auto& m : g.query(sub, "has-measure")) {
          measurable.insert(m);
          check.edges.push_back(edge_text(sub, "has-measure", m));
        }
      }
    }
    for (const auto* m : metrics) {
      if (m->risk_metric || measurable.count(m->name)) continue;
      check.passed = false;
      check.explanation += "\"" + m->name + "\" is neither a risk metric "
                           "nor has-measure-reachable from a declared data "
                           "type; ";
    }
    if (check.passed) {
      check.explanation =
          "every chosen metric is a risk metric or measures a declared "
          "data type";
    }
    report.checks.push_back(std::move(check));
  }

  // (e) the use type is has-impact-reachable from a chosen metric.
  {
    PlanCheck check;
    check.id = "use_type_impacted";
    check.passed = false;
    for (const auto* m : metrics) {
      auto impacted = g.query(m->name, "has-impact");
      for (const auto& u : impacted) {
        check.edges.push_back(edge_text(m->name, "has-impact", u));
      }
      if (std::find(impacted.begin(), impacted.end(), use_type.name) !=
          impacted.end()) {
        check.passed = true;
      }
    }
    check.explanation =
        check.passed
            ? "use type \"" + use_type.name + "\" is impacted by a chosen "
              "metric"
            : "no chosen metric has-impact \"" + use_type.name + "\"";
    report.checks.push_back(std::move(check));
  }

  report.all_passed =
      std::all_of(report.checks.begin(), report.checks.end(),
                  [](const PlanCheck& c) { return c.passed; });
  return report;
}

nlohmann::ordered_json plan_report_json(const PlanReport& report) {
  nlohmann::ordered_json doc;
  doc["all_passed"] = report.all_passed;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["passed"] = c.passed;
    j["explanation"] = c.explanation;
    j["edges_consulted"] = c.edges;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  doc["warnings"] = report.warnings;
  return doc;
}

}  // namespace anonkit

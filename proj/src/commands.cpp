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

#include "anonkit/commands.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "anonkit/anonymizer.hpp"
#include "anonkit/digest.hpp"
#include "anonkit/ontology.hpp"

namespace anonkit::cli {

namespace fs = std::filesystem;

namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open \"" + path + "\"");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::IoError, "\"" + path + "\": " + e.what());
  }
}

// Artifacts are written once, then listed in the manifest with their own
// digests.
class ArtifactWriter {
 public:
  ArtifactWriter(std::string out_dir, std::vector<std::string> input_paths,
                 std::string config_digest)
      : out_dir_(std::move(out_dir)),
        config_digest_(std::move(config_digest)) {
    for (const auto& p : input_paths) {
      if (!p.empty()) inputs_.insert(fs::weakly_canonical(p).string());
    }
    fs::create_directories(out_dir_);
  }

  std::string path_of(const std::string& name) const {
    return (fs::path(out_dir_) / name).string();
  }

  void write(const std::string& name, const std::string& bytes) {
    std::string path = path_of(name);
    if (inputs_.count(fs::weakly_canonical(path).string())) {
      fail(Errc::IoError, "refusing to overwrite input file \"" + path + "\"");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::IoError, "cannot write \"" + path + "\"");
    out << bytes;
    written_.emplace_back(name, fnv1a_hex(bytes));
  }

  void write_json(const std::string& name, nlohmann::ordered_json doc) {
    doc["config_digest"] = config_digest_;
    write(name, doc.dump(2) + "\n");
  }

  void finish() {
    nlohmann::ordered_json manifest;
    manifest["config_digest"] = config_digest_;
    nlohmann::ordered_json artifacts = nlohmann::ordered_json::array();
    for (const auto& [name, digest] : written_) {
      nlohmann::ordered_json j;
      j["name"] = name;
      j["fnv1a64"] = digest;
      artifacts.push_back(std::move(j));
    }
    manifest["artifacts"] = std::move(artifacts);
    write("run_manifest.json", manifest.dump(2) + "\n");
  }

 private:
  std::string out_dir_;
  std::string config_digest_;
  std::set<std::string> inputs_;
  std::vector<std::pair<std::string, std::string>> written_;
};

struct LoadedInputs {
  std::vector<AttributeSchema> schema;
  Dataset data;
  HierarchySet hierarchies;
  std::optional<Dataset> population;
};

HierarchySet load_hierarchies(const RunConfig& cfg,
                              const std::vector<AttributeSchema>& schema) {
  fs::path schema_dir = fs::path(cfg.schema_path).parent_path();
  std::map<std::string, std::string> overrides(cfg.hierarchy_overrides.begin(),
                                               cfg.hierarchy_overrides.end());
  HierarchySet hs;
  for (const auto& attr : schema) {
    if (attr.role != AttributeRole::QuasiIdentifier) continue;
    std::string ref;
    auto it = overrides.find(attr.name);
    if (it != overrides.end()) {
      ref = it->second;
    } else if (!attr.hierarchy_ref.empty()) {
      ref = (schema_dir / attr.hierarchy_ref).string();
    } else {
      fail(Errc::MissingHierarchy,
           "quasi-identifier \"" + attr.name +
               "\" has no hierarchy (schema reference or --hierarchy flag)");
    }
    if (!fs::exists(ref)) {
      fail(Errc::MissingHierarchy, "hierarchy file \"" + ref +
                                       "\" for attribute \"" + attr.name +
                                       "\" not found");
    }
    hs.emplace(attr.name, load_hierarchy(ref, attr));
  }
  return hs;
}

LoadedInputs load_inputs(const RunConfig& cfg, bool need_hierarchies) {
  LoadedInputs in;
  in.schema = load_schema(cfg.schema_path);
  // Identifier columns never reach the release.
  in.data = load_csv(cfg.data_path, in.schema, cfg.csv).drop_identifiers();
  if (need_hierarchies) in.hierarchies = load_hierarchies(cfg, in.schema);
  if (!cfg.population_path.empty()) {
    in.population =
        load_csv(cfg.population_path, in.schema, cfg.csv).drop_identifiers();
  }
  return in;
}

std::string pick_sensitive(const RunConfig& cfg,
                           const std::vector<AttributeSchema>& schema) {
  if (!cfg.sensitive.empty()) return cfg.sensitive;
  std::string found;
  for (const auto& attr : schema) {
    if (attr.role != AttributeRole::Sensitive) continue;
    if (!found.empty()) {
      fail(Errc::InvalidParameter,
           "several sensitive attributes; pick one with --sensitive");
    }
    found = attr.name;
  }
  if (found.empty()) {
    fail(Errc::InvalidParameter,
         "l-diversity / t-closeness need a sensitive attribute");
  }
  return found;
}

std::vector<PrivacyConstraint> build_constraints(
    const RunConfig& cfg, const std::vector<AttributeSchema>& schema) {
  std::vector<PrivacyConstraint> constraints;
  if (cfg.k) constraints.push_back(PrivacyConstraint::k_anonymity(*cfg.k));
  if (cfg.l) {
    constraints.push_back(
        PrivacyConstraint::l_diversity(*cfg.l, pick_sensitive(cfg, schema)));
  }
  if (cfg.t) {
    constraints.push_back(
        PrivacyConstraint::t_closeness(*cfg.t, pick_sensitive(cfg, schema)));
  }
  if (cfg.delta_min || cfg.delta_max) {
    if (cfg.population_path.empty()) {
      fail(Errc::InvalidParameter, "delta-presence needs --population");
    }
    constraints.push_back(PrivacyConstraint::delta_presence(
        cfg.delta_min.value_or(0.0), cfg.delta_max.value_or(1.0)));
  }
  return constraints;
}

nlohmann::ordered_json risk_json(const RiskReport& risk) {
  nlohmann::ordered_json j;
  if (!risk.individual.empty()) j["individual"] = risk.individual;
  j["average"] = risk.average;
  j["maximum"] = risk.maximum;
  nlohmann::ordered_json attack;
  attack["prosecutor"] = risk.attack.prosecutor;
  if (risk.attack.journalist) {
    attack["journalist"] = *risk.attack.journalist;
  } else {
    attack["journalist"] = nullptr;  // unavailable without a population
  }
  attack["marketer"] = risk.attack.marketer;
  j["attack"] = std::move(attack);
  return j;
}

nlohmann::ordered_json loss_json(const LossReport& loss) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json nue_j;
  nue_j["overall"] = loss.nue_overall;
  nlohmann::ordered_json per_attr = nlohmann::ordered_json::object();
  for (const auto& [name, value] : loss.nue_per_attribute) {
    per_attr[name] = value;
  }
  nue_j["per_attribute"] = std::move(per_attr);
  j["nue"] = std::move(nue_j);
  j["ig"] = loss.ig;
  nlohmann::ordered_json gg_j = nlohmann::ordered_json::object();
  for (const auto& [name, value] : loss.gg_per_attribute) gg_j[name] = value;
  j["gg"] = {{"per_attribute", std::move(gg_j)}};
  return j;
}

void print_human_risk(std::ostream& out, const RiskReport& risk) {
  out << "  average RR  " << risk.average << "%\n"
      << "  maximum RR  " << risk.maximum << "%\n"
      << "  prosecutor  " << risk.attack.prosecutor << "%\n"
      << "  marketer    " << risk.attack.marketer << "%\n";
  if (risk.attack.journalist) {
    out << "  journalist  " << *risk.attack.journalist << "%\n";
  } else {
    out << "  journalist  unavailable (no population)\n";
  }
}

}  // namespace

std::string config_digest(const RunConfig& cfg) {
  // Excludes out_dir and workers: neither may influence artifact bytes.
  nlohmann::ordered_json j;
  j["data"] = cfg.data_path;
  j["schema"] = cfg.schema_path;
  j["hierarchies"] = cfg.hierarchy_overrides;
  j["k"] = cfg.k ? nlohmann::json(*cfg.k) : nlohmann::json(nullptr);
  j["l"] = cfg.l ? nlohmann::json(*cfg.l) : nlohmann::json(nullptr);
  j["t"] = cfg.t ? nlohmann::json(*cfg.t) : nlohmann::json(nullptr);
  j["delta_min"] =
      cfg.delta_min ? nlohmann::json(*cfg.delta_min) : nlohmann::json(nullptr);
  j["delta_max"] =
      cfg.delta_max ? nlohmann::json(*cfg.delta_max) : nlohmann::json(nullptr);
  j["sensitive"] = cfg.sensitive;
  j["population"] = cfg.population_path;
  j["budget"] = cfg.budget;
  j["objective"] = cfg.objective;
  j["strategy"] = cfg.strategy;
  j["plan"] = cfg.plan_path;
  j["override_ontology"] = cfg.override_ontology_path;
  j["anonymized"] = cfg.anonymized_path;
  j["suppressed"] = cfg.suppressed_path;
  j["include_individual"] = cfg.include_individual;
  j["delimiter"] = std::string(1, cfg.csv.delimiter);
  j["missing_token"] = cfg.csv.missing_token;
  return fnv1a_hex(j.dump());
}

int run_anonymize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  LoadedInputs in = load_inputs(cfg, /*need_hierarchies=*/true);

  SearchConfig search_cfg;
  search_cfg.constraints = build_constraints(cfg, in.schema);
  if (search_cfg.constraints.empty()) {
    fail(Errc::InvalidParameter,
         "no privacy constraint given (--k, --l, --t, --delta-max)");
  }
  search_cfg.suppression_budget = cfg.budget;
  search_cfg.objective = parse_objective(cfg.objective);
  search_cfg.strategy = cfg.strategy == "exhaustive"
                            ? SearchConfig::Strategy::Exhaustive
                            : SearchConfig::Strategy::PrunedBfs;
  search_cfg.workers = cfg.workers;
  search_cfg.population = in.population ? &*in.population : nullptr;

  SearchResult result = search(in.data, in.hierarchies, search_cfg);

  ArtifactWriter writer(cfg.out_dir,
                        {cfg.data_path, cfg.schema_path, cfg.population_path},
                        config_digest(cfg));
  writer.write_json("search_report.json",
                    search_report_json(result, search_cfg));

  if (!result.found) {
    writer.finish();
    err << "NoSolution: no lattice node satisfies the constraints within "
           "the suppression budget\n";
    return kExitNoSolution;
  }

  auto [dz, suppressed] = apply(in.data, result.best, in.hierarchies);
  writer.write("anonymized.csv", csv_to_string(dz, cfg.csv));
  {
    std::ostringstream lines;
    for (std::size_t idx : suppressed) lines << idx << "\n";
    writer.write("suppressed_rows.txt", lines.str());
  }

  // Metrics are computed over the surviving rows of the original set.
  Dataset d_surviving = suppressed.empty() ? in.data
                                           : in.data.remove_rows(suppressed);
  Partition part = Partition::of(dz);
  RiskReport risk = risk_report(
      part, cfg.include_individual, &d_surviving,
      in.population ? &*in.population : nullptr, &result.best.scheme,
      &in.hierarchies);
  LossReport loss = loss_report(d_surviving, dz);

  nlohmann::ordered_json metrics;
  if (cfg.k) metrics["k"] = *cfg.k;
  metrics["scheme"] = result.best.scheme.levels;
  metrics["suppressed_rows"] = suppressed.size();
  metrics["risk"] = risk_json(risk);
  metrics["loss"] = loss_json(loss);
  writer.write_json("metrics.json", std::move(metrics));
  writer.finish();

  out << "solution: scheme [";
  for (std::size_t i = 0; i < result.best.scheme.levels.size(); ++i) {
    if (i) out << ",";
    out << result.best.scheme.levels[i];
  }
  out << "], loss score " << result.best.loss_score << ", "
      << suppressed.size() << " suppressed row(s)\n";
  if (cfg.human) {
    print_human_risk(out, risk);
    out << "  NUE overall " << loss.nue_overall << "%\n"
        << "  IG          " << loss.ig << "%\n";
  }
  return kExitOk;
}

int run_assess(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  (void)err;
  std::vector<AttributeSchema> schema = load_schema(cfg.schema_path);
  Dataset original = load_csv(cfg.data_path, schema, cfg.csv);

  ArtifactWriter writer(
      cfg.out_dir,
      {cfg.data_path, cfg.schema_path, cfg.anonymized_path, cfg.suppressed_path},
      config_digest(cfg));

  nlohmann::ordered_json metrics;

  if (cfg.anonymized_path.empty()) {
    Partition part = Partition::of(original);
    RiskReport risk = risk_report(part, cfg.include_individual);
    metrics["mode"] = "single";
    metrics["risk"] = risk_json(risk);
    if (cfg.human) print_human_risk(out, risk);
  } else {
    // Anonymized exports have no identifier columns; load them with the
    // identifier-free view of the schema.
    std::vector<AttributeSchema> released_schema;
    for (const auto& attr : schema) {
      if (attr.role != AttributeRole::Identifier) {
        released_schema.push_back(attr);
      }
    }
    Dataset anonymized =
        load_csv_generalized(cfg.anonymized_path, released_schema, cfg.csv);
    original = original.drop_identifiers();

    Dataset aligned = original;
    std::size_t suppressed_count = 0;
    if (original.n() != anonymized.n()) {
      if (cfg.suppressed_path.empty()) {
        fail(Errc::RowCountMismatch,
             "original has " + std::to_string(original.n()) +
                 " rows, anonymized has " + std::to_string(anonymized.n()) +
                 "; pass the suppressed-row audit file to align them");
      }
      std::ifstream audit(cfg.suppressed_path);
      if (!audit) {
        fail(Errc::IoError, "cannot open \"" + cfg.suppressed_path + "\"");
      }
      std::vector<std::size_t> suppressed;
      std::size_t idx;
      while (audit >> idx) suppressed.push_back(idx);
      aligned = original.remove_rows(suppressed);
      suppressed_count = suppressed.size();
      if (aligned.n() != anonymized.n()) {
        fail(Errc::RowCountMismatch,
             "audit file leaves " + std::to_string(aligned.n()) +
                 " rows, anonymized has " + std::to_string(anonymized.n()));
      }
    }

    Partition part = Partition::of(anonymized);
    RiskReport risk = risk_report(part, cfg.include_individual);
    LossReport loss = loss_report(aligned, anonymized);
    metrics["mode"] = "pair";
    metrics["suppressed_rows"] = suppressed_count;
    metrics["risk"] = risk_json(risk);
    metrics["loss"] = loss_json(loss);
    if (cfg.human) print_human_risk(out, risk);
  }

  writer.write_json("metrics.json", std::move(metrics));
  writer.finish();
  out << "assessment written to " << writer.path_of("metrics.json") << "\n";
  return kExitOk;
}

int run_validate_plan(const RunConfig& cfg, std::ostream& out,
                      std::ostream& err) {
  (void)err;
  OntologyGraph graph = OntologyGraph::builtin();
  if (!cfg.override_ontology_path.empty()) {
    graph.merge_override(read_json(cfg.override_ontology_path));
  }
  StudyPlan plan = parse_plan(read_json(cfg.plan_path));
  PlanReport report = validate_plan(graph, plan);

  ArtifactWriter writer(cfg.out_dir,
                        {cfg.plan_path, cfg.override_ontology_path},
                        config_digest(cfg));
  nlohmann::ordered_json doc = plan_report_json(report);
  writer.write_json("validation.json", std::move(doc));
  writer.finish();

  for (const auto& check : report.checks) {
    out << (check.passed ? "PASS" : "FAIL") << " " << check.id << ": "
        << check.explanation << "\n";
  }
  for (const auto& warning : report.warnings) {
    out << "WARN " << warning << "\n";
  }
  return report.all_passed ? kExitOk : kExitNoSolution;
}

int run_explain(const std::string& term,
                const std::string& override_ontology_path, std::ostream& out) {
  OntologyGraph graph = OntologyGraph::builtin();
  if (!override_ontology_path.empty()) {
    graph.merge_override(read_json(override_ontology_path));
  }

  const OntologyGraph::Node* node = graph.find(term);
  if (!node) {
    out << "unknown term \"" << term << "\"; did you mean:";
    for (const auto& s : graph.suggestions(term)) out << " " << s;
    out << "\n";
    return kExitOk;
  }

  out << node->display << " (" << node->cls << ")\n" << node->definition
      << "\n";
  if (node->not_anonymization) {
    out << "flag: not an anonymization method; plans must not rely on it\n";
  }
  if (node->non_observational) {
    out << "flag: non-observational design; anonymization generally "
           "unfeasible\n";
  }
  bool any = false;
  for (const auto& t : graph.triples()) {
    if (t.subject == node->name) {
      if (!any) out << "edges:\n";
      any = true;
      out << "  -" << t.property << "-> " << t.object << "\n";
    }
  }
  return kExitOk;
}

}  // namespace anonkit::cli

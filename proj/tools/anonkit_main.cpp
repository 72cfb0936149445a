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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "anonkit/commands.hpp"
#include "anonkit/error.hpp"

namespace {

struct CsvFlags {
  std::string delimiter = ",";
  std::string missing_token;
};

void add_csv_flags(CLI::App* cmd, CsvFlags* flags) {
  cmd->add_option("--delimiter", flags->delimiter, "CSV field delimiter")
      ->default_val(",");
  cmd->add_option("--missing-token", flags->missing_token,
                  "token that marks a missing cell (default: empty field)");
}

void apply_csv_flags(const CsvFlags& flags, anonkit::cli::RunConfig* cfg) {
  if (flags.delimiter.size() != 1) {
    anonkit::fail(anonkit::Errc::InvalidParameter,
                  "--delimiter must be a single character");
  }
  cfg->csv.delimiter = flags.delimiter[0];
  cfg->csv.missing_token = flags.missing_token;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tabular anonymization engine: k-anonymity family models, "
               "re-identification risk and information-loss reporting, and "
               "study-plan validation"};
  app.require_subcommand(1);

  anonkit::cli::RunConfig cfg;
  CsvFlags csv_flags;
  std::string explain_term;
  std::vector<std::string> hierarchy_flags;

  auto* anonymize = app.add_subcommand(
      "anonymize", "search the generalization lattice and write the "
                   "anonymized dataset plus reports");
  anonymize->add_option("--data", cfg.data_path, "input CSV")->required();
  anonymize->add_option("--schema", cfg.schema_path, "schema JSON")->required();
  anonymize->add_option("--hierarchy", hierarchy_flags,
                        "attr=path hierarchy override (repeatable)");
  anonymize->add_option("--k", cfg.k, "k-anonymity parameter");
  anonymize->add_option("--l", cfg.l, "distinct l-diversity parameter");
  anonymize->add_option("--t", cfg.t, "t-closeness parameter");
  anonymize->add_option("--delta-min", cfg.delta_min,
                        "delta-presence lower bound");
  anonymize->add_option("--delta-max", cfg.delta_max,
                        "delta-presence upper bound");
  anonymize->add_option("--sensitive", cfg.sensitive,
                        "sensitive attribute for l-diversity / t-closeness");
  anonymize->add_option("--population", cfg.population_path,
                        "population CSV for delta-presence and the "
                        "journalist risk");
  anonymize->add_option("--budget", cfg.budget,
                        "max fraction of records the search may suppress")
      ->check(CLI::Range(0.0, 1.0));
  anonymize->add_option("--objective", cfg.objective,
                        "loss objective: nue, ig, or gg")
      ->check(CLI::IsMember({"nue", "ig", "gg", "nue-rr"}));
  anonymize->add_option("--strategy", cfg.strategy, "search strategy")
      ->check(CLI::IsMember({"pruned-bfs", "exhaustive"}));
  anonymize->add_option("--workers", cfg.workers,
                        "parallel node evaluations (output is identical for "
                        "any worker count)")
      ->check(CLI::PositiveNumber);
  anonymize->add_option("--out", cfg.out_dir, "output directory")->required();
  anonymize->add_flag("--individual", cfg.include_individual,
                      "include per-row risks in metrics.json");
  anonymize->add_flag("--human", cfg.human, "print a readable summary");
  add_csv_flags(anonymize, &csv_flags);

  auto* assess = app.add_subcommand(
      "assess", "report re-identification risk (and information loss for an "
                "original/anonymized pair)");
  assess->add_option("--data", cfg.data_path, "dataset CSV")->required();
  assess->add_option("--schema", cfg.schema_path, "schema JSON")->required();
  assess->add_option("--anonymized", cfg.anonymized_path,
                     "anonymized CSV for pair mode");
  assess->add_option("--suppressed", cfg.suppressed_path,
                     "suppressed-row audit file aligning the pair");
  assess->add_option("--out", cfg.out_dir, "output directory")->required();
  assess->add_flag("--individual", cfg.include_individual,
                   "include per-row risks");
  assess->add_flag("--human", cfg.human, "print a readable summary");
  add_csv_flags(assess, &csv_flags);

  auto* validate = app.add_subcommand(
      "validate-plan", "check a study plan against the knowledge graph");
  validate->add_option("--plan", cfg.plan_path, "plan JSON")->required();
  validate->add_option("--override-ontology", cfg.override_ontology_path,
                       "knowledge file merged over the builtin graph");
  validate->add_option("--out", cfg.out_dir, "output directory")->required();

  auto* explain = app.add_subcommand(
      "explain", "print a vocabulary term's definition and edges");
  explain->add_option("term", explain_term, "term to look up")->required();
  explain->add_option("--override-ontology", cfg.override_ontology_path,
                      "knowledge file merged over the builtin graph");

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& spec : hierarchy_flags) {
      auto eq = spec.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
        anonkit::fail(anonkit::Errc::InvalidParameter,
                      "--hierarchy expects attr=path, got \"" + spec + "\"");
      }
      cfg.hierarchy_overrides.emplace_back(spec.substr(0, eq),
                                           spec.substr(eq + 1));
    }
    if (anonymize->parsed()) {
      apply_csv_flags(csv_flags, &cfg);
      return anonkit::cli::run_anonymize(cfg, std::cout, std::cerr);
    }
    if (assess->parsed()) {
      apply_csv_flags(csv_flags, &cfg);
      return anonkit::cli::run_assess(cfg, std::cout, std::cerr);
    }
    if (validate->parsed()) {
      return anonkit::cli::run_validate_plan(cfg, std::cout, std::cerr);
    }
    return anonkit::cli::run_explain(explain_term,
                                     cfg.override_ontology_path, std::cout);
  } catch (const anonkit::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == anonkit::Errc::NoSolution
               ? anonkit::cli::kExitNoSolution
               : anonkit::cli::kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return anonkit::cli::kExitInputError;
  }
}

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

#ifndef ANONKIT_COMMANDS_HPP_
#define ANONKIT_COMMANDS_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "anonkit/csv.hpp"

namespace anonkit::cli {

// Exit-code contract shared by every subcommand: success / bad input /
// no solution or failed validation. Pipelines branch on these.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNoSolution = 2;

struct RunConfig {
  std::string data_path;
  std::string schema_path;
  // Per-attribute hierarchy overrides ("attr=path" on the command line);
  // otherwise the schema's hierarchy references are used.
  std::vector<std::pair<std::string, std::string>> hierarchy_overrides;

  std::optional<int> k;
  std::optional<int> l;
  std::optional<double> t;
  std::optional<double> delta_min;
  std::optional<double> delta_max;
  std::string sensitive;  // target attribute for l-diversity / t-closeness
  std::string population_path;

  double budget = 0.0;
  std::string objective = "nue";
  std::string strategy = "pruned-bfs";
  int workers = 1;

  std::string out_dir;
  std::string plan_path;
  std::string override_ontology_path;

  // Assess-only inputs.
  std::string anonymized_path;
  std::string suppressed_path;  // audit file aligning a suppressed pair
  bool include_individual = false;

  bool human = false;
  CsvOptions csv;
};

// Searches for the loss-minimizing privacy-satisfying transformation and
// writes anonymized.csv, search_report.json, metrics.json,
// suppressed_rows.txt, and run_manifest.json into out_dir.
int run_anonymize(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Risk report for one dataset, or risk + loss for an original/anonymized
// pair. Writes metrics.json (and the manifest) into out_dir.
int run_assess(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Validates a study plan against the knowledge graph; writes
// validation.json into out_dir.
int run_validate_plan(const RunConfig& cfg, std::ostream& out,
                      std::ostream& err);

// Prints a term's definition and outgoing edges; unknown terms print
// suggestions and still exit 0.
int run_explain(const std::string& term,
                const std::string& override_ontology_path, std::ostream& out);

// Digest of the semantically relevant configuration (excludes the output
// directory and worker count, which must not change artifact bytes).
std::string config_digest(const RunConfig& cfg);

}  // namespace anonkit::cli

#endif  // ANONKIT_COMMANDS_HPP_

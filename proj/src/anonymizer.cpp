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

#include "anonkit/anonymizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace anonkit {

namespace {

// Mixed-radix rank of a scheme within the lattice grid.
std::size_t rank_of(const std::vector<int>& levels,
                    const std::vector<int>& bounds) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    rank = rank * static_cast<std::size_t>(bounds[i] + 1) +
           static_cast<std::size_t>(levels[i]);
  }
  return rank;
}

struct NodeEvaluation {
  LatticeNode node;
  bool satisfied_without_suppression = false;
};

NodeEvaluation evaluate_node(const Dataset& d, const HierarchySet& hierarchies,
                             const SearchConfig& cfg,
                             const GeneralizationScheme& scheme,
                             std::size_t budget_rows) {
  NodeEvaluation eval;
  LatticeNode& node = eval.node;
  node.scheme = scheme;
  node.evaluated = true;
  node.constraint_ok.assign(cfg.constraints.size(), false);

  Dataset dz = generalize(d, scheme, hierarchies);
  Partition part = Partition::of(dz);

  auto run_checks = [&](const Partition& p, const Dataset& data,
                        std::vector<ModelVerdict>& verdicts) {
    verdicts.clear();
    for (const auto& c : cfg.constraints) {
      verdicts.push_back(check_constraint(c, p, data, cfg.population, &scheme,
                                          &hierarchies));
    }
  };

  std::vector<ModelVerdict> verdicts;
  run_checks(part, dz, verdicts);

  bool all_ok = std::all_of(verdicts.begin(), verdicts.end(),
                            [](const ModelVerdict& v) { return v.satisfied; });
  eval.satisfied_without_suppression = all_ok;

  std::vector<std::size_t> suppressed;
  if (!all_ok && budget_rows > 0) {
    // Union of violating classes, removed whole, smallest class first.
    std::vector<std::size_t> violating;
    for (const auto& v : verdicts) {
      for (const auto& violation : v.violations) {
        violating.push_back(violation.class_index);
      }
    }
    std::sort(violating.begin(), violating.end());
    violating.erase(std::unique(violating.begin(), violating.end()),
                    violating.end());
    std::stable_sort(violating.begin(), violating.end(),
                     [&](std::size_t a, std::size_t b) {
                       const auto& ca = part.classes()[a];
                       const auto& cb = part.classes()[b];
                       if (ca.size() != cb.size()) return ca.size() < cb.size();
                       return ca.rows.front() < cb.rows.front();
                     });
    std::size_t removed = 0;
    for (std::size_t ci : violating) {
      const auto& ec = part.classes()[ci];
      if (removed + ec.size() > budget_rows) break;
      removed += ec.size();
      suppressed.insert(suppressed.end(), ec.rows.begin(), ec.rows.end());
    }
    std::sort(suppressed.begin(), suppressed.end());
  }

  std::vector<std::size_t> survivors;
  survivors.reserve(d.n() - suppressed.size());
  {
    std::size_t next = 0;
    for (std::size_t i = 0; i < d.n(); ++i) {
      if (next < suppressed.size() && suppressed[next] == i) {
        ++next;
        continue;
      }
      survivors.push_back(i);
    }
  }

  node.suppressed_rows = suppressed.size();
  node.suppressed_row_ids = std::move(suppressed);

  if (survivors.empty()) {
    // An empty release satisfies nothing worth reporting.
    node.satisfied = false;
    node.loss_score = 0.0;
    return eval;
  }

  Dataset ds = d.select_rows(survivors);
  Dataset dzs = dz.select_rows(survivors);
  Partition final_part = Partition::of(dzs);

  if (!node.suppressed_row_ids.empty()) {
    run_checks(final_part, dzs, verdicts);
  }
  node.satisfied = true;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    node.constraint_ok[i] = verdicts[i].satisfied;
    node.satisfied = node.satisfied && verdicts[i].satisfied;
  }

  node.average_risk = average_rr(final_part);

  switch (cfg.objective) {
    case SearchConfig::Objective::Nue:
    case SearchConfig::Objective::NueAvgRrTiebreak: {
      auto names = ds.qi_names();
      node.loss_score = names.empty() ? 100.0 : nue(ds, dzs, names);
      break;
    }
    case SearchConfig::Objective::Ig:
      node.loss_score = ds.qi_indices().empty() ? 100.0 : ig(ds, dzs);
      break;
    case SearchConfig::Objective::GgMean: {
      auto names = ds.qi_names();
      if (names.empty()) {
        node.loss_score = 100.0;
        break;
      }
      double sum = 0.0;
      for (const auto& name : names) sum += gg(ds, dzs, name);
      node.loss_score = sum / static_cast<double>(names.size());
      break;
    }
  }
  return eval;
}

// True when `candidate` improves on `best` under the selection order:
// higher score, then (optionally) lower average risk, then lower level sum,
// then lexicographically smaller scheme. BFS order guarantees sum/lex order
// already, so later candidates only win on strictly better criteria.
bool better_node(const LatticeNode& candidate, const LatticeNode& best,
                 SearchConfig::Objective objective) {
  if (candidate.loss_score != best.loss_score) {
    return candidate.loss_score > best.loss_score;
  }
  if (objective == SearchConfig::Objective::NueAvgRrTiebreak &&
      candidate.average_risk != best.average_risk) {
    return candidate.average_risk < best.average_risk;
  }
  return false;
}

}  // namespace

SearchConfig::Objective parse_objective(const std::string& name) {
  if (name == "nue") return SearchConfig::Objective::Nue;
  if (name == "ig") return SearchConfig::Objective::Ig;
  if (name == "gg") return SearchConfig::Objective::GgMean;
  if (name == "nue-rr") return SearchConfig::Objective::NueAvgRrTiebreak;
  fail(Errc::InvalidParameter, "unknown objective \"" + name + "\"");
}

std::string_view objective_name(SearchConfig::Objective objective) {
  switch (objective) {
    case SearchConfig::Objective::Nue:
      return "nue";
    case SearchConfig::Objective::Ig:
      return "ig";
    case SearchConfig::Objective::GgMean:
      return "gg";
    case SearchConfig::Objective::NueAvgRrTiebreak:
      return "nue-rr";
  }
  return "?";
}

SearchResult search(const Dataset& d, const HierarchySet& hierarchies,
                    const SearchConfig& cfg) {
  if (d.n() == 0) fail(Errc::EmptyDataset, "cannot anonymize an empty set");
  if (cfg.constraints.empty()) {
    fail(Errc::InvalidParameter, "at least one privacy constraint required");
  }
  if (!(cfg.suppression_budget >= 0.0 && cfg.suppression_budget <= 1.0)) {
    fail(Errc::InvalidParameter, "suppression budget must lie in [0, 1]");
  }

  std::vector<int> bounds = scheme_bounds(d, hierarchies);
  std::size_t lattice_size = 1;
  for (int b : bounds) lattice_size *= static_cast<std::size_t>(b + 1);

  std::size_t budget_rows = static_cast<std::size_t>(
      std::floor(cfg.suppression_budget * static_cast<double>(d.n())));

  bool prunable =
      cfg.strategy == SearchConfig::Strategy::PrunedBfs &&
      std::all_of(cfg.constraints.begin(), cfg.constraints.end(),
                  [](const PrivacyConstraint& c) { return c.anti_monotone(); });

  // Group all level vectors by level sum; vectors are generated in
  // lexicographic order, so each layer is internally ordered.
  int max_sum = std::accumulate(bounds.begin(), bounds.end(), 0);
  std::vector<std::vector<std::vector<int>>> layers(
      static_cast<std::size_t>(max_sum) + 1);
  {
    std::vector<int> levels(bounds.size(), 0);
    while (true) {
      int s = std::accumulate(levels.begin(), levels.end(), 0);
      layers[static_cast<std::size_t>(s)].push_back(levels);
      int i = static_cast<int>(levels.size()) - 1;
      while (i >= 0 && levels[static_cast<std::size_t>(i)] ==
                           bounds[static_cast<std::size_t>(i)]) {
        levels[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++levels[static_cast<std::size_t>(i)];
    }
  }

  // covered[r]: some evaluated node <= this one already satisfied everything
  // without suppression, so the node cannot score better.
  std::vector<char> covered(lattice_size, 0);
  std::vector<char> root(lattice_size, 0);

  SearchResult result;
  result.lattice_size = lattice_size;
  std::uint64_t digest = d.digest();

  int workers = std::max(1, cfg.workers);

  for (auto& layer : layers) {
    if (layer.empty()) continue;

    std::vector<std::size_t> to_eval;
    to_eval.reserve(layer.size());
    for (std::size_t i = 0; i < layer.size(); ++i) {
      const auto& levels = layer[i];
      std::size_t r = rank_of(levels, bounds);
      if (prunable) {
        for (std::size_t q = 0; q < levels.size() && !covered[r]; ++q) {
          if (levels[q] == 0) continue;
          auto pred = levels;
          --pred[q];
          std::size_t pr = rank_of(pred, bounds);
          if (covered[pr] || root[pr]) covered[r] = 1;
        }
        if (covered[r]) {
          ++result.skipped;
          continue;
        }
      }
      to_eval.push_back(i);
    }

    std::vector<NodeEvaluation> evals(to_eval.size());
    auto work = [&](std::size_t worker_id) {
      for (std::size_t idx = worker_id; idx < to_eval.size(); idx += workers) {
        GeneralizationScheme scheme{layer[to_eval[idx]]};
        evals[idx] = evaluate_node(d, hierarchies, cfg, scheme, budget_rows);
      }
    };
    if (workers == 1 || to_eval.size() <= 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      int spawn = std::min<int>(workers, static_cast<int>(to_eval.size()));
      pool.reserve(static_cast<std::size_t>(spawn));
      for (int w = 0; w < spawn; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }

    // Deterministic reduction in lattice order, independent of workers.
    for (std::size_t idx = 0; idx < to_eval.size(); ++idx) {
      NodeEvaluation& eval = evals[idx];
      eval.node.dataset_digest = digest;
      std::size_t r = rank_of(eval.node.scheme.levels, bounds);
      if (eval.satisfied_without_suppression) root[r] = 1;
      if (eval.node.satisfied &&
          (!result.found || better_node(eval.node, result.best, cfg.objective))) {
        result.best = eval.node;
        result.found = true;
      }
      result.evaluated.push_back(std::move(eval.node));
    }
  }
  return result;
}

std::pair<Dataset, std::vector<std::size_t>> apply(
    const Dataset& d, const LatticeNode& node,
    const HierarchySet& hierarchies) {
  if (node.dataset_digest != d.digest()) {
    fail(Errc::StaleNode,
         "the dataset changed since this node was searched; re-run search");
  }
  Dataset dz = generalize(d, node.scheme, hierarchies);
  if (!node.suppressed_row_ids.empty()) {
    dz = dz.remove_rows(node.suppressed_row_ids);
  }
  return {std::move(dz), node.suppressed_row_ids};
}

nlohmann::ordered_json search_report_json(const SearchResult& result,
                                          const SearchConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["strategy"] = cfg.strategy == SearchConfig::Strategy::Exhaustive
                        ? "exhaustive"
                        : "pruned-bfs";
  doc["objective"] = std::string(objective_name(cfg.objective));
  doc["suppression_budget"] = cfg.suppression_budget;
  {
    nlohmann::ordered_json constraints = nlohmann::ordered_json::array();
    for (const auto& c : cfg.constraints) constraints.push_back(c.describe());
    doc["constraints"] = std::move(constraints);
  }
  doc["lattice_size"] = result.lattice_size;
  doc["evaluated"] = result.evaluated.size();
  doc["skipped"] = result.skipped;
  doc["solution_found"] = result.found;

  auto node_json = [](const LatticeNode& node) {
    nlohmann::ordered_json j;
    j["scheme"] = node.scheme.levels;
    j["satisfied"] = node.satisfied;
    j["constraints_ok"] = node.constraint_ok;
    j["loss_score"] = node.loss_score;
    j["average_risk"] = node.average_risk;
    j["suppressed_rows"] = node.suppressed_rows;
    return j;
  };

  if (result.found) doc["best"] = node_json(result.best);
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (const auto& node : result.evaluated) nodes.push_back(node_json(node));
  doc["nodes"] = std::move(nodes);
  return doc;
}

}  // namespace anonkit

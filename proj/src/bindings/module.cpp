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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anonkit/anonymizer.hpp"
#include "anonkit/commands.hpp"
#include "anonkit/csv.hpp"
#include "anonkit/metrics.hpp"
#include "anonkit/ontology.hpp"

namespace py = pybind11;
using namespace anonkit;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) {
        out[py::str(key)] = json_to_py(value);
      }
      return out;
    }
    default:
      return py::none();
  }
}

py::dict verdict_to_py(const ModelVerdict& v) {
  py::dict out;
  out["satisfied"] = v.satisfied;
  py::list violations;
  for (const auto& violation : v.violations) {
    py::dict item;
    item["class_index"] = violation.class_index;
    item["observed"] = violation.observed;
    item["detail"] = violation.detail;
    violations.append(item);
  }
  out["violations"] = violations;
  return out;
}

CsvOptions make_csv_options(const std::string& delimiter,
                            const std::string& missing_token) {
  if (delimiter.size() != 1) {
    fail(Errc::InvalidParameter, "delimiter must be a single character");
  }
  CsvOptions opt;
  opt.delimiter = delimiter[0];
  opt.missing_token = missing_token;
  return opt;
}

SearchConfig make_search_config(std::vector<PrivacyConstraint> constraints,
                                double budget, const std::string& objective,
                                const std::string& strategy, int workers,
                                const Dataset* population) {
  SearchConfig cfg;
  cfg.constraints = std::move(constraints);
  cfg.suppression_budget = budget;
  cfg.objective = parse_objective(objective);
  if (strategy == "exhaustive") {
    cfg.strategy = SearchConfig::Strategy::Exhaustive;
  } else if (strategy == "pruned-bfs") {
    cfg.strategy = SearchConfig::Strategy::PrunedBfs;
  } else {
    fail(Errc::InvalidParameter, "unknown strategy \"" + strategy + "\"");
  }
  cfg.workers = workers;
  cfg.population = population;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tabular anonymization engine: generalization-lattice search "
            "under k-anonymity family constraints, risk and loss metrics, "
            "and study-plan validation";

  py::register_exception<Error>(m, "AnonkitError");

  py::class_<AttributeSchema>(m, "AttributeSchema")
      .def_readonly("name", &AttributeSchema::name)
      .def_property_readonly("data_type",
                             [](const AttributeSchema& a) {
                               return std::string(value_kind_name(a.data_type));
                             })
      .def_property_readonly("role",
                             [](const AttributeSchema& a) {
                               return std::string(attribute_role_name(a.role));
                             })
      .def_readonly("hierarchy_ref", &AttributeSchema::hierarchy_ref)
      .def_readonly("locale", &AttributeSchema::locale)
      .def("__repr__", [](const AttributeSchema& a) {
        return "<AttributeSchema " + a.name + ">";
      });

  py::class_<Dataset>(m, "Dataset")
      .def_property_readonly("n", &Dataset::n)
      .def_property_readonly("schema", &Dataset::schema)
      .def("attribute_names",
           [](const Dataset& d) {
             std::vector<std::string> names;
             for (const auto& a : d.schema()) names.push_back(a.name);
             return names;
           })
      .def("qi_names", &Dataset::qi_names)
      .def("drop_identifiers", &Dataset::drop_identifiers)
      .def("qi_projection",
           [](const Dataset& d, std::size_t row) {
             std::vector<std::string> out;
             for (const auto& v : d.qi_projection(row)) {
               out.push_back(v.display());
             }
             return out;
           },
           py::arg("row"))
      .def("cell",
           [](const Dataset& d, std::size_t row, const std::string& attr) {
             return d.cell(row, d.attribute_index(attr)).display();
           },
           py::arg("row"), py::arg("attribute"))
      .def("suppress_records", &suppress_records, py::arg("rows"))
      .def("__len__", &Dataset::n)
      .def("__repr__", [](const Dataset& d) {
        return "<Dataset n=" + std::to_string(d.n()) + " attributes=" +
               std::to_string(d.attribute_count()) + ">";
      });

  py::class_<Hierarchy>(m, "Hierarchy")
      .def_property_readonly("attribute", &Hierarchy::attribute)
      .def_property_readonly("top_level", &Hierarchy::top_level);

  py::class_<GeneralizationScheme>(m, "GeneralizationScheme")
      .def(py::init([](std::vector<int> levels) {
             return GeneralizationScheme{std::move(levels)};
           }),
           py::arg("levels"))
      .def_readonly("levels", &GeneralizationScheme::levels)
      .def("__repr__", [](const GeneralizationScheme& s) {
        std::string out = "<GeneralizationScheme [";
        for (std::size_t i = 0; i < s.levels.size(); ++i) {
          if (i) out += ",";
          out += std::to_string(s.levels[i]);
        }
        return out + "]>";
      });

  py::class_<Partition>(m, "Partition")
      .def_static("of", &Partition::of, py::arg("dataset"))
      .def_static("by_attributes", &Partition::by_attributes,
                  py::arg("dataset"), py::arg("attributes"))
      .def_property_readonly("class_count", &Partition::class_count)
      .def_property_readonly("n", &Partition::n)
      .def("ces", &Partition::ces, py::arg("row"))
      .def("min_ces", &Partition::min_ces)
      .def("class_sizes", [](const Partition& p) {
        std::vector<std::size_t> sizes;
        for (const auto& c : p.classes()) sizes.push_back(c.size());
        return sizes;
      });

  py::class_<PrivacyConstraint>(m, "PrivacyConstraint")
      .def("describe", &PrivacyConstraint::describe)
      .def("__repr__", [](const PrivacyConstraint& c) {
        return "<PrivacyConstraint " + c.describe() + ">";
      });
  m.def("k_anonymity", &PrivacyConstraint::k_anonymity, py::arg("k"));
  m.def("l_diversity", &PrivacyConstraint::l_diversity, py::arg("l"),
        py::arg("sensitive"));
  m.def("t_closeness", &PrivacyConstraint::t_closeness, py::arg("t"),
        py::arg("sensitive"));
  m.def("delta_presence", &PrivacyConstraint::delta_presence,
        py::arg("delta_min"), py::arg("delta_max"));

  m.def("load_schema", &load_schema, py::arg("path"));
  m.def(
      "load_csv",
      [](const std::string& path, const std::vector<AttributeSchema>& schema,
         const std::string& delimiter, const std::string& missing_token) {
        return load_csv(path, schema, make_csv_options(delimiter, missing_token));
      },
      py::arg("path"), py::arg("schema"), py::arg("delimiter") = ",",
      py::arg("missing_token") = "");
  m.def(
      "load_csv_generalized",
      [](const std::string& path, const std::vector<AttributeSchema>& schema,
         const std::string& delimiter, const std::string& missing_token) {
        return load_csv_generalized(
            path, schema, make_csv_options(delimiter, missing_token));
      },
      py::arg("path"), py::arg("schema"), py::arg("delimiter") = ",",
      py::arg("missing_token") = "");
  m.def(
      "write_csv",
      [](const Dataset& d, const std::string& path,
         const std::string& delimiter, const std::string& missing_token) {
        write_csv(d, path, make_csv_options(delimiter, missing_token));
      },
      py::arg("dataset"), py::arg("path"), py::arg("delimiter") = ",",
      py::arg("missing_token") = "");

  m.def("load_hierarchy", &load_hierarchy, py::arg("path"),
        py::arg("attribute"));
  m.def("generalize", &generalize, py::arg("dataset"), py::arg("scheme"),
        py::arg("hierarchies"));

  m.def("individual_rr", &individual_rr, py::arg("partition"), py::arg("row"));
  m.def("average_rr", &average_rr, py::arg("partition"));
  m.def("maximum_rr", py::overload_cast<int>(&maximum_rr), py::arg("k"));
  m.def("maximum_rr_of", py::overload_cast<const Partition&>(&maximum_rr),
        py::arg("partition"));
  m.def("nue", &nue, py::arg("original"), py::arg("anonymized"),
        py::arg("attributes"));
  m.def("ig", &ig, py::arg("original"), py::arg("anonymized"));
  m.def("gg", &gg, py::arg("original"), py::arg("anonymized"),
        py::arg("attribute"));

  m.def(
      "check_k_anonymity",
      [](const Partition& part, int k) {
        return verdict_to_py(check_k_anonymity(part, k));
      },
      py::arg("partition"), py::arg("k"));
  m.def(
      "check_l_diversity",
      [](const Partition& part, const Dataset& d, int l,
         const std::string& sensitive) {
        return verdict_to_py(check_l_diversity(part, d, l, sensitive));
      },
      py::arg("partition"), py::arg("dataset"), py::arg("l"),
      py::arg("sensitive"));
  m.def(
      "check_t_closeness",
      [](const Partition& part, const Dataset& d, double t,
         const std::string& sensitive) {
        return verdict_to_py(check_t_closeness(part, d, t, sensitive));
      },
      py::arg("partition"), py::arg("dataset"), py::arg("t"),
      py::arg("sensitive"));
  m.def(
      "check_delta_presence",
      [](const Partition& sample_part, const Dataset& population,
         const GeneralizationScheme& scheme, const HierarchySet& hierarchies,
         double delta_min, double delta_max) {
        return verdict_to_py(check_delta_presence(
            sample_part, population, scheme, hierarchies, delta_min,
            delta_max));
      },
      py::arg("sample_partition"), py::arg("population"), py::arg("scheme"),
      py::arg("hierarchies"), py::arg("delta_min"), py::arg("delta_max"));

  py::class_<LatticeNode>(m, "LatticeNode")
      .def_property_readonly(
          "scheme", [](const LatticeNode& n) { return n.scheme.levels; })
      .def_readonly("satisfied", &LatticeNode::satisfied)
      .def_readonly("loss_score", &LatticeNode::loss_score)
      .def_readonly("average_risk", &LatticeNode::average_risk)
      .def_readonly("suppressed_rows", &LatticeNode::suppressed_rows);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("found", &SearchResult::found)
      .def_readonly("best", &SearchResult::best)
      .def_readonly("lattice_size", &SearchResult::lattice_size)
      .def_readonly("skipped", &SearchResult::skipped)
      .def_property_readonly("evaluated_count", [](const SearchResult& r) {
        return r.evaluated.size();
      });

  m.def(
      "search",
      [](const Dataset& d, const HierarchySet& hierarchies,
         std::vector<PrivacyConstraint> constraints, double budget,
         const std::string& objective, const std::string& strategy,
         int workers, const Dataset* population) {
        SearchConfig cfg =
            make_search_config(std::move(constraints), budget, objective,
                               strategy, workers, population);
        return search(d, hierarchies, cfg);
      },
      py::arg("dataset"), py::arg("hierarchies"), py::arg("constraints"),
      py::arg("budget") = 0.0, py::arg("objective") = "nue",
      py::arg("strategy") = "pruned-bfs", py::arg("workers") = 1,
      py::arg("population") = nullptr, py::keep_alive<0, 8>());

  m.def(
      "apply",
      [](const Dataset& d, const LatticeNode& node,
         const HierarchySet& hierarchies) {
        auto [dz, suppressed] = apply(d, node, hierarchies);
        return py::make_tuple(std::move(dz), std::move(suppressed));
      },
      py::arg("dataset"), py::arg("node"), py::arg("hierarchies"));

  m.def(
      "search_report",
      [](const SearchResult& result, std::vector<PrivacyConstraint> constraints,
         double budget, const std::string& objective,
         const std::string& strategy) {
        SearchConfig cfg = make_search_config(std::move(constraints), budget,
                                              objective, strategy, 1, nullptr);
        return json_to_py(search_report_json(result, cfg));
      },
      py::arg("result"), py::arg("constraints"), py::arg("budget") = 0.0,
      py::arg("objective") = "nue", py::arg("strategy") = "pruned-bfs");

  m.def(
      "risk_report",
      [](const Partition& part, bool include_individual) {
        RiskReport r = risk_report(part, include_individual);
        py::dict out;
        if (!r.individual.empty()) out["individual"] = r.individual;
        out["average"] = r.average;
        out["maximum"] = r.maximum;
        py::dict attack;
        attack["prosecutor"] = r.attack.prosecutor;
        attack["marketer"] = r.attack.marketer;
        if (r.attack.journalist) attack["journalist"] = *r.attack.journalist;
        out["attack"] = attack;
        return out;
      },
      py::arg("partition"), py::arg("include_individual") = false);

  m.def("loss_report", [](const Dataset& d, const Dataset& dz) {
    LossReport r = loss_report(d, dz);
    py::dict out;
    py::dict nue_d;
    nue_d["overall"] = r.nue_overall;
    py::dict nue_per;
    for (const auto& [name, value] : r.nue_per_attribute) {
      nue_per[py::str(name)] = value;
    }
    nue_d["per_attribute"] = nue_per;
    out["nue"] = nue_d;
    out["ig"] = r.ig;
    py::dict gg_per;
    for (const auto& [name, value] : r.gg_per_attribute) {
      gg_per[py::str(name)] = value;
    }
    out["gg"] = py::dict(py::arg("per_attribute") = gg_per);
    return out;
  });

  py::class_<OntologyGraph>(m, "OntologyGraph")
      .def_static("builtin", &OntologyGraph::builtin)
      .def("query", &OntologyGraph::query, py::arg("subject"),
           py::arg("property"))
      .def("display_all", &OntologyGraph::display_all, py::arg("ids"))
      .def("merge_override",
           [](OntologyGraph& g, const std::string& json_text) {
             g.merge_override(nlohmann::json::parse(json_text));
           },
           py::arg("json_text"))
      .def("to_json_string",
           [](const OntologyGraph& g) { return g.to_json().dump(2); })
      .def("suggestions", &OntologyGraph::suggestions, py::arg("term"),
           py::arg("limit") = 3)
      .def("validate_plan", [](const OntologyGraph& g,
                               const std::string& plan_json) {
        StudyPlan plan = parse_plan(nlohmann::json::parse(plan_json));
        return json_to_py(plan_report_json(validate_plan(g, plan)));
      },
      py::arg("plan_json"));

#ifdef VERSION_INFO
#define ANONKIT_STR2(x) #x
#define ANONKIT_STR(x) ANONKIT_STR2(x)
  m.attr("__version__") = ANONKIT_STR(VERSION_INFO);
#else
  m.attr("__version__") = "0.1.0";
#endif
}

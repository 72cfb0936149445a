# Copyright 2026 The anonkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os

import pytest

import anonkit

DATA = os.environ.get("ANONKIT_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


@pytest.fixture(scope="module")
def toy():
    schema = anonkit.load_schema(os.path.join(DATA, "toy", "schema.json"))
    data = anonkit.load_csv(os.path.join(DATA, "toy", "patients.csv"), schema)
    hierarchies = {
        "age": anonkit.load_hierarchy(
            os.path.join(DATA, "toy", "age_intervals.json"), schema[1]
        ),
        "sex": anonkit.load_hierarchy(
            os.path.join(DATA, "toy", "sex_levels.txt"), schema[2]
        ),
    }
    return schema, data.drop_identifiers(), hierarchies


def test_load_and_partition(toy):
    _, data, _ = toy
    assert len(data) == 8
    assert data.qi_names() == ["age", "sex"]
    part = anonkit.Partition.of(data)
    assert part.class_count == 8  # all (age, sex) pairs distinct
    assert part.min_ces() == 1
    assert anonkit.maximum_rr_of(part) == pytest.approx(100.0)
    assert anonkit.average_rr(part) == pytest.approx(100.0)


def test_generalize_and_metrics(toy):
    _, data, hierarchies = toy
    scheme = anonkit.GeneralizationScheme([1, 1])
    dz = anonkit.generalize(data, scheme, hierarchies)
    assert dz.cell(0, "age") == "30-39"
    assert dz.cell(0, "sex") == "person"

    assert anonkit.ig(data, dz) == pytest.approx(0.0)
    assert anonkit.nue(data, data, ["age", "sex"]) == pytest.approx(100.0)
    loss = anonkit.loss_report(data, dz)
    assert 0.0 <= loss["nue"]["overall"] <= 100.0


def test_search_and_apply(toy):
    _, data, hierarchies = toy
    result = anonkit.search(
        data, hierarchies, [anonkit.k_anonymity(2)], budget=0.0, workers=2
    )
    assert result.found
    dz, suppressed = anonkit.apply(data, result.best, hierarchies)
    assert suppressed == []
    part = anonkit.Partition.of(dz)
    assert part.min_ces() >= 2
    verdict = anonkit.check_k_anonymity(part, 2)
    assert verdict["satisfied"]


def test_error_mapping(toy):
    schema, data, _ = toy
    with pytest.raises(anonkit.AnonkitError):
        anonkit.load_csv("/nonexistent/file.csv", schema)
    part = anonkit.Partition.of(data)
    with pytest.raises(anonkit.AnonkitError):
        anonkit.maximum_rr(0)


def test_ontology_queries():
    graph = anonkit.OntologyGraph.builtin()
    assert graph.query("k-anonymity", "has-preparation") == [
        "suppression",
        "grouping",
    ]
    assert graph.display_all(["nue"]) == ["NUE"]

    plan_path = os.path.join(DATA, "plans", "mortality_classifier.json")
    with open(plan_path, encoding="utf-8") as fh:
        report = graph.validate_plan(fh.read())
    assert report["all_passed"] is True
    assert len(report["checks"]) == 5

    serialized = json.loads(graph.to_json_string())
    assert any(n["name"] == "k-anonymity" for n in serialized["nodes"])

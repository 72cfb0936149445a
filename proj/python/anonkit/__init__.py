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

"""Tabular anonymization engine.

Generalization-lattice search under the k-anonymity family of privacy
models, re-identification-risk and information-loss reporting, and
study-plan validation against a built-in domain vocabulary.
"""

from anonkit._core import (  # noqa: F401
    AnonkitError,
    AttributeSchema,
    Dataset,
    GeneralizationScheme,
    Hierarchy,
    LatticeNode,
    OntologyGraph,
    Partition,
    PrivacyConstraint,
    SearchResult,
    __version__,
    apply,
    average_rr,
    check_delta_presence,
    check_k_anonymity,
    check_l_diversity,
    check_t_closeness,
    delta_presence,
    generalize,
    gg,
    ig,
    individual_rr,
    k_anonymity,
    l_diversity,
    load_csv,
    load_csv_generalized,
    load_hierarchy,
    load_schema,
    loss_report,
    maximum_rr,
    maximum_rr_of,
    nue,
    risk_report,
    search,
    search_report,
    t_closeness,
    write_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")]

# Copyright 2026 The cohloss developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Bipartite-coherence bookkeeping and maximal-loss basis search."""

from cohloss._core import (  # noqa: F401
    DensityMatrix,
    ProjectiveBasis,
    ValidationError,
    __version__,
    abs_sum,
    c_l1,
    c_relent,
    coherence,
    coherence_loss,
    counterexample_state,
    dephase,
    dual_basis_qubit,
    entropy_bits,
    maximally_coherent,
    maximally_mixed,
    mub_family,
    partial_trace,
    preset_state,
    project_local,
    qi_scan,
    random_density,
    random_qi_state,
    random_unitary,
    search_grid_qubit,
    search_random,
    search_simplex,
    tensor,
    validate,
    verify_unbiased,
)

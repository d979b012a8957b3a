# Copyright 2026 The ResolveKit Authors.
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

"""Resolving sets for stochastic block models."""

import json as _json

from ._resolvekit import (
    Error,
    InfeasibleError,
    InvalidInputError,
    NoResolvingSetError,
    SizeCapError,
    __version__,
    diameter,
    er_any_set_size,
    er_beta_upper,
    expected_collisions,
    expected_long_pairs,
    ich,
    is_resolving,
    metric_dimension,
    mine,
    presets,
    sample_sbm,
    scale_communities,
)
from ._resolvekit import run_experiment as _run_experiment


def run_experiment(config):
    """Run the experiment protocol; `config` is a dict or a JSON string."""
    if not isinstance(config, str):
        config = _json.dumps(config)
    return _run_experiment(config)


__all__ = [
    "Error",
    "InfeasibleError",
    "InvalidInputError",
    "NoResolvingSetError",
    "SizeCapError",
    "__version__",
    "diameter",
    "er_any_set_size",
    "er_beta_upper",
    "expected_collisions",
    "expected_long_pairs",
    "ich",
    "is_resolving",
    "metric_dimension",
    "mine",
    "presets",
    "run_experiment",
    "sample_sbm",
    "scale_communities",
]

# Copyright 2026 The entdist Authors
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

"""Entanglement distribution through noisy channels.

States are passed as ``(matrix, dims)`` with numpy complex arrays in
Kronecker order; subsystems are numbered by position.
"""

import json

from ._core import *  # noqa: F401,F403
from ._core import run_suite_json

__version__ = "0.1.0"


def run_suite(name, seed=2026, trials=-1, inject_reversed_time=False):
    """Run a checker suite and return the JSON report as a dict."""
    return json.loads(run_suite_json(name, seed, trials, inject_reversed_time))

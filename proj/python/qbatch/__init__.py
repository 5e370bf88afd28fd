# Copyright 2026 The qbatch Authors
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

"""Batch several small circuits onto one device.

Inputs and outputs are the same JSON documents the ``qbatch`` command line
tool reads and writes, given here as plain dicts and lists.
"""

import json

from ._core import CouplingMap, SolverLimitError, fidelity, overlap
from . import _core

__all__ = [
    "CouplingMap",
    "SolverLimitError",
    "fidelity",
    "layouts",
    "marginalize",
    "overlap",
    "schedule",
]


def _text(doc):
    return None if doc is None else json.dumps(doc)


def schedule(coupling, circuits, calibration=None, *, layouts=None,
             arrivals=None, buffer=1, filter="top-fraction", epsilon=0.5,
             solver="greedy", layout_cap=1000):
    """Schedule document (batches, unschedulable, metrics) for ``circuits``.

    ``layouts`` is a list of layout documents that replace enumeration for
    the circuits they name; every other circuit needs ``calibration``.
    Passing ``arrivals`` switches to the online scheduler.
    """
    return json.loads(_core.schedule_json(
        json.dumps(coupling), json.dumps(circuits), _text(calibration),
        _text(layouts), _text(arrivals), buffer, filter, epsilon, solver,
        layout_cap))


def layouts(coupling, circuits, calibration, *, filter="top-fraction", epsilon=0.5,
            layout_cap=1000):
    """Scored, filtered candidate layouts, one document per circuit."""
    return json.loads(_core.layouts_json(
        json.dumps(coupling), json.dumps(circuits), json.dumps(calibration),
        filter, epsilon, layout_cap))


def marginalize(joint, circuit_id):
    """Counts of one circuit from a joint counts document."""
    return json.loads(_core.marginalize_json(json.dumps(joint), circuit_id))

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

"""Regenerates the device and workload fixtures under data/.

The output is deterministic; rerunning the script must leave the committed
files byte-identical.
"""

import json
import pathlib
import random

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

# 27-qubit Falcon heavy-hex coupling graph.
FALCON_27_EDGES = [
    (0, 1), (1, 2), (1, 4), (2, 3), (3, 5), (4, 7), (5, 8), (6, 7),
    (7, 10), (8, 9), (8, 11), (10, 12), (11, 14), (12, 13), (12, 15),
    (13, 14), (14, 16), (15, 18), (16, 19), (17, 18), (18, 21), (19, 20),
    (19, 22), (21, 23), (22, 25), (23, 24), (24, 25), (25, 26),
]


def eagle_127_edges():
    """127-qubit Eagle heavy-hex lattice: 7 rows joined by bridge qubits."""
    rows = []
    next_q = 0
    bridges_after = []
    row_specs = [(0, 14)] + [(0, 15)] * 5 + [(1, 14)]
    edges = []
    for r, (first_col, width) in enumerate(row_specs):
        row = {first_col + c: next_q + c for c in range(width)}
        next_q += width
        for c in range(first_col, first_col + width - 1):
            edges.append((row[c], row[c + 1]))
        rows.append(row)
        if r + 1 < len(row_specs):
            cols = [0, 4, 8, 12] if r % 2 == 0 else [2, 6, 10, 14]
            bridges_after.append({c: next_q + i for i, c in enumerate(cols)})
            next_q += len(cols)
    for r, bridge in enumerate(bridges_after):
        for c, q in bridge.items():
            edges.append((rows[r][c], q))
            edges.append((q, rows[r + 1][c]))
    assert next_q == 127 and len(edges) == 144
    return 127, sorted(tuple(sorted(e)) for e in edges)


def synthetic_calibration(num_qubits, edges, seed):
    rng = random.Random(seed)
    readout = [round(rng.uniform(0.005, 0.05), 5) for _ in range(num_qubits)]
    single = [round(rng.uniform(1e-4, 1e-3), 6) for _ in range(num_qubits)]
    two = {f"{a}-{b}": round(rng.uniform(0.005, 0.03), 5) for a, b in edges}
    return {
        "readout_error": readout,
        "single_qubit_error": single,
        "two_qubit_error": two,
    }


def chain_circuit(cid, n, layers):
    """Linear-entanglement ansatz: rotation layer then a CX ladder, repeated."""
    ops = []
    for _ in range(layers):
        ops += [{"kind": "1q", "qubits": [q]} for q in range(n)]
        ops += [{"kind": "2q", "qubits": [q, q + 1]} for q in range(n - 1)]
    ops += [{"kind": "1q", "qubits": [q]} for q in range(n)]
    ops += [{"kind": "measure", "qubits": [q]} for q in range(n)]
    depth = layers * n + 2
    return {"id": cid, "num_qubits": n, "depth": depth, "ops": ops}


def dump(name, doc):
    """One top-level key per line, one list element per line."""
    lines = []
    for key in sorted(doc):
        value = doc[key]
        if isinstance(value, list):
            items = [json.dumps(v, sort_keys=True) for v in value]
            body = "[\n  " + ",\n  ".join(items) + "\n ]"
        else:
            body = json.dumps(value, sort_keys=True)
        lines.append(f" {json.dumps(key)}: {body}")
    (DATA / name).write_text("{\n" + ",\n".join(lines) + "\n}\n")


def main():
    DATA.mkdir(exist_ok=True)
    falcon = {"num_qubits": 27, "edges": [list(e) for e in FALCON_27_EDGES]}
    dump("falcon27.json", falcon)
    # Batch sizes for the 10-qubit workload depend on the calibration draw.
    # Over seeds 0..39 (greedy, buffer 1, top half of layouts), Falcon gives
    # (2,2,2,1) for 22 seeds and all singletons otherwise; Eagle gives
    # (3,3,1) for 8, (4,3) for 24, (5,2) for 6 and (2,2,2,1) for 2. Each
    # device uses the lowest seed that yields two and three circuits per
    # batch respectively, so the fixture pins a draw rather than a property
    # of the scheduler.
    dump("falcon27_calibration.json",
         synthetic_calibration(27, FALCON_27_EDGES, seed=2))

    m, eagle_edges = eagle_127_edges()
    dump("eagle127.json", {"num_qubits": m,
                           "edges": [list(e) for e in eagle_edges]})
    dump("eagle127_calibration.json",
         synthetic_calibration(m, eagle_edges, seed=0))

    dump("chain10_x7.json",
         {"circuits": [chain_circuit(f"ra10_{i}", 10, 3) for i in range(7)]})
    dump("chain7_x7.json",
         {"circuits": [chain_circuit(f"ra7_{i}", 7, 3) for i in range(7)]})


if __name__ == "__main__":
    main()

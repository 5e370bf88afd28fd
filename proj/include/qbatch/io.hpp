// Copyright 2026 The qbatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON documents exchanged with the CLI and the Python module. Every parse_*
// throws InputError on a malformed or inconsistent document.

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "qbatch/circuit.hpp"
#include "qbatch/compat_graph.hpp"
#include "qbatch/hardware.hpp"
#include "qbatch/layout.hpp"
#include "qbatch/results.hpp"
#include "qbatch/scheduler.hpp"

namespace qbatch::io {

using Json = nlohmann::json;

Json read_json_file(const std::filesystem::path& path);
/// Two-space indent, trailing newline.
void write_json_file(const std::filesystem::path& path, const Json& doc);
std::string dump(const Json& doc);

/// `{"num_qubits": m, "edges": [[a,b], ...]}`
CouplingMap parse_coupling_map(const Json& doc);
Json to_json(const CouplingMap& map);

/// `{"readout_error": [...], "single_qubit_error": [...],
///   "two_qubit_error": {"a-b": p, ...}}` with the smaller index first.
CalibrationData parse_calibration(const Json& doc, const CouplingMap& map);
Json to_json(const CalibrationData& calib, const CouplingMap& map);

/// `{"circuits": [{"id", "num_qubits", "depth", "ops": [{"kind", "qubits"}]}]}`
/// with kind one of "1q", "2q", "measure".
CircuitSet parse_circuits(const Json& doc);
Json to_json(const CircuitSet& circuits);

/// `{"circuit_id", "layouts": [{"mapping": [...], "score": s}, ...]}`.
/// Scores are taken as given; the list is re-sorted by score.
LayoutList parse_layout_list(const Json& doc, const CircuitSet& circuits,
                             const CouplingMap& map);
/// A single layout document or an array of them.
std::vector<LayoutList> parse_layout_lists(const Json& doc,
                                           const CircuitSet& circuits,
                                           const CouplingMap& map);
Json to_json(const LayoutList& list);

/// `{"spans": {"<id>": [positions]}, "counts": {"<bits>": c}}`
JointCounts parse_joint_counts(const Json& doc);
Json to_json(const Counts& counts);

/// `{"arrivals": {"<id>": t, ...}}`. Circuits not listed arrive at time 0.
/// The result is ordered by time, ties in circuit input order.
std::vector<Arrival> parse_arrivals(const Json& doc, const CircuitSet& circuits);

/// `{"vertices": [{"circuit", "layout"}], "edges": [{"u","v","w"}]}`
Json to_json(const CompatibilityGraph& graph);

/// Schedule document with batches, unschedulable ids and metrics.
Json to_json(const Schedule& schedule, const ScheduleMetrics& metrics);
/// Reads a schedule document back, re-validating every layout against its
/// circuit and the device.
Schedule parse_schedule(const Json& doc, const CircuitSet& circuits,
                        const CouplingMap& map);

}  // namespace qbatch::io

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

#include "qbatch/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "qbatch/error.hpp"

namespace qbatch::io {

namespace {

const Json& field(const Json& doc, const char* key, const char* where) {
  if (!doc.is_object()) {
    throw InputError(std::string(where) + ": expected a JSON object");
  }
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw InputError(std::string(where) + ": missing \"" + key + "\"");
  }
  return *it;
}

template <typename T>
T as(const Json& value, const char* where) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string(where) + ": " + e.what());
  }
}

unsigned as_index(const Json& value, const char* where) {
  if (!value.is_number_integer() && !value.is_number_unsigned()) {
    throw InputError(std::string(where) + ": expected a non-negative integer");
  }
  const auto v = value.get<long long>();
  if (v < 0 || v > 0xffffffffLL) {
    throw InputError(std::string(where) + ": index " + std::to_string(v) +
                     " out of range");
  }
  return static_cast<unsigned>(v);
}

std::vector<Qubit> as_qubits(const Json& value, const char* where) {
  if (!value.is_array()) {
    throw InputError(std::string(where) + ": expected an array of indices");
  }
  std::vector<Qubit> out;
  for (const Json& q : value) out.push_back(as_index(q, where));
  return out;
}

Layout parse_layout(const Json& doc, const CircuitSpec& circuit,
                    const CouplingMap& map) {
  auto mapping = as_qubits(field(doc, "mapping", "layout"), "layout mapping");
  const double score = as<double>(field(doc, "score", "layout"), "layout score");
  return Layout::create(circuit, std::move(mapping), map, score);
}

Json layout_json(const Layout& layout) {
  return Json{{"mapping", layout.mapping()}, {"score", layout.score()}};
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << dump(doc);
}

CouplingMap parse_coupling_map(const Json& doc) {
  const unsigned m = as_index(field(doc, "num_qubits", "coupling map"),
                              "coupling map num_qubits");
  const Json& edges = field(doc, "edges", "coupling map");
  if (!edges.is_array()) throw InputError("coupling map: edges must be an array");
  std::vector<Edge> parsed;
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) {
      throw InputError("coupling map: each edge must be a pair [a, b]");
    }
    parsed.push_back({as_index(e[0], "coupling map edge"),
                      as_index(e[1], "coupling map edge")});
  }
  return CouplingMap(m, std::move(parsed));
}

Json to_json(const CouplingMap& map) {
  Json edges = Json::array();
  for (const Edge& e : map.edges()) edges.push_back({e.first, e.second});
  return Json{{"num_qubits", map.num_qubits()}, {"edges", edges}};
}

CalibrationData parse_calibration(const Json& doc, const CouplingMap& map) {
  auto readout = as<std::vector<double>>(
      field(doc, "readout_error", "calibration"), "calibration readout_error");
  auto single = as<std::vector<double>>(
      field(doc, "single_qubit_error", "calibration"),
      "calibration single_qubit_error");
  const Json& two = field(doc, "two_qubit_error", "calibration");
  if (!two.is_object()) {
    throw InputError("calibration: two_qubit_error must be an object");
  }
  std::vector<double> per_edge(map.edges().size(), -1.0);
  for (const auto& [key, value] : two.items()) {
    unsigned a = 0;
    unsigned b = 0;
    char dash = 0;
    std::istringstream parse(key);
    if (!(parse >> a >> dash >> b) || dash != '-' || !parse.eof()) {
      throw InputError("calibration: bad edge key \"" + key + "\"");
    }
    if (a >= b) {
      throw InputError("calibration: edge key \"" + key +
                       "\" must list the smaller index first");
    }
    auto idx = map.edge_index(a, b);
    if (!idx) {
      throw InputError("calibration: \"" + key + "\" is not a coupling");
    }
    per_edge[*idx] = as<double>(value, "calibration two_qubit_error");
  }
  for (std::size_t i = 0; i < per_edge.size(); ++i) {
    if (per_edge[i] < 0.0) {
      const Edge& e = map.edges()[i];
      throw InputError("calibration: missing two_qubit_error for \"" +
                       std::to_string(e.first) + "-" +
                       std::to_string(e.second) + "\"");
    }
  }
  return CalibrationData(map, std::move(readout), std::move(single),
                         std::move(per_edge));
}

Json to_json(const CalibrationData& calib, const CouplingMap& map) {
  Json two = Json::object();
  for (std::size_t i = 0; i < map.edges().size(); ++i) {
    const Edge& e = map.edges()[i];
    two[std::to_string(e.first) + "-" + std::to_string(e.second)] =
        calib.two_qubit_errors()[i];
  }
  return Json{{"readout_error", calib.readout_errors()},
              {"single_qubit_error", calib.single_qubit_errors()},
              {"two_qubit_error", two}};
}

CircuitSet parse_circuits(const Json& doc) {
  const Json& list = field(doc, "circuits", "circuit set");
  if (!list.is_array()) throw InputError("circuit set: circuits must be an array");
  std::vector<CircuitSpec> circuits;
  for (const Json& c : list) {
    auto id = as<std::string>(field(c, "id", "circuit"), "circuit id");
    const unsigned n = as_index(field(c, "num_qubits", "circuit"), "circuit num_qubits");
    const unsigned depth = as_index(field(c, "depth", "circuit"), "circuit depth");
    std::vector<Operation> ops;
    if (auto it = c.find("ops"); it != c.end()) {
      if (!it->is_array()) throw InputError("circuit '" + id + "': ops must be an array");
      for (const Json& op : *it) {
        const auto kind = as<std::string>(field(op, "kind", "op"), "op kind");
        const auto qubits = as_qubits(field(op, "qubits", "op"), "op qubits");
        const std::size_t want = kind == "2q" ? 2 : 1;
        if (kind != "1q" && kind != "2q" && kind != "measure") {
          throw InputError("circuit '" + id + "': unknown op kind \"" + kind + "\"");
        }
        if (qubits.size() != want) {
          throw InputError("circuit '" + id + "': \"" + kind + "\" op needs " +
                           std::to_string(want) + " qubit(s)");
        }
        if (kind == "1q") {
          ops.push_back(Operation::single(qubits[0]));
        } else if (kind == "2q") {
          ops.push_back(Operation::two(qubits[0], qubits[1]));
        } else {
          ops.push_back(Operation::measure(qubits[0]));
        }
      }
    }
    circuits.emplace_back(std::move(id), n, depth, std::move(ops));
  }
  return CircuitSet(std::move(circuits));
}

Json to_json(const CircuitSet& circuits) {
  Json list = Json::array();
  for (const CircuitSpec& c : circuits) {
    Json ops = Json::array();
    for (const Operation& op : c.ops()) {
      switch (op.kind) {
        case OpKind::kSingleQubit:
          ops.push_back({{"kind", "1q"}, {"qubits", {op.qubits[0]}}});
          break;
        case OpKind::kTwoQubit:
          ops.push_back({{"kind", "2q"}, {"qubits", {op.qubits[0], op.qubits[1]}}});
          break;
        case OpKind::kMeasure:
          ops.push_back({{"kind", "measure"}, {"qubits", {op.qubits[0]}}});
          break;
      }
    }
    list.push_back({{"id", c.id()},
                    {"num_qubits", c.num_qubits()},
                    {"depth", c.depth()},
                    {"ops", ops}});
  }
  return Json{{"circuits", list}};
}

LayoutList parse_layout_list(const Json& doc, const CircuitSet& circuits,
                             const CouplingMap& map) {
  const auto id = as<std::string>(field(doc, "circuit_id", "layout document"),
                                  "layout document circuit_id");
  const CircuitSpec& circuit = circuits[circuits.index_of(id)];
  const Json& layouts = field(doc, "layouts", "layout document");
  if (!layouts.is_array()) {
    throw InputError("layout document: layouts must be an array");
  }
  LayoutList list{id, {}, EpsilonConfig{FilterMode::kAbsolute, 1.0}};
  for (const Json& l : layouts) list.layouts.push_back(parse_layout(l, circuit, map));
  std::stable_sort(list.layouts.begin(), list.layouts.end(),
                   [](const Layout& a, const Layout& b) {
                     return a.score() < b.score();
                   });
  return list;
}

std::vector<LayoutList> parse_layout_lists(const Json& doc,
                                           const CircuitSet& circuits,
                                           const CouplingMap& map) {
  std::vector<LayoutList> lists;
  if (doc.is_array()) {
    for (const Json& d : doc) lists.push_back(parse_layout_list(d, circuits, map));
  } else {
    lists.push_back(parse_layout_list(doc, circuits, map));
  }
  return lists;
}

Json to_json(const LayoutList& list) {
  Json layouts = Json::array();
  for (const Layout& l : list.layouts) layouts.push_back(layout_json(l));
  return Json{{"circuit_id", list.circuit_id}, {"layouts", layouts}};
}

JointCounts parse_joint_counts(const Json& doc) {
  const Json& spans_doc = field(doc, "spans", "joint counts");
  const Json& counts_doc = field(doc, "counts", "joint counts");
  if (!spans_doc.is_object() || !counts_doc.is_object()) {
    throw InputError("joint counts: spans and counts must be objects");
  }
  std::map<std::string, std::vector<std::size_t>> spans;
  for (const auto& [id, positions] : spans_doc.items()) {
    auto qs = as_qubits(positions, "joint counts span");
    spans[id] = std::vector<std::size_t>(qs.begin(), qs.end());
  }
  Counts counts;
  for (const auto& [bits, n] : counts_doc.items()) {
    if (!n.is_number_integer() && !n.is_number_unsigned()) {
      throw InputError("joint counts: count for '" + bits + "' must be an integer");
    }
    if (n.get<long long>() < 0) {
      throw InputError("joint counts: count for '" + bits + "' is negative");
    }
    counts[bits] = n.get<std::uint64_t>();
  }
  return JointCounts(std::move(spans), std::move(counts));
}

Json to_json(const Counts& counts) {
  Json doc = Json::object();
  for (const auto& [bits, n] : counts) doc[bits] = n;
  return doc;
}

std::vector<Arrival> parse_arrivals(const Json& doc, const CircuitSet& circuits) {
  const Json& arrivals = field(doc, "arrivals", "arrivals document");
  if (!arrivals.is_object()) {
    throw InputError("arrivals document: arrivals must be an object");
  }
  std::vector<double> time(circuits.size(), 0.0);
  for (const auto& [id, t] : arrivals.items()) {
    const double when = as<double>(t, "arrival time");
    if (!(when >= 0.0)) throw InputError("arrival time for '" + id + "' must be >= 0");
    time[circuits.index_of(id)] = when;
  }
  std::vector<std::size_t> order(circuits.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return time[a] < time[b]; });
  std::vector<Arrival> out;
  for (std::size_t i : order) out.push_back({circuits[i].id(), time[i]});
  return out;
}

Json to_json(const CompatibilityGraph& graph) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
    vertices.push_back({{"circuit", graph.circuit_id(v)},
                        {"layout", graph.vertices()[v].layout}});
  }
  Json edges = Json::array();
  for (const CompatEdge& e : graph.edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"w", e.weight}});
  }
  return Json{{"vertices", vertices},
              {"edges", edges},
              {"max_raw_weight", graph.max_raw_weight()}};
}

Json to_json(const Schedule& schedule, const ScheduleMetrics& metrics) {
  Json batches = Json::array();
  for (const Batch& b : schedule.batches) {
    Json assignments = Json::object();
    for (const Assignment& a : b.assignments) {
      assignments[a.circuit_id] = layout_json(a.layout);
    }
    batches.push_back({{"assignments", assignments},
                       {"objective", b.objective},
                       {"total_qubits", b.total_qubits},
                       {"start_time", b.start_time}});
  }
  return Json{{"batches", batches},
              {"unschedulable", schedule.unschedulable},
              {"metrics",
               {{"num_batches", metrics.num_batches},
                {"gain", metrics.gain},
                {"mean_qubit_utilization", metrics.mean_qubit_utilization}}}};
}

Schedule parse_schedule(const Json& doc, const CircuitSet& circuits,
                        const CouplingMap& map) {
  Schedule schedule;
  const Json& batches = field(doc, "batches", "schedule");
  if (!batches.is_array()) throw InputError("schedule: batches must be an array");
  for (const Json& b : batches) {
    Batch batch;
    const Json& assignments = field(b, "assignments", "batch");
    if (!assignments.is_object()) {
      throw InputError("batch: assignments must be an object");
    }
    std::vector<std::pair<std::size_t, Assignment>> ordered;
    for (const auto& [id, l] : assignments.items()) {
      const std::size_t i = circuits.index_of(id);
      ordered.emplace_back(
          i, Assignment{id, circuits[i].num_qubits(), parse_layout(l, circuits[i], map)});
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [i, a] : ordered) batch.assignments.push_back(std::move(a));
    batch.objective = as<double>(field(b, "objective", "batch"), "batch objective");
    batch.total_qubits = as_index(field(b, "total_qubits", "batch"), "batch total_qubits");
    if (auto it = b.find("start_time"); it != b.end()) {
      batch.start_time = as<double>(*it, "batch start_time");
    }
    schedule.batches.push_back(std::move(batch));
  }
  schedule.unschedulable = as<std::vector<std::string>>(
      field(doc, "unschedulable", "schedule"), "schedule unschedulable");
  return schedule;
}

}  // namespace qbatch::io

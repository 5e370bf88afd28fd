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

#include "qbatch/cli.hpp"

#include <iomanip>
#include <map>
#include <optional>
#include <ostream>

#include "qbatch/error.hpp"
#include "qbatch/io.hpp"
#include "qbatch/results.hpp"

namespace qbatch::cli {

namespace {

struct Inputs {
  CouplingMap map;
  CircuitSet circuits;
  std::vector<LayoutList> lists;
};

Inputs load_inputs(const RunConfig& config, std::ostream& err) {
  validate(config.options.epsilon);
  CouplingMap map = io::parse_coupling_map(io::read_json_file(config.coupling));
  CircuitSet circuits = io::parse_circuits(io::read_json_file(config.circuits));

  std::map<std::string, LayoutList> supplied;
  for (const auto& path : config.layouts) {
    for (LayoutList& l :
         io::parse_layout_lists(io::read_json_file(path), circuits, map)) {
      std::string id = l.circuit_id;
      supplied.insert_or_assign(std::move(id), std::move(l));
    }
  }

  std::optional<CalibrationData> calib;
  std::vector<LayoutList> lists;
  for (const CircuitSpec& c : circuits) {
    if (auto it = supplied.find(c.id()); it != supplied.end()) {
      if (it->second.layouts.empty()) {
        lists.push_back(LayoutList{c.id(), {}, config.options.epsilon});
      } else {
        lists.push_back(filter_layouts(std::move(it->second.layouts),
                                       config.options.epsilon));
      }
      continue;
    }
    if (!calib) {
      if (config.calibration.empty()) {
        throw InputError("--calibration is required to score layouts of '" +
                         c.id() + "'");
      }
      calib = io::parse_calibration(io::read_json_file(config.calibration), map);
    }
    lists.push_back(candidate_layouts(c, map, *calib, config.options.epsilon,
                                      config.options.layout_cap));
  }
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    if (!lists[i].layouts.empty()) continue;
    if (circuits[i].num_qubits() > map.num_qubits()) {
      err << "warning: circuit '" << circuits[i].id() << "' needs "
          << circuits[i].num_qubits() << " qubits but the device has "
          << map.num_qubits() << "\n";
    } else {
      err << "warning: circuit '" << circuits[i].id()
          << "' has no placement on the device\n";
    }
  }
  return Inputs{std::move(map), std::move(circuits), std::move(lists)};
}

void emit(const io::Json& doc, const std::filesystem::path& output,
          std::ostream& out) {
  if (output.empty()) {
    out << io::dump(doc);
  } else {
    io::write_json_file(output, doc);
  }
}

void print_summary(const Schedule& schedule, const ScheduleMetrics& metrics,
                   unsigned device_qubits, std::ostream& os) {
  os << "batch  circuits  qubits  utilization  members\n";
  for (std::size_t k = 0; k < schedule.batches.size(); ++k) {
    const Batch& b = schedule.batches[k];
    os << std::setw(5) << k << "  " << std::setw(8) << b.assignments.size()
       << "  " << std::setw(6) << b.total_qubits << "  " << std::setw(11)
       << std::fixed << std::setprecision(3)
       << static_cast<double>(b.total_qubits) / device_qubits << "  ";
    for (std::size_t a = 0; a < b.assignments.size(); ++a) {
      os << (a ? "," : "") << b.assignments[a].circuit_id;
    }
    os << "\n";
  }
  os << "batches: " << metrics.num_batches
     << "  scheduled: " << metrics.num_scheduled << "  gain: " << std::fixed
     << std::setprecision(2) << metrics.gain
     << "  mean utilization: " << std::setprecision(3)
     << metrics.mean_qubit_utilization << "\n";
  if (!schedule.unschedulable.empty()) {
    os << "unschedulable:";
    for (const auto& id : schedule.unschedulable) os << " " << id;
    os << "\n";
  }
  os.unsetf(std::ios::floatfield);
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    fn();
    return kSuccess;
  } catch (const SolverLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kSolverGuard;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputFailure;
  }
}

}  // namespace

int cmd_schedule(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Inputs in = load_inputs(config, err);
    Schedule schedule;
    if (config.arrivals.empty()) {
      schedule = schedule_all(in.circuits, in.lists, in.map, config.options);
    } else {
      const auto arrivals = io::parse_arrivals(
          io::read_json_file(config.arrivals), in.circuits);
      schedule = schedule_dynamic(in.circuits, in.lists, arrivals, in.map,
                                  config.options);
    }
    const ScheduleMetrics metrics = compute_metrics(schedule, in.map.num_qubits());
    emit(io::to_json(schedule, metrics), config.output, out);
    print_summary(schedule, metrics, in.map.num_qubits(),
                  config.output.empty() ? err : out);
  });
}

int cmd_layouts(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Inputs in = load_inputs(config, err);
    io::Json doc = io::Json::array();
    for (const LayoutList& l : in.lists) doc.push_back(io::to_json(l));
    emit(doc, config.output, out);
  });
}

int cmd_graph_dump(const RunConfig& config, std::ostream& out,
                   std::ostream& err) {
  return guarded(err, [&] {
    Inputs in = load_inputs(config, err);
    std::vector<std::size_t> placeable;
    std::vector<LayoutList> lists;
    for (std::size_t i = 0; i < in.circuits.size(); ++i) {
      if (in.lists[i].layouts.empty()) continue;
      placeable.push_back(i);
      lists.push_back(in.lists[i]);
    }
    const CompatibilityGraph graph =
        build_graph(in.circuits.subset(placeable), lists, in.map,
                    config.options.buffer);
    emit(io::to_json(graph), config.output, out);
  });
}

int cmd_marginalize(const std::filesystem::path& joint,
                    const std::string& circuit_id,
                    const std::filesystem::path& output, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    const JointCounts counts = io::parse_joint_counts(io::read_json_file(joint));
    emit(io::to_json(marginalize(counts, circuit_id)), output, out);
  });
}

}  // namespace qbatch::cli

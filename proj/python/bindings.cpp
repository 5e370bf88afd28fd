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

// Documents cross the boundary as JSON text; the Python package turns them
// into dicts. InputError surfaces as ValueError (it is an invalid_argument).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "qbatch/error.hpp"
#include "qbatch/io.hpp"
#include "qbatch/results.hpp"
#include "qbatch/scheduler.hpp"

namespace py = pybind11;
using namespace qbatch;
using io::Json;

namespace {

ScheduleOptions make_options(unsigned buffer, const std::string& filter,
                             double epsilon, const std::string& solver,
                             std::size_t layout_cap) {
  ScheduleOptions opt;
  opt.buffer = buffer;
  if (filter == "top-fraction") {
    opt.epsilon = {FilterMode::kTopFraction, epsilon};
  } else if (filter == "absolute") {
    opt.epsilon = {FilterMode::kAbsolute, epsilon};
  } else {
    throw InputError("filter must be 'top-fraction' or 'absolute', got '" + filter + "'");
  }
  if (solver == "greedy") {
    opt.solver = SolverKind::kGreedy;
  } else if (solver == "exact") {
    opt.solver = SolverKind::kExact;
  } else {
    throw InputError("solver must be 'greedy' or 'exact', got '" + solver + "'");
  }
  opt.layout_cap = layout_cap;
  validate(opt.epsilon);
  return opt;
}

Json parse(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

// Supplied layouts win; everything else is enumerated and scored.
std::vector<LayoutList> layout_lists(const CircuitSet& circuits, const CouplingMap& map,
                                     const std::optional<std::string>& calibration,
                                     const std::optional<std::string>& layouts,
                                     const ScheduleOptions& opt) {
  std::vector<LayoutList> supplied;
  if (layouts) {
    supplied = io::parse_layout_lists(parse(*layouts, "layouts"), circuits, map);
  }
  std::optional<CalibrationData> calib;
  if (calibration) calib = io::parse_calibration(parse(*calibration, "calibration"), map);

  std::vector<LayoutList> lists;
  for (const CircuitSpec& c : circuits) {
    auto it = std::find_if(supplied.rbegin(), supplied.rend(),
                           [&](const LayoutList& l) { return l.circuit_id == c.id(); });
    if (it != supplied.rend()) {
      lists.push_back(it->layouts.empty()
                          ? LayoutList{c.id(), {}, opt.epsilon}
                          : filter_layouts(it->layouts, opt.epsilon));
    } else if (calib) {
      lists.push_back(candidate_layouts(c, map, *calib, opt.epsilon, opt.layout_cap));
    } else {
      throw InputError("calibration is required to score layouts of '" + c.id() + "'");
    }
  }
  return lists;
}

std::string schedule(const std::string& coupling, const std::string& circuits_text,
                     std::optional<std::string> calibration,
                     std::optional<std::string> layouts,
                     std::optional<std::string> arrivals, unsigned buffer,
                     const std::string& filter, double epsilon,
                     const std::string& solver, std::size_t layout_cap) {
  const ScheduleOptions opt = make_options(buffer, filter, epsilon, solver, layout_cap);
  const CouplingMap map = io::parse_coupling_map(parse(coupling, "coupling map"));
  const CircuitSet circuits = io::parse_circuits(parse(circuits_text, "circuits"));
  const auto lists = layout_lists(circuits, map, calibration, layouts, opt);

  py::gil_scoped_release release;
  Schedule s;
  if (arrivals) {
    const auto stream = io::parse_arrivals(parse(*arrivals, "arrivals"), circuits);
    s = schedule_dynamic(circuits, lists, stream, map, opt);
  } else {
    s = schedule_all(circuits, lists, map, opt);
  }
  return io::dump(io::to_json(s, compute_metrics(s, map.num_qubits())));
}

std::string layouts(const std::string& coupling, const std::string& circuits_text,
                    const std::string& calibration, const std::string& filter,
                    double epsilon, std::size_t layout_cap) {
  const ScheduleOptions opt = make_options(1, filter, epsilon, "greedy", layout_cap);
  const CouplingMap map = io::parse_coupling_map(parse(coupling, "coupling map"));
  const CircuitSet circuits = io::parse_circuits(parse(circuits_text, "circuits"));
  Json doc = Json::array();
  for (const LayoutList& l : layout_lists(circuits, map, calibration, std::nullopt, opt)) {
    doc.push_back(io::to_json(l));
  }
  return io::dump(doc);
}

std::string marginal(const std::string& joint, const std::string& circuit_id) {
  return io::dump(io::to_json(marginalize(io::parse_joint_counts(parse(joint, "joint")),
                                          circuit_id)));
}

// Overlap of two bare qubit sets, placed as interaction-free circuits.
py::tuple overlap(const CouplingMap& map, std::vector<Qubit> a, std::vector<Qubit> b,
                  unsigned buffer) {
  const auto place = [&](std::vector<Qubit> qubits, const char* id) {
    const CircuitSpec spec(id, static_cast<unsigned>(qubits.size()), 1, {});
    return Layout::create(spec, std::move(qubits), map);
  };
  const OverlapCheck r = check_overlap(place(std::move(a), "a"), place(std::move(b), "b"),
                                       map, buffer);
  return py::make_tuple(r.overlapping, r.distance_queries);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of qbatch: co-scheduling of small circuits on one device.";

  py::register_exception<SolverLimitError>(m, "SolverLimitError", PyExc_RuntimeError);

  py::class_<CouplingMap>(m, "CouplingMap")
      .def(py::init([](unsigned n, const std::vector<std::pair<Qubit, Qubit>>& edges) {
             std::vector<Edge> es;
             for (const auto& [a, b] : edges) es.push_back(make_edge(a, b));
             return CouplingMap(n, std::move(es));
           }),
           py::arg("num_qubits"), py::arg("edges"))
      .def_static("from_json",
                  [](const std::string& text) {
                    return io::parse_coupling_map(parse(text, "coupling map"));
                  })
      .def_property_readonly("num_qubits", &CouplingMap::num_qubits)
      .def_property_readonly("edges",
                             [](const CouplingMap& map) {
                               std::vector<std::pair<Qubit, Qubit>> out;
                               for (const Edge& e : map.edges()) {
                                 out.emplace_back(e.first, e.second);
                               }
                               return out;
                             })
      .def("distance",
           [](const CouplingMap& map, Qubit a, Qubit b) -> std::optional<unsigned> {
             const unsigned d = map.distance(a, b);
             if (d == CouplingMap::kUnreachable) return std::nullopt;
             return d;
           })
      .def("neighbours", [](const CouplingMap& map, Qubit q) {
        const auto ns = map.neighbours(q);
        return std::vector<Qubit>(ns.begin(), ns.end());
      });

  m.def("overlap", &overlap, py::arg("map"), py::arg("a"), py::arg("b"), py::arg("buffer"),
        "(overlapping, distance_queries) for two sets of physical qubits.");
  m.def("schedule_json", &schedule, py::arg("coupling"), py::arg("circuits"),
        py::arg("calibration") = py::none(), py::arg("layouts") = py::none(),
        py::arg("arrivals") = py::none(), py::arg("buffer") = 1,
        py::arg("filter") = "top-fraction", py::arg("epsilon") = 0.5, py::arg("solver") = "greedy",
        py::arg("layout_cap") = kDefaultLayoutCap);
  m.def("layouts_json", &layouts, py::arg("coupling"), py::arg("circuits"),
        py::arg("calibration"), py::arg("filter") = "top-fraction", py::arg("epsilon") = 0.5,
        py::arg("layout_cap") = kDefaultLayoutCap);
  m.def("marginalize_json", &marginal, py::arg("joint"), py::arg("circuit_id"));
  m.def("fidelity", &fidelity_vs_ideal, py::arg("counts"), py::arg("ideal"),
        "(sum_x sqrt(p(x) q(x)))^2 between measured counts and an ideal distribution.");
}

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

// Bundled device fixtures and the two hand-built worked examples shared by
// the unit tests and the acceptance binary.

#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "qbatch/io.hpp"
#include "qbatch/layout.hpp"

namespace qbatch::fixture {

inline std::filesystem::path data(const std::string& name) {
  return std::filesystem::path(QBATCH_DATA_DIR) / name;
}

inline CouplingMap falcon() {
  return io::parse_coupling_map(io::read_json_file(data("falcon27.json")));
}

inline CouplingMap eagle() {
  return io::parse_coupling_map(io::read_json_file(data("eagle127.json")));
}

inline CouplingMap path(unsigned n) {
  std::vector<Edge> edges;
  for (Qubit q = 0; q + 1 < n; ++q) edges.push_back({q, q + 1});
  return CouplingMap(n, edges);
}

/// A circuit whose only gates are the given two-qubit interactions, plus a
/// measurement on every qubit.
inline CircuitSpec interaction_circuit(const std::string& id, unsigned n,
                                       const std::vector<Edge>& interactions,
                                       unsigned depth = 1) {
  std::vector<Operation> ops;
  for (const Edge& e : interactions) ops.push_back(Operation::two(e.first, e.second));
  for (Qubit q = 0; q < n; ++q) ops.push_back(Operation::measure(q));
  return CircuitSpec(id, n, depth, std::move(ops));
}

/// Two disjoint placements on the 27-qubit device: a 13-qubit tree on
/// qubits 0..12 and an 8-qubit tree on 19..26. Each has exactly two
/// boundary qubits ({11,12} and {19,21}) and the closest cross pair is three
/// hops apart.
struct SplitPair {
  CircuitSpec big;
  CircuitSpec small;
  Layout big_layout;
  Layout small_layout;
};

inline SplitPair split_pair(const CouplingMap& falcon) {
  CircuitSpec big = interaction_circuit(
      "big", 13,
      {{0, 1}, {1, 2}, {1, 4}, {2, 3}, {3, 5}, {4, 7}, {5, 8}, {6, 7},
       {7, 10}, {8, 9}, {8, 11}, {10, 12}});
  // Virtual v of the small circuit sits on physical 19 + v.
  CircuitSpec small = interaction_circuit(
      "small", 8, {{0, 1}, {0, 3}, {2, 4}, {3, 6}, {4, 5}, {5, 6}, {6, 7}});
  std::vector<Qubit> big_map(13);
  for (Qubit v = 0; v < 13; ++v) big_map[v] = v;
  std::vector<Qubit> small_map(8);
  for (Qubit v = 0; v < 8; ++v) small_map[v] = 19 + v;
  Layout bl = Layout::create(big, big_map, falcon);
  Layout sl = Layout::create(small, small_map, falcon);
  return {std::move(big), std::move(small), std::move(bl), std::move(sl)};
}

/// Three identical 3-qubit chain circuits, two pre-scored placements each,
/// on the 127-qubit device. Placements (0,0) and (1,0) share qubit 39; every
/// other pair from different circuits is at least two hops apart.
struct ThreeChains {
  CircuitSet circuits;
  std::vector<LayoutList> lists;
};

inline ThreeChains three_chains(const CouplingMap& eagle) {
  std::vector<CircuitSpec> specs;
  for (const char* id : {"c0", "c1", "c2"}) {
    specs.push_back(interaction_circuit(id, 3, {{0, 1}, {1, 2}}, 4));
  }
  const std::vector<std::vector<std::pair<std::vector<Qubit>, double>>> table{
      {{{38, 39, 40}, 0.0932}, {{5, 6, 7}, 0.0950}},
      {{{20, 33, 39}, 0.0855}, {{60, 61, 62}, 0.0833}},
      {{{80, 81, 82}, 0.0810}, {{100, 101, 102}, 0.0840}},
  };
  ThreeChains out{CircuitSet(specs), {}};
  for (std::size_t i = 0; i < 3; ++i) {
    LayoutList list{specs[i].id(), {}, {FilterMode::kAbsolute, 1.0}};
    for (const auto& [mapping, score] : table[i]) {
      list.layouts.push_back(Layout::create(specs[i], mapping, eagle, score));
    }
    out.lists.push_back(std::move(list));
  }
  return out;
}

}  // namespace qbatch::fixture

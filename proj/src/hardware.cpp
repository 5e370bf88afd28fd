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

#include "qbatch/hardware.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "qbatch/error.hpp"

namespace qbatch {

namespace {

std::uint64_t fnv1a(std::uint64_t hash, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    hash ^= (value >> (8 * i)) & 0xffU;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::optional<std::size_t> find_edge(const std::vector<Edge>& edges, Qubit a,
                                     Qubit b) {
  const Edge key = make_edge(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges.begin());
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InputError(std::string(what) + " " + std::to_string(p) +
                     " is not a probability in [0,1]");
  }
}

}  // namespace

CouplingMap::CouplingMap(unsigned num_qubits, std::vector<Edge> edges)
    : num_qubits_(num_qubits), adjacency_(num_qubits) {
  if (num_qubits == 0) throw InputError("coupling map has no qubits");
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.first >= num_qubits || e.second >= num_qubits) {
      throw InputError("edge (" + std::to_string(e.first) + "," +
                       std::to_string(e.second) + ") references a qubit >= " +
                       std::to_string(num_qubits));
    }
    if (e.first == e.second) {
      throw InputError("self-loop on qubit " + std::to_string(e.first));
    }
    edges_.push_back(make_edge(e.first, e.second));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InputError("duplicate edge (" + std::to_string(dup->first) + "," +
                     std::to_string(dup->second) + ")");
  }
  for (const Edge& e : edges_) {
    adjacency_[e.first].push_back(e.second);
    adjacency_[e.second].push_back(e.first);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  distance_.assign(static_cast<std::size_t>(num_qubits) * num_qubits,
                   kUnreachable);
  std::deque<Qubit> frontier;
  for (Qubit src = 0; src < num_qubits; ++src) {
    unsigned* row = &distance_[static_cast<std::size_t>(src) * num_qubits];
    row[src] = 0;
    frontier.assign(1, src);
    while (!frontier.empty()) {
      const Qubit q = frontier.front();
      frontier.pop_front();
      for (Qubit n : adjacency_[q]) {
        if (row[n] == kUnreachable) {
          row[n] = row[q] + 1;
          frontier.push_back(n);
        }
      }
    }
  }

  fingerprint_ = fnv1a(0xcbf29ce484222325ULL, num_qubits);
  for (const Edge& e : edges_) {
    fingerprint_ = fnv1a(fingerprint_, (std::uint64_t{e.first} << 32) | e.second);
  }
}

void CouplingMap::check_qubit(Qubit q) const {
  if (q >= num_qubits_) {
    throw InputError("qubit " + std::to_string(q) + " out of range for a " +
                     std::to_string(num_qubits_) + "-qubit map");
  }
}

std::span<const Qubit> CouplingMap::neighbours(Qubit q) const {
  check_qubit(q);
  return adjacency_[q];
}

unsigned CouplingMap::degree(Qubit q) const {
  check_qubit(q);
  return static_cast<unsigned>(adjacency_[q].size());
}

bool CouplingMap::has_edge(Qubit a, Qubit b) const {
  return edge_index(a, b).has_value();
}

std::optional<std::size_t> CouplingMap::edge_index(Qubit a, Qubit b) const {
  return find_edge(edges_, a, b);
}

unsigned CouplingMap::distance(Qubit a, Qubit b) const {
  check_qubit(a);
  check_qubit(b);
  return distance_[static_cast<std::size_t>(a) * num_qubits_ + b];
}

CalibrationData::CalibrationData(const CouplingMap& map,
                                 std::vector<double> readout_error,
                                 std::vector<double> single_qubit_error,
                                 std::vector<double> two_qubit_error)
    : edges_(map.edges()),
      readout_(std::move(readout_error)),
      single_(std::move(single_qubit_error)),
      two_(std::move(two_qubit_error)),
      fingerprint_(map.fingerprint()) {
  const std::size_t m = map.num_qubits();
  if (readout_.size() != m || single_.size() != m) {
    throw InputError("calibration needs exactly " + std::to_string(m) +
                     " per-qubit entries");
  }
  if (two_.size() != edges_.size()) {
    throw InputError("calibration needs exactly " +
                     std::to_string(edges_.size()) + " two-qubit entries");
  }
  for (double p : readout_) check_probability(p, "readout_error");
  for (double p : single_) check_probability(p, "single_qubit_error");
  for (double p : two_) check_probability(p, "two_qubit_error");
}

CalibrationData CalibrationData::noiseless(const CouplingMap& map) {
  return CalibrationData(map, std::vector<double>(map.num_qubits(), 0.0),
                         std::vector<double>(map.num_qubits(), 0.0),
                         std::vector<double>(map.edges().size(), 0.0));
}

double CalibrationData::readout_error(Qubit q) const {
  if (q >= readout_.size()) {
    throw InputError("no readout calibration for qubit " + std::to_string(q));
  }
  return readout_[q];
}

double CalibrationData::single_qubit_error(Qubit q) const {
  if (q >= single_.size()) {
    throw InputError("no single-qubit calibration for qubit " +
                     std::to_string(q));
  }
  return single_[q];
}

double CalibrationData::two_qubit_error(Qubit a, Qubit b) const {
  auto idx = find_edge(edges_, a, b);
  if (!idx) {
    throw InputError("no two-qubit calibration for (" + std::to_string(a) +
                     "," + std::to_string(b) + ")");
  }
  return two_[*idx];
}

}  // namespace qbatch

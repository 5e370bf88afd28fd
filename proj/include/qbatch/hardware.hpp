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

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qbatch {

using Qubit = unsigned;

/// Undirected coupling, always stored with `first < second`.
struct Edge {
  Qubit first;
  Qubit second;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalises an unordered pair so the smaller index comes first.
inline Edge make_edge(Qubit a, Qubit b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/**
 * Device connectivity with a precomputed all-pairs hop-count table.
 *
 * Distances are unweighted shortest-path lengths, filled by one
 * breadth-first search per qubit at construction. Qubits in different
 * connected components are `kUnreachable` apart. Instances are immutable.
 */
class CouplingMap {
 public:
  /// Strictly greater than any real hop count on any map.
  static constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max();

  /// Throws InputError on zero qubits, out-of-range endpoints, self-loops or
  /// duplicate edges.
  CouplingMap(unsigned num_qubits, std::vector<Edge> edges);

  unsigned num_qubits() const { return num_qubits_; }
  /// Sorted ascending.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted ascending.
  std::span<const Qubit> neighbours(Qubit q) const;
  unsigned degree(Qubit q) const;
  bool has_edge(Qubit a, Qubit b) const;
  /// Position of {a,b} in edges(), if it is a coupling.
  std::optional<std::size_t> edge_index(Qubit a, Qubit b) const;

  /// Hop count between two qubits; 0 iff a == b.
  unsigned distance(Qubit a, Qubit b) const;

  /// Hash of the qubit count and edge set, used to detect layouts built
  /// against a different device.
  std::uint64_t fingerprint() const { return fingerprint_; }

 private:
  void check_qubit(Qubit q) const;

  unsigned num_qubits_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Qubit>> adjacency_;
  std::vector<unsigned> distance_;  // row-major num_qubits_ x num_qubits_
  std::uint64_t fingerprint_ = 0;
};

/// Per-qubit and per-coupling error rates for one CouplingMap.
class CalibrationData {
 public:
  /// `two_qubit_error` is indexed like `map.edges()`. Throws InputError when
  /// sizes disagree with the map or a probability lies outside [0,1].
  CalibrationData(const CouplingMap& map, std::vector<double> readout_error,
                  std::vector<double> single_qubit_error,
                  std::vector<double> two_qubit_error);

  /// All rates zero.
  static CalibrationData noiseless(const CouplingMap& map);

  double readout_error(Qubit q) const;
  double single_qubit_error(Qubit q) const;
  /// Throws InputError if {a,b} is not a coupling of the map.
  double two_qubit_error(Qubit a, Qubit b) const;

  const std::vector<double>& readout_errors() const { return readout_; }
  const std::vector<double>& single_qubit_errors() const { return single_; }
  const std::vector<double>& two_qubit_errors() const { return two_; }
  std::uint64_t map_fingerprint() const { return fingerprint_; }

 private:
  std::vector<Edge> edges_;
  std::vector<double> readout_;
  std::vector<double> single_;
  std::vector<double> two_;
  std::uint64_t fingerprint_;
};

}  // namespace qbatch

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

/*
 * Candidate placements of a circuit on a device.
 *
 * A circuit's candidate layouts are every injective placement of its
 * interaction graph onto couplings of the device (subgraph monomorphisms),
 * so every candidate needs exactly the same SWAP count as the routed input.
 * Each candidate is scored from calibration data, the list is trimmed to
 * the ones close to the best score, and pairs of layouts are tested for
 * b-overlap: sharing a qubit, or having two qubits within `b` hops.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qbatch/circuit.hpp"
#include "qbatch/hardware.hpp"

namespace qbatch {

inline constexpr std::size_t kDefaultLayoutCap = 1000;

/**
 * Assignment of a circuit's virtual qubits to distinct physical qubits.
 *
 * `mapping()[v]` is the physical qubit for virtual qubit `v`. The sorted
 * physical qubit set and the boundary (layout qubits with a coupling to a
 * qubit outside the layout) are computed once at construction.
 */
class Layout {
 public:
  /// Validates the mapping against the circuit and device: one distinct,
  /// in-range physical qubit per virtual qubit, every interacting pair on a
  /// coupling, and 0 <= score <= 1. Throws InputError otherwise.
  static Layout create(const CircuitSpec& circuit, std::vector<Qubit> mapping,
                       const CouplingMap& map, double score = 0.0);

  const std::string& circuit_id() const { return circuit_id_; }
  const std::vector<Qubit>& mapping() const { return mapping_; }
  std::size_t size() const { return mapping_.size(); }
  double score() const { return score_; }
  /// Throws InputError outside [0,1].
  void set_score(double score);

  /// Physical qubits, sorted.
  const std::vector<Qubit>& qubits() const { return qubits_; }
  /// Boundary qubits, sorted.
  const std::vector<Qubit>& boundary() const { return boundary_; }
  bool contains(Qubit q) const;
  std::uint64_t map_fingerprint() const { return map_fingerprint_; }

 private:
  Layout() = default;

  std::string circuit_id_;
  std::vector<Qubit> mapping_;
  std::vector<Qubit> qubits_;
  std::vector<Qubit> boundary_;
  double score_ = 0.0;
  std::uint64_t map_fingerprint_ = 0;
};

/// All placements of `circuit` whose interacting pairs land on couplings,
/// in deterministic order (lowest physical index first), at most `cap` of
/// them. Qubits without two-qubit ops take the lowest free physical qubits;
/// a circuit with no interactions at all is enumerated by the position of
/// virtual qubit 0. Empty when nothing embeds or the circuit is larger than
/// the device. Returned layouts have score 0.
std::vector<Layout> enumerate_layouts(const CircuitSpec& circuit,
                                      const CouplingMap& map,
                                      std::size_t cap = kDefaultLayoutCap);

/// 1 - prod(1 - e_op) over the circuit's ops, using the error of the
/// physical qubit (1q, measure) or coupling (2q) each op lands on. Lower is
/// better.
double score_layout(const Layout& layout, const CircuitSpec& circuit,
                    const CalibrationData& calib);

enum class FilterMode { kAbsolute, kTopFraction };

/// kAbsolute keeps layouts within `value` of the best score; kTopFraction
/// keeps the best ceil(value * n).
struct EpsilonConfig {
  FilterMode mode = FilterMode::kTopFraction;
  double value = 0.5;
};

/// Throws InputError for a negative absolute margin or a fraction outside
/// (0,1].
void validate(const EpsilonConfig& epsilon);

struct LayoutList {
  std::string circuit_id;
  std::vector<Layout> layouts;  // ascending score
  EpsilonConfig epsilon;
};

/// Sorts by score (ties by mapping) and keeps the layouts allowed by
/// `epsilon`. Throws InputError on an empty input or invalid epsilon.
LayoutList filter_layouts(std::vector<Layout> scored,
                          const EpsilonConfig& epsilon);

/// enumerate_layouts + score_layout + filter_layouts. The list is empty
/// when the circuit has no placement.
LayoutList candidate_layouts(const CircuitSpec& circuit, const CouplingMap& map,
                             const CalibrationData& calib,
                             const EpsilonConfig& epsilon,
                             std::size_t cap = kDefaultLayoutCap);

/// Qubits of `layout_qubits` with at least one neighbour outside the set,
/// sorted. Order and duplicates in the input do not matter.
std::vector<Qubit> find_boundary(std::span<const Qubit> layout_qubits,
                                 const CouplingMap& map);

struct OverlapCheck {
  bool overlapping = false;
  /// Number of CouplingMap::distance lookups performed.
  std::size_t distance_queries = 0;
};

/// b-overlap test that also reports how many distances it looked up. Shared
/// qubits are detected first with no lookups; otherwise only boundary pairs
/// are measured, stopping at the first pair within `buffer` hops.
/// Throws InputError if either layout was built for a different map.
OverlapCheck check_overlap(const Layout& l1, const Layout& l2,
                           const CouplingMap& map, unsigned buffer);

/// True iff the layouts share a qubit or some pair of their qubits is at
/// most `buffer` hops apart.
bool b_overlap(const Layout& l1, const Layout& l2, const CouplingMap& map,
               unsigned buffer);

}  // namespace qbatch

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
 * Batch selection and the batching loop.
 *
 * One batch is chosen at a time, either greedily from the compatibility
 * graph or exactly by branch-and-bound over the 0/1 program
 *
 *   minimise  sum_ij q_ij * A_i * x_ij  -  sum_ij x_ij
 *   s.t.      sum_j x_ij <= 1                  (one layout per circuit)
 *             x_ij + x_kl <= 1                 (b-overlapping, i != k)
 *             sum_ij n_i * x_ij <= m           (device capacity)
 *
 * The chosen circuits are removed and the loop repeats over what is left.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qbatch/circuit.hpp"
#include "qbatch/compat_graph.hpp"
#include "qbatch/hardware.hpp"
#include "qbatch/layout.hpp"

namespace qbatch {

struct CliqueResult {
  std::vector<std::size_t> vertices;  // graph vertex indices, ascending
  double weight = 0.0;                // sum of accepted edge weights
};

/**
 * Greedy maximal clique, one candidate per connected component.
 *
 * Within a component, edges are scanned heaviest first (ties broken by the
 * endpoints' (circuit id, layout index), lexicographically). The first edge
 * seeds the clique; a later edge is accepted when each endpoint not yet in
 * the clique belongs to a circuit not yet represented and is adjacent to
 * every clique vertex. The component clique with the largest accepted-edge
 * weight wins; ties go to the larger clique, then the earlier component.
 * Empty when the graph has no edges.
 */
CliqueResult greedy_clique(const CompatibilityGraph& graph);

/// As above, additionally rejecting edges that would push the summed qubit
/// count of the clique's circuits past `capacity`. `circuit_qubits` is
/// indexed like the graph's circuits.
CliqueResult greedy_clique(const CompatibilityGraph& graph,
                           std::span<const unsigned> circuit_qubits,
                           unsigned capacity);

/// The 0/1 program for one batch, built from the circuits still waiting.
class IlpInstance {
 public:
  IlpInstance(const CircuitSet& circuits, std::span<const LayoutList> lists,
              const CouplingMap& map, unsigned buffer);

  std::size_t num_circuits() const { return scores_.size(); }
  std::size_t num_layouts(std::size_t circuit) const {
    return scores_[circuit].size();
  }
  double score(std::size_t circuit, std::size_t layout) const {
    return scores_[circuit][layout];
  }
  double area(std::size_t circuit) const { return areas_[circuit]; }
  unsigned qubits(std::size_t circuit) const { return qubits_[circuit]; }
  const std::string& circuit_id(std::size_t circuit) const {
    return ids_[circuit];
  }
  /// Whether x_ij + x_kl <= 1 is a constraint (b-overlapping layouts of
  /// different circuits).
  bool conflicts(std::size_t i, std::size_t j, std::size_t k,
                 std::size_t l) const;

  /// Number of points in the search space, prod_i (|L_i| + 1).
  double search_space() const;

 private:
  std::size_t var(std::size_t i, std::size_t j) const {
    return offsets_[i] + j;
  }

  std::vector<std::string> ids_;
  std::vector<unsigned> qubits_;
  std::vector<double> areas_;
  std::vector<std::vector<double>> scores_;
  std::vector<std::size_t> offsets_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> conflict_;  // bit matrix over variables
};

/// Chosen layout per circuit (nullopt = not in this batch).
using Selection = std::vector<std::optional<std::size_t>>;

struct IlpSolution {
  Selection selection;
  double objective = 0.0;
};

/// Largest search space the exact solver accepts.
inline constexpr double kExactSearchLimit = 1e7;

/// Objective of `selection` on `instance`.
double ilp_objective(const IlpInstance& instance, const Selection& selection);

/// Globally optimal selection by branch-and-bound over circuits in order,
/// trying each layout before leaving the circuit out. Throws
/// SolverLimitError when search_space() exceeds kExactSearchLimit. Ties keep
/// the first optimum found.
IlpSolution solve_ilp_exact(const IlpInstance& instance, const CouplingMap& map);

enum class SolverKind { kGreedy, kExact };

struct ScheduleOptions {
  unsigned buffer = 1;
  EpsilonConfig epsilon;
  SolverKind solver = SolverKind::kGreedy;
  std::size_t layout_cap = kDefaultLayoutCap;
};

struct Assignment {
  std::string circuit_id;
  unsigned num_qubits = 0;
  Layout layout;
};

struct Batch {
  std::vector<Assignment> assignments;  // circuit input order
  double objective = 0.0;
  unsigned total_qubits = 0;
  double start_time = 0.0;
};

struct Schedule {
  std::vector<Batch> batches;
  std::vector<std::string> unschedulable;  // input order
};

/// Candidate layouts for every circuit, parallel to `circuits`. Circuits
/// that do not fit get an empty list.
std::vector<LayoutList> prepare_layouts(const CircuitSet& circuits,
                                        const CouplingMap& map,
                                        const CalibrationData& calib,
                                        const ScheduleOptions& options);

/// Batches every circuit. Circuits without candidates are reported as
/// unschedulable. When no pair of circuits can share the device, the
/// waiting circuit with the lowest-scoring layout runs alone.
Schedule schedule_all(const CircuitSet& circuits, const CouplingMap& map,
                      const CalibrationData& calib,
                      const ScheduleOptions& options);

/// schedule_all over pre-computed candidate lists (parallel to `circuits`).
Schedule schedule_all(const CircuitSet& circuits,
                      std::span<const LayoutList> lists, const CouplingMap& map,
                      const ScheduleOptions& options);

struct Arrival {
  std::string circuit_id;
  double time = 0.0;
};

/**
 * Online variant: a batch is chosen over every circuit that has arrived and
 * is still waiting, the device is busy for `batch_duration`, and circuits
 * arriving meanwhile join the next selection. `arrivals` must be ordered by
 * time and name every circuit exactly once. With all arrivals at one
 * instant this matches schedule_all.
 */
Schedule schedule_dynamic(const CircuitSet& circuits,
                          std::span<const Arrival> arrivals,
                          const CouplingMap& map, const CalibrationData& calib,
                          const ScheduleOptions& options,
                          double batch_duration = 1.0);

Schedule schedule_dynamic(const CircuitSet& circuits,
                          std::span<const LayoutList> lists,
                          std::span<const Arrival> arrivals,
                          const CouplingMap& map,
                          const ScheduleOptions& options,
                          double batch_duration = 1.0);

}  // namespace qbatch

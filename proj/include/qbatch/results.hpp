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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qbatch/scheduler.hpp"

namespace qbatch {

using Counts = std::map<std::string, std::uint64_t>;
using Distribution = std::map<std::string, double>;

/**
 * Outcome counts of one batch run as a single wide circuit.
 *
 * Character `k` of every key is joint bit `k`. `spans[id][v]` is the joint
 * position holding virtual qubit `v` of circuit `id`. Spans are disjoint
 * and together cover every position.
 */
class JointCounts {
 public:
  /// Throws InputError on empty counts, keys of differing length or with
  /// characters other than '0'/'1', zero total shots, or spans that are not
  /// a partition of the bit positions.
  JointCounts(std::map<std::string, std::vector<std::size_t>> spans,
              Counts counts);

  std::size_t num_bits() const { return num_bits_; }
  std::uint64_t total_shots() const { return total_; }
  const Counts& counts() const { return counts_; }
  const std::map<std::string, std::vector<std::size_t>>& spans() const {
    return spans_;
  }

 private:
  std::map<std::string, std::vector<std::size_t>> spans_;
  Counts counts_;
  std::size_t num_bits_ = 0;
  std::uint64_t total_ = 0;
};

/// Counts of one circuit's bits, summed over every other position.
Counts marginalize(const JointCounts& joint, std::string_view circuit_id);

/// Joint bit positions for a batch: circuits in assignment order, and within
/// a circuit positions follow ascending physical qubit. The span entry for a
/// virtual qubit is the position of the physical qubit it was placed on.
std::map<std::string, std::vector<std::size_t>> batch_spans(const Batch& batch);

/// (sum_x sqrt(p_x * q_x))^2 between the normalised marginal and `ideal`.
/// Throws InputError when keys differ in width or `ideal` does not sum to 1.
double fidelity_vs_ideal(const Counts& marginal, const Distribution& ideal);

struct ScheduleMetrics {
  std::size_t num_batches = 0;
  std::size_t num_scheduled = 0;
  /// Scheduled circuits per hardware access, N / k (0 with no batches).
  double gain = 0.0;
  /// Mean over batches of total_qubits / device qubits.
  double mean_qubit_utilization = 0.0;
};

ScheduleMetrics compute_metrics(const Schedule& schedule,
                                unsigned device_qubits);

}  // namespace qbatch

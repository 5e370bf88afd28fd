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

#include "qbatch/results.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qbatch/error.hpp"

namespace qbatch {

JointCounts::JointCounts(std::map<std::string, std::vector<std::size_t>> spans,
                         Counts counts)
    : spans_(std::move(spans)), counts_(std::move(counts)) {
  if (counts_.empty()) throw InputError("joint counts are empty");
  num_bits_ = counts_.begin()->first.size();
  for (const auto& [key, n] : counts_) {
    if (key.size() != num_bits_) {
      throw InputError("bitstring '" + key + "' has length " +
                       std::to_string(key.size()) + ", expected " +
                       std::to_string(num_bits_));
    }
    if (key.find_first_not_of("01") != std::string::npos) {
      throw InputError("bitstring '" + key + "' is not binary");
    }
    total_ += n;
  }
  if (total_ == 0) throw InputError("joint counts hold no shots");

  std::vector<bool> covered(num_bits_, false);
  for (const auto& [id, positions] : spans_) {
    if (positions.empty()) throw InputError("span of '" + id + "' is empty");
    for (std::size_t p : positions) {
      if (p >= num_bits_) {
        throw InputError("span of '" + id + "' references bit " +
                         std::to_string(p) + " of a " +
                         std::to_string(num_bits_) + "-bit outcome");
      }
      if (covered[p]) {
        throw InputError("bit " + std::to_string(p) +
                         " belongs to more than one circuit");
      }
      covered[p] = true;
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw InputError("spans do not cover every outcome bit");
  }
}

Counts marginalize(const JointCounts& joint, std::string_view circuit_id) {
  auto it = joint.spans().find(std::string(circuit_id));
  if (it == joint.spans().end()) {
    throw InputError("no span for circuit '" + std::string(circuit_id) + "'");
  }
  const auto& positions = it->second;
  Counts marginal;
  std::string key(positions.size(), '0');
  for (const auto& [bits, n] : joint.counts()) {
    for (std::size_t v = 0; v < positions.size(); ++v) key[v] = bits[positions[v]];
    marginal[key] += n;
  }
  return marginal;
}

std::map<std::string, std::vector<std::size_t>> batch_spans(const Batch& batch) {
  std::map<std::string, std::vector<std::size_t>> spans;
  std::size_t offset = 0;
  for (const Assignment& a : batch.assignments) {
    const auto& mapping = a.layout.mapping();
    const auto& sorted = a.layout.qubits();
    std::vector<std::size_t> positions(mapping.size());
    for (std::size_t v = 0; v < mapping.size(); ++v) {
      const auto rank = std::lower_bound(sorted.begin(), sorted.end(), mapping[v]) -
                        sorted.begin();
      positions[v] = offset + static_cast<std::size_t>(rank);
    }
    offset += mapping.size();
    spans.emplace(a.circuit_id, std::move(positions));
  }
  return spans;
}

double fidelity_vs_ideal(const Counts& marginal, const Distribution& ideal) {
  if (marginal.empty()) throw InputError("marginal counts are empty");
  if (ideal.empty()) throw InputError("ideal distribution is empty");
  const std::size_t width = marginal.begin()->first.size();
  double total = 0.0;
  for (const auto& [key, n] : marginal) {
    if (key.size() != width) throw InputError("marginal keys differ in width");
    total += static_cast<double>(n);
  }
  if (total <= 0.0) throw InputError("marginal counts hold no shots");
  double ideal_mass = 0.0;
  for (const auto& [key, p] : ideal) {
    if (key.size() != width) {
      throw InputError("ideal key '" + key + "' has width " +
                       std::to_string(key.size()) + ", expected " +
                       std::to_string(width));
    }
    if (p < 0.0) throw InputError("ideal probabilities must be >= 0");
    ideal_mass += p;
  }
  if (std::abs(ideal_mass - 1.0) > 1e-9) {
    throw InputError("ideal distribution must sum to 1");
  }
  double overlap = 0.0;
  for (const auto& [key, p] : ideal) {
    auto it = marginal.find(key);
    if (it == marginal.end()) continue;
    overlap += std::sqrt(p * static_cast<double>(it->second) / total);
  }
  return std::clamp(overlap * overlap, 0.0, 1.0);
}

ScheduleMetrics compute_metrics(const Schedule& schedule,
                                unsigned device_qubits) {
  ScheduleMetrics m;
  m.num_batches = schedule.batches.size();
  double utilization = 0.0;
  for (const Batch& b : schedule.batches) {
    m.num_scheduled += b.assignments.size();
    utilization += static_cast<double>(b.total_qubits) / device_qubits;
  }
  if (m.num_batches > 0) {
    m.gain = static_cast<double>(m.num_scheduled) / m.num_batches;
    m.mean_qubit_utilization = utilization / m.num_batches;
  }
  return m;
}

}  // namespace qbatch

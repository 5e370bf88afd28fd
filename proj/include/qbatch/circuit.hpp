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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qbatch/hardware.hpp"

namespace qbatch {

enum class OpKind { kSingleQubit, kTwoQubit, kMeasure };

/// One gate or measurement over virtual qubits. Only two-qubit ops use
/// `qubits[1]`.
struct Operation {
  OpKind kind;
  std::array<Qubit, 2> qubits{};

  static Operation single(Qubit q) { return {OpKind::kSingleQubit, {q, 0}}; }
  static Operation two(Qubit a, Qubit b) { return {OpKind::kTwoQubit, {a, b}}; }
  static Operation measure(Qubit q) { return {OpKind::kMeasure, {q, 0}}; }

  std::size_t arity() const { return kind == OpKind::kTwoQubit ? 2 : 1; }
};

/// A circuit that has already been routed: its two-qubit interactions must
/// land on couplings as-is.
class CircuitSpec {
 public:
  /// Throws InputError on an empty id, zero qubits or depth, an op touching
  /// a qubit >= num_qubits, or a two-qubit op acting twice on one qubit.
  CircuitSpec(std::string id, unsigned num_qubits, unsigned depth,
              std::vector<Operation> ops);

  const std::string& id() const { return id_; }
  unsigned num_qubits() const { return num_qubits_; }
  unsigned depth() const { return depth_; }
  const std::vector<Operation>& ops() const { return ops_; }
  /// Distinct virtual pairs touched by two-qubit ops, sorted.
  const std::vector<Edge>& interaction_graph() const { return interactions_; }
  /// Qubits times depth.
  std::uint64_t area() const {
    return std::uint64_t{num_qubits_} * depth_;
  }

 private:
  std::string id_;
  unsigned num_qubits_;
  unsigned depth_;
  std::vector<Operation> ops_;
  std::vector<Edge> interactions_;
};

/// The instance being scheduled, with per-circuit areas normalised by the
/// largest area in the set.
class CircuitSet {
 public:
  CircuitSet() = default;
  /// Throws InputError on duplicate ids.
  explicit CircuitSet(std::vector<CircuitSpec> circuits);

  std::size_t size() const { return circuits_.size(); }
  bool empty() const { return circuits_.empty(); }
  const CircuitSpec& operator[](std::size_t i) const { return circuits_[i]; }
  const std::vector<CircuitSpec>& circuits() const { return circuits_; }
  auto begin() const { return circuits_.begin(); }
  auto end() const { return circuits_.end(); }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws InputError for an unknown id.
  std::size_t index_of(std::string_view id) const;

  /// A_i in (0,1]; exactly 1 for the largest circuit(s).
  double normalized_area(std::size_t i) const { return areas_.at(i); }
  const std::vector<double>& normalized_areas() const { return areas_; }

  /// The circuits at `indices`, in that order, with areas renormalised over
  /// the subset.
  CircuitSet subset(std::span<const std::size_t> indices) const;

 private:
  std::vector<CircuitSpec> circuits_;
  std::vector<double> areas_;
};

/// Normalised area of the circuit named `id`; throws InputError if absent.
double normalized_area(const CircuitSet& set, std::string_view id);

}  // namespace qbatch

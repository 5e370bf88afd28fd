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

#include "qbatch/circuit.hpp"

#include <algorithm>
#include <set>

#include "qbatch/error.hpp"

namespace qbatch {

CircuitSpec::CircuitSpec(std::string id, unsigned num_qubits, unsigned depth,
                         std::vector<Operation> ops)
    : id_(std::move(id)),
      num_qubits_(num_qubits),
      depth_(depth),
      ops_(std::move(ops)) {
  if (id_.empty()) throw InputError("circuit id must not be empty");
  if (num_qubits_ == 0) throw InputError("circuit '" + id_ + "' has no qubits");
  if (depth_ == 0) throw InputError("circuit '" + id_ + "' has depth 0");
  for (const Operation& op : ops_) {
    for (std::size_t k = 0; k < op.arity(); ++k) {
      if (op.qubits[k] >= num_qubits_) {
        throw InputError("circuit '" + id_ + "' op touches qubit " +
                         std::to_string(op.qubits[k]) + " >= " +
                         std::to_string(num_qubits_));
      }
    }
    if (op.kind == OpKind::kTwoQubit) {
      if (op.qubits[0] == op.qubits[1]) {
        throw InputError("circuit '" + id_ +
                         "' has a two-qubit op on a single qubit");
      }
      interactions_.push_back(make_edge(op.qubits[0], op.qubits[1]));
    }
  }
  std::sort(interactions_.begin(), interactions_.end());
  interactions_.erase(std::unique(interactions_.begin(), interactions_.end()),
                      interactions_.end());
}

CircuitSet::CircuitSet(std::vector<CircuitSpec> circuits)
    : circuits_(std::move(circuits)) {
  std::set<std::string_view> seen;
  std::uint64_t max_area = 0;
  for (const CircuitSpec& c : circuits_) {
    if (!seen.insert(c.id()).second) {
      throw InputError("duplicate circuit id '" + c.id() + "'");
    }
    max_area = std::max(max_area, c.area());
  }
  areas_.reserve(circuits_.size());
  for (const CircuitSpec& c : circuits_) {
    areas_.push_back(static_cast<double>(c.area()) /
                     static_cast<double>(max_area));
  }
}

std::optional<std::size_t> CircuitSet::find(std::string_view id) const {
  for (std::size_t i = 0; i < circuits_.size(); ++i) {
    if (circuits_[i].id() == id) return i;
  }
  return std::nullopt;
}

std::size_t CircuitSet::index_of(std::string_view id) const {
  auto i = find(id);
  if (!i) throw InputError("unknown circuit id '" + std::string(id) + "'");
  return *i;
}

CircuitSet CircuitSet::subset(std::span<const std::size_t> indices) const {
  std::vector<CircuitSpec> picked;
  picked.reserve(indices.size());
  for (std::size_t i : indices) picked.push_back(circuits_.at(i));
  return CircuitSet(std::move(picked));
}

double normalized_area(const CircuitSet& set, std::string_view id) {
  return set.normalized_area(set.index_of(id));
}

}  // namespace qbatch

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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qbatch/circuit.hpp"
#include "qbatch/hardware.hpp"
#include "qbatch/layout.hpp"

namespace qbatch {

/// A circuit paired with one of its candidate layouts. `circuit` indexes the
/// CircuitSet, `layout` indexes that circuit's LayoutList.
struct CompatVertex {
  std::size_t circuit;
  std::size_t layout;

  friend auto operator<=>(const CompatVertex&, const CompatVertex&) = default;
};

struct CompatEdge {
  std::uint32_t u;  // u < v
  std::uint32_t v;
  double raw_weight;  // q_u * A_u + q_v * A_v
  double weight;      // max raw weight - raw_weight
};

/**
 * Graph over (circuit, layout) pairs. Two vertices are adjacent when they
 * belong to different circuits and their layouts are not b-overlapping, so
 * every clique is a batch that can run in one hardware access. Edge weights
 * are inverted noise: the pair with the worst combined area-weighted score
 * has weight 0, better pairs weigh more.
 */
class CompatibilityGraph {
 public:
  CompatibilityGraph() = default;
  CompatibilityGraph(std::vector<CompatVertex> vertices,
                     std::vector<std::string> circuit_ids,
                     std::vector<CompatEdge> edges);

  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<CompatVertex>& vertices() const { return vertices_; }
  const std::vector<CompatEdge>& edges() const { return edges_; }
  /// Largest raw weight; 0 when there are no edges.
  double max_raw_weight() const { return max_raw_weight_; }
  const std::string& circuit_id(std::size_t vertex) const {
    return circuit_ids_[vertices_[vertex].circuit];
  }
  /// Ids by CircuitSet index.
  const std::vector<std::string>& circuit_ids() const { return circuit_ids_; }

  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t u) const;
  /// Index of the vertex for (circuit, layout), or num_vertices() if absent.
  std::size_t find(CompatVertex key) const;

 private:
  std::vector<CompatVertex> vertices_;
  std::vector<std::string> circuit_ids_;
  std::vector<CompatEdge> edges_;
  double max_raw_weight_ = 0.0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> adjacency_;  // bit matrix
};

/// One vertex per (circuit, layout) and an edge for every pair of distinct
/// circuits whose layouts are not b-overlapping. `lists[i]` holds the
/// candidates of `circuits[i]`; every list must be non-empty.
CompatibilityGraph build_graph(const CircuitSet& circuits,
                               std::span<const LayoutList> lists,
                               const CouplingMap& map, unsigned buffer);

}  // namespace qbatch

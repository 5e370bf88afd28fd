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

#include "qbatch/compat_graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "qbatch/error.hpp"

namespace qbatch {

CompatibilityGraph::CompatibilityGraph(std::vector<CompatVertex> vertices,
                                       std::vector<std::string> circuit_ids,
                                       std::vector<CompatEdge> edges)
    : vertices_(std::move(vertices)),
      circuit_ids_(std::move(circuit_ids)),
      edges_(std::move(edges)) {
  if (vertices_.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw InputError("compatibility graph too large");
  }
  if (!std::is_sorted(vertices_.begin(), vertices_.end()) ||
      std::adjacent_find(vertices_.begin(), vertices_.end()) !=
          vertices_.end()) {
    throw InputError("compatibility vertices must be unique and sorted");
  }
  const std::size_t n = vertices_.size();
  words_per_row_ = (n + 63) / 64;
  adjacency_.assign(n * words_per_row_, 0);
  for (const CompatEdge& e : edges_) {
    if (e.u >= n || e.v >= n || e.u == e.v) {
      throw InputError("compatibility edge references a bad vertex");
    }
    if (vertices_[e.u].circuit == vertices_[e.v].circuit) {
      throw InputError("compatibility edge joins two layouts of one circuit");
    }
    adjacency_[e.u * words_per_row_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
    adjacency_[e.v * words_per_row_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
    max_raw_weight_ = std::max(max_raw_weight_, e.raw_weight);
  }
}

bool CompatibilityGraph::adjacent(std::size_t u, std::size_t v) const {
  return (adjacency_[u * words_per_row_ + v / 64] >> (v % 64)) & 1U;
}

std::size_t CompatibilityGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_per_row_; ++w) {
    d += static_cast<std::size_t>(std::popcount(adjacency_[u * words_per_row_ + w]));
  }
  return d;
}

std::size_t CompatibilityGraph::find(CompatVertex key) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), key);
  if (it == vertices_.end() || *it != key) return vertices_.size();
  return static_cast<std::size_t>(it - vertices_.begin());
}

CompatibilityGraph build_graph(const CircuitSet& circuits,
                               std::span<const LayoutList> lists,
                               const CouplingMap& map, unsigned buffer) {
  if (lists.size() != circuits.size()) {
    throw InputError("need one layout list per circuit");
  }
  std::vector<CompatVertex> vertices;
  std::vector<double> weighted_score;
  std::vector<const Layout*> layout_of;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    ids.push_back(circuits[i].id());
    if (lists[i].layouts.empty()) {
      throw InputError("circuit '" + circuits[i].id() + "' has no layouts");
    }
    if (lists[i].circuit_id != circuits[i].id()) {
      throw InputError("layout list for '" + lists[i].circuit_id +
                       "' is out of order");
    }
    for (std::size_t j = 0; j < lists[i].layouts.size(); ++j) {
      vertices.push_back({i, j});
      layout_of.push_back(&lists[i].layouts[j]);
      weighted_score.push_back(lists[i].layouts[j].score() *
                               circuits.normalized_area(i));
    }
  }

  std::vector<CompatEdge> edges;
  double max_raw = 0.0;
  for (std::size_t u = 0; u < vertices.size(); ++u) {
    for (std::size_t v = u + 1; v < vertices.size(); ++v) {
      if (vertices[u].circuit == vertices[v].circuit) continue;
      if (b_overlap(*layout_of[u], *layout_of[v], map, buffer)) continue;
      const double raw = weighted_score[u] + weighted_score[v];
      max_raw = std::max(max_raw, raw);
      edges.push_back({static_cast<std::uint32_t>(u),
                       static_cast<std::uint32_t>(v), raw, 0.0});
    }
  }
  for (CompatEdge& e : edges) e.weight = max_raw - e.raw_weight;
  return CompatibilityGraph(std::move(vertices), std::move(ids),
                            std::move(edges));
}

}  // namespace qbatch

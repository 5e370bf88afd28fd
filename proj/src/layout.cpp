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

#include "qbatch/layout.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>

#include "qbatch/error.hpp"

namespace qbatch {

namespace {

// Slack for score comparisons in the absolute filter and the fraction ceil.
constexpr double kScoreSlack = 1e-12;

bool sorted_sets_intersect(const std::vector<Qubit>& a,
                           const std::vector<Qubit>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

/// Backtracking subgraph-monomorphism search of a circuit's interaction
/// graph into the coupling graph. Pattern vertices are visited in BFS order
/// per component so every non-root vertex has an already-placed neighbour
/// whose image restricts its candidates.
class Embedder {
 public:
  Embedder(const CircuitSpec& circuit, const CouplingMap& map, std::size_t cap)
      : circuit_(circuit), map_(map), cap_(cap) {
    const unsigned n = circuit.num_qubits();
    std::vector<std::vector<Qubit>> pattern_adj(n);
    for (const Edge& e : circuit.interaction_graph()) {
      pattern_adj[e.first].push_back(e.second);
      pattern_adj[e.second].push_back(e.first);
    }
    std::vector<bool> active(n, false);
    for (Qubit v = 0; v < n; ++v) active[v] = !pattern_adj[v].empty();
    if (circuit.interaction_graph().empty()) active[0] = true;

    std::vector<bool> ordered(n, false);
    std::vector<int> position(n, -1);
    for (Qubit root = 0; root < n; ++root) {
      if (!active[root] || ordered[root]) continue;
      std::deque<Qubit> queue{root};
      ordered[root] = true;
      while (!queue.empty()) {
        const Qubit v = queue.front();
        queue.pop_front();
        Step step{v, std::nullopt, {}, static_cast<unsigned>(pattern_adj[v].size())};
        for (Qubit w : pattern_adj[v]) {
          if (position[w] >= 0) {
            if (!step.parent) step.parent = w;
            step.placed_neighbours.push_back(w);
          }
        }
        position[v] = static_cast<int>(order_.size());
        order_.push_back(std::move(step));
        for (Qubit w : pattern_adj[v]) {
          if (!ordered[w]) {
            ordered[w] = true;
            queue.push_back(w);
          }
        }
      }
    }
    for (Qubit v = 0; v < n; ++v) {
      if (!active[v]) isolated_.push_back(v);
    }
    image_.assign(n, 0);
    used_.assign(map.num_qubits(), false);
  }

  std::vector<Layout> run() {
    if (circuit_.num_qubits() <= map_.num_qubits() && cap_ > 0) extend(0);
    return std::move(found_);
  }

 private:
  struct Step {
    Qubit virt;
    std::optional<Qubit> parent;
    std::vector<Qubit> placed_neighbours;
    unsigned degree;
  };

  bool feasible(const Step& step, Qubit p) const {
    if (used_[p] || map_.degree(p) < step.degree) return false;
    for (Qubit w : step.placed_neighbours) {
      if (!map_.has_edge(image_[w], p)) return false;
    }
    return true;
  }

  void place(std::size_t k, Qubit p) {
    image_[order_[k].virt] = p;
    used_[p] = true;
    extend(k + 1);
    used_[p] = false;
  }

  void extend(std::size_t k) {
    if (found_.size() >= cap_) return;
    if (k == order_.size()) {
      emit();
      return;
    }
    const Step& step = order_[k];
    if (step.parent) {
      const auto nbrs = map_.neighbours(image_[*step.parent]);
      for (Qubit p : nbrs) {
        if (feasible(step, p)) place(k, p);
        if (found_.size() >= cap_) return;
      }
    } else {
      for (Qubit p = 0; p < map_.num_qubits(); ++p) {
        if (feasible(step, p)) place(k, p);
        if (found_.size() >= cap_) return;
      }
    }
  }

  void emit() {
    std::vector<Qubit> mapping = image_;
    std::vector<bool> taken = used_;
    Qubit next_free = 0;
    for (Qubit v : isolated_) {
      while (taken[next_free]) ++next_free;
      mapping[v] = next_free;
      taken[next_free] = true;
    }
    found_.push_back(Layout::create(circuit_, std::move(mapping), map_));
  }

  const CircuitSpec& circuit_;
  const CouplingMap& map_;
  std::size_t cap_;
  std::vector<Step> order_;
  std::vector<Qubit> isolated_;
  std::vector<Qubit> image_;
  std::vector<bool> used_;
  std::vector<Layout> found_;
};

}  // namespace

Layout Layout::create(const CircuitSpec& circuit, std::vector<Qubit> mapping,
                      const CouplingMap& map, double score) {
  if (mapping.size() != circuit.num_qubits()) {
    throw InputError("layout for '" + circuit.id() + "' has " +
                     std::to_string(mapping.size()) + " entries, expected " +
                     std::to_string(circuit.num_qubits()));
  }
  Layout layout;
  layout.circuit_id_ = circuit.id();
  layout.qubits_ = mapping;
  std::sort(layout.qubits_.begin(), layout.qubits_.end());
  for (Qubit q : layout.qubits_) {
    if (q >= map.num_qubits()) {
      throw InputError("layout for '" + circuit.id() + "' uses qubit " +
                       std::to_string(q) + " outside the device");
    }
  }
  if (std::adjacent_find(layout.qubits_.begin(), layout.qubits_.end()) !=
      layout.qubits_.end()) {
    throw InputError("layout for '" + circuit.id() +
                     "' maps two virtual qubits to one physical qubit");
  }
  for (const Edge& e : circuit.interaction_graph()) {
    if (!map.has_edge(mapping[e.first], mapping[e.second])) {
      throw InputError("layout for '" + circuit.id() + "' puts interacting " +
                       "qubits " + std::to_string(e.first) + "," +
                       std::to_string(e.second) + " on non-adjacent qubits");
    }
  }
  layout.mapping_ = std::move(mapping);
  layout.boundary_ = find_boundary(layout.qubits_, map);
  layout.map_fingerprint_ = map.fingerprint();
  layout.set_score(score);
  return layout;
}

void Layout::set_score(double score) {
  if (!(score >= 0.0 && score <= 1.0)) {
    throw InputError("layout score " + std::to_string(score) +
                     " outside [0,1]");
  }
  score_ = score;
}

bool Layout::contains(Qubit q) const {
  return std::binary_search(qubits_.begin(), qubits_.end(), q);
}

std::vector<Layout> enumerate_layouts(const CircuitSpec& circuit,
                                      const CouplingMap& map, std::size_t cap) {
  return Embedder(circuit, map, cap).run();
}

double score_layout(const Layout& layout, const CircuitSpec& circuit,
                    const CalibrationData& calib) {
  if (layout.circuit_id() != circuit.id()) {
    throw InputError("layout belongs to '" + layout.circuit_id() +
                     "', not '" + circuit.id() + "'");
  }
  if (layout.map_fingerprint() != calib.map_fingerprint()) {
    throw InputError("calibration was built for a different coupling map");
  }
  const auto& phys = layout.mapping();
  double survival = 1.0;
  for (const Operation& op : circuit.ops()) {
    double err = 0.0;
    switch (op.kind) {
      case OpKind::kSingleQubit:
        err = calib.single_qubit_error(phys[op.qubits[0]]);
        break;
      case OpKind::kTwoQubit:
        err = calib.two_qubit_error(phys[op.qubits[0]], phys[op.qubits[1]]);
        break;
      case OpKind::kMeasure:
        err = calib.readout_error(phys[op.qubits[0]]);
        break;
    }
    survival *= 1.0 - err;
  }
  return std::clamp(1.0 - survival, 0.0, 1.0);
}

void validate(const EpsilonConfig& epsilon) {
  if (epsilon.mode == FilterMode::kAbsolute) {
    if (!(epsilon.value >= 0.0)) {
      throw InputError("absolute epsilon must be >= 0");
    }
  } else if (!(epsilon.value > 0.0 && epsilon.value <= 1.0)) {
    throw InputError("top fraction must lie in (0,1]");
  }
}

LayoutList filter_layouts(std::vector<Layout> scored,
                          const EpsilonConfig& epsilon) {
  validate(epsilon);
  if (scored.empty()) throw InputError("cannot filter an empty layout list");
  std::string circuit_id = scored.front().circuit_id();
  std::stable_sort(scored.begin(), scored.end(),
                   [](const Layout& a, const Layout& b) {
                     if (a.score() != b.score()) return a.score() < b.score();
                     return a.mapping() < b.mapping();
                   });
  std::size_t keep = scored.size();
  if (epsilon.mode == FilterMode::kAbsolute) {
    const double limit = scored.front().score() + epsilon.value + kScoreSlack;
    keep = static_cast<std::size_t>(
        std::find_if(scored.begin(), scored.end(),
                     [&](const Layout& l) { return l.score() > limit; }) -
        scored.begin());
  } else {
    const double target =
        epsilon.value * static_cast<double>(scored.size()) - 1e-9;
    keep = std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(target)),
                                   1, scored.size());
  }
  scored.erase(scored.begin() + static_cast<std::ptrdiff_t>(keep), scored.end());
  return LayoutList{std::move(circuit_id), std::move(scored), epsilon};
}

LayoutList candidate_layouts(const CircuitSpec& circuit, const CouplingMap& map,
                             const CalibrationData& calib,
                             const EpsilonConfig& epsilon, std::size_t cap) {
  validate(epsilon);
  std::vector<Layout> layouts = enumerate_layouts(circuit, map, cap);
  if (layouts.empty()) return LayoutList{circuit.id(), {}, epsilon};
  for (Layout& l : layouts) l.set_score(score_layout(l, circuit, calib));
  return filter_layouts(std::move(layouts), epsilon);
}

std::vector<Qubit> find_boundary(std::span<const Qubit> layout_qubits,
                                 const CouplingMap& map) {
  std::vector<Qubit> members(layout_qubits.begin(), layout_qubits.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<Qubit> boundary;
  for (Qubit q : members) {
    for (Qubit n : map.neighbours(q)) {
      if (!std::binary_search(members.begin(), members.end(), n)) {
        boundary.push_back(q);
        break;
      }
    }
  }
  return boundary;
}

OverlapCheck check_overlap(const Layout& l1, const Layout& l2,
                           const CouplingMap& map, unsigned buffer) {
  if (l1.map_fingerprint() != map.fingerprint() ||
      l2.map_fingerprint() != map.fingerprint()) {
    throw InputError("layouts were built for different coupling maps");
  }
  OverlapCheck result;
  if (sorted_sets_intersect(l1.qubits(), l2.qubits())) {
    result.overlapping = true;
    return result;
  }
  for (Qubit a : l1.boundary()) {
    for (Qubit b : l2.boundary()) {
      ++result.distance_queries;
      const unsigned d = map.distance(a, b);
      if (d != CouplingMap::kUnreachable && d <= buffer) {
        result.overlapping = true;
        return result;
      }
    }
  }
  return result;
}

bool b_overlap(const Layout& l1, const Layout& l2, const CouplingMap& map,
               unsigned buffer) {
  return check_overlap(l1, l2, map, buffer).overlapping;
}

}  // namespace qbatch

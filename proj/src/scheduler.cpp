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

#include "qbatch/scheduler.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "qbatch/error.hpp"

namespace qbatch {

namespace {

// Objective values closer than this are treated as equal by the exact solver.
constexpr double kObjectiveSlack = 1e-12;

struct ComponentClique {
  std::vector<std::size_t> vertices;
  double weight = 0.0;
};

// Connected components of the edge set, each as a list of edge indices.
// Components are ordered by their smallest vertex.
std::vector<std::vector<std::size_t>> edge_components(
    const CompatibilityGraph& graph) {
  const std::size_t n = graph.num_vertices();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const CompatEdge& e : graph.edges()) {
    const std::size_t a = root(e.u);
    const std::size_t b = root(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> slot(n, n);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = root(v);
    if (slot[r] == n) {
      slot[r] = components.size();
      components.emplace_back();
    }
  }
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    components[slot[root(graph.edges()[i].u)]].push_back(i);
  }
  std::erase_if(components, [](const auto& c) { return c.empty(); });
  return components;
}

CliqueResult greedy_clique_impl(const CompatibilityGraph& graph,
                                std::span<const unsigned> circuit_qubits,
                                std::optional<unsigned> capacity) {
  const std::size_t n = graph.num_vertices();
  // Rank of each vertex under (circuit id, layout index).
  std::vector<std::size_t> by_key(n);
  std::iota(by_key.begin(), by_key.end(), 0);
  std::sort(by_key.begin(), by_key.end(), [&](std::size_t a, std::size_t b) {
    const auto& va = graph.vertices()[a];
    const auto& vb = graph.vertices()[b];
    const int c = graph.circuit_id(a).compare(graph.circuit_id(b));
    if (c != 0) return c < 0;
    return va.layout < vb.layout;
  });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[by_key[r]] = r;

  const auto& edges = graph.edges();
  auto heavier = [&](std::size_t a, std::size_t b) {
    const CompatEdge& ea = edges[a];
    const CompatEdge& eb = edges[b];
    if (ea.weight != eb.weight) return ea.weight > eb.weight;
    auto key = [&](const CompatEdge& e) {
      return std::minmax(rank[e.u], rank[e.v]);
    };
    return key(ea) < key(eb);
  };

  std::optional<ComponentClique> best;
  std::vector<bool> circuit_taken(graph.circuit_ids().size(), false);
  std::vector<bool> in_clique(n, false);

  for (std::vector<std::size_t>& component : edge_components(graph)) {
    std::sort(component.begin(), component.end(), heavier);
    ComponentClique clique;
    unsigned used_qubits = 0;

    auto can_join = [&](std::size_t w) {
      if (circuit_taken[graph.vertices()[w].circuit]) return false;
      return std::all_of(clique.vertices.begin(), clique.vertices.end(),
                         [&](std::size_t c) { return graph.adjacent(w, c); });
    };
    auto qubits_of = [&](std::size_t w) -> unsigned {
      return circuit_qubits.empty()
                 ? 0U
                 : circuit_qubits[graph.vertices()[w].circuit];
    };
    auto add = [&](std::size_t w) {
      in_clique[w] = true;
      circuit_taken[graph.vertices()[w].circuit] = true;
      used_qubits += qubits_of(w);
      clique.vertices.push_back(w);
    };

    for (std::size_t idx : component) {
      const CompatEdge& e = edges[idx];
      const bool has_u = in_clique[e.u];
      const bool has_v = in_clique[e.v];
      if (has_u && has_v) continue;
      if (!has_u && !can_join(e.u)) continue;
      if (!has_v && !can_join(e.v)) continue;
      const unsigned extra =
          (has_u ? 0U : qubits_of(e.u)) + (has_v ? 0U : qubits_of(e.v));
      if (capacity && used_qubits + extra > *capacity) continue;
      if (!has_u) add(e.u);
      if (!has_v) add(e.v);
      clique.weight += e.weight;
    }

    for (std::size_t w : clique.vertices) {
      in_clique[w] = false;
      circuit_taken[graph.vertices()[w].circuit] = false;
    }
    if (clique.vertices.empty()) continue;
    if (!best || clique.weight > best->weight ||
        (clique.weight == best->weight &&
         clique.vertices.size() > best->vertices.size())) {
      best = std::move(clique);
    }
  }

  CliqueResult result;
  if (best) {
    result.vertices = std::move(best->vertices);
    std::sort(result.vertices.begin(), result.vertices.end());
    result.weight = best->weight;
  }
  return result;
}

// --- batching loop -------------------------------------------------------

struct Pick {
  std::size_t circuit;  // index into the waiting subset
  std::size_t layout;
};

std::vector<Pick> select_batch(const CircuitSet& waiting,
                               std::span<const LayoutList> lists,
                               const CouplingMap& map,
                               const ScheduleOptions& options) {
  std::vector<Pick> picks;
  if (options.solver == SolverKind::kGreedy) {
    const CompatibilityGraph graph =
        build_graph(waiting, lists, map, options.buffer);
    std::vector<unsigned> qubits;
    for (const CircuitSpec& c : waiting) qubits.push_back(c.num_qubits());
    const CliqueResult clique = greedy_clique(graph, qubits, map.num_qubits());
    for (std::size_t v : clique.vertices) {
      picks.push_back({graph.vertices()[v].circuit, graph.vertices()[v].layout});
    }
  } else {
    const IlpInstance instance(waiting, lists, map, options.buffer);
    const IlpSolution solution = solve_ilp_exact(instance, map);
    for (std::size_t i = 0; i < solution.selection.size(); ++i) {
      if (solution.selection[i]) picks.push_back({i, *solution.selection[i]});
    }
  }
  if (picks.empty()) {
    // Nothing can share the device: run the circuit with the best layout.
    std::size_t best = 0;
    for (std::size_t i = 1; i < lists.size(); ++i) {
      if (lists[i].layouts.front().score() <
          lists[best].layouts.front().score()) {
        best = i;
      }
    }
    picks.push_back({best, 0});
  }
  std::sort(picks.begin(), picks.end(),
            [](const Pick& a, const Pick& b) { return a.circuit < b.circuit; });
  return picks;
}

/// Runs batches over a waiting pool; shared by the static and online loops.
class BatchLoop {
 public:
  BatchLoop(const CircuitSet& circuits, std::span<const LayoutList> lists,
            const CouplingMap& map, const ScheduleOptions& options)
      : circuits_(circuits), lists_(lists), map_(map), options_(options) {
    if (lists.size() != circuits.size()) {
      throw InputError("need one layout list per circuit");
    }
    validate(options.epsilon);
  }

  /// Adds a circuit to the waiting pool, or to the unschedulable list when
  /// it has no candidate layout.
  void admit(std::size_t index) {
    if (lists_[index].layouts.empty()) {
      unschedulable_.push_back(index);
    } else {
      waiting_.insert(
          std::upper_bound(waiting_.begin(), waiting_.end(), index), index);
    }
  }

  bool idle() const { return waiting_.empty(); }

  void run_batch(double start_time) {
    const CircuitSet waiting = circuits_.subset(waiting_);
    std::vector<LayoutList> lists;
    lists.reserve(waiting_.size());
    for (std::size_t i : waiting_) lists.push_back(lists_[i]);

    Batch batch;
    batch.start_time = start_time;
    std::vector<std::size_t> done;
    for (const Pick& p : select_batch(waiting, lists, map_, options_)) {
      const CircuitSpec& c = waiting[p.circuit];
      const Layout& layout = lists[p.circuit].layouts[p.layout];
      batch.assignments.push_back({c.id(), c.num_qubits(), layout});
      batch.total_qubits += c.num_qubits();
      batch.objective += layout.score() * waiting.normalized_area(p.circuit) - 1.0;
      done.push_back(waiting_[p.circuit]);
    }
    std::erase_if(waiting_, [&](std::size_t i) {
      return std::find(done.begin(), done.end(), i) != done.end();
    });
    schedule_.batches.push_back(std::move(batch));
  }

  Schedule finish() {
    std::sort(unschedulable_.begin(), unschedulable_.end());
    for (std::size_t i : unschedulable_) {
      schedule_.unschedulable.push_back(circuits_[i].id());
    }
    return std::move(schedule_);
  }

 private:
  const CircuitSet& circuits_;
  std::span<const LayoutList> lists_;
  const CouplingMap& map_;
  const ScheduleOptions& options_;
  std::vector<std::size_t> waiting_;  // ascending input index
  std::vector<std::size_t> unschedulable_;
  Schedule schedule_;
};

}  // namespace

CliqueResult greedy_clique(const CompatibilityGraph& graph) {
  return greedy_clique_impl(graph, {}, std::nullopt);
}

CliqueResult greedy_clique(const CompatibilityGraph& graph,
                           std::span<const unsigned> circuit_qubits,
                           unsigned capacity) {
  if (circuit_qubits.size() != graph.circuit_ids().size()) {
    throw InputError("need one qubit count per circuit");
  }
  return greedy_clique_impl(graph, circuit_qubits, capacity);
}

IlpInstance::IlpInstance(const CircuitSet& circuits,
                         std::span<const LayoutList> lists,
                         const CouplingMap& map, unsigned buffer) {
  if (lists.size() != circuits.size()) {
    throw InputError("need one layout list per circuit");
  }
  std::vector<const Layout*> layouts;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    ids_.push_back(circuits[i].id());
    qubits_.push_back(circuits[i].num_qubits());
    areas_.push_back(circuits.normalized_area(i));
    offsets_.push_back(layouts.size());
    auto& scores = scores_.emplace_back();
    for (const Layout& l : lists[i].layouts) {
      scores.push_back(l.score());
      layouts.push_back(&l);
    }
  }
  const std::size_t vars = layouts.size();
  words_per_row_ = (vars + 63) / 64;
  conflict_.assign(vars * words_per_row_, 0);
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t k = i + 1; k < circuits.size(); ++k) {
      for (std::size_t j = 0; j < scores_[i].size(); ++j) {
        for (std::size_t l = 0; l < scores_[k].size(); ++l) {
          const std::size_t a = var(i, j);
          const std::size_t b = var(k, l);
          if (b_overlap(*layouts[a], *layouts[b], map, buffer)) {
            conflict_[a * words_per_row_ + b / 64] |= std::uint64_t{1} << (b % 64);
            conflict_[b * words_per_row_ + a / 64] |= std::uint64_t{1} << (a % 64);
          }
        }
      }
    }
  }
}

bool IlpInstance::conflicts(std::size_t i, std::size_t j, std::size_t k,
                            std::size_t l) const {
  const std::size_t a = var(i, j);
  const std::size_t b = var(k, l);
  return (conflict_[a * words_per_row_ + b / 64] >> (b % 64)) & 1U;
}

double IlpInstance::search_space() const {
  double size = 1.0;
  for (const auto& s : scores_) size *= static_cast<double>(s.size() + 1);
  return size;
}

double ilp_objective(const IlpInstance& instance, const Selection& selection) {
  double value = 0.0;
  for (std::size_t i = 0; i < selection.size(); ++i) {
    if (selection[i]) {
      value += instance.score(i, *selection[i]) * instance.area(i) - 1.0;
    }
  }
  return value;
}

IlpSolution solve_ilp_exact(const IlpInstance& instance, const CouplingMap& map) {
  if (instance.search_space() > kExactSearchLimit) {
    std::ostringstream msg;
    msg << "exact solver search space " << instance.search_space()
        << " exceeds the limit of " << kExactSearchLimit;
    throw SolverLimitError(msg.str());
  }
  const std::size_t n = instance.num_circuits();
  const unsigned capacity = map.num_qubits();
  IlpSolution best{Selection(n), 0.0};
  Selection current(n);
  std::vector<std::pair<std::size_t, std::size_t>> chosen;

  auto search = [&](auto&& self, std::size_t i, double value,
                    unsigned used) -> void {
    // Each remaining circuit lowers the objective by at most 1.
    const double bound = value - static_cast<double>(n - i);
    if (bound >= best.objective - kObjectiveSlack) return;
    if (i == n) {
      best.selection = current;
      best.objective = value;
      return;
    }
    if (used + instance.qubits(i) <= capacity) {
      for (std::size_t j = 0; j < instance.num_layouts(i); ++j) {
        const bool clash = std::any_of(
            chosen.begin(), chosen.end(), [&](const auto& kl) {
              return instance.conflicts(i, j, kl.first, kl.second);
            });
        if (clash) continue;
        current[i] = j;
        chosen.emplace_back(i, j);
        self(self, i + 1,
             value + instance.score(i, j) * instance.area(i) - 1.0,
             used + instance.qubits(i));
        chosen.pop_back();
        current[i].reset();
      }
    }
    self(self, i + 1, value, used);
  };
  search(search, 0, 0.0, 0);
  return best;
}

std::vector<LayoutList> prepare_layouts(const CircuitSet& circuits,
                                        const CouplingMap& map,
                                        const CalibrationData& calib,
                                        const ScheduleOptions& options) {
  std::vector<LayoutList> lists;
  lists.reserve(circuits.size());
  for (const CircuitSpec& c : circuits) {
    lists.push_back(
        candidate_layouts(c, map, calib, options.epsilon, options.layout_cap));
  }
  return lists;
}

Schedule schedule_all(const CircuitSet& circuits, const CouplingMap& map,
                      const CalibrationData& calib,
                      const ScheduleOptions& options) {
  const auto lists = prepare_layouts(circuits, map, calib, options);
  return schedule_all(circuits, lists, map, options);
}

Schedule schedule_all(const CircuitSet& circuits,
                      std::span<const LayoutList> lists, const CouplingMap& map,
                      const ScheduleOptions& options) {
  BatchLoop loop(circuits, lists, map, options);
  for (std::size_t i = 0; i < circuits.size(); ++i) loop.admit(i);
  double t = 0.0;
  while (!loop.idle()) {
    loop.run_batch(t);
    t += 1.0;
  }
  return loop.finish();
}

Schedule schedule_dynamic(const CircuitSet& circuits,
                          std::span<const Arrival> arrivals,
                          const CouplingMap& map, const CalibrationData& calib,
                          const ScheduleOptions& options,
                          double batch_duration) {
  const auto lists = prepare_layouts(circuits, map, calib, options);
  return schedule_dynamic(circuits, lists, arrivals, map, options,
                          batch_duration);
}

Schedule schedule_dynamic(const CircuitSet& circuits,
                          std::span<const LayoutList> lists,
                          std::span<const Arrival> arrivals,
                          const CouplingMap& map,
                          const ScheduleOptions& options,
                          double batch_duration) {
  if (!(batch_duration > 0.0)) {
    throw InputError("batch duration must be positive");
  }
  std::vector<bool> seen(circuits.size(), false);
  std::vector<std::size_t> order;
  for (std::size_t e = 0; e < arrivals.size(); ++e) {
    if (e > 0 && arrivals[e].time < arrivals[e - 1].time) {
      throw InputError("arrivals must be ordered by time");
    }
    const std::size_t i = circuits.index_of(arrivals[e].circuit_id);
    if (seen[i]) {
      throw InputError("circuit '" + arrivals[e].circuit_id +
                       "' arrives twice");
    }
    seen[i] = true;
    order.push_back(i);
  }
  if (order.size() != circuits.size()) {
    throw InputError("every circuit needs exactly one arrival");
  }

  BatchLoop loop(circuits, lists, map, options);
  std::size_t next = 0;
  double t = arrivals.empty() ? 0.0 : arrivals.front().time;
  while (next < arrivals.size() || !loop.idle()) {
    while (next < arrivals.size() && arrivals[next].time <= t) {
      loop.admit(order[next]);
      ++next;
    }
    if (loop.idle()) {
      if (next < arrivals.size()) t = std::max(t, arrivals[next].time);
      continue;
    }
    loop.run_batch(t);
    t += batch_duration;
  }
  return loop.finish();
}

}  // namespace qbatch

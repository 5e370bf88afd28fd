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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Every random stream is seeded, so a failure reproduces.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "qbatch/cli.hpp"
#include "qbatch/results.hpp"
#include "qbatch/scheduler.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qbatch;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1. Boundary-based overlap agrees with comparing every cross pair.
Verdict overlap_oracle() {
  Verdict v;
  std::mt19937_64 rng(20260101);
  const auto start = Clock::now();
  int mismatches = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 49);
    const CouplingMap map(n, rng() % 5 == 0
                                 ? oracle::random_edges(rng, n, 2.5 / n)
                                 : oracle::random_connected_edges(rng, n, 1.5 / n));
    const auto fw = oracle::floyd_warshall(n, map.edges());
    const auto r1 = oracle::random_region(rng, map, 1 + static_cast<unsigned>(rng() % 10));
    std::set<Qubit> blocked;
    if (rng() % 4 != 0) blocked.insert(r1.begin(), r1.end());
    auto r2 = oracle::random_region(rng, map, 1 + static_cast<unsigned>(rng() % 10), blocked);
    if (r2.empty()) r2 = oracle::random_region(rng, map, 1);
    const auto [c1, m1] = oracle::tree_circuit_on("a", r1, map);
    const auto [c2, m2] = oracle::tree_circuit_on("b", r2, map);
    const Layout l1 = Layout::create(c1, m1, map);
    const Layout l2 = Layout::create(c2, m2, map);
    const unsigned b = static_cast<unsigned>(rng() % 4);
    if (b_overlap(l1, l2, map, b) != oracle::brute_overlap(m1, m2, fw, b).overlapping) {
      ++mismatches;
    }
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << "500 instances, " << mismatches << " mismatches, " << t << " s";
  v.detail = d.str();
  if (mismatches != 0) v.fail(d.str());
  if (t >= 10.0) v.fail(d.str() + " (limit 10 s)");
  return v;
}

// 2. Four boundary comparisons instead of 104 on the 13+8 split.
Verdict comparison_count() {
  Verdict v;
  const CouplingMap map = fixture::falcon();
  const auto pair = fixture::split_pair(map);
  const auto fw = oracle::floyd_warshall(map.num_qubits(), map.edges());
  const OverlapCheck fast = check_overlap(pair.big_layout, pair.small_layout, map, 2);
  const auto naive =
      oracle::brute_overlap(pair.big_layout.mapping(), pair.small_layout.mapping(), fw, 2);
  std::ostringstream d;
  d << "boundary method " << fast.distance_queries << " queries, naive "
    << naive.comparisons;
  v.detail = d.str();
  if (fast.distance_queries != 4 || naive.comparisons != 104 || fast.overlapping ||
      naive.overlapping) {
    v.fail(d.str());
  }
  return v;
}

// 3. The three-chain worked example.
Verdict worked_example() {
  Verdict v;
  const CouplingMap eagle = fixture::eagle();
  const auto ex = fixture::three_chains(eagle);
  const CompatibilityGraph g = build_graph(ex.circuits, ex.lists, eagle, 1);
  const std::size_t u = g.find({0, 0});
  const std::size_t w = g.find({1, 1});
  double weight = -1.0;
  for (const CompatEdge& e : g.edges()) {
    if ((e.u == u && e.v == w) || (e.u == w && e.v == u)) weight = e.weight;
  }
  const CliqueResult clique = greedy_clique(g);
  std::set<std::size_t> circuits;
  for (std::size_t x : clique.vertices) circuits.insert(g.vertices()[x].circuit);
  std::ostringstream d;
  d << "w((0,0),(1,1)) = " << weight << ", clique size " << clique.vertices.size()
    << " over " << circuits.size() << " circuits";
  v.detail = d.str();
  if (std::abs(weight - 0.004) > 1e-9) v.fail(d.str());
  if (clique.vertices.size() != 3 || circuits.size() != 3) v.fail(d.str());
  return v;
}

// 4. Branch-and-bound equals exhaustive enumeration; greedy is feasible and
// never beats it.
Verdict greedy_vs_exact() {
  Verdict v;
  std::mt19937_64 rng(20260404);
  const auto start = Clock::now();
  int bad_exact = 0;
  int bad_greedy = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const gen::Problem p = gen::random_problem(rng, 20, 4, 3);
    const IlpInstance inst(p.circuits, p.lists, p.map, p.buffer);
    const IlpSolution exact = solve_ilp_exact(inst, p.map);
    const auto fw = oracle::floyd_warshall(p.map.num_qubits(), p.map.edges());
    const auto plain = oracle::make_instance(p.circuits, p.lists, p.map.num_qubits());
    const auto brute = oracle::exhaustive_ilp(plain, fw, p.buffer);
    if (!oracle::feasible(plain, exact.selection, fw, p.buffer) ||
        std::abs(exact.objective - brute.best_objective) > 1e-12) {
      ++bad_exact;
    }

    const CompatibilityGraph g = build_graph(p.circuits, p.lists, p.map, p.buffer);
    std::vector<unsigned> qubits;
    for (const CircuitSpec& c : p.circuits) qubits.push_back(c.num_qubits());
    const CliqueResult clique = greedy_clique(g, qubits, p.map.num_qubits());
    Selection sel(p.circuits.size());
    for (std::size_t x : clique.vertices) sel[g.vertices()[x].circuit] = g.vertices()[x].layout;
    if (!oracle::feasible(plain, sel, fw, p.buffer) ||
        oracle::objective(plain, sel) < exact.objective - 1e-12 ||
        clique.vertices.size() > brute.max_batch_size) {
      ++bad_greedy;
    }
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << "200 instances, exact mismatches " << bad_exact << ", greedy violations "
    << bad_greedy << ", " << t << " s";
  v.detail = d.str();
  if (bad_exact || bad_greedy) v.fail(d.str());
  if (t >= 60.0) v.fail(d.str() + " (limit 60 s)");
  return v;
}

std::vector<std::size_t> batch_sizes(const Schedule& s) {
  std::vector<std::size_t> out;
  for (const Batch& b : s.batches) out.push_back(b.assignments.size());
  return out;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return "(" + s + ")";
}

// 5. Seven 10-qubit chains: two per batch on 27 qubits, three on 127.
Verdict throughput_gain() {
  Verdict v;
  const CircuitSet chains =
      io::parse_circuits(io::read_json_file(fixture::data("chain10_x7.json")));
  ScheduleOptions opt;  // b = 1, top 50%
  const CouplingMap falcon = fixture::falcon();
  const CalibrationData fcal = io::parse_calibration(
      io::read_json_file(fixture::data("falcon27_calibration.json")), falcon);
  const CouplingMap eagle = fixture::eagle();
  const CalibrationData ecal = io::parse_calibration(
      io::read_json_file(fixture::data("eagle127_calibration.json")), eagle);
  const auto small = batch_sizes(schedule_all(chains, falcon, fcal, opt));
  const auto large = batch_sizes(schedule_all(chains, eagle, ecal, opt));
  std::ostringstream d;
  d << "27 qubits " << join(small) << ", 127 qubits " << join(large);
  v.detail = d.str();
  if (small != std::vector<std::size_t>{2, 2, 2, 1}) v.fail(d.str());
  if (large != std::vector<std::size_t>{3, 3, 1}) v.fail(d.str());
  return v;
}

// 6. Random end-to-end schedules pass the independent audit.
Verdict schedule_invariants() {
  Verdict v;
  std::mt19937_64 rng(20260606);
  std::size_t violations = 0;
  std::size_t batches = 0;
  std::string first;
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned n = 8 + static_cast<unsigned>(rng() % 33);
    const CouplingMap map(n, oracle::random_connected_edges(rng, n, 1.5 / n));
    const CalibrationData calib = gen::random_calibration(rng, map);
    const CircuitSet circuits = gen::random_circuits(rng, map, 2 + rng() % 7, 6);
    ScheduleOptions opt;
    opt.buffer = static_cast<unsigned>(rng() % 3);
    if (rng() % 2) opt.epsilon = {FilterMode::kAbsolute, 0.05};
    opt.layout_cap = 200;
    opt.solver = trial % 4 == 3 ? SolverKind::kExact : SolverKind::kGreedy;
    const auto lists = prepare_layouts(circuits, map, calib, opt);
    if (opt.solver == SolverKind::kExact) {
      const IlpInstance inst(circuits, lists, map, opt.buffer);
      if (inst.search_space() > kExactSearchLimit) opt.solver = SolverKind::kGreedy;
    }
    const Schedule s = schedule_all(circuits, lists, map, opt);
    batches += s.batches.size();
    const auto bad = oracle::audit_schedule(s, circuits, lists, map, opt.buffer);
    if (!bad.empty() && first.empty()) first = bad.front();
    violations += bad.size();
  }
  std::ostringstream d;
  d << "100 runs, " << batches << " batches, " << violations << " violations";
  v.detail = d.str();
  if (violations) v.fail(d.str() + ": " + first);
  return v;
}

// 7. Marginals conserve shots and recover product factors.
Verdict marginal_conservation() {
  Verdict v;
  std::mt19937_64 rng(20260707);
  int bad = 0;
  auto total = [](const Counts& c) {
    return std::accumulate(c.begin(), c.end(), std::uint64_t{0},
                           [](std::uint64_t s, const auto& kv) { return s + kv.second; });
  };
  auto bits = [&](std::size_t n) {
    std::string s(n, '0');
    for (char& ch : s) ch = rng() % 2 ? '1' : '0';
    return s;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 1 + rng() % 4;
    std::vector<std::size_t> width(k);
    for (auto& w : width) w = 1 + rng() % 4;
    std::vector<std::size_t> positions(std::accumulate(width.begin(), width.end(), 0UL));
    std::iota(positions.begin(), positions.end(), 0);
    std::shuffle(positions.begin(), positions.end(), rng);
    std::map<std::string, std::vector<std::size_t>> spans;
    std::vector<Counts> factors(k);
    std::size_t next = 0;
    for (std::size_t i = 0; i < k; ++i) {
      auto& span = spans["c" + std::to_string(i)];
      for (std::size_t b = 0; b < width[i]; ++b) span.push_back(positions[next++]);
      for (int draw = 0; draw < 3; ++draw) factors[i][bits(width[i])] += 1 + rng() % 9;
    }
    // Product joint: every combination of factor outcomes.
    Counts joint{{std::string(positions.size(), '0'), 1}};
    joint.clear();
    std::function<void(std::size_t, std::string&, std::uint64_t)> build =
        [&](std::size_t i, std::string& key, std::uint64_t weight) {
          if (i == k) {
            joint[key] += weight;
            return;
          }
          const auto& span = spans["c" + std::to_string(i)];
          for (const auto& [outcome, n] : factors[i]) {
            for (std::size_t b = 0; b < span.size(); ++b) key[span[b]] = outcome[b];
            build(i + 1, key, weight * n);
          }
        };
    std::string key(positions.size(), '0');
    build(0, key, 1);
    const JointCounts jc(spans, joint);
    std::uint64_t all = 1;
    for (const Counts& f : factors) all *= total(f);
    for (std::size_t i = 0; i < k; ++i) {
      const Counts m = marginalize(jc, "c" + std::to_string(i));
      if (total(m) != jc.total_shots()) ++bad;
      const std::uint64_t others = all / total(factors[i]);
      Counts expect;
      for (const auto& [outcome, n] : factors[i]) expect[outcome] = n * others;
      if (m != expect) ++bad;
    }
  }
  std::ostringstream d;
  d << "100 joints, " << bad << " violations";
  v.detail = d.str();
  if (bad) v.fail(d.str());
  return v;
}

// 8. Two runs on identical inputs give identical bytes.
Verdict determinism() {
  Verdict v;
  cli::RunConfig config;
  config.coupling = fixture::data("falcon27.json");
  config.calibration = fixture::data("falcon27_calibration.json");
  config.circuits = fixture::data("chain10_x7.json");
  std::ostringstream a;
  std::ostringstream b;
  std::ostringstream sink;
  const int ra = cli::cmd_schedule(config, a, sink);
  const int rb = cli::cmd_schedule(config, b, sink);
  config.coupling = fixture::data("eagle127.json");
  config.calibration = fixture::data("eagle127_calibration.json");
  std::ostringstream c;
  std::ostringstream d;
  const int rc = cli::cmd_schedule(config, c, sink);
  const int rd = cli::cmd_schedule(config, d, sink);
  const bool same = a.str() == b.str() && c.str() == d.str();
  v.detail = std::string(same ? "identical" : "different") + " documents (" +
             std::to_string(a.str().size()) + " and " + std::to_string(c.str().size()) +
             " bytes)";
  if (ra || rb || rc || rd || !same || a.str().empty()) v.fail(v.detail);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"overlap oracle equivalence", overlap_oracle},
      {"boundary comparison count", comparison_count},
      {"three-chain worked example", worked_example},
      {"greedy vs exact oracle", greedy_vs_exact},
      {"throughput gain batch sizes", throughput_gain},
      {"schedule invariants", schedule_invariants},
      {"marginal conservation", marginal_conservation},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << "  [" << i + 1 << "] " << criteria[i].first
              << ": " << v.detail << "\n";
    if (!v.pass) ++failed;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

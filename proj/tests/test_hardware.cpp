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

#include <random>

#include "catch_amalgamated.hpp"
#include "qbatch/error.hpp"
#include "qbatch/hardware.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace qbatch;

TEST_CASE("path distances", "[hardware]") {
  const CouplingMap map = fixture::path(3);
  CHECK(map.distance(0, 0) == 0);
  CHECK(map.distance(0, 2) == 2);
  CHECK(map.distance(2, 0) == 2);
  CHECK(map.distance(1, 2) == 1);
}

TEST_CASE("disconnected qubits are unreachable", "[hardware]") {
  const CouplingMap map(2, {});
  CHECK(map.distance(0, 1) == CouplingMap::kUnreachable);
  CHECK(CouplingMap::kUnreachable > map.num_qubits());
  CHECK(map.distance(1, 1) == 0);
}

TEST_CASE("construction rejects malformed maps", "[hardware]") {
  CHECK_THROWS_AS(CouplingMap(0, {}), InputError);
  CHECK_THROWS_AS(CouplingMap(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(CouplingMap(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(CouplingMap(3, {{0, 1}, {1, 0}}), InputError);
  const CouplingMap map = fixture::path(3);
  CHECK_THROWS_AS(map.distance(0, 3), InputError);
}

TEST_CASE("edges are normalised and queryable", "[hardware]") {
  const CouplingMap map(4, {{3, 2}, {1, 0}, {2, 1}});
  REQUIRE(map.edges().size() == 3);
  CHECK(map.edges()[0] == Edge{0, 1});
  CHECK(map.edges()[2] == Edge{2, 3});
  CHECK(map.has_edge(2, 3));
  CHECK(map.has_edge(3, 2));
  CHECK_FALSE(map.has_edge(0, 2));
  CHECK(map.degree(1) == 2);
  CHECK(map.edge_index(3, 2) == 2u);
  CHECK_FALSE(map.edge_index(0, 3).has_value());
}

TEST_CASE("27-qubit device matches Floyd-Warshall on every pair", "[hardware]") {
  const CouplingMap map = fixture::falcon();
  REQUIRE(map.num_qubits() == 27);
  REQUIRE(map.edges().size() == 28);
  const auto fw = oracle::floyd_warshall(map.num_qubits(), map.edges());
  for (Qubit a = 0; a < 27; ++a) {
    for (Qubit b = 0; b < 27; ++b) REQUIRE(map.distance(a, b) == fw[a][b]);
  }
  // Frozen values from the oracle. 11-14 is a direct coupling on this
  // heavy-hex layout; 11 to 19 needs three hops.
  CHECK(map.distance(11, 14) == 1);
  CHECK(map.distance(11, 19) == 3);
  CHECK(map.distance(0, 26) == 12);
}

TEST_CASE("127-qubit device is connected heavy-hex", "[hardware]") {
  const CouplingMap map = fixture::eagle();
  REQUIRE(map.num_qubits() == 127);
  REQUIRE(map.edges().size() == 144);
  for (Qubit q = 0; q < 127; ++q) {
    CHECK(map.degree(q) >= 1);
    CHECK(map.degree(q) <= 3);
    CHECK(map.distance(0, q) != CouplingMap::kUnreachable);
  }
}

TEST_CASE("BFS equals Floyd-Warshall on random graphs", "[hardware][property]") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<unsigned> size(1, 50);
  std::uniform_real_distribution<double> density(0.0, 0.2);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = size(rng);
    const auto edges = oracle::random_edges(rng, n, density(rng));
    const CouplingMap map(n, edges);
    const auto fw = oracle::floyd_warshall(n, edges);
    for (Qubit a = 0; a < n; ++a) {
      for (Qubit b = 0; b < n; ++b) REQUIRE(map.distance(a, b) == fw[a][b]);
    }
  }
}

TEST_CASE("distance is a metric on each component", "[hardware][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = 5 + static_cast<unsigned>(rng() % 25);
    const CouplingMap map(n, oracle::random_edges(rng, n, 0.12));
    for (Qubit a = 0; a < n; ++a) {
      REQUIRE(map.distance(a, a) == 0);
      for (Qubit b = 0; b < n; ++b) {
        const unsigned ab = map.distance(a, b);
        REQUIRE(ab == map.distance(b, a));
        REQUIRE((ab == 1) == map.has_edge(a, b));
        if (a != b) REQUIRE(ab > 0);
        if (ab == CouplingMap::kUnreachable) continue;
        for (Qubit c = 0; c < n; ++c) {
          const unsigned bc = map.distance(b, c);
          if (bc == CouplingMap::kUnreachable) continue;
          REQUIRE(map.distance(a, c) <= ab + bc);
        }
      }
    }
  }
}

TEST_CASE("calibration validates sizes and ranges", "[hardware]") {
  const CouplingMap map = fixture::path(3);
  const CalibrationData ok(map, {0.01, 0.02, 0.03}, {0.001, 0.002, 0.003},
                           {0.05, 0.06});
  CHECK(ok.readout_error(1) == 0.02);
  CHECK(ok.single_qubit_error(2) == 0.003);
  CHECK(ok.two_qubit_error(2, 1) == 0.06);
  CHECK_THROWS_AS(ok.two_qubit_error(0, 2), InputError);
  CHECK(ok.map_fingerprint() == map.fingerprint());

  CHECK_THROWS_AS(CalibrationData(map, {0.01, 0.02}, {0, 0, 0}, {0, 0}),
                  InputError);
  CHECK_THROWS_AS(CalibrationData(map, {0, 0, 0}, {0, 0, 0}, {0}), InputError);
  CHECK_THROWS_AS(CalibrationData(map, {0, 1.5, 0}, {0, 0, 0}, {0, 0}),
                  InputError);
  CHECK_THROWS_AS(CalibrationData(map, {0, 0, 0}, {0, 0, -0.1}, {0, 0}),
                  InputError);

  const CalibrationData clean = CalibrationData::noiseless(map);
  CHECK(clean.two_qubit_error(0, 1) == 0.0);
  CHECK(clean.readout_error(2) == 0.0);
}

TEST_CASE("fingerprints separate different maps", "[hardware]") {
  CHECK(fixture::path(3).fingerprint() == fixture::path(3).fingerprint());
  CHECK(fixture::path(3).fingerprint() != fixture::path(4).fingerprint());
  CHECK(CouplingMap(3, {{0, 1}}).fingerprint() !=
        CouplingMap(3, {{1, 2}}).fingerprint());
}

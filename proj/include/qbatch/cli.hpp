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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qbatch/scheduler.hpp"

namespace qbatch::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputFailure = 1,
  kSolverGuard = 2,
};

struct RunConfig {
  std::filesystem::path coupling;
  std::filesystem::path calibration;  // needed unless layouts cover every circuit
  std::filesystem::path circuits;
  /// Layout documents that replace enumeration and scoring for the circuits
  /// they name; the epsilon filter still applies.
  std::vector<std::filesystem::path> layouts;
  /// Optional arrivals document; switches to the online scheduler.
  std::filesystem::path arrivals;
  /// Empty: document goes to `out`, summary to `err`.
  std::filesystem::path output;
  ScheduleOptions options;
};

/// Schedules the circuit set and writes the schedule document; prints a
/// per-batch summary.
int cmd_schedule(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Writes one filtered layout document per circuit, as a JSON array.
int cmd_layouts(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Writes the compatibility graph over the whole circuit set.
int cmd_graph_dump(const RunConfig& config, std::ostream& out,
                   std::ostream& err);

/// Writes the marginal counts of `circuit_id` from a joint-counts document.
int cmd_marginalize(const std::filesystem::path& joint,
                    const std::string& circuit_id,
                    const std::filesystem::path& output, std::ostream& out,
                    std::ostream& err);

}  // namespace qbatch::cli

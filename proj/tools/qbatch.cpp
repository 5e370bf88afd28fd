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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "qbatch/cli.hpp"

namespace {

void add_run_flags(CLI::App* cmd, qbatch::cli::RunConfig& config,
                   std::string& epsilon_mode, double& epsilon,
                   std::string& solver) {
  cmd->add_option("--coupling", config.coupling, "coupling-map document")
      ->required();
  cmd->add_option("--calibration", config.calibration, "calibration document");
  cmd->add_option("--circuits", config.circuits, "circuit-set document")
      ->required();
  cmd->add_option("--layouts", config.layouts,
                  "pre-scored layout documents (skip enumeration)");
  cmd->add_option("--buffer", config.options.buffer,
                  "minimum hop gap between co-scheduled circuits")
      ->capture_default_str();
  cmd->add_option("--epsilon-mode", epsilon_mode, "layout filter")
      ->check(CLI::IsMember({"absolute", "top-fraction"}))
      ->capture_default_str();
  cmd->add_option("--epsilon", epsilon,
                  "score margin (absolute) or kept fraction (top-fraction)")
      ->capture_default_str();
  cmd->add_option("--solver", solver, "batch selection")
      ->check(CLI::IsMember({"greedy", "exact"}))
      ->capture_default_str();
  cmd->add_option("--layout-cap", config.options.layout_cap,
                  "maximum layouts enumerated per circuit")
      ->capture_default_str();
  cmd->add_option("--out", config.output, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Packs quantum circuits into simultaneous batches on one device"};
  app.require_subcommand(1);

  qbatch::cli::RunConfig config;
  std::string epsilon_mode = "top-fraction";
  double epsilon = 0.5;
  std::string solver = "greedy";

  auto* schedule = app.add_subcommand("schedule", "batch a circuit set");
  add_run_flags(schedule, config, epsilon_mode, epsilon, solver);
  schedule->add_option("--arrivals", config.arrivals,
                       "timestamped arrivals document (online scheduling)");

  auto* layouts = app.add_subcommand("layouts", "list filtered candidate layouts");
  add_run_flags(layouts, config, epsilon_mode, epsilon, solver);

  auto* graph = app.add_subcommand("graph-dump", "dump the compatibility graph");
  add_run_flags(graph, config, epsilon_mode, epsilon, solver);

  std::filesystem::path joint;
  std::string circuit_id;
  std::filesystem::path marginal_out;
  auto* marginal = app.add_subcommand("marginalize", "marginal counts of one circuit");
  marginal->add_option("--joint", joint, "joint-counts document")->required();
  marginal->add_option("--circuit", circuit_id, "circuit id")->required();
  marginal->add_option("--out", marginal_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qbatch::cli::kInputFailure;
  }

  config.options.epsilon.mode = epsilon_mode == "absolute"
                                    ? qbatch::FilterMode::kAbsolute
                                    : qbatch::FilterMode::kTopFraction;
  config.options.epsilon.value = epsilon;
  config.options.solver =
      solver == "exact" ? qbatch::SolverKind::kExact : qbatch::SolverKind::kGreedy;

  if (*schedule) return qbatch::cli::cmd_schedule(config, std::cout, std::cerr);
  if (*layouts) return qbatch::cli::cmd_layouts(config, std::cout, std::cerr);
  if (*graph) return qbatch::cli::cmd_graph_dump(config, std::cout, std::cerr);
  return qbatch::cli::cmd_marginalize(joint, circuit_id, marginal_out, std::cout,
                                      std::cerr);
}

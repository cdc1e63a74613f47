// Copyright 2026 The entdist Authors
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

#include <CLI11.hpp>

#include "entdist/cli.hpp"

namespace cli = entdist::cli;

int main(int argc, char** argv) {
  CLI::App app{"entdist: entanglement distribution through noisy channels"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  int trials = 0;
  std::string gamma_grid, alpha_grid, p_grid, out, format, suite, config;
  bool reversed = false;
  auto* o_seed = app.add_option("--seed", seed, "master RNG seed");
  auto* o_trials = app.add_option("--trials", trials, "number of random trials");
  auto* o_gamma = app.add_option("--gamma-grid", gamma_grid, "a:b:step or comma list");
  auto* o_alpha = app.add_option("--alpha-grid", alpha_grid, "a:b:step or comma list");
  auto* o_p = app.add_option("--p-grid", p_grid, "a:b:step or comma list");
  auto* o_out = app.add_option("--out", out, "output file (default: stdout)");
  auto* o_format = app.add_option("--format", format, "csv or json");
  auto* o_suite = app.add_option("--suite", suite, "check suite");
  auto* o_rev = app.add_flag("--inject-reversed-time", reversed,
                             "append a non-divisible witness run to the markov suite");
  app.add_option("--config", config, "key=value file; flags take precedence");

  app.add_subcommand("fig-ad", "E_n of the optimal |alpha> vs |phi+> under amplitude damping");
  app.add_subcommand("crossover", "(gamma, alpha) advantage map");
  app.add_subcommand("check", "run a checker suite and emit a JSON report");
  app.add_subcommand("phase-damping", "discord and REE of dephased |phi+>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    const auto command = cli::parse_command(app.get_subcommands().front()->get_name());
    cli::RunConfig cfg = cli::default_config(command);
    if (!config.empty()) cli::apply_config_file(cfg, config);
    if (o_seed->count()) cfg.seed = seed;
    if (o_trials->count()) cfg.n_trials = trials;
    if (o_gamma->count()) cfg.gamma_grid = cli::parse_grid(gamma_grid);
    if (o_alpha->count()) cfg.alpha_grid = cli::parse_grid(alpha_grid);
    if (o_p->count()) cfg.p_grid = cli::parse_grid(p_grid);
    if (o_out->count()) cfg.out_path = out;
    if (o_format->count()) cfg.format = cli::parse_format(format);
    if (o_suite->count()) cfg.suite = suite;
    if (o_rev->count()) cfg.inject_reversed_time = reversed;
    return cli::run(cfg, std::cout, std::cerr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "entdist: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "entdist: " << e.what() << "\n";
    return cli::kExitFailure;
  }
}

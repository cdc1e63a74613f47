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

#pragma once

// Experiment runner behind the `entdist` executable. Commands render their
// output as text so they can be tested without touching the filesystem.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "entdist/protocols.hpp"

namespace entdist::cli {

enum class Command { fig_ad, crossover, check, phase_damping };
enum class OutputFormat { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // assertion failure or I/O error
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::fig_ad;
  std::uint64_t seed = 2026;
  int n_trials = -1;  // -1: suite default
  std::vector<double> gamma_grid;
  std::vector<double> alpha_grid;
  std::vector<double> p_grid;
  std::string out_path;  // empty: stdout
  OutputFormat format = OutputFormat::csv;
  std::string suite = "main";
  bool inject_reversed_time = false;

  /// Throws ContractError when a grid is unsorted or out of range for the
  /// command, or the suite name is unknown.
  void validate() const;
};

/// Defaults: gamma 0:0.99:0.01, alpha 0:0.5:0.005, p 0:0.5:0.025; JSON for
/// `check`, CSV otherwise.
RunConfig default_config(Command command);

/// "a:b:step" (inclusive) or a comma-separated list.
std::vector<double> parse_grid(std::string_view spec);

Command parse_command(std::string_view name);
OutputFormat parse_format(std::string_view name);

/// key=value lines ('#' starts a comment). Keys: seed, trials, gamma-grid,
/// alpha-grid, p-grid, out, format, suite, inject-reversed-time.
void apply_config_text(RunConfig& cfg, std::string_view text);
void apply_config_file(RunConfig& cfg, const std::string& path);

/// A rectangular table rendered as CSV (12 significant digits) or JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string csv() const;
  std::string json() const;
};

std::string format_number(double x);

Table cmd_fig_ad(const RunConfig& cfg);
Table cmd_crossover(const RunConfig& cfg);
Table cmd_phase_damping(const RunConfig& cfg);
CheckReport cmd_check(const RunConfig& cfg);

/// Region of (gamma, alpha) relative to the line alpha = (1 - gamma) / 2.
std::string_view crossover_region(double gamma, double alpha);

/// Runs the command and writes its output to cfg.out_path (or `out`).
/// Returns the process exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace entdist::cli

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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "entdist/cli.hpp"

namespace entdist::cli {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ContractError("not a number: '" + s + "'");
  }
  if (pos != s.size() || !std::isfinite(v)) throw ContractError("not a number: '" + s + "'");
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void check_grid(const std::vector<double>& g, double lo, double hi, bool hi_open,
                const char* name) {
  if (g.empty()) throw ContractError(std::string(name) + " grid is empty");
  if (!std::is_sorted(g.begin(), g.end())) {
    throw ContractError(std::string(name) + " grid must be ascending");
  }
  if (g.front() < lo || g.back() > hi || (hi_open && g.back() >= hi)) {
    throw ContractError(std::string(name) + " grid outside its valid range");
  }
}

}  // namespace

std::vector<double> parse_grid(std::string_view spec) {
  const std::string s = trim(spec);
  if (s.empty()) throw ContractError("empty grid specification");
  if (s.find(':') != std::string::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw ContractError("grid must be a:b:step");
    const double a = to_double(parts[0]);
    const double b = to_double(parts[1]);
    const double step = to_double(parts[2]);
    if (!(step > 0.0) || b < a) throw ContractError("grid needs step > 0 and a <= b");
    const double span = (b - a) / step;
    if (span > 1e7) throw ContractError("grid too large");
    const auto n = static_cast<long>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) out[i] = a + static_cast<double>(i) * step;
    // snap the endpoint so a:b:step hits b exactly when it divides evenly
    if (std::abs(out.back() - b) <= 1e-9 * step) out.back() = b;
    return out;
  }
  std::vector<double> out;
  for (const auto& p : split(s, ',')) out.push_back(to_double(p));
  return out;
}

Command parse_command(std::string_view name) {
  if (name == "fig-ad") return Command::fig_ad;
  if (name == "crossover") return Command::crossover;
  if (name == "check") return Command::check;
  if (name == "phase-damping") return Command::phase_damping;
  throw ContractError("unknown command: " + std::string(name));
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ContractError("unknown format: " + std::string(name));
}

RunConfig default_config(Command command) {
  RunConfig c;
  c.command = command;
  c.gamma_grid = parse_grid("0:0.99:0.01");
  c.alpha_grid = parse_grid("0:0.5:0.005");
  c.p_grid = parse_grid("0:0.5:0.025");
  c.format = command == Command::check ? OutputFormat::json : OutputFormat::csv;
  return c;
}

void RunConfig::validate() const {
  switch (command) {
    case Command::fig_ad:
      check_grid(gamma_grid, 0.0, 1.0, true, "gamma");
      break;
    case Command::crossover:
      check_grid(gamma_grid, 0.0, 1.0, false, "gamma");
      check_grid(alpha_grid, 0.0, 1.0, false, "alpha");
      break;
    case Command::phase_damping:
      check_grid(p_grid, 0.0, 0.5, false, "p");
      break;
    case Command::check: {
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw ContractError("unknown suite: " + suite);
      }
      if (n_trials == 0 || n_trials < -1) throw ContractError("trials must be positive");
      break;
    }
  }
}

void apply_config_text(RunConfig& cfg, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ContractError("config line " + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    std::replace(key.begin(), key.end(), '_', '-');
    if (key == "seed") {
      cfg.seed = std::stoull(value);
    } else if (key == "trials") {
      cfg.n_trials = static_cast<int>(to_double(value));
    } else if (key == "gamma-grid") {
      cfg.gamma_grid = parse_grid(value);
    } else if (key == "alpha-grid") {
      cfg.alpha_grid = parse_grid(value);
    } else if (key == "p-grid") {
      cfg.p_grid = parse_grid(value);
    } else if (key == "out") {
      cfg.out_path = value;
    } else if (key == "format") {
      cfg.format = parse_format(value);
    } else if (key == "suite") {
      cfg.suite = value;
    } else if (key == "inject-reversed-time") {
      cfg.inject_reversed_time = value == "1" || value == "true" || value == "yes";
    } else {
      throw ContractError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ContractError("cannot read config file " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  apply_config_text(cfg, buf.str());
}

}  // namespace entdist::cli

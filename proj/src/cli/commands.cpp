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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "entdist/cli.hpp"

namespace entdist::cli {

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string Table::csv() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(columns);
  for (const auto& r : rows) line(r);
  return out;
}

std::string Table::json() const {
  nlohmann::ordered_json j;
  j["columns"] = columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      // numbers stay numbers so the JSON is directly usable
      try {
        std::size_t pos = 0;
        const double v = std::stod(r[i], &pos);
        if (pos == r[i].size()) {
          obj[columns[i]] = v;
          continue;
        }
      } catch (const std::exception&) {
      }
      obj[columns[i]] = r[i];
    }
    j["rows"].push_back(std::move(obj));
  }
  return j.dump(2) + "\n";
}

Table cmd_fig_ad(const RunConfig& cfg) {
  cfg.validate();
  Table t{{"gamma", "alpha_max", "en_alpha_max", "en_bell", "diff"}, {}};
  for (double g : cfg.gamma_grid) {
    const double am = alpha_max(g);
    const double ea = ad_log_negativity(g, am);
    const double eb = ad_log_negativity(g, 0.5);
    t.rows.push_back({format_number(g), format_number(am), format_number(ea), format_number(eb),
                      format_number(ea - eb)});
  }
  return t;
}

std::string_view crossover_region(double gamma, double alpha) {
  constexpr double kBand = 1e-9;
  const double d = alpha - 0.5 * (1.0 - gamma);
  if (std::abs(d) <= kBand) return "crossover";
  return d < 0.0 ? "below" : "advantage";
}

Table cmd_crossover(const RunConfig& cfg) {
  cfg.validate();
  Table t{{"gamma", "alpha", "en_alpha", "en_bell", "region"}, {}};
  for (double g : cfg.gamma_grid) {
    const double eb = ad_log_negativity(g, 0.5);
    for (double a : cfg.alpha_grid) {
      t.rows.push_back({format_number(g), format_number(a), format_number(ad_log_negativity(g, a)),
                        format_number(eb), std::string(crossover_region(g, a))});
    }
  }
  return t;
}

Table cmd_phase_damping(const RunConfig& cfg) {
  cfg.validate();
  Table t{{"p", "delta_r", "e_r", "lower_bound", "gap"}, {}};
  const auto bell = max_entangled(2).density();
  const std::array<int, 1> rest{0};
  for (double p : cfg.p_grid) {
    const DensityMatrix rho = apply_on(phase_damping(p), bell, 1);
    const double dr = discord(rho, 1, rest, DiscordDistance::relative_entropy).value;
    const double er = ree_ppt(rho, {{0}, {1}}).value;
    const double lb = von_neumann_entropy(rho.reduced({1}).mat()) - von_neumann_entropy(rho.mat());
    t.rows.push_back({format_number(p), format_number(dr), format_number(er), format_number(lb),
                      format_number(dr - er)});
  }
  return t;
}

CheckReport cmd_check(const RunConfig& cfg) {
  cfg.validate();
  SuiteOptions o;
  o.seed = cfg.seed;
  o.trials = cfg.n_trials;
  o.inject_reversed_time = cfg.inject_reversed_time;
  return run_suite(cfg.suite, o);
}

namespace {

bool emit(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  if (cfg.out_path.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) {
    err << "entdist: cannot write " << cfg.out_path << "\n";
    return false;
  }
  return true;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    err << "entdist: " << e.what() << "\n";
    return kExitUsage;
  }
  if (cfg.command == Command::check) {
    const CheckReport rep = cmd_check(cfg);
    if (!emit(cfg, to_json(rep), out, err)) return kExitFailure;
    const int hard = rep.hard_failures();
    if (hard > 0) err << "entdist: " << hard << " check(s) failed in suite " << rep.check << "\n";
    return hard > 0 ? kExitFailure : kExitOk;
  }
  Table t;
  switch (cfg.command) {
    case Command::fig_ad:
      t = cmd_fig_ad(cfg);
      break;
    case Command::crossover:
      t = cmd_crossover(cfg);
      break;
    case Command::phase_damping:
      t = cmd_phase_damping(cfg);
      break;
    case Command::check:
      break;
  }
  const std::string text = cfg.format == OutputFormat::json ? t.json() : t.csv();
  return emit(cfg, text, out, err) ? kExitOk : kExitFailure;
}

}  // namespace entdist::cli

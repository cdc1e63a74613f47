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

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "entdist/cli.hpp"
#include "entdist/errors.hpp"
#include "oracles.hpp"

using namespace entdist;
namespace fs = std::filesystem;

namespace {

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::size_t col(const std::string& name) const {
    return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
  }
};

Csv parse_csv(const std::string& text) {
  Csv c;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (first) c.header = cells, first = false;
    else c.rows.push_back(cells);
  }
  return c;
}

std::pair<int, std::string> run_text(const cli::RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = cli::run(cfg, out, err);
  return {code, out.str()};
}

int shell(const std::string& cmd) {
  const int st = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream b;
  b << f.rdbuf();
  return b.str();
}

const std::string kExe = ENTDIST_CLI_PATH;

}  // namespace

TEST_CASE("grid parsing") {
  const auto g = cli::parse_grid("0:0.99:0.01");
  CHECK(g.size() == 100);
  CHECK(g.back() == 0.99);
  CHECK(cli::parse_grid("0.1, 0.2,0.5") == std::vector<double>{0.1, 0.2, 0.5});
  CHECK(cli::parse_grid("0:0.5:0.025").size() == 21);
  CHECK_THROWS_AS(cli::parse_grid("1:0:0.1"), ContractError);
  CHECK_THROWS_AS(cli::parse_grid("0:1"), ContractError);
  CHECK_THROWS_AS(cli::parse_grid("0:1:0"), ContractError);
  CHECK_THROWS_AS(cli::parse_grid("a,b"), ContractError);

  auto cfg = cli::default_config(cli::Command::fig_ad);
  cfg.gamma_grid = {0.5, 0.2};
  CHECK_THROWS_AS(cfg.validate(), ContractError);
  cfg.gamma_grid = {0.2, 1.0};
  CHECK_THROWS_AS(cfg.validate(), ContractError);
  auto pd = cli::default_config(cli::Command::phase_damping);
  pd.p_grid = {0.1, 0.6};
  CHECK_THROWS_AS(pd.validate(), ContractError);
}

TEST_CASE("config text") {
  auto cfg = cli::default_config(cli::Command::check);
  cli::apply_config_text(cfg, "# comment\nseed = 7\nsuite=teleport\n\ntrials=5  # inline\n"
                              "gamma_grid=0:0.5:0.25\n");
  CHECK(cfg.seed == 7);
  CHECK(cfg.suite == "teleport");
  CHECK(cfg.n_trials == 5);
  CHECK(cfg.gamma_grid.size() == 3);
  CHECK_THROWS_AS(cli::apply_config_text(cfg, "colour=blue\n"), ContractError);
  CHECK_THROWS_AS(cli::apply_config_text(cfg, "seed\n"), ContractError);
}

TEST_CASE("fig-ad table") {
  auto cfg = cli::default_config(cli::Command::fig_ad);
  const auto [code, text] = run_text(cfg);
  CHECK(code == 0);
  const auto csv = parse_csv(text);
  CHECK(csv.header == std::vector<std::string>{"gamma", "alpha_max", "en_alpha_max", "en_bell",
                                               "diff"});
  REQUIRE(csv.rows.size() == 100);
  CHECK(csv.rows[0][csv.col("alpha_max")] == "0.5");
  CHECK(csv.rows[0][csv.col("diff")] == "0");
  const auto& r50 = csv.rows[50];
  CHECK(r50[0] == "0.5");
  const double am = 1 / (0.5 / std::sqrt(0.5) + 2);
  const double want = oracle::ad_en(0.5, am) - oracle::ad_en(0.5, 0.5);
  CHECK(std::abs(std::stod(r50[csv.col("diff")]) - want) <= 1e-9);
  const auto& last = csv.rows.back();
  CHECK(std::stod(last[csv.col("en_bell")]) < 0.02);
  CHECK(std::stod(last[csv.col("diff")]) < 0.1);
  CHECK(text.find('\r') == std::string::npos);

  cfg.format = cli::OutputFormat::json;
  const auto j = nlohmann::json::parse(run_text(cfg).second);
  CHECK(j["rows"].size() == 100);
  CHECK(j["rows"][50]["gamma"] == 0.5);
}

TEST_CASE("crossover regions") {
  CHECK(cli::crossover_region(0.6, 0.2) == "crossover");
  CHECK(cli::crossover_region(0.6, 0.1) == "below");
  CHECK(cli::crossover_region(0.6, 0.4) == "advantage");
  auto cfg = cli::default_config(cli::Command::crossover);
  cfg.gamma_grid = {0.6};
  cfg.alpha_grid = {0.1, 0.2, 0.4};
  const auto csv = parse_csv(run_text(cfg).second);
  REQUIRE(csv.rows.size() == 3);
  const auto ea = csv.col("en_alpha"), eb = csv.col("en_bell"), rg = csv.col("region");
  CHECK(csv.rows[0][rg] == "below");
  CHECK(std::stod(csv.rows[0][ea]) <= std::stod(csv.rows[0][eb]));
  CHECK(csv.rows[1][rg] == "crossover");
  CHECK(csv.rows[2][rg] == "advantage");
  CHECK(std::stod(csv.rows[2][ea]) > std::stod(csv.rows[2][eb]));
}

TEST_CASE("phase damping table") {
  auto cfg = cli::default_config(cli::Command::phase_damping);
  cfg.p_grid = {0.0, 0.25, 0.5};
  const auto csv = parse_csv(run_text(cfg).second);
  REQUIRE(csv.rows.size() == 3);
  const auto dr = csv.col("delta_r"), er = csv.col("e_r"), gap = csv.col("gap");
  CHECK(std::stod(csv.rows[0][dr]) == doctest::Approx(1).epsilon(1e-6));
  CHECK(std::stod(csv.rows[0][er]) == doctest::Approx(1).epsilon(1e-6));
  CHECK(std::abs(std::stod(csv.rows[2][dr])) < 1e-6);
  CHECK(std::abs(std::stod(csv.rows[2][er])) < 1e-6);
  const double want = 1 - oracle::h2(0.25);
  CHECK(std::abs(std::stod(csv.rows[1][dr]) - want) < 1e-4);
  CHECK(std::abs(std::stod(csv.rows[1][er]) - want) < 1e-4);
  for (const auto& r : csv.rows) CHECK(std::stod(r[gap]) <= 1e-4);
}

TEST_CASE("executable: exit codes, files and byte stability") {
  const fs::path dir = fs::temp_directory_path() / "entdist_cli_test";
  fs::create_directories(dir);
  const auto a = dir / "a.csv", b = dir / "b.csv";
  CHECK(shell(kExe + " fig-ad --out " + a.string()) == 0);
  CHECK(shell(kExe + " fig-ad --out " + b.string()) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).size() > 1000);

  CHECK(shell(kExe + " crossover --gamma-grid 0:1:0.25 --alpha-grid 0:0.5:0.1 --out " +
              a.string()) == 0);
  CHECK(shell(kExe + " crossover --gamma-grid 0:1:0.25 --alpha-grid 0:0.5:0.1 --out " +
              b.string()) == 0);
  CHECK(slurp(a) == slurp(b));

  CHECK(shell(kExe + " check --suite nosuch") == 2);
  CHECK(shell(kExe + " fig-ad --gamma-grid 0.5:0.2:0.1") == 2);
  CHECK(shell(kExe + " fig-ad --gamma-grid 0:1:0.5") == 2);
  CHECK(shell(kExe + " --bogus-flag fig-ad") == 2);
  CHECK(shell(kExe) == 2);
  CHECK(shell(kExe + " fig-ad --out /nonexistent_dir/x.csv") == 1);

  const auto rep = dir / "rep.json";
  CHECK(shell(kExe + " check --suite teleport --trials 5 --out " + rep.string()) == 0);
  const auto j = nlohmann::json::parse(slurp(rep));
  CHECK(j["check"] == "teleport");
  CHECK(j["n_trials"] == 5);

  // config file, overridden by a flag
  const auto conf = dir / "run.conf";
  std::ofstream(conf) << "suite = teleport\ntrials = 2\nseed = 9\n";
  CHECK(shell(kExe + " check --config " + conf.string() + " --trials 3 --out " + rep.string()) ==
        0);
  const auto j2 = nlohmann::json::parse(slurp(rep));
  CHECK(j2["n_trials"] == 3);
  CHECK(j2["seed"] == 9);

  CHECK(shell(kExe + " check --suite markov --trials 1 --inject-reversed-time --out " +
              rep.string()) == 0);
  const auto j3 = nlohmann::json::parse(slurp(rep));
  bool expected = false;
  for (const auto& f : j3["failures"]) expected |= f["kind"] == "expected_violation";
  CHECK(expected);
  fs::remove_all(dir);
}

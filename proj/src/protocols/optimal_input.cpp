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
#include <array>
#include <cmath>
#include <numbers>

#include "entdist/optimize.hpp"
#include "entdist/protocols.hpp"

namespace entdist {
namespace {

constexpr double kPi = std::numbers::pi;

CMatrix euler_su2(double a, double b, double c) {
  auto rz = [](double t) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, -0.5 * t);
    m(1, 1) = std::polar(1.0, 0.5 * t);
    return m;
  };
  CMatrix ry(2, 2);
  ry << std::cos(0.5 * b), -std::sin(0.5 * b), std::sin(0.5 * b), std::cos(0.5 * b);
  return rz(a) * ry * rz(c);
}

// Search coordinates use s with alpha = sin^2 s, so the simplex never leaves
// the valid range.
std::vector<double> to_params(std::span<const double> x) {
  const double s = std::sin(x[0]);
  return {s * s, x[1], x[2], x[3]};
}

struct Candidate {
  std::vector<double> x;
  double value;
};

}  // namespace

PureState input_state(std::span<const double> params) {
  if (params.size() != 4) throw ContractError("input_state: expected (alpha, a, b, c)");
  const double alpha = params[0];
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ContractError("input_state: alpha outside [0, 1]");
  const CMatrix v = euler_su2(params[1], params[2], params[3]);
  CVector psi(4);
  const std::array<double, 2> amp{std::sqrt(1.0 - alpha), std::sqrt(alpha)};
  for (int a = 0; a < 2; ++a) {
    for (int c = 0; c < 2; ++c) psi(2 * a + c) = amp[a] * v(c, a);
  }
  psi.normalize();
  return PureState(psi, SystemShape{2, 2});
}

InputSearchResult optimal_input_search(const KrausChannel& channel,
                                       const InputObjective& objective, int budget,
                                       std::uint64_t seed) {
  if (channel.dim() != 2) throw ContractError("optimal_input_search: C must be a qubit");
  int evals = 0;
  auto f = [&](std::span<const double> x) {
    ++evals;
    const auto p = to_params(x);
    return -objective(apply_on(channel, input_state(p).density(), 1));
  };

  std::vector<Candidate> cands;
  constexpr int kAlphaPoints = 11;
  for (int k = 0; k < kAlphaPoints; ++k) {
    const double alpha = 0.5 * k / (kAlphaPoints - 1);
    std::vector<double> x{std::asin(std::sqrt(alpha)), 0.0, 0.0, 0.0};
    const double v = f(x);
    cands.push_back({std::move(x), v});
  }
  auto rng = make_engine(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 0; k < budget; ++k) {
    std::vector<double> x{std::asin(std::sqrt(unit(rng))), 2 * kPi * unit(rng),
                          kPi * unit(rng), 2 * kPi * unit(rng)};
    const double v = f(x);
    cands.push_back({std::move(x), v});
  }
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& a, const Candidate& b) { return a.value < b.value; });

  constexpr int kRefine = 3;
  const std::array<double, 4> step{0.1, 0.5, 0.5, 0.5};
  Candidate best = cands.front();
  for (int k = 0; k < std::min<int>(kRefine, static_cast<int>(cands.size())); ++k) {
    const SimplexResult r = nelder_mead(f, cands[k].x, step, 600, 1e-7);
    if (r.value < best.value) best = {r.x, r.value};
  }
  const auto params = to_params(best.x);
  return {input_state(params), -best.value, params, evals};
}

InputSearchResult optimal_input_search(const KrausChannel& channel, Quantifier measure,
                                       int budget, std::uint64_t seed,
                                       const OptimizerConfig& cfg) {
  const Bipartition cut{{0}, {1}};
  return optimal_input_search(
      channel, [&](const DensityMatrix& rho) { return evaluate(measure, rho, cut, cfg).value; },
      budget, seed);
}

IneqResult check_thm10_bound(const KrausChannel& channel, const DensityMatrix& rho_i,
                             DiscordDistance distance, int budget, const OptimizerConfig& cfg) {
  const DistributionScenario s{rho_i, channel, Quantifier::ree, distance};
  if (rho_i.shape().dim(kSysA) < channel.dim()) {
    throw ContractError("check_thm10_bound: need d_A >= d_C");
  }
  DistributedEntanglement de = distributed_entanglement(s, cfg);

  // coarse discord grid inside the search, full grid for the reported value
  OptimizerConfig coarse = cfg;
  coarse.grid_theta = 16;
  coarse.grid_phi = 8;
  const std::array<int, 1> rest{0};
  const InputSearchResult best = optimal_input_search(
      channel,
      [&](const DensityMatrix& rho) { return discord(rho, 1, rest, distance, coarse).value; },
      budget, cfg.seed);
  OptimizerReport rep =
      discord(apply_on(channel, best.state.density(), 1), 1, rest, distance, cfg);
  const double lhs = rep.value;
  rep.params.insert(rep.params.end(), best.params.begin(), best.params.end());
  de.reports.push_back(std::move(rep));
  return make_ineq(lhs, de.difference, true, std::move(de.reports));
}

}  // namespace entdist

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
#include <limits>

#include "entdist/protocols.hpp"

namespace entdist {

Bipartition cut_a_bc() { return {{kSysA}, {kSysB, kSysC}}; }
Bipartition cut_ac_b() { return {{kSysA, kSysC}, {kSysB}}; }

void DistributionScenario::validate() const {
  if (initial.shape().size() != 3) {
    throw ContractError("DistributionScenario: initial state must have shape (A, B, C)");
  }
  if (channel.dim() != initial.shape().dim(kSysC)) {
    throw ContractError("DistributionScenario: channel dimension does not match C");
  }
}

DensityMatrix DistributionScenario::final_state() const {
  validate();
  return apply_on(channel, initial, kSysC);
}

namespace {

struct Term {
  double value = 0.0;
  bool variational = false;
};

Term measure_on(Quantifier q, const DensityMatrix& rho, const Bipartition& cut,
                const OptimizerConfig& cfg, std::vector<OptimizerReport>& reports) {
  Evaluation e = evaluate(q, rho, cut, cfg);
  if (e.report) reports.push_back(std::move(*e.report));
  return {e.value, e.variational};
}

double discord_c_ab(const DensityMatrix& rho, DiscordDistance d, const OptimizerConfig& cfg,
                    std::vector<OptimizerReport>& reports) {
  const std::array<int, 2> rest{kSysA, kSysB};
  OptimizerReport rep = discord(rho, kSysC, rest, d, cfg);
  const double v = rep.value;
  reports.push_back(std::move(rep));
  return v;
}

// E^{A|BC}(rho_f) - E^{AC|B}(rho_i)
DistributedEntanglement distributed(Quantifier q, const DensityMatrix& rho_i,
                                    const DensityMatrix& rho_f, const OptimizerConfig& cfg) {
  DistributedEntanglement out;
  const Term before = measure_on(q, rho_i, cut_ac_b(), cfg, out.reports);
  const Term after = measure_on(q, rho_f, cut_a_bc(), cfg, out.reports);
  out.initial = before.value;
  out.final = after.value;
  out.difference = after.value - before.value;
  out.variational = before.variational || after.variational;
  return out;
}

void require_tripartite(const DensityMatrix& rho) {
  if (rho.shape().size() != 3) throw ContractError("expected a state on (A, B, C)");
}

}  // namespace

DistributedEntanglement distributed_entanglement(const DistributionScenario& s,
                                                 const OptimizerConfig& cfg) {
  return distributed(s.measure, s.initial, s.final_state(), cfg);
}

IneqResult make_ineq(double lhs, double rhs, bool variational,
                     std::vector<OptimizerReport> reports) {
  IneqResult r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = variational ? kVariationalSlack : kExactSlack;
  r.holds = lhs >= rhs - r.slack;
  r.reports = std::move(reports);
  return r;
}

IneqResult check_main_inequality(const DensityMatrix& rho, Quantifier measure,
                                 DiscordDistance discord, const OptimizerConfig& cfg) {
  require_tripartite(rho);
  DistributedEntanglement de = distributed(measure, rho, rho, cfg);
  const double lhs = discord_c_ab(rho, discord, cfg, de.reports);
  return make_ineq(lhs, de.difference, true, std::move(de.reports));
}

IneqResult check_noisy_bound(const DistributionScenario& s, const OptimizerConfig& cfg) {
  const DensityMatrix rho_f = s.final_state();
  DistributedEntanglement de = distributed(s.measure, s.initial, rho_f, cfg);
  const double di = discord_c_ab(s.initial, s.discord, cfg, de.reports);
  const double df = discord_c_ab(rho_f, s.discord, cfg, de.reports);
  return make_ineq(std::min(di, df), de.difference, true, std::move(de.reports));
}

IneqResult check_divisible_bound(const DistributionScenario& s,
                                 const std::pair<KrausChannel, KrausChannel>& split,
                                 const OptimizerConfig& cfg) {
  s.validate();
  if (split.first.dim() != s.channel.dim() || split.second.dim() != s.channel.dim() ||
      !channels_equal(compose(split.second, split.first), s.channel, 1e-9)) {
    throw ContractError("check_divisible_bound: split does not compose to the channel");
  }
  const DensityMatrix rho_f = s.final_state();
  const DensityMatrix mid = apply_on(split.first, s.initial, kSysC);
  DistributedEntanglement de = distributed(s.measure, s.initial, rho_f, cfg);
  const double lhs = discord_c_ab(mid, s.discord, cfg, de.reports);
  return make_ineq(lhs, de.difference, true, std::move(de.reports));
}

std::vector<double> time_grid(double horizon, int n) {
  if (n < 2 || !(horizon > 0.0)) throw ContractError("time_grid: need n >= 2 and T > 0");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[k] = horizon * k / (n - 1);
  out.back() = horizon;
  return out;
}

TimeEvolutionResult check_time_evolution_bound(const Snapshot& snapshot,
                                               const DensityMatrix& rho_i, double horizon,
                                               std::span<const double> t_grid,
                                               Quantifier measure, DiscordDistance discord,
                                               const OptimizerConfig& cfg) {
  require_tripartite(rho_i);
  if (t_grid.empty()) throw ContractError("check_time_evolution_bound: empty time grid");
  for (double t : t_grid) {
    if (!(t >= 0.0 && t <= horizon)) {
      throw ContractError("check_time_evolution_bound: times must lie in [0, T]");
    }
  }
  const DensityMatrix rho_f = apply_on(snapshot(horizon), rho_i, kSysC);
  const DistributedEntanglement de = distributed(measure, rho_i, rho_f, cfg);

  TimeEvolutionResult out;
  out.times.assign(t_grid.begin(), t_grid.end());
  out.min_discord = std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    std::vector<OptimizerReport> reps;
    const DensityMatrix rho_t = apply_on(snapshot(t), rho_i, kSysC);
    const double lhs = discord_c_ab(rho_t, discord, cfg, reps);
    out.min_discord = std::min(out.min_discord, lhs);
    out.points.push_back(make_ineq(lhs, de.difference, true, std::move(reps)));
  }
  out.bound = make_ineq(out.min_discord, de.difference, true, de.reports);
  return out;
}

TimeEvolutionResult check_markov_bound(const MarkovFamily& fam, const DensityMatrix& rho_i,
                                       double horizon, std::span<const double> t_grid,
                                       Quantifier measure, DiscordDistance discord,
                                       const OptimizerConfig& cfg) {
  const Snapshot snap = [fam](double t) { return markov_snapshot(fam, 0.0, t); };
  return check_time_evolution_bound(snap, rho_i, horizon, t_grid, measure, discord, cfg);
}

Snapshot echo_snapshot(double rate, double horizon) {
  return [rate, horizon](double t) {
    const double tau = std::max(0.0, std::min(t, horizon - t));
    return amplitude_damping(-std::expm1(-rate * tau));
  };
}

DensityMatrix choi_state(const KrausChannel& channel) {
  return apply_on(channel, max_entangled(channel.dim()).density(), 1);
}

IneqResult check_pauli_optimality(const PauliSpec& spec, Quantifier measure, int trials,
                                  std::uint64_t seed, const OptimizerConfig& cfg) {
  const KrausChannel ch = pauli_channel(spec);
  const Bipartition cut{{0}, {1}};
  std::vector<OptimizerReport> reports;
  auto value = [&](const DensityMatrix& rho) {
    return measure_on(measure, apply_on(ch, rho, 1), cut, cfg, reports);
  };
  const Term bell = value(max_entangled(2).density());
  bool variational = bell.variational;
  double best = -std::numeric_limits<double>::infinity();
  auto consider = [&](const DensityMatrix& rho) {
    const Term t = value(rho);
    variational = variational || t.variational;
    best = std::max(best, t.value);
  };
  constexpr int kAlphaPoints = 21;
  for (int k = 0; k < kAlphaPoints; ++k) consider(alpha_state(0.5 * k / (kAlphaPoints - 1)).density());
  const SystemShape two{2, 2};
  for (int k = 0; k < trials; ++k) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(k));
    if (k % 2 == 0) {
      consider(random_mixed(two, {s, Ensemble::ginibre_mixed}));
    } else {
      consider(random_pure(two, {s, Ensemble::haar_pure}).density());
    }
  }
  // keep only the reports of the reference evaluation and the worst case
  reports.resize(std::min<std::size_t>(reports.size(), 1));
  return make_ineq(bell.value, best, variational, std::move(reports));
}

IneqResult check_subadditive_bound(const KrausChannel& channel, const DensityMatrix& rho_i,
                                   Quantifier measure, const OptimizerConfig& cfg) {
  if (measure != Quantifier::log_negativity && measure != Quantifier::ree) {
    throw ContractError("check_subadditive_bound: measure must be log_negativity or ree");
  }
  const DistributionScenario s{rho_i, channel, measure, DiscordDistance::relative_entropy};
  DistributedEntanglement de = distributed_entanglement(s, cfg);
  const Term lhs = measure_on(measure, choi_state(channel), {{0}, {1}}, cfg, de.reports);
  return make_ineq(lhs.value, de.difference, lhs.variational || de.variational,
                   std::move(de.reports));
}

IneqResult check_subadditive_bound(const PauliSpec& spec, const DensityMatrix& rho_i,
                                   Quantifier measure, const OptimizerConfig& cfg) {
  return check_subadditive_bound(pauli_channel(spec), rho_i, measure, cfg);
}

DensityMatrix random_separable_preshared(int dim_a, int dim_b, int dim_c, int terms,
                                         std::uint64_t seed) {
  if (terms < 1) throw ContractError("random_separable_preshared: need at least one term");
  auto rng = make_engine(seed);
  std::exponential_distribution<double> expo(1.0);
  const SystemShape ac{dim_a, dim_c};
  const SystemShape b{dim_b};
  const SystemShape out_shape{dim_a, dim_b, dim_c};
  const std::array<int, 3> order{0, 2, 1};  // (A, C, B) -> (A, B, C)
  std::vector<double> w(static_cast<std::size_t>(terms));
  for (auto& x : w) x = expo(rng);
  double total = 0.0;
  for (double x : w) total += x;
  CMatrix acc = CMatrix::Zero(out_shape.total(), out_shape.total());
  for (int k = 0; k < terms; ++k) {
    const DensityMatrix rac = random_mixed(ac, {derive_seed(seed, 2 * k), Ensemble::ginibre_mixed});
    const DensityMatrix rb = random_mixed(b, {derive_seed(seed, 2 * k + 1), Ensemble::ginibre_mixed});
    acc += (w[k] / total) * tensor(rac, rb).permuted(order).mat();
  }
  return DensityMatrix(acc, out_shape);
}

}  // namespace entdist

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

#include "entdist/protocols.hpp"

namespace entdist {
namespace {

constexpr double kStrictAdvantage = 1e-12;

const Bipartition& two_qubit_cut() {
  static const Bipartition cut{{0}, {1}};
  return cut;
}

double state_log_negativity(double alpha) {
  return log_negativity(alpha_state(alpha).density(), two_qubit_cut());
}

}  // namespace

double ad_log_negativity(double gamma, double alpha) {
  const DensityMatrix out = apply_on(amplitude_damping(gamma), alpha_state(alpha).density(), 1);
  return log_negativity(out, two_qubit_cut());
}

AdvantageTable amplitude_damping_advantage(double gamma, std::span<const double> alpha_grid) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw ContractError("amplitude_damping_advantage: gamma must lie in [0, 1]");
  }
  AdvantageTable t;
  t.gamma = gamma;
  const double bell = ad_log_negativity(gamma, 0.5);
  for (double a : alpha_grid) {
    AdvantageRow row;
    row.alpha = a;
    row.en_alpha = ad_log_negativity(gamma, a);
    row.en_bell = bell;
    row.diff = row.en_alpha - bell;
    row.advantage = row.diff > kStrictAdvantage;
    t.rows.push_back(row);
  }
  t.crossover_alpha = 0.5 * (1.0 - gamma);
  t.crossover_gap = std::abs(ad_log_negativity(gamma, t.crossover_alpha) - bell);
  return t;
}

double alpha_max(double gamma) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw ContractError("alpha_max: need 0 <= gamma < 1");
  return 1.0 / (gamma / std::sqrt(1.0 - gamma) + 2.0);
}

LittleEntanglementWitness little_entanglement_witness(double epsilon) {
  if (!(epsilon > 0.0)) throw ContractError("little_entanglement_witness: epsilon must be > 0");
  // E_n(|alpha>) increases on [0, 1/2]; keep lo feasible (E_n <= epsilon).
  constexpr double kCap = 0.45;  // alpha = 1/2 never gives a strict advantage
  double lo = 0.0;
  double hi = kCap;
  if (state_log_negativity(hi) <= epsilon) {
    lo = hi;
  } else {
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (state_log_negativity(mid) <= epsilon ? lo : hi) = mid;
    }
  }
  if (lo <= 0.0) lo = 0.5 * hi;  // epsilon below resolution; still entangled

  LittleEntanglementWitness w;
  w.alpha = lo;
  w.en_state = state_log_negativity(lo);
  // any gamma in (1 - 2 alpha, 1) works; take the midpoint
  w.gamma = 1.0 - lo;
  const double lhs = ad_log_negativity(w.gamma, lo);
  const double rhs = ad_log_negativity(w.gamma, 0.5);
  IneqResult r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = 0.0;
  r.holds = lhs > rhs;
  w.advantage = r;
  return w;
}

}  // namespace entdist

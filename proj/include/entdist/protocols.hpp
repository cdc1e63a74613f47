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

// Entanglement distribution: Alice holds A and C, Bob holds B, and C is sent
// to Bob through a noisy channel. Subsystems are always ordered (A, B, C).

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "entdist/channels.hpp"
#include "entdist/measures.hpp"

namespace entdist {

inline constexpr int kSysA = 0;
inline constexpr int kSysB = 1;
inline constexpr int kSysC = 2;

Bipartition cut_a_bc();  // A|BC
Bipartition cut_ac_b();  // AC|B

struct DistributionScenario {
  DensityMatrix initial;  // shape (A, B, C)
  KrausChannel channel;   // acts on C
  Quantifier measure = Quantifier::ree;
  DiscordDistance discord = DiscordDistance::relative_entropy;

  /// Throws ContractError unless initial is tripartite and the channel
  /// dimension matches C.
  void validate() const;
  DensityMatrix final_state() const;
};

struct DistributedEntanglement {
  double initial = 0.0;     // E^{AC|B}(rho_i)
  double final = 0.0;       // E^{A|BC}(rho_f)
  double difference = 0.0;  // final - initial
  bool variational = false;
  std::vector<OptimizerReport> reports;
};

DistributedEntanglement distributed_entanglement(const DistributionScenario& s,
                                                 const OptimizerConfig& cfg = {});

/// Outcome of one inequality lhs >= rhs.
struct IneqResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = true;  // lhs >= rhs - slack
  std::vector<OptimizerReport> reports;

  double margin() const { return lhs - rhs; }
};

inline constexpr double kExactSlack = 1e-9;
inline constexpr double kVariationalSlack = 1e-3;

IneqResult make_ineq(double lhs, double rhs, bool variational,
                     std::vector<OptimizerReport> reports = {});

/// Delta^{C|AB}(rho) >= E^{A|BC}(rho) - E^{AC|B}(rho).
IneqResult check_main_inequality(const DensityMatrix& rho, Quantifier measure,
                                 DiscordDistance discord, const OptimizerConfig& cfg = {});

/// min(Delta^{C|AB}(rho_i), Delta^{C|AB}(rho_f)) >= E^{A|BC}(rho_f) - E^{AC|B}(rho_i).
IneqResult check_noisy_bound(const DistributionScenario& s, const OptimizerConfig& cfg = {});

/// Delta^{C|AB}(split.first[rho_i]) >= E^{A|BC}(rho_f) - E^{AC|B}(rho_i), where the
/// channel factors as split.second after split.first.
IneqResult check_divisible_bound(const DistributionScenario& s,
                                 const std::pair<KrausChannel, KrausChannel>& split,
                                 const OptimizerConfig& cfg = {});

/// Lambda_(t, 0) for a time-dependent evolution.
using Snapshot = std::function<KrausChannel(double)>;

struct TimeEvolutionResult {
  std::vector<double> times;
  std::vector<IneqResult> points;  // one per time
  double min_discord = 0.0;        // min_t Delta^{C|AB}(rho_t)
  IneqResult bound;                // min_t Delta >= E^{A|BC}(rho_T) - E^{AC|B}(rho_0)
};

/// Delta^{C|AB}(rho_t) >= E^{A|BC}(rho_T) - E^{AC|B}(rho_0) for t on the grid.
TimeEvolutionResult check_time_evolution_bound(const Snapshot& snapshot,
                                               const DensityMatrix& rho_i, double horizon,
                                               std::span<const double> t_grid,
                                               Quantifier measure, DiscordDistance discord,
                                               const OptimizerConfig& cfg = {});

TimeEvolutionResult check_markov_bound(const MarkovFamily& fam, const DensityMatrix& rho_i,
                                       double horizon, std::span<const double> t_grid,
                                       Quantifier measure = Quantifier::ree,
                                       DiscordDistance discord = DiscordDistance::relative_entropy,
                                       const OptimizerConfig& cfg = {});

/// Amplitude damping that runs forward and then backward in time:
/// gamma(t) = 1 - exp(-rate min(t, horizon - t)). Not CP-divisible, so the
/// time-evolution bound may fail for it.
Snapshot echo_snapshot(double rate, double horizon);

/// Evenly spaced grid 0, T/(n-1), ..., T.
std::vector<double> time_grid(double horizon, int n);

// --- teleportation ----------------------------------------------------------

/// Teleports R of rho (A, R) through resource (R~, C): joint measurement of
/// R R~ in the basis (U_i (x) I)|phi+>, then U_i applied to C. Requires d^2
/// unitaries whose basis is orthonormal. Returns the averaged state on (A, C).
DensityMatrix teleport_through(const DensityMatrix& resource, const DensityMatrix& rho,
                               std::span<const CMatrix> corrections);

/// Lambda applied to C of |phi+> on (A, C).
DensityMatrix choi_state(const KrausChannel& channel);

// --- channel optimality -----------------------------------------------------

/// E(Lambda_p[phi+]) >= E(Lambda_p[rho]) for rho drawn from random mixed and
/// pure states plus the |alpha> family. rhs is the sampled maximum.
IneqResult check_pauli_optimality(const PauliSpec& spec, Quantifier measure, int trials,
                                  std::uint64_t seed, const OptimizerConfig& cfg = {});

/// E^{A|C}(Lambda[phi+_{d_C}]) >= E^{A|BC}(rho_f) - E^{AC|B}(rho_i) for a
/// subadditive E (log_negativity or ree).
IneqResult check_subadditive_bound(const KrausChannel& channel, const DensityMatrix& rho_i,
                                   Quantifier measure, const OptimizerConfig& cfg = {});
IneqResult check_subadditive_bound(const PauliSpec& spec, const DensityMatrix& rho_i,
                                   Quantifier measure, const OptimizerConfig& cfg = {});

// --- amplitude damping ------------------------------------------------------

/// E_n(Lambda_ad[|alpha>]) with the channel on the second qubit.
double ad_log_negativity(double gamma, double alpha);

struct AdvantageRow {
  double alpha = 0.0;
  double en_alpha = 0.0;
  double en_bell = 0.0;
  double diff = 0.0;  // en_alpha - en_bell
  bool advantage = false;
};

struct AdvantageTable {
  double gamma = 0.0;
  std::vector<AdvantageRow> rows;
  double crossover_alpha = 0.0;  // (1 - gamma) / 2
  double crossover_gap = 0.0;    // |E_n(alpha~) - E_n(phi+)|
};

AdvantageTable amplitude_damping_advantage(double gamma, std::span<const double> alpha_grid);

/// 1 / (gamma / sqrt(1 - gamma) + 2), 0 <= gamma < 1.
double alpha_max(double gamma);

struct LittleEntanglementWitness {
  double alpha = 0.0;
  double gamma = 0.0;
  double en_state = 0.0;  // E_n(|alpha>)
  IneqResult advantage;   // lhs = E_n(Lambda[|alpha>]), rhs = E_n(Lambda[phi+])
};

/// A state with 0 < E_n <= epsilon that beats phi+ through some amplitude
/// damping channel.
LittleEntanglementWitness little_entanglement_witness(double epsilon);

// --- optimal inputs ---------------------------------------------------------

struct InputSearchResult {
  PureState state;
  double value = 0.0;
  std::vector<double> params;  // (alpha, Euler angles of V_C)
  int evaluations = 0;
};

/// |psi> = (I (x) V)(sqrt(1 - alpha)|00> + sqrt(alpha)|11>), V in SU(2).
PureState input_state(std::span<const double> params);

using InputObjective = std::function<double(const DensityMatrix&)>;

/// Maximizes objective(Lambda^C[|psi><psi|]) over pure two-qubit inputs:
/// alpha grid plus `budget` random parameter draws, then simplex refinement.
InputSearchResult optimal_input_search(const KrausChannel& channel,
                                       const InputObjective& objective, int budget = 32,
                                       std::uint64_t seed = 0);
InputSearchResult optimal_input_search(const KrausChannel& channel, Quantifier measure,
                                       int budget = 32, std::uint64_t seed = 0,
                                       const OptimizerConfig& cfg = {});

/// max_psi Delta^{C|A}(Lambda^C[psi]) >= E^{A|BC}(rho_f) - E^{AC|B}(rho_i) with
/// E = E_R. lhs is a searched maximum, so a failure is inconclusive.
IneqResult check_thm10_bound(const KrausChannel& channel, const DensityMatrix& rho_i,
                             DiscordDistance discord, int budget = 8,
                             const OptimizerConfig& cfg = {});

/// Random sum_k p_k rho_k^{AC} (x) rho_k^B, reordered to (A, B, C).
DensityMatrix random_separable_preshared(int dim_a, int dim_b, int dim_c, int terms,
                                         std::uint64_t seed);

// --- suites -----------------------------------------------------------------

struct Failure {
  int trial = 0;
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  std::string kind;  // "violation", "expected_violation" or "inconclusive"
};

/// JSON-serializable summary of one suite run.
struct CheckReport {
  std::string check;
  std::uint64_t seed = 0;
  int n_trials = 0;
  double worst_slack = 0.0;  // min of lhs - rhs + slack over asserted checks
  std::vector<Failure> failures;
  std::vector<std::string> notes;

  /// Records r; a failing r is logged with `kind_on_fail`.
  void add(int trial, const std::string& label, const IneqResult& r,
           const std::string& kind_on_fail = "violation");
  /// Number of failures of kind "violation".
  int hard_failures() const;

 private:
  bool any_ = false;
};

std::string to_json(const CheckReport& report);

struct SuiteOptions {
  std::uint64_t seed = 2026;
  int trials = -1;  // -1: the suite's default
  bool inject_reversed_time = false;
  OptimizerConfig optimizer{};
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Throws ContractError for an unknown name.
CheckReport run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace entdist

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

// Entanglement and discord quantifiers. All entropies are in bits.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entdist/states.hpp"

namespace entdist {

/// A cut X|Y between two disjoint, nonempty groups of subsystems. Subsystems
/// in neither group are traced out before the quantifier is evaluated.
struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;

  /// Throws IndexError/ContractError on empty, overlapping or out-of-range
  /// groups.
  void validate(const SystemShape& shape) const;
};

/// Tuning shared by the variational quantifiers.
struct OptimizerConfig {
  int max_iters = 5000;
  double tol = 1e-9;
  int grid_theta = 64;
  int grid_phi = 32;
  std::uint64_t seed = 0;
};

/// Result of a variational quantifier. `value` is always attained by a
/// feasible point, so it is an upper bound on the true minimum.
struct OptimizerReport {
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  double residual = 0.0;   // duality-gap bound, step size or simplex diameter
  double threshold = 0.0;  // converged implies residual <= threshold
  std::string method;
  CMatrix point;               // minimizing state, when the method has one
  std::vector<double> params;  // minimizing parameters (Bloch angles, ...)
};

/// Bloch angles of the measured qubit basis
/// |b0> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, |b1> orthogonal.
struct MeasurementBloch {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)
};

/// Reduced state on left+right with the flip set (positions of `left` in the
/// reduced ordering) for partial transposition.
struct CutView {
  CMatrix mat;
  SystemShape shape;
  std::vector<int> flip;
  int left_dim = 1;
  int right_dim = 1;
};
CutView restrict_to_cut(const DensityMatrix& rho, const Bipartition& cut);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);
/// Concurrence across a cut: Wootters when the cut is 2|2, otherwise the
/// pure-state formula sqrt(2 (1 - Tr rho_X^2)) (requires a pure state).
double concurrence(const DensityMatrix& rho, const Bipartition& cut);
double concurrence(const PureState& psi, const Bipartition& cut);

/// h((1 + sqrt(1 - C^2)) / 2).
double eof_from_concurrence(double c);

/// Entanglement of formation: the concurrence formula for a 2|2 cut, entropy
/// of the reduced state for pure inputs, UnsupportedError otherwise.
double eof(const DensityMatrix& rho, const Bipartition& cut);
double eof(const PureState& psi, const Bipartition& cut);

/// ||rho^{T_X}||_1 - 1.
double negativity(const DensityMatrix& rho, const Bipartition& cut);
/// log2 ||rho^{T_X}||_1.
double log_negativity(const DensityMatrix& rho, const Bipartition& cut);

/// Relative entropy of entanglement with respect to PPT states across the
/// cut, by a log-barrier Newton method on sigma.
OptimizerReport ree_ppt(const DensityMatrix& rho, const Bipartition& cut,
                        const OptimizerConfig& cfg = {});

/// Frobenius-closest PPT state (Dykstra alternating projections).
OptimizerReport ppt_projection(const DensityMatrix& rho, const Bipartition& cut,
                               const OptimizerConfig& cfg = {});

/// min over PPT sigma of ||rho - sigma||_p for p in {1, 2}. p = 2 is the
/// exact projection; p = 1 is a subgradient upper bound.
OptimizerReport ep_distance(const DensityMatrix& rho, const Bipartition& cut, int p,
                            const OptimizerConfig& cfg = {});

enum class DiscordDistance { relative_entropy, schatten1, schatten2 };

/// Pinched state sum_i Pi_i rho Pi_i for the qubit basis on `measured`.
DensityMatrix measured_state(const DensityMatrix& rho, int measured,
                             const MeasurementBloch& basis);

/// Distance between rho and its pinching in a fixed basis.
double measurement_distance(const DensityMatrix& rho, int measured,
                            const MeasurementBloch& basis, DiscordDistance distance);

/// min over von Neumann measurements on the qubit `measured` of
/// D(rho, rho'), evaluated on the reduced state of measured + rest.
/// grid_theta x grid_phi Bloch grid followed by Nelder-Mead refinement.
OptimizerReport discord(const DensityMatrix& rho, int measured, std::span<const int> rest,
                        DiscordDistance distance, const OptimizerConfig& cfg = {});
OptimizerReport discord(const DensityMatrix& rho, int measured,
                        std::initializer_list<int> rest, DiscordDistance distance,
                        const OptimizerConfig& cfg = {});

// --- quantifier selectors -------------------------------------------------

enum class Quantifier {
  log_negativity,
  negativity,
  concurrence,
  eof,
  eof_squared,
  ree,
  schatten1,
  schatten2,
};

struct Evaluation {
  double value = 0.0;
  bool variational = false;
  std::optional<OptimizerReport> report;
};

Evaluation evaluate(Quantifier q, const DensityMatrix& rho, const Bipartition& cut,
                    const OptimizerConfig& cfg = {});
Evaluation evaluate_discord(DiscordDistance d, const DensityMatrix& rho, int measured,
                            std::span<const int> rest, const OptimizerConfig& cfg = {});

std::string_view to_string(Quantifier q);
std::string_view to_string(DiscordDistance d);
Quantifier parse_quantifier(std::string_view name);
DiscordDistance parse_discord_distance(std::string_view name);

}  // namespace entdist

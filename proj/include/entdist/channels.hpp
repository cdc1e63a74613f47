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

#include <array>
#include <vector>

#include "entdist/states.hpp"

namespace entdist {

/// CPTP map on a single d-level system in Kraus form. Immutable once built;
/// the constructor enforces ||sum K^dag K - I||_2 <= 1e-10.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<CMatrix> kraus);

  int dim() const { return dim_; }
  const std::vector<CMatrix>& kraus() const { return kraus_; }

  /// Action on an operator of the channel's own dimension.
  CMatrix operator()(const CMatrix& x) const;

  /// Choi matrix sum_{ij} |i><j| (x) Lambda(|i><j|), input factor first.
  CMatrix choi() const;

 private:
  std::vector<CMatrix> kraus_;
  int dim_ = 0;
};

/// Probabilities of (I, X, Y, Z).
struct PauliSpec {
  std::array<double, 4> p{1.0, 0.0, 0.0, 0.0};

  /// Throws ContractError unless p_i >= 0 and sum p_i = 1 to 1e-12.
  void validate() const;
};

enum class MarkovKind { amplitude_damping, phase_damping };

/// Two-time family Lambda_(t2,t1) generated by an exponential semigroup.
struct MarkovFamily {
  MarkovKind kind = MarkovKind::amplitude_damping;
  double rate = 1.0;
};

/// The four Pauli matrices sigma_0..sigma_3.
const std::array<CMatrix, 4>& pauli_matrices();

KrausChannel identity_channel(int d);

/// Kraus operators {sqrt(p_i) sigma_i}.
KrausChannel pauli_channel(const PauliSpec& spec);

/// K1 = |0><0| + sqrt(1-gamma)|1><1|, K2 = sqrt(gamma)|0><1|.
KrausChannel amplitude_damping(double gamma);

/// rho -> (1-p) rho + p Z rho Z, 0 <= p <= 1.
KrausChannel phase_damping(double p);

/// Generalized shift/clock X^a Z^b on d levels, X|j> = |j+1>,
/// Z|j> = w^j |j> with w = exp(2 pi i / d).
CMatrix weyl_unitary(int d, int a, int b);

/// All d^2 Weyl unitaries, index a*d + b.
std::vector<CMatrix> weyl_unitaries(int d);

/// rho -> sum p_{a d + b} U_ab rho U_ab^dag.
KrausChannel weyl_channel(int d, std::span<const double> probs);

/// Channel acting as a (x) b on a (da*db)-level system.
KrausChannel tensor(const KrausChannel& a, const KrausChannel& b);

/// a after b: Kraus set {A_i B_j}.
KrausChannel compose(const KrausChannel& a, const KrausChannel& b);

/// Applies the channel to subsystem `target` of rho.
DensityMatrix apply_on(const KrausChannel& channel, const DensityMatrix& rho,
                       int target);

/// Markov snapshot Lambda_(t2,t1); requires t2 >= t1 >= 0.
/// amplitude damping: gamma = 1 - exp(-rate (t2 - t1));
/// phase damping:     p = (1 - exp(-rate (t2 - t1))) / 2.
KrausChannel markov_snapshot(const MarkovFamily& fam, double t1, double t2);

/// Choi matrices agree entrywise within tol.
bool channels_equal(const KrausChannel& a, const KrausChannel& b, double tol = 1e-10);

/// Largest entrywise Choi difference.
double choi_distance(const KrausChannel& a, const KrausChannel& b);

/// Random channel with `n_kraus` Kraus operators from a random isometry.
KrausChannel random_channel(int d, int n_kraus, std::uint64_t seed);

/// Random Pauli probabilities, flat Dirichlet. Requires
/// Ensemble::dirichlet_pauli.
PauliSpec random_pauli_spec(RandomSpec spec);

}  // namespace entdist

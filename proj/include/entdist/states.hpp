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

#include <cstdint>
#include <random>

#include "entdist/qla.hpp"

namespace entdist {

/// Hermitian, PSD, unit-trace matrix tagged with its subsystem structure.
class DensityMatrix {
 public:
  /// Validates the state invariants (tolerance 1e-10) and throws
  /// ContractError on violation. Eigenvalues in [-1e-10, 0) are accepted.
  DensityMatrix(CMatrix mat, SystemShape shape);

  const CMatrix& mat() const { return mat_; }
  const SystemShape& shape() const { return shape_; }
  int dim() const { return shape_.total(); }

  /// Reduced state on `keep` (ascending order).
  DensityMatrix reduced(std::span<const int> keep) const;
  DensityMatrix reduced(std::initializer_list<int> keep) const;

  /// Same matrix with the subsystems permuted: new subsystem k is old
  /// subsystem order[k].
  DensityMatrix permuted(std::span<const int> order) const;

  double purity() const { return (mat_ * mat_).trace().real(); }

 private:
  CMatrix mat_;
  SystemShape shape_;
};

/// Unit vector tagged with its subsystem structure.
class PureState {
 public:
  PureState(CVector vec, SystemShape shape);

  const CVector& vec() const { return vec_; }
  const SystemShape& shape() const { return shape_; }

  DensityMatrix density() const;

 private:
  CVector vec_;
  SystemShape shape_;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

enum class Ensemble { haar_pure, ginibre_mixed, dirichlet_pauli };

/// Seed plus ensemble. Consumed by value: equal specs give bit-identical
/// samples within one build.
struct RandomSpec {
  std::uint64_t seed = 0;
  Ensemble ensemble = Ensemble::ginibre_mixed;
};

/// Deterministic engine for a seed (seed is scrambled with splitmix64).
std::mt19937_64 make_engine(std::uint64_t seed);

/// Independent stream `index` derived from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// (1/sqrt d) sum_i |ii> on shape (d, d).
PureState max_entangled(int d);

/// sqrt(1-alpha)|00> + sqrt(alpha)|11> on two qubits, 0 <= alpha <= 1.
PureState alpha_state(double alpha);

/// Normalized complex-Gaussian vector. Requires Ensemble::haar_pure.
PureState random_pure(const SystemShape& shape, RandomSpec spec);

/// G G^dag / Tr(G G^dag) for square complex-Gaussian G.
/// Requires Ensemble::ginibre_mixed.
DensityMatrix random_mixed(const SystemShape& shape, RandomSpec spec);

/// Random unitary (QR of a complex-Gaussian matrix with phase fix).
CMatrix random_unitary(int d, std::mt19937_64& rng);

/// Complex-Gaussian matrix with unit-variance entries.
CMatrix ginibre(int rows, int cols, std::mt19937_64& rng);

/// (|000> + |101> + |210> + |311>)/2 on subsystems (A, B, C) = (4, 2, 2).
PureState ef_squared_witness_state();

/// Projector |v><v| for a computational basis vector on `d` levels.
CMatrix basis_projector(int d, int k);

}  // namespace entdist

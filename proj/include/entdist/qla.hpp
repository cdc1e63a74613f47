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

// Dense complex linear algebra and the multipartite index algebra.
//
// Basis ordering: the basis vector |i_0 i_1 ... i_{n-1}> of a system with
// dimensions (d_0, ..., d_{n-1}) has index sum_k i_k * prod_{j>k} d_j, i.e.
// the first subsystem is the most significant digit. This is the ordering
// produced by Kronecker products, so tensor(a, b) places `a` on subsystem 0.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "entdist/errors.hpp"

namespace entdist {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Largest total Hilbert-space dimension any object may have.
inline constexpr int kMaxTotalDim = 64;

/// Eigenvalues in [-kEigClip, 0] are treated as round-off and clipped to 0.
inline constexpr double kEigClip = 1e-10;

/// Relative threshold below which an eigenvalue is outside the support.
inline constexpr double kSupportTol = 1e-10;

/// Ordered list of subsystem dimensions. Subsystems are labelled by their
/// position 0..n-1.
class SystemShape {
 public:
  SystemShape() = default;
  explicit SystemShape(std::vector<int> dims);
  SystemShape(std::initializer_list<int> dims)
      : SystemShape(std::vector<int>(dims)) {}

  std::size_t size() const { return dims_.size(); }
  int dim(std::size_t k) const;
  int total() const { return total_; }
  const std::vector<int>& dims() const { return dims_; }

  /// Product of the dimensions at the given positions.
  int total_of(std::span<const int> subsystems) const;

  /// Shape of the given subsystems, in ascending positional order.
  SystemShape select(std::span<const int> subsystems) const;

  /// Positions not contained in `subsystems`, ascending.
  std::vector<int> complement(std::span<const int> subsystems) const;

  /// Validates, sorts and de-duplicates a subsystem set.
  /// Throws IndexError on out-of-range or repeated labels.
  std::vector<int> normalize(std::span<const int> subsystems) const;

  /// Full-space offsets of every multi-index over `subsystems` (others held
  /// at zero), enumerated in row-major order of the ascending subset.
  std::vector<int> offsets(std::span<const int> subsystems) const;

  bool operator==(const SystemShape&) const = default;

 private:
  std::vector<int> dims_;
  int total_ = 1;
};

struct HermEig {
  RVector values;   // ascending
  CMatrix vectors;  // unitary, eigenvectors as columns
};

/// Kronecker product. Throws SizeError if either result dimension exceeds
/// kMaxTotalDim.
CMatrix tensor(const CMatrix& a, const CMatrix& b);

/// Trace over every subsystem not in `keep`. The result is ordered as the
/// kept subsystems appear in `shape`.
CMatrix partial_trace(const CMatrix& m, const SystemShape& shape,
                      std::span<const int> keep);
CMatrix partial_trace(const CMatrix& m, const SystemShape& shape,
                      std::initializer_list<int> keep);

/// Transpose on the tensor factors listed in `flip`.
CMatrix partial_transpose(const CMatrix& m, const SystemShape& shape,
                          std::span<const int> flip);
CMatrix partial_transpose(const CMatrix& m, const SystemShape& shape,
                          std::initializer_list<int> flip);

/// Eigendecomposition of a Hermitian matrix. Throws ContractError when
/// ||m - m^dag|| > 1e-10 (1 + ||m||).
HermEig herm_eig(const CMatrix& m);

/// Eigendecomposition without the Hermiticity check; `m` is symmetrized.
HermEig herm_eig_unchecked(const CMatrix& m);

/// Schatten p-norm, p >= 1.
double schatten_norm(const CMatrix& m, double p);

/// Base-2 logarithm of a PSD matrix on its support (zero off-support).
CMatrix matrix_log2(const CMatrix& m);

/// Quantum relative entropy S(rho || sigma) in bits; +infinity when the
/// support of rho is not contained in the support of sigma.
double rel_entropy(const CMatrix& rho, const CMatrix& sigma);

/// Von Neumann entropy in bits of a PSD unit-trace matrix.
double von_neumann_entropy(const CMatrix& rho);

/// Entropy in bits of a (clipped) probability spectrum.
double spectrum_entropy(const RVector& eigenvalues);

/// Binary entropy h(x) in bits.
double binary_entropy(double x);

bool is_hermitian(const CMatrix& m, double tol = 1e-10);

/// Frobenius-norm distance between m and its adjoint, relative to 1+||m||.
double hermiticity_defect(const CMatrix& m);

}  // namespace entdist

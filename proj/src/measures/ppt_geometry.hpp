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

// Internal helpers shared by the PPT-set optimizers.

#include <vector>

#include "entdist/measures.hpp"

namespace entdist::detail {

/// Partial transposition on a fixed cut as a precomputed index permutation.
class PartialTransposer {
 public:
  PartialTransposer(const SystemShape& shape, std::span<const int> flip);

  CMatrix operator()(const CMatrix& m) const;
  int dim() const { return dim_; }

 private:
  int dim_;
  std::vector<int> source_;  // out(r, c) = m.data()[source_[c * dim + r]]
};

/// Frobenius projection onto {PSD, unit trace}.
CMatrix project_to_states(const CMatrix& m);

/// Euclidean projection of a real vector onto the probability simplex.
RVector project_to_simplex(const RVector& v);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const CMatrix& m);

/// Mixes sigma with I/d just enough that both sigma and its partial
/// transpose are PSD. Returns sigma unchanged when already feasible.
CMatrix make_ppt_feasible(const CMatrix& sigma, const PartialTransposer& pt);

}  // namespace entdist::detail

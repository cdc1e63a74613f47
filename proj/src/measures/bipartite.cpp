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

#include "entdist/channels.hpp"
#include "entdist/measures.hpp"

namespace entdist {

void Bipartition::validate(const SystemShape& shape) const {
  if (left.empty() || right.empty()) throw ContractError("Bipartition: empty side");
  const auto l = shape.normalize(left);
  const auto r = shape.normalize(right);
  for (int k : l) {
    if (std::binary_search(r.begin(), r.end(), k)) {
      throw ContractError("Bipartition: sides overlap");
    }
  }
}

CutView restrict_to_cut(const DensityMatrix& rho, const Bipartition& cut) {
  const auto& shape = rho.shape();
  cut.validate(shape);
  std::vector<int> both = cut.left;
  both.insert(both.end(), cut.right.begin(), cut.right.end());
  both = shape.normalize(both);

  CutView view;
  view.shape = shape.select(both);
  view.mat = both.size() == shape.size() ? rho.mat() : partial_trace(rho.mat(), shape, both);
  const auto left = shape.normalize(cut.left);
  for (std::size_t pos = 0; pos < both.size(); ++pos) {
    if (std::binary_search(left.begin(), left.end(), both[pos])) {
      view.flip.push_back(static_cast<int>(pos));
    }
  }
  view.left_dim = shape.total_of(cut.left);
  view.right_dim = shape.total_of(cut.right);
  return view;
}

namespace {

bool is_pure(const CMatrix& m) { return (m * m).trace().real() >= 1.0 - 1e-10; }

double wootters(const CMatrix& rho) {
  const CMatrix& y = pauli_matrices()[2];
  const CMatrix yy = tensor(y, y);
  // The lambda_i are the singular values of sqrt(rho) yy conj(sqrt(rho)).
  // Taking them directly keeps small values accurate; square roots of the
  // eigenvalues of rho tilde would lose half the digits.
  const HermEig er = herm_eig_unchecked(rho);
  RVector s = er.values;
  for (auto& v : s) v = std::sqrt(std::max(v, 0.0));
  const CMatrix sq = er.vectors * s.asDiagonal() * er.vectors.adjoint();
  const CMatrix r = sq * yy * sq.conjugate();
  RVector lam = Eigen::JacobiSVD<CMatrix>(r).singularValues();
  std::sort(lam.data(), lam.data() + lam.size(), std::greater<>());
  return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

double pure_concurrence(const CMatrix& reduced) {
  const double purity = (reduced * reduced).trace().real();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

CMatrix left_marginal(const CutView& v) {
  return partial_trace(v.mat, v.shape, v.flip);
}

}  // namespace

double concurrence(const DensityMatrix& rho) {
  if (rho.shape().size() != 2 || rho.shape().dim(0) != 2 || rho.shape().dim(1) != 2) {
    throw ContractError("concurrence: expected a two-qubit state");
  }
  return wootters(rho.mat());
}

double concurrence(const DensityMatrix& rho, const Bipartition& cut) {
  const CutView v = restrict_to_cut(rho, cut);
  if (v.left_dim == 2 && v.right_dim == 2) return wootters(v.mat);
  if (!is_pure(v.mat)) {
    throw UnsupportedError("concurrence: mixed states are only supported on a 2|2 cut");
  }
  return pure_concurrence(left_marginal(v));
}

double concurrence(const PureState& psi, const Bipartition& cut) {
  return concurrence(psi.density(), cut);
}

double eof_from_concurrence(double c) {
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double eof(const DensityMatrix& rho, const Bipartition& cut) {
  const CutView v = restrict_to_cut(rho, cut);
  if (is_pure(v.mat)) return von_neumann_entropy(left_marginal(v));
  if (v.left_dim == 2 && v.right_dim == 2) return eof_from_concurrence(wootters(v.mat));
  throw UnsupportedError("eof: no closed form for mixed states beyond two qubits");
}

double eof(const PureState& psi, const Bipartition& cut) { return eof(psi.density(), cut); }

namespace {

double pt_trace_norm(const DensityMatrix& rho, const Bipartition& cut) {
  const CutView v = restrict_to_cut(rho, cut);
  const CMatrix pt = partial_transpose(v.mat, v.shape, v.flip);
  return herm_eig_unchecked(pt).values.cwiseAbs().sum();
}

}  // namespace

double negativity(const DensityMatrix& rho, const Bipartition& cut) {
  return std::max(0.0, pt_trace_norm(rho, cut) - 1.0);
}

double log_negativity(const DensityMatrix& rho, const Bipartition& cut) {
  return std::max(0.0, std::log2(pt_trace_norm(rho, cut)));
}

}  // namespace entdist

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

#include "entdist/states.hpp"

#include <cmath>
#include <string>

#include <Eigen/QR>

namespace entdist {

DensityMatrix::DensityMatrix(CMatrix mat, SystemShape shape)
    : mat_(std::move(mat)), shape_(std::move(shape)) {
  if (mat_.rows() != shape_.total() || mat_.cols() != shape_.total()) {
    throw ContractError("DensityMatrix: matrix size does not match shape");
  }
  if (!mat_.allFinite()) throw ContractError("DensityMatrix: non-finite entries");
  if (!is_hermitian(mat_)) throw ContractError("DensityMatrix: not Hermitian");
  if (std::abs(mat_.trace().real() - 1.0) > 1e-10) {
    throw ContractError("DensityMatrix: trace " +
                        std::to_string(mat_.trace().real()) + " is not 1");
  }
  mat_ = 0.5 * (mat_ + mat_.adjoint()).eval();
  const double lo = herm_eig_unchecked(mat_).values.minCoeff();
  if (lo < -kEigClip) {
    throw ContractError("DensityMatrix: negative eigenvalue " + std::to_string(lo));
  }
}

DensityMatrix DensityMatrix::reduced(std::span<const int> keep) const {
  return DensityMatrix(partial_trace(mat_, shape_, keep), shape_.select(keep));
}

DensityMatrix DensityMatrix::reduced(std::initializer_list<int> keep) const {
  return reduced(std::span<const int>(keep.begin(), keep.size()));
}

DensityMatrix DensityMatrix::permuted(std::span<const int> order) const {
  const int n = static_cast<int>(shape_.size());
  if (static_cast<int>(order.size()) != n) {
    throw IndexError("permuted: order must list every subsystem once");
  }
  shape_.normalize(order);  // range and repetition check

  std::vector<int> new_dims(n);
  for (int k = 0; k < n; ++k) new_dims[k] = shape_.dim(order[k]);
  SystemShape new_shape(new_dims);

  std::vector<int> old_stride(n, 1);
  for (int k = n - 2; k >= 0; --k) old_stride[k] = old_stride[k + 1] * shape_.dim(k + 1);

  // map[new_index] = old_index
  const int total = shape_.total();
  std::vector<int> map(total);
  std::vector<int> digit(n, 0);
  for (int idx = 0; idx < total; ++idx) {
    int old = 0;
    for (int k = 0; k < n; ++k) old += digit[k] * old_stride[order[k]];
    map[idx] = old;
    for (int k = n - 1; k >= 0; --k) {
      if (++digit[k] < new_dims[k]) break;
      digit[k] = 0;
    }
  }
  CMatrix out(total, total);
  for (int r = 0; r < total; ++r) {
    for (int c = 0; c < total; ++c) out(r, c) = mat_(map[r], map[c]);
  }
  return DensityMatrix(std::move(out), std::move(new_shape));
}

PureState::PureState(CVector vec, SystemShape shape)
    : vec_(std::move(vec)), shape_(std::move(shape)) {
  if (vec_.size() != shape_.total()) {
    throw ContractError("PureState: vector size does not match shape");
  }
  if (std::abs(vec_.norm() - 1.0) > 1e-12) {
    throw ContractError("PureState: vector is not normalized");
  }
}

DensityMatrix PureState::density() const {
  return DensityMatrix(vec_ * vec_.adjoint(), shape_);
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<int> dims = a.shape().dims();
  dims.insert(dims.end(), b.shape().dims().begin(), b.shape().dims().end());
  return DensityMatrix(tensor(a.mat(), b.mat()), SystemShape(std::move(dims)));
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_ensemble(const RandomSpec& spec, Ensemble want, const char* who) {
  if (spec.ensemble != want) {
    throw ContractError(std::string(who) + ": RandomSpec has the wrong ensemble");
  }
}

}  // namespace

std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed));
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

CMatrix ginibre(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

CMatrix random_unitary(int d, std::mt19937_64& rng) {
  const CMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k) {
    const Complex rk = r(k, k);
    const double a = std::abs(rk);
    if (a > 0.0) q.col(k) *= rk / a;
  }
  return q;
}

PureState max_entangled(int d) {
  if (d < 2) throw ContractError("max_entangled: d must be >= 2");
  CVector v = CVector::Zero(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) v(i * d + i) = amp;
  return PureState(v, SystemShape{d, d});
}

PureState alpha_state(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ContractError("alpha_state: alpha must lie in [0, 1]");
  }
  CVector v = CVector::Zero(4);
  v(0) = std::sqrt(1.0 - alpha);
  v(3) = std::sqrt(alpha);
  return PureState(v, SystemShape{2, 2});
}

PureState random_pure(const SystemShape& shape, RandomSpec spec) {
  require_ensemble(spec, Ensemble::haar_pure, "random_pure");
  auto rng = make_engine(spec.seed);
  CVector v = ginibre(shape.total(), 1, rng).col(0);
  v /= v.norm();
  return PureState(v, shape);
}

DensityMatrix random_mixed(const SystemShape& shape, RandomSpec spec) {
  require_ensemble(spec, Ensemble::ginibre_mixed, "random_mixed");
  auto rng = make_engine(spec.seed);
  const CMatrix g = ginibre(shape.total(), shape.total(), rng);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(rho, shape);
}

PureState ef_squared_witness_state() {
  const SystemShape shape{4, 2, 2};
  CVector v = CVector::Zero(16);
  // |a b c> -> a*4 + b*2 + c
  v(0 * 4 + 0 * 2 + 0) = 0.5;  // |000>
  v(1 * 4 + 0 * 2 + 1) = 0.5;  // |101>
  v(2 * 4 + 1 * 2 + 0) = 0.5;  // |210>
  v(3 * 4 + 1 * 2 + 1) = 0.5;  // |311>
  return PureState(v, shape);
}

CMatrix basis_projector(int d, int k) {
  CMatrix p = CMatrix::Zero(d, d);
  p(k, k) = 1.0;
  return p;
}

}  // namespace entdist

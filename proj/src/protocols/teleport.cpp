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

#include <cmath>

#include "entdist/protocols.hpp"

namespace entdist {
namespace {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

void check_corrections(std::span<const CMatrix> u, int d) {
  if (static_cast<int>(u.size()) != d * d) {
    throw ContractError("teleport_through: need d^2 correction unitaries");
  }
  const CMatrix id = CMatrix::Identity(d, d);
  for (const auto& m : u) {
    if (m.rows() != d || m.cols() != d || (m.adjoint() * m - id).norm() > 1e-10) {
      throw ContractError("teleport_through: corrections must be d x d unitaries");
    }
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      const Complex overlap = (u[i].adjoint() * u[j]).trace() / static_cast<double>(d);
      if (std::abs(overlap - (i == j ? 1.0 : 0.0)) > 1e-10) {
        throw ContractError("teleport_through: measurement basis is not orthonormal");
      }
    }
  }
}

}  // namespace

DensityMatrix teleport_through(const DensityMatrix& resource, const DensityMatrix& rho,
                               std::span<const CMatrix> corrections) {
  const auto& rs = resource.shape();
  const auto& ps = rho.shape();
  if (rs.size() != 2 || ps.size() != 2 || rs.dim(0) != rs.dim(1) || ps.dim(1) != rs.dim(0)) {
    throw ContractError("teleport_through: expected resource (d, d) and state (A, d)");
  }
  const int d = rs.dim(0);
  const int da = ps.dim(0);
  check_corrections(corrections, d);

  const DensityMatrix joint = tensor(rho, resource);  // (A, R, R~, C)
  const CMatrix id_a = CMatrix::Identity(da, da);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  CMatrix out = CMatrix::Zero(da * d, da * d);
  for (const auto& u : corrections) {
    // <b_i| with |b_i> = (U_i (x) I)|phi+>, i.e. b_i[r d + s] = U_i(r, s) / sqrt d
    CMatrix bra(1, d * d);
    for (int r = 0; r < d; ++r) {
      for (int s = 0; s < d; ++s) bra(0, r * d + s) = std::conj(u(r, s)) * norm;
    }
    const CMatrix k = kron(id_a, kron(bra, u));
    out += k * joint.mat() * k.adjoint();
  }
  return DensityMatrix(0.5 * (out + out.adjoint()), SystemShape{da, d});
}

}  // namespace entdist

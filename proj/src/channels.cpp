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

#include "entdist/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/QR>

namespace entdist {

KrausChannel::KrausChannel(std::vector<CMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw ContractError("KrausChannel: empty Kraus set");
  dim_ = static_cast<int>(kraus_.front().rows());
  CMatrix acc = CMatrix::Zero(dim_, dim_);
  for (const auto& k : kraus_) {
    if (k.rows() != dim_ || k.cols() != dim_) {
      throw ContractError("KrausChannel: Kraus operators must be square and equal-sized");
    }
    acc += k.adjoint() * k;
  }
  const CMatrix diff = acc - CMatrix::Identity(dim_, dim_);
  const double defect = diff.selfadjointView<Eigen::Lower>().operatorNorm();
  if (defect > 1e-10) {
    throw ContractError("KrausChannel: completeness violated by " + std::to_string(defect));
  }
}

CMatrix KrausChannel::operator()(const CMatrix& x) const {
  CMatrix out = CMatrix::Zero(x.rows(), x.cols());
  for (const auto& k : kraus_) out += k * x * k.adjoint();
  return out;
}

CMatrix KrausChannel::choi() const {
  const int d = dim_;
  CMatrix c = CMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      CMatrix e = CMatrix::Zero(d, d);
      e(i, j) = 1.0;
      c.block(i * d, j * d, d, d) = (*this)(e);
    }
  }
  return c;
}

void PauliSpec::validate() const {
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0)) throw ContractError("PauliSpec: negative probability");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw ContractError("PauliSpec: probabilities must sum to 1");
}

const std::array<CMatrix, 4>& pauli_matrices() {
  static const std::array<CMatrix, 4> paulis = [] {
    const Complex i(0.0, 1.0);
    std::array<CMatrix, 4> s;
    s[0] = CMatrix::Identity(2, 2);
    s[1] = CMatrix::Zero(2, 2);
    s[1] << 0.0, 1.0, 1.0, 0.0;
    s[2] = CMatrix::Zero(2, 2);
    s[2] << 0.0, -i, i, 0.0;
    s[3] = CMatrix::Zero(2, 2);
    s[3] << 1.0, 0.0, 0.0, -1.0;
    return s;
  }();
  return paulis;
}

KrausChannel identity_channel(int d) {
  if (d < 1) throw ContractError("identity_channel: d must be positive");
  return KrausChannel({CMatrix::Identity(d, d)});
}

KrausChannel pauli_channel(const PauliSpec& spec) {
  spec.validate();
  std::vector<CMatrix> ks;
  for (int i = 0; i < 4; ++i) {
    if (spec.p[i] > 0.0) ks.push_back(std::sqrt(spec.p[i]) * pauli_matrices()[i]);
  }
  return KrausChannel(std::move(ks));
}

KrausChannel amplitude_damping(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw ContractError("amplitude_damping: gamma must lie in [0, 1]");
  }
  CMatrix k1 = CMatrix::Zero(2, 2);
  k1(0, 0) = 1.0;
  k1(1, 1) = std::sqrt(1.0 - gamma);
  CMatrix k2 = CMatrix::Zero(2, 2);
  k2(0, 1) = std::sqrt(gamma);
  return KrausChannel({k1, k2});
}

KrausChannel phase_damping(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ContractError("phase_damping: p must lie in [0, 1]");
  return pauli_channel(PauliSpec{{1.0 - p, 0.0, 0.0, p}});
}

CMatrix weyl_unitary(int d, int a, int b) {
  if (d < 2) throw ContractError("weyl_unitary: d must be >= 2");
  CMatrix x = CMatrix::Zero(d, d);
  CMatrix z = CMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    x((j + 1) % d, j) = 1.0;
    z(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * j / d);
  }
  CMatrix u = CMatrix::Identity(d, d);
  for (int k = 0; k < ((a % d) + d) % d; ++k) u = u * x;
  for (int k = 0; k < ((b % d) + d) % d; ++k) u = u * z;
  return u;
}

std::vector<CMatrix> weyl_unitaries(int d) {
  std::vector<CMatrix> us;
  us.reserve(d * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) us.push_back(weyl_unitary(d, a, b));
  }
  return us;
}

KrausChannel weyl_channel(int d, std::span<const double> probs) {
  if (d < 2) throw ContractError("weyl_channel: d must be >= 2");
  if (static_cast<int>(probs.size()) != d * d) {
    throw ContractError("weyl_channel: need d^2 probabilities");
  }
  double sum = 0.0;
  for (double v : probs) {
    if (!(v >= 0.0)) throw ContractError("weyl_channel: negative probability");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw ContractError("weyl_channel: probabilities must sum to 1");

  std::vector<CMatrix> ks;
  const auto us = weyl_unitaries(d);
  for (int i = 0; i < d * d; ++i) {
    if (probs[i] > 0.0) ks.push_back(std::sqrt(probs[i]) * us[i]);
  }
  return KrausChannel(std::move(ks));
}

KrausChannel tensor(const KrausChannel& a, const KrausChannel& b) {
  std::vector<CMatrix> ks;
  for (const auto& ka : a.kraus()) {
    for (const auto& kb : b.kraus()) ks.push_back(tensor(ka, kb));
  }
  return KrausChannel(std::move(ks));
}

KrausChannel compose(const KrausChannel& a, const KrausChannel& b) {
  if (a.dim() != b.dim()) throw ContractError("compose: dimension mismatch");
  std::vector<CMatrix> ks;
  for (const auto& ka : a.kraus()) {
    for (const auto& kb : b.kraus()) {
      CMatrix k = ka * kb;
      if (k.norm() > 0.0) ks.push_back(std::move(k));
    }
  }
  return KrausChannel(std::move(ks));
}

DensityMatrix apply_on(const KrausChannel& channel, const DensityMatrix& rho, int target) {
  const auto& shape = rho.shape();
  if (target < 0 || static_cast<std::size_t>(target) >= shape.size()) {
    throw IndexError("apply_on: target subsystem out of range");
  }
  if (channel.dim() != shape.dim(target)) {
    throw ContractError("apply_on: channel dimension " + std::to_string(channel.dim()) +
                        " does not match subsystem dimension " +
                        std::to_string(shape.dim(target)));
  }
  int left = 1;
  int right = 1;
  for (int k = 0; k < target; ++k) left *= shape.dim(k);
  for (std::size_t k = target + 1; k < shape.size(); ++k) right *= shape.dim(k);

  const int dt = channel.dim();
  const int n = shape.total();
  CMatrix out = CMatrix::Zero(n, n);
  // Embed each Kraus operator as I_left (x) K (x) I_right without forming the
  // full operator: (K rho K^dag) acting on the middle index only.
  for (const auto& k : channel.kraus()) {
    CMatrix tmp = CMatrix::Zero(n, n);  // (I (x) K (x) I) rho
    for (int l = 0; l < left; ++l) {
      for (int r = 0; r < right; ++r) {
        for (int i = 0; i < dt; ++i) {
          const int row = (l * dt + i) * right + r;
          for (int j = 0; j < dt; ++j) {
            const Complex kij = k(i, j);
            if (kij == Complex(0.0)) continue;
            tmp.row(row) += kij * rho.mat().row((l * dt + j) * right + r);
          }
        }
      }
    }
    for (int l = 0; l < left; ++l) {
      for (int r = 0; r < right; ++r) {
        for (int i = 0; i < dt; ++i) {
          const int col = (l * dt + i) * right + r;
          for (int j = 0; j < dt; ++j) {
            const Complex kij = std::conj(k(i, j));
            if (kij == Complex(0.0)) continue;
            out.col(col) += kij * tmp.col((l * dt + j) * right + r);
          }
        }
      }
    }
  }
  return DensityMatrix(std::move(out), shape);
}

KrausChannel markov_snapshot(const MarkovFamily& fam, double t1, double t2) {
  if (!(fam.rate > 0.0)) throw ContractError("markov_snapshot: rate must be positive");
  if (!(t1 >= 0.0 && t2 >= t1)) throw ContractError("markov_snapshot: need t2 >= t1 >= 0");
  const double decay = -std::expm1(-fam.rate * (t2 - t1));  // 1 - e^{-rate dt}
  switch (fam.kind) {
    case MarkovKind::amplitude_damping:
      return amplitude_damping(std::min(decay, 1.0));
    case MarkovKind::phase_damping:
      return phase_damping(0.5 * std::min(decay, 1.0));
  }
  throw ContractError("markov_snapshot: unknown family");
}

double choi_distance(const KrausChannel& a, const KrausChannel& b) {
  if (a.dim() != b.dim()) throw ContractError("channels_equal: dimension mismatch");
  return (a.choi() - b.choi()).cwiseAbs().maxCoeff();
}

bool channels_equal(const KrausChannel& a, const KrausChannel& b, double tol) {
  return choi_distance(a, b) <= tol;
}

KrausChannel random_channel(int d, int n_kraus, std::uint64_t seed) {
  if (n_kraus < 1) throw ContractError("random_channel: need at least one Kraus operator");
  auto rng = make_engine(seed);
  // Columns of a random (n_kraus d) x d isometry, split into d x d blocks.
  const CMatrix g = ginibre(n_kraus * d, d, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  const CMatrix v = qr.householderQ() * CMatrix::Identity(n_kraus * d, d);
  std::vector<CMatrix> ks;
  for (int k = 0; k < n_kraus; ++k) ks.push_back(v.block(k * d, 0, d, d));
  return KrausChannel(std::move(ks));
}

PauliSpec random_pauli_spec(RandomSpec spec) {
  if (spec.ensemble != Ensemble::dirichlet_pauli) {
    throw ContractError("random_pauli_spec: RandomSpec has the wrong ensemble");
  }
  auto rng = make_engine(spec.seed);
  std::exponential_distribution<double> expo(1.0);
  PauliSpec out;
  double sum = 0.0;
  for (auto& v : out.p) {
    v = expo(rng);
    sum += v;
  }
  for (auto& v : out.p) v /= sum;
  // Absorb the rounding residue so the simplex check holds exactly.
  out.p[0] = 1.0 - (out.p[1] + out.p[2] + out.p[3]);
  return out;
}

}  // namespace entdist

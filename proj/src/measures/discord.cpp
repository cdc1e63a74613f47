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
#include <array>
#include <cmath>
#include <numbers>

#include "entdist/channels.hpp"
#include "entdist/measures.hpp"
#include "entdist/optimize.hpp"

namespace entdist {
namespace {

constexpr double kPi = std::numbers::pi;

using Basis = std::array<CVector, 2>;

Basis bloch_basis(double theta, double phi) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex e = std::polar(1.0, phi);
  Basis b{CVector(2), CVector(2)};
  b[0] << c, e * s;
  b[1] << s, -e * c;
  return b;
}

MeasurementBloch canonical(double theta, double phi) {
  theta = std::fmod(theta, 2.0 * kPi);
  if (theta < 0.0) theta += 2.0 * kPi;
  if (theta > kPi) {
    theta = 2.0 * kPi - theta;
    phi += kPi;
  }
  phi = std::fmod(phi, 2.0 * kPi);
  if (phi < 0.0) phi += 2.0 * kPi;
  return {theta, phi};
}

void require_qubit(const SystemShape& shape, int measured) {
  if (shape.dim(measured) != 2) {
    throw UnsupportedError("discord: the measured subsystem must be a qubit");
  }
}

// rho on (measured, rest...) with the measured qubit first.
class PinchingProblem {
 public:
  PinchingProblem(const DensityMatrix& rho, int measured, std::span<const int> rest) {
    const auto& shape = rho.shape();
    require_qubit(shape, measured);
    std::vector<int> keep(rest.begin(), rest.end());
    const auto rest_sorted = rest.empty() ? std::vector<int>{} : shape.normalize(keep);
    if (std::binary_search(rest_sorted.begin(), rest_sorted.end(), measured)) {
      throw ContractError("discord: measured subsystem also listed in rest");
    }
    keep = rest_sorted;
    keep.push_back(measured);
    keep = shape.normalize(keep);
    const DensityMatrix red = rho.reduced(keep);
    std::vector<int> order{static_cast<int>(
        std::lower_bound(keep.begin(), keep.end(), measured) - keep.begin())};
    for (int k = 0; k < static_cast<int>(keep.size()); ++k) {
      if (k != order[0]) order.push_back(k);
    }
    mat_ = red.permuted(order).mat();
    r_ = static_cast<int>(mat_.rows()) / 2;
    entropy_ = von_neumann_entropy(mat_);
    purity_ = (mat_ * mat_).trace().real();
  }

  std::array<CMatrix, 2> blocks(const Basis& b) const {
    std::array<CMatrix, 2> out;
    for (int i = 0; i < 2; ++i) {
      CMatrix acc = CMatrix::Zero(r_, r_);
      for (int c = 0; c < 2; ++c) {
        for (int cp = 0; cp < 2; ++cp) {
          acc += std::conj(b[i](c)) * b[i](cp) * mat_.block(c * r_, cp * r_, r_, r_);
        }
      }
      out[i] = 0.5 * (acc + acc.adjoint());
    }
    return out;
  }

  CMatrix pinched(const Basis& b) const {
    const auto bl = blocks(b);
    CMatrix out = CMatrix::Zero(2 * r_, 2 * r_);
    for (int i = 0; i < 2; ++i) out += tensor(CMatrix(b[i] * b[i].adjoint()), bl[i]);
    return out;
  }

  double distance(const Basis& b, DiscordDistance kind) const {
    switch (kind) {
      case DiscordDistance::relative_entropy: {
        const auto bl = blocks(b);
        const double s = spectrum_entropy(herm_eig_unchecked(bl[0]).values) +
                         spectrum_entropy(herm_eig_unchecked(bl[1]).values);
        return std::max(0.0, s - entropy_);
      }
      case DiscordDistance::schatten2: {
        const auto bl = blocks(b);
        const double p2 = bl[0].squaredNorm() + bl[1].squaredNorm();
        return std::sqrt(std::max(0.0, purity_ - p2));
      }
      case DiscordDistance::schatten1:
        return herm_eig_unchecked(mat_ - pinched(b)).values.cwiseAbs().sum();
    }
    return 0.0;
  }

 private:
  CMatrix mat_;
  int r_ = 1;
  double entropy_ = 0.0;
  double purity_ = 0.0;
};

}  // namespace

DensityMatrix measured_state(const DensityMatrix& rho, int measured,
                             const MeasurementBloch& basis) {
  require_qubit(rho.shape(), measured);
  const Basis b = bloch_basis(basis.theta, basis.phi);
  const KrausChannel pinch({CMatrix(b[0] * b[0].adjoint()), CMatrix(b[1] * b[1].adjoint())});
  return apply_on(pinch, rho, measured);
}

double measurement_distance(const DensityMatrix& rho, int measured,
                            const MeasurementBloch& basis, DiscordDistance distance) {
  std::vector<int> rest;
  for (int k = 0; k < static_cast<int>(rho.shape().size()); ++k) {
    if (k != measured) rest.push_back(k);
  }
  const PinchingProblem prob(rho, measured, rest);
  return prob.distance(bloch_basis(basis.theta, basis.phi), distance);
}

OptimizerReport discord(const DensityMatrix& rho, int measured, std::span<const int> rest,
                        DiscordDistance distance, const OptimizerConfig& cfg) {
  if (cfg.grid_theta < 2 || cfg.grid_phi < 1) throw ContractError("discord: grid too small");
  const PinchingProblem prob(rho, measured, rest);
  auto f = [&](double theta, double phi) {
    return prob.distance(bloch_basis(theta, phi), distance);
  };

  const double dtheta = kPi / (cfg.grid_theta - 1);
  const double dphi = 2.0 * kPi / cfg.grid_phi;
  double best = f(0.0, 0.0);
  double best_theta = 0.0, best_phi = 0.0;
  int evals = 1;
  for (int j = 0; j < cfg.grid_theta; ++j) {
    const double theta = dtheta * j;
    // phi is irrelevant at the poles
    const int nphi = (j == 0 || j == cfg.grid_theta - 1) ? 1 : cfg.grid_phi;
    for (int k = 0; k < nphi; ++k) {
      const double phi = dphi * k;
      const double v = f(theta, phi);
      ++evals;
      if (v < best) {
        best = v;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  constexpr double kXtol = 1e-8;
  const std::array<double, 2> step{dtheta, dphi};
  const SimplexResult nm = nelder_mead(
      [&](std::span<const double> x) { return f(x[0], x[1]); }, {best_theta, best_phi}, step,
      std::max(cfg.max_iters, 200), kXtol);

  OptimizerReport rep;
  rep.method = "grid+nelder-mead";
  rep.threshold = kXtol;
  rep.iterations = evals + nm.evaluations;
  rep.residual = nm.diameter;
  rep.converged = nm.converged;
  MeasurementBloch at{best_theta, best_phi};
  rep.value = best;
  if (nm.value < best) {
    rep.value = nm.value;
    at = canonical(nm.x[0], nm.x[1]);
  }
  rep.params = {at.theta, at.phi};
  rep.point = prob.pinched(bloch_basis(at.theta, at.phi));
  return rep;
}

OptimizerReport discord(const DensityMatrix& rho, int measured,
                        std::initializer_list<int> rest, DiscordDistance distance,
                        const OptimizerConfig& cfg) {
  return discord(rho, measured, std::span<const int>(rest.begin(), rest.size()), distance, cfg);
}

}  // namespace entdist

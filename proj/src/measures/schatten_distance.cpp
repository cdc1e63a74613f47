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

#include "entdist/measures.hpp"
#include "ppt_geometry.hpp"

namespace entdist {
namespace detail {

PartialTransposer::PartialTransposer(const SystemShape& shape, std::span<const int> flip)
    : dim_(shape.total()) {
  CMatrix idx(dim_, dim_);
  for (int c = 0; c < dim_; ++c) {
    for (int r = 0; r < dim_; ++r) idx(r, c) = static_cast<double>(c * dim_ + r);
  }
  const CMatrix moved = partial_transpose(idx, shape, flip);
  source_.resize(static_cast<std::size_t>(dim_) * dim_);
  for (int c = 0; c < dim_; ++c) {
    for (int r = 0; r < dim_; ++r) {
      source_[c * dim_ + r] = static_cast<int>(std::lround(moved(r, c).real()));
    }
  }
}

CMatrix PartialTransposer::operator()(const CMatrix& m) const {
  CMatrix out(dim_, dim_);
  const Complex* src = m.data();
  Complex* dst = out.data();
  for (std::size_t k = 0; k < source_.size(); ++k) dst[k] = src[source_[k]];
  return out;
}

RVector project_to_simplex(const RVector& v) {
  std::vector<double> u(v.data(), v.data() + v.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    cum += u[k];
    const double t = (cum - 1.0) / static_cast<double>(k + 1);
    if (u[k] - t > 0.0) theta = t;
  }
  RVector out = v;
  for (auto& x : out) x = std::max(x - theta, 0.0);
  return out;
}

CMatrix project_to_states(const CMatrix& m) {
  const HermEig e = herm_eig_unchecked(m);
  const RVector p = project_to_simplex(e.values);
  return e.vectors * p.asDiagonal() * e.vectors.adjoint();
}

double min_eigenvalue(const CMatrix& m) { return herm_eig_unchecked(m).values.minCoeff(); }

CMatrix make_ppt_feasible(const CMatrix& sigma, const PartialTransposer& pt) {
  const int d = pt.dim();
  const double lo = std::min(min_eigenvalue(sigma), min_eigenvalue(pt(sigma)));
  if (lo >= 0.0) return sigma;
  // eig((1-s) X + s I/d) >= (1-s) lo + s/d >= 0
  const double deficit = -lo * d;
  const double s = deficit / (1.0 + deficit) * (1.0 + 1e-12);
  return (1.0 - s) * sigma + (s / d) * CMatrix::Identity(d, d);
}

}  // namespace detail

namespace {

using detail::PartialTransposer;

struct Projection {
  CMatrix sigma;  // feasible
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

// Dykstra's alternating projections onto {PSD, tr = 1} and its image under
// partial transposition; converges to the Frobenius projection onto the
// intersection.
Projection dykstra_ppt(const CMatrix& target, const PartialTransposer& pt, int max_iters,
                       double tol) {
  const int d = pt.dim();
  CMatrix x = target;
  CMatrix y = target;
  CMatrix p = CMatrix::Zero(d, d);
  CMatrix q = CMatrix::Zero(d, d);
  Projection out;
  for (int it = 1; it <= max_iters; ++it) {
    const CMatrix y_prev = y;
    y = detail::project_to_states(x + p);
    p = x + p - y;
    const CMatrix x_prev = x;
    x = pt(detail::project_to_states(pt(y + q)));
    q = y + q - x;
    out.iterations = it;
    out.residual = (x - y).norm() + (x - x_prev).norm() + (y - y_prev).norm();
    if (out.residual <= tol) {
      out.converged = true;
      break;
    }
  }
  out.sigma = detail::make_ppt_feasible(0.5 * (y + y.adjoint()), pt);
  return out;
}

}  // namespace

OptimizerReport ppt_projection(const DensityMatrix& rho, const Bipartition& cut,
                               const OptimizerConfig& cfg) {
  const CutView v = restrict_to_cut(rho, cut);
  const PartialTransposer pt(v.shape, v.flip);
  OptimizerReport rep;
  rep.method = "dykstra";
  rep.threshold = cfg.tol;
  if (detail::min_eigenvalue(pt(v.mat)) >= 0.0) {
    rep.value = 0.0;
    rep.converged = true;
    rep.point = v.mat;
    return rep;
  }
  const Projection proj = dykstra_ppt(v.mat, pt, cfg.max_iters, cfg.tol);
  rep.point = proj.sigma;
  rep.value = (v.mat - proj.sigma).norm();
  rep.iterations = proj.iterations;
  rep.residual = proj.residual;
  rep.converged = proj.converged;
  return rep;
}

namespace {

// Projected subgradient descent on ||rho - sigma||_1 started from the
// Frobenius projection; the best feasible iterate is kept.
OptimizerReport trace_distance_to_ppt(const CutView& v, const OptimizerConfig& cfg) {
  const PartialTransposer pt(v.shape, v.flip);
  const int d = v.shape.total();
  OptimizerReport rep;
  rep.method = "subgradient";
  rep.threshold = 1e-2;

  const Projection start = dykstra_ppt(v.mat, pt, cfg.max_iters, cfg.tol);
  CMatrix sigma = start.sigma;
  auto trace_dist = [&](const CMatrix& s) { return schatten_norm(v.mat - s, 1.0); };
  double best = trace_dist(sigma);
  CMatrix best_sigma = sigma;

  constexpr int kIters = 2000;
  constexpr int kInner = 50;
  const double step0 = 0.1 / std::sqrt(static_cast<double>(d));
  double last_step = 0.0;
  for (int it = 1; it <= kIters; ++it) {
    const HermEig e = herm_eig_unchecked(v.mat - sigma);
    RVector sgn = e.values;
    for (auto& s : sgn) s = s > 0.0 ? 1.0 : (s < 0.0 ? -1.0 : 0.0);
    // d/dsigma ||rho - sigma||_1 = -sign(rho - sigma)
    const CMatrix g = -(e.vectors * sgn.asDiagonal() * e.vectors.adjoint());
    const double gn = g.norm();
    if (gn == 0.0) break;
    last_step = step0 / std::sqrt(static_cast<double>(it));
    const CMatrix trial = sigma - (last_step / gn) * g;
    sigma = dykstra_ppt(trial, pt, kInner, cfg.tol).sigma;
    const double val = trace_dist(sigma);
    if (val < best) {
      best = val;
      best_sigma = sigma;
    }
    rep.iterations = it;
  }
  rep.value = best;
  rep.point = best_sigma;
  rep.residual = last_step;
  rep.converged = rep.residual <= rep.threshold;
  return rep;
}

}  // namespace

OptimizerReport ep_distance(const DensityMatrix& rho, const Bipartition& cut, int p,
                            const OptimizerConfig& cfg) {
  if (p != 1 && p != 2) throw ContractError("ep_distance: p must be 1 or 2");
  if (p == 2) return ppt_projection(rho, cut, cfg);

  const CutView v = restrict_to_cut(rho, cut);
  const PartialTransposer pt(v.shape, v.flip);
  if (detail::min_eigenvalue(pt(v.mat)) >= 0.0) {
    OptimizerReport rep;
    rep.method = "subgradient";
    rep.converged = true;
    rep.threshold = 1e-2;
    rep.point = v.mat;
    return rep;
  }
  return trace_distance_to_ppt(v, cfg);
}

}  // namespace entdist

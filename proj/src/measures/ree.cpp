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

// Relative entropy of entanglement over PPT states.
//
// sigma = I/d + sum_k x_k B_k with {B_k} an orthonormal basis of traceless
// Hermitian matrices, so the trace constraint is built in. The remaining
// constraints sigma > 0 and sigma^Gamma > 0 are handled with the barrier
//   Phi_t(x) = t f(sigma) - log det sigma - log det sigma^Gamma,
//   f(sigma) = -Tr rho log2 sigma,
// which has parameter nu = 2d, so a centered point is within nu/t of the
// optimum. Newton steps use the exact Hessian of f from divided differences
// of the logarithm.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Cholesky>

#include "entdist/measures.hpp"
#include "ppt_geometry.hpp"

namespace entdist {
namespace {

using detail::PartialTransposer;

constexpr double kInvLn2 = 1.0 / std::numbers::ln2;

double dd1_log(double a, double b) {
  if (a == b) return 1.0 / a;
  if (std::abs(a - b) <= 0.5 * std::max(a, b)) return std::log1p((a - b) / b) / (a - b);
  return (std::log(a) - std::log(b)) / (a - b);
}

double dd2_log(double a, double b, double c) {
  std::array<double, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  if (v[2] - v[0] > 1e-3 * v[2]) {
    return (dd1_log(v[1], v[2]) - dd1_log(v[0], v[1])) / (v[2] - v[0]);
  }
  // Taylor series about the mean; h_k are complete homogeneous symmetric
  // polynomials of the deviations (h_1 = 0).
  const double m = (v[0] + v[1] + v[2]) / 3.0;
  const double e0 = v[0] - m, e1 = v[1] - m, e2 = v[2] - m;
  const double h2 = e0 * e0 + e1 * e1 + e2 * e2 + e0 * e1 + e0 * e2 + e1 * e2;
  double h3 = 0.0;
  const std::array<double, 3> e{e0, e1, e2};
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      for (int k = j; k < 3; ++k) h3 += e[i] * e[j] * e[k];
    }
  }
  const double m2 = m * m;
  return -0.5 / m2 - h2 / (4.0 * m2 * m2) + h3 / (5.0 * m2 * m2 * m);
}

std::vector<CMatrix> traceless_basis(int d) {
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(d) * d - 1);
  const double r = 1.0 / std::numbers::sqrt2;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      CMatrix s = CMatrix::Zero(d, d);
      s(i, j) = s(j, i) = r;
      out.push_back(std::move(s));
      CMatrix a = CMatrix::Zero(d, d);
      a(i, j) = Complex(0.0, -r);
      a(j, i) = Complex(0.0, r);
      out.push_back(std::move(a));
    }
  }
  for (int k = 1; k < d; ++k) {
    CMatrix g = CMatrix::Zero(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int l = 0; l < k; ++l) g(l, l) = norm;
    g(k, k) = -k * norm;
    out.push_back(std::move(g));
  }
  return out;
}

struct Point {
  CMatrix sigma;
  HermEig es;  // sigma
  HermEig et;  // sigma^Gamma
  double f = 0.0;
  double phi = 0.0;
};

class BarrierProblem {
 public:
  BarrierProblem(const CMatrix& rho, const PartialTransposer& pt)
      : rho_(rho), pt_(pt), d_(pt.dim()), basis_(traceless_basis(d_)) {
    basis_pt_.reserve(basis_.size());
    for (const auto& b : basis_) basis_pt_.push_back(pt_(b));
  }

  int size() const { return static_cast<int>(basis_.size()); }

  CMatrix sigma_of(const Eigen::VectorXd& x) const {
    CMatrix s = CMatrix::Identity(d_, d_) / static_cast<double>(d_);
    for (int k = 0; k < size(); ++k) s += x(k) * basis_[k];
    return s;
  }

  // False when sigma or its partial transpose is not positive definite.
  bool evaluate(const Eigen::VectorXd& x, double t, Point& p) const {
    p.sigma = sigma_of(x);
    if (p.sigma.llt().info() != Eigen::Success) return false;
    const CMatrix tau = pt_(p.sigma);
    if (tau.llt().info() != Eigen::Success) return false;
    p.es = herm_eig_unchecked(p.sigma);
    p.et = herm_eig_unchecked(tau);
    if (p.es.values.minCoeff() <= 0.0 || p.et.values.minCoeff() <= 0.0) return false;
    const CMatrix rt = p.es.vectors.adjoint() * rho_ * p.es.vectors;
    p.f = 0.0;
    double logdet = 0.0;
    for (int a = 0; a < d_; ++a) {
      p.f -= rt(a, a).real() * std::log2(p.es.values(a));
      logdet += std::log(p.es.values(a)) + std::log(p.et.values(a));
    }
    p.phi = t * p.f - logdet;
    return true;
  }

  // Gradient and Hessian of Phi_t at p.
  void derivatives(const Point& p, double t, Eigen::VectorXd& g, Eigen::MatrixXd& h) const {
    const int n = size();
    const int d = d_;
    const int dd = d * d;
    const RVector& lam = p.es.values;
    const RVector& mu = p.et.values;
    const CMatrix& u = p.es.vectors;
    const CMatrix& w = p.et.vectors;
    const CMatrix rt = u.adjoint() * rho_ * u;
    const double cf = -t * kInvLn2;

    std::vector<double> t2(static_cast<std::size_t>(dd) * d);
    CMatrix grad_f(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        grad_f(i, j) = cf * dd1_log(lam(i), lam(j)) * rt(j, i);
        for (int m = 0; m < d; ++m) t2[(i * d + m) * d + j] = dd2_log(lam(i), lam(m), lam(j));
      }
    }
    auto T = [&](int i, int m, int j) { return t2[(i * d + m) * d + j]; };

    CMatrix bs(n, dd);  // rows: basis in the eigenbasis of sigma
    CMatrix bt(n, dd);  // rows: transposed basis in the eigenbasis of sigma^Gamma
    CMatrix zs(n, dd);
    CMatrix zt(n, dd);
    g.resize(n);
    CMatrix x(d, d), y(d, d), z(d, d);
    for (int k = 0; k < n; ++k) {
      x.noalias() = u.adjoint() * basis_[k] * u;
      y.noalias() = w.adjoint() * basis_pt_[k] * w;
      double gk = 0.0;
      for (int a = 0; a < d; ++a) {
        gk -= x(a, a).real() / lam(a) + y(a, a).real() / mu(a);
        for (int b = 0; b < d; ++b) {
          gk += (grad_f(a, b) * x(a, b)).real();
          Complex acc = 0.0;
          for (int c = 0; c < d; ++c) {
            acc += T(c, a, b) * rt(b, c) * x(c, a) + T(a, b, c) * rt(c, a) * x(b, c);
          }
          z(a, b) = cf * acc + x(b, a) / (lam(a) * lam(b));
        }
      }
      g(k) = gk;
      bs.row(k) = Eigen::Map<const CVector>(x.data(), dd).transpose();
      zs.row(k) = Eigen::Map<const CVector>(z.data(), dd).transpose();
      bt.row(k) = Eigen::Map<const CVector>(y.data(), dd).transpose();
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) z(a, b) = y(b, a) / (mu(a) * mu(b));
      }
      zt.row(k) = Eigen::Map<const CVector>(z.data(), dd).transpose();
    }
    h = (zs * bs.transpose() + zt * bt.transpose()).real();
    h = 0.5 * (h + h.transpose()).eval();
  }

 private:
  const CMatrix& rho_;
  const PartialTransposer& pt_;
  int d_;
  std::vector<CMatrix> basis_;
  std::vector<CMatrix> basis_pt_;
};

Eigen::VectorXd newton_direction(const Eigen::MatrixXd& h, const Eigen::VectorXd& g) {
  Eigen::LDLT<Eigen::MatrixXd> ldlt(h);
  if (ldlt.info() == Eigen::Success && ldlt.isPositive()) {
    Eigen::VectorXd dx = ldlt.solve(-g);
    if (dx.allFinite() && dx.dot(g) < 0.0) return dx;
  }
  const double scale = std::max(1.0, h.diagonal().cwiseAbs().maxCoeff());
  for (double reg = 1e-12; reg < 1e3; reg *= 100.0) {
    Eigen::MatrixXd hr = h;
    hr.diagonal().array() += reg * scale;
    Eigen::LDLT<Eigen::MatrixXd> l2(hr);
    Eigen::VectorXd dx = l2.solve(-g);
    if (l2.info() == Eigen::Success && dx.allFinite() && dx.dot(g) < 0.0) return dx;
  }
  return -g / scale;
}

}  // namespace

OptimizerReport ree_ppt(const DensityMatrix& rho, const Bipartition& cut,
                        const OptimizerConfig& cfg) {
  const CutView v = restrict_to_cut(rho, cut);
  const PartialTransposer pt(v.shape, v.flip);
  const int d = v.shape.total();

  OptimizerReport rep;
  rep.method = "barrier-newton";
  rep.threshold = std::max(cfg.tol, 1e-12);
  if (detail::min_eigenvalue(pt(v.mat)) >= 0.0) {
    rep.value = 0.0;
    rep.converged = true;
    rep.point = v.mat;
    return rep;
  }

  const BarrierProblem prob(v.mat, pt);
  const double nu = 2.0 * d;
  constexpr double kGrowth = 10.0;
  // Newton decrement at which a point counts as centered. Tighter values
  // hit the rounding floor of t f once t is large.
  constexpr double kCentered = 1e-4;
  constexpr int kMaxCentering = 200;

  Eigen::VectorXd x = Eigen::VectorXd::Zero(prob.size());
  double t = 1.0;
  Point cur;
  Eigen::VectorXd g;
  Eigen::MatrixXd h;
  double decrement = 0.0;
  int iters = 0;
  bool stalled = false;

  while (true) {
    prob.evaluate(x, t, cur);
    for (int step = 0; step < kMaxCentering && iters < cfg.max_iters; ++step) {
      prob.derivatives(cur, t, g, h);
      const Eigen::VectorXd dx = newton_direction(h, g);
      const double slope = g.dot(dx);
      decrement = std::sqrt(std::max(0.0, -slope));
      ++iters;
      // Phi_t is only known to about eps |Phi_t|, which bounds how well
      // decreases of order decrement^2 can be resolved.
      const double floor = 4.0 * std::sqrt(std::numeric_limits<double>::epsilon() *
                                           std::max(1.0, std::abs(cur.phi)));
      if (decrement <= std::max(kCentered, floor)) break;
      double s = 1.0;
      Point next;
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls, s *= 0.5) {
        if (!prob.evaluate(x + s * dx, t, next)) continue;
        if (next.phi <= cur.phi + 0.25 * s * slope) {
          moved = true;
          break;
        }
      }
      if (!moved || s < 1e-6) {
        stalled = !moved && decrement > 0.1;
        if (moved) {
          x += s * dx;
          cur = std::move(next);
        }
        break;
      }
      x += s * dx;
      cur = std::move(next);
    }
    // gap bound for a point with Newton decrement delta < 1
    const double delta = decrement;
    rep.residual = delta < 1.0
                       ? (nu + (delta + std::sqrt(nu)) * delta / (1.0 - delta)) / t
                       : std::numeric_limits<double>::infinity();
    if (rep.residual <= rep.threshold || iters >= cfg.max_iters || stalled) break;
    t *= kGrowth;
  }

  const CMatrix rt = cur.es.vectors.adjoint() * v.mat * cur.es.vectors;
  double cross = 0.0;
  for (int a = 0; a < d; ++a) cross -= rt(a, a).real() * std::log2(cur.es.values(a));
  rep.value = std::max(0.0, cross - von_neumann_entropy(v.mat));
  rep.point = cur.sigma;
  rep.iterations = iters;
  rep.converged = rep.residual <= rep.threshold;
  return rep;
}

}  // namespace entdist

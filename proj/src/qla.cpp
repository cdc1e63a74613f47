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

#include "entdist/qla.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace entdist {

SystemShape::SystemShape(std::vector<int> dims) : dims_(std::move(dims)) {
  long long total = 1;
  for (int d : dims_) {
    if (d < 2) {
      throw ContractError("SystemShape: every subsystem dimension must be >= 2, got " +
                          std::to_string(d));
    }
    total *= d;
    if (total > kMaxTotalDim) {
      throw SizeError("SystemShape: total dimension exceeds " +
                      std::to_string(kMaxTotalDim));
    }
  }
  total_ = static_cast<int>(total);
}

int SystemShape::dim(std::size_t k) const {
  if (k >= dims_.size()) {
    throw IndexError("SystemShape: subsystem " + std::to_string(k) +
                     " out of range for " + std::to_string(dims_.size()) +
                     " subsystems");
  }
  return dims_[k];
}

std::vector<int> SystemShape::normalize(std::span<const int> subsystems) const {
  std::vector<int> out(subsystems.begin(), subsystems.end());
  for (int k : out) {
    if (k < 0 || static_cast<std::size_t>(k) >= dims_.size()) {
      throw IndexError("subsystem index " + std::to_string(k) +
                       " out of range for " + std::to_string(dims_.size()) +
                       " subsystems");
    }
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw IndexError("repeated subsystem index");
  }
  return out;
}

int SystemShape::total_of(std::span<const int> subsystems) const {
  int t = 1;
  for (int k : normalize(subsystems)) t *= dims_[k];
  return t;
}

SystemShape SystemShape::select(std::span<const int> subsystems) const {
  std::vector<int> d;
  for (int k : normalize(subsystems)) d.push_back(dims_[k]);
  return SystemShape(std::move(d));
}

std::vector<int> SystemShape::complement(std::span<const int> subsystems) const {
  auto sel = normalize(subsystems);
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(dims_.size()); ++k) {
    if (!std::binary_search(sel.begin(), sel.end(), k)) out.push_back(k);
  }
  return out;
}

std::vector<int> SystemShape::offsets(std::span<const int> subsystems) const {
  auto sel = normalize(subsystems);
  const int n = static_cast<int>(dims_.size());
  std::vector<int> stride(n, 1);
  for (int k = n - 2; k >= 0; --k) stride[k] = stride[k + 1] * dims_[k + 1];

  std::vector<int> out{0};
  for (int k : sel) {
    std::vector<int> next;
    next.reserve(out.size() * dims_[k]);
    for (int base : out) {
      for (int i = 0; i < dims_[k]; ++i) next.push_back(base + i * stride[k]);
    }
    out = std::move(next);
  }
  return out;
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  if (rows > kMaxTotalDim || cols > kMaxTotalDim) {
    throw SizeError("tensor: result " + std::to_string(rows) + "x" +
                    std::to_string(cols) + " exceeds the dimension cap");
  }
  CMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

void require_square(const CMatrix& m, const SystemShape& shape, const char* who) {
  if (m.rows() != m.cols() || m.rows() != shape.total()) {
    throw ContractError(std::string(who) + ": matrix is " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " but shape total is " + std::to_string(shape.total()));
  }
}

}  // namespace

CMatrix partial_trace(const CMatrix& m, const SystemShape& shape,
                      std::span<const int> keep) {
  require_square(m, shape, "partial_trace");
  const auto kept = shape.normalize(keep);
  const auto traced = shape.complement(kept);
  const auto ko = shape.offsets(kept);
  const auto to = shape.offsets(traced);

  const int n = static_cast<int>(ko.size());
  CMatrix out = CMatrix::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Complex acc = 0.0;
      for (int t : to) acc += m(ko[r] + t, ko[c] + t);
      out(r, c) = acc;
    }
  }
  return out;
}

CMatrix partial_trace(const CMatrix& m, const SystemShape& shape,
                      std::initializer_list<int> keep) {
  return partial_trace(m, shape, std::span<const int>(keep.begin(), keep.size()));
}

CMatrix partial_transpose(const CMatrix& m, const SystemShape& shape,
                          std::span<const int> flip) {
  require_square(m, shape, "partial_transpose");
  const auto flipped = shape.normalize(flip);
  const auto fixed = shape.complement(flipped);
  const auto fo = shape.offsets(flipped);
  const auto xo = shape.offsets(fixed);

  CMatrix out(m.rows(), m.cols());
  for (int rx : xo) {
    for (int cx : xo) {
      for (int rf : fo) {
        for (int cf : fo) out(rx + cf, cx + rf) = m(rx + rf, cx + cf);
      }
    }
  }
  return out;
}

CMatrix partial_transpose(const CMatrix& m, const SystemShape& shape,
                          std::initializer_list<int> flip) {
  return partial_transpose(m, shape, std::span<const int>(flip.begin(), flip.size()));
}

double hermiticity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).norm() / (1.0 + m.norm());
}

bool is_hermitian(const CMatrix& m, double tol) {
  return hermiticity_defect(m) <= tol;
}

HermEig herm_eig_unchecked(const CMatrix& m) {
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  if (es.info() != Eigen::Success) {
    throw ContractError("herm_eig: eigensolver failed to converge");
  }
  return {es.eigenvalues(), es.eigenvectors()};
}

HermEig herm_eig(const CMatrix& m) {
  if (m.rows() != m.cols()) throw ContractError("herm_eig: matrix is not square");
  if (!m.allFinite()) throw ContractError("herm_eig: non-finite entries");
  if (!is_hermitian(m)) {
    throw ContractError("herm_eig: matrix is not Hermitian (defect " +
                        std::to_string(hermiticity_defect(m)) + ")");
  }
  return herm_eig_unchecked(m);
}

double schatten_norm(const CMatrix& m, double p) {
  if (!(p >= 1.0)) throw ContractError("schatten_norm: p must be >= 1");
  RVector s;
  if (m.rows() == m.cols() && is_hermitian(m, 1e-14)) {
    s = herm_eig_unchecked(m).values.cwiseAbs();
  } else {
    s = Eigen::JacobiSVD<CMatrix>(m).singularValues();
  }
  const double top = s.size() ? s.maxCoeff() : 0.0;
  if (top == 0.0) return 0.0;
  if (std::isinf(p)) return top;
  double acc = 0.0;
  for (double v : s) acc += std::pow(v / top, p);
  return top * std::pow(acc, 1.0 / p);
}

namespace {

RVector clipped_spectrum(const RVector& values, const char* who) {
  RVector out = values;
  for (auto& v : out) {
    if (v < -kEigClip) {
      throw ContractError(std::string(who) + ": negative eigenvalue " +
                          std::to_string(v));
    }
    if (v < 0.0) v = 0.0;
  }
  return out;
}

void require_state(const CMatrix& m, const char* who) {
  if (m.rows() != m.cols()) throw ContractError(std::string(who) + ": not square");
  if (!is_hermitian(m)) throw ContractError(std::string(who) + ": not Hermitian");
  if (std::abs(m.trace().real() - 1.0) > 1e-10) {
    throw ContractError(std::string(who) + ": trace is not 1");
  }
}

}  // namespace

CMatrix matrix_log2(const CMatrix& m) {
  const HermEig eig = herm_eig(m);
  const RVector lam = clipped_spectrum(eig.values, "matrix_log2");
  const double cut = kSupportTol * std::max(lam.maxCoeff(), 0.0);
  RVector logs(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    logs(i) = lam(i) > cut && lam(i) > 0.0 ? std::log2(lam(i)) : 0.0;
  }
  return eig.vectors * logs.asDiagonal() * eig.vectors.adjoint();
}

double spectrum_entropy(const RVector& eigenvalues) {
  double s = 0.0;
  for (double v : eigenvalues) {
    if (v > 0.0) s -= v * std::log2(v);
  }
  return s;
}

double von_neumann_entropy(const CMatrix& rho) {
  return spectrum_entropy(clipped_spectrum(herm_eig(rho).values, "von_neumann_entropy"));
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double rel_entropy(const CMatrix& rho, const CMatrix& sigma) {
  require_state(rho, "rel_entropy(rho)");
  require_state(sigma, "rel_entropy(sigma)");
  if (rho.rows() != sigma.rows()) throw ContractError("rel_entropy: size mismatch");

  const HermEig es = herm_eig_unchecked(sigma);
  const RVector mu = clipped_spectrum(es.values, "rel_entropy(sigma)");
  const double cut = kSupportTol * mu.maxCoeff();
  const CMatrix rt = es.vectors.adjoint() * rho * es.vectors;

  double cross = 0.0;  // -Tr[rho log2 sigma]
  for (Eigen::Index k = 0; k < mu.size(); ++k) {
    const double w = rt(k, k).real();
    if (mu(k) <= cut) {
      if (w > kSupportTol) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross -= w * std::log2(mu(k));
  }
  const double s_rho =
      spectrum_entropy(clipped_spectrum(herm_eig_unchecked(rho).values, "rel_entropy(rho)"));
  return std::max(0.0, cross - s_rho);
}

}  // namespace entdist

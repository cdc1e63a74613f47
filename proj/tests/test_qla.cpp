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
#include <limits>

#include <doctest.h>

#include "entdist/errors.hpp"
#include "entdist/qla.hpp"
#include "entdist/states.hpp"
#include "oracles.hpp"

using namespace entdist;

namespace {

CMatrix phi_plus() { return oracle::ket_density({M_SQRT1_2, 0, 0, M_SQRT1_2}); }

CMatrix random_herm(int d, std::mt19937_64& rng) {
  const CMatrix g = ginibre(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST_CASE("SystemShape validates and bookkeeps") {
  SystemShape s{2, 3, 2};
  CHECK(s.total() == 12);
  CHECK(s.total_of(std::vector<int>{0, 2}) == 4);
  CHECK(s.complement(std::vector<int>{1}) == std::vector<int>{0, 2});
  CHECK(s.normalize(std::vector<int>{2, 0}) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(SystemShape({1, 2}), ContractError);
  CHECK_THROWS_AS(SystemShape({8, 16}), SizeError);
  CHECK_THROWS_AS(s.normalize(std::vector<int>{3}), IndexError);
  CHECK_THROWS_AS(s.normalize(std::vector<int>{1, 1}), IndexError);
}

TEST_CASE("tensor") {
  const auto& p = std::array<CMatrix, 2>{basis_projector(2, 0), basis_projector(2, 1)};
  CHECK(tensor(CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)).isApprox(CMatrix::Identity(4, 4)));
  CMatrix want = CMatrix::Zero(4, 4);
  want(1, 1) = 1;
  CHECK(tensor(p[0], p[1]).isApprox(want));

  CMatrix x(2, 2);
  x << 0, 1, 1, 0;
  Eigen::VectorXcd ket00 = Eigen::VectorXcd::Zero(4);
  ket00(0) = 1;
  const Eigen::VectorXcd out = tensor(x, x) * ket00;
  CHECK(std::abs(out(3) - 1.0) < 1e-15);

  auto rng = make_engine(3);
  const CMatrix a = ginibre(3, 2, rng), b = ginibre(2, 4, rng);
  CHECK((tensor(a, b) - oracle::kron(a, b)).norm() < 1e-13);
  CHECK_THROWS_AS(tensor(CMatrix::Identity(16, 16), CMatrix::Identity(8, 8)), SizeError);
}

TEST_CASE("partial trace") {
  const SystemShape s{2, 2};
  CHECK(partial_trace(phi_plus(), s, {0}).isApprox(0.5 * CMatrix::Identity(2, 2)));

  auto rng = make_engine(5);
  const CMatrix r = random_mixed({3}, {11}).mat();
  const CMatrix q = random_mixed({2}, {12}).mat();
  const SystemShape rs{3, 2};
  CHECK((partial_trace(tensor(r, q), rs, {0}) - r).norm() < 1e-13);
  CHECK((partial_trace(tensor(r, q), rs, {1}) - q).norm() < 1e-13);

  const CMatrix g = ginibre(6, 6, rng);
  CHECK((partial_trace(g, rs, {1}) - oracle::trace_first(g, 3, 2)).norm() < 1e-13);
  CHECK((partial_trace(g, rs, {0}) - oracle::trace_second(g, 3, 2)).norm() < 1e-13);

  const CMatrix all = partial_trace(g, rs, std::vector<int>{});
  REQUIRE(all.rows() == 1);
  CHECK(std::abs(all(0, 0) - g.trace()) < 1e-13);

  // middle subsystem of three
  const SystemShape s3{2, 3, 2};
  const CMatrix a = random_mixed({2}, {1}).mat(), b = random_mixed({3}, {2}).mat(),
                c = random_mixed({2}, {3}).mat();
  CHECK((partial_trace(tensor(tensor(a, b), c), s3, {1}) - b).norm() < 1e-13);
  CHECK((partial_trace(tensor(tensor(a, b), c), s3, {0, 2}) - tensor(a, c)).norm() < 1e-13);
}

TEST_CASE("partial transpose") {
  const SystemShape s{2, 2};
  auto ev = herm_eig(partial_transpose(phi_plus(), s, {0})).values;
  CHECK(ev(0) == doctest::Approx(-0.5));
  CHECK(ev(1) == doctest::Approx(0.5));
  CHECK(ev(3) == doctest::Approx(0.5));
  const auto brute = oracle::eigvals(oracle::pt_first(phi_plus(), 2, 2));
  CHECK(brute[0] == doctest::Approx(-0.5));

  auto rng = make_engine(9);
  const CMatrix r = ginibre(3, 3, rng), q = ginibre(2, 2, rng);
  const SystemShape rs{3, 2};
  CHECK((partial_transpose(tensor(r, q), rs, {0}) - tensor(r.transpose(), q)).norm() < 1e-13);
  const CMatrix g = ginibre(6, 6, rng);
  CHECK((partial_transpose(g, rs, {0, 1}) - g.transpose()).norm() < 1e-13);
  CHECK((partial_transpose(g, rs, {0}) - oracle::pt_first(g, 3, 2)).norm() < 1e-13);
}

TEST_CASE("herm_eig") {
  CHECK(herm_eig(CMatrix::Identity(4, 4)).values.isApprox(Eigen::VectorXd::Ones(4)));
  CMatrix z(2, 2);
  z << 1, 0, 0, -1;
  const auto e = herm_eig(z);
  CHECK(e.values(0) == doctest::Approx(-1));
  CHECK(e.values(1) == doctest::Approx(1));
  const auto p = herm_eig(phi_plus()).values;
  CHECK(std::abs(p(0)) < 1e-12);
  CHECK(p(3) == doctest::Approx(1));
  CMatrix bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(herm_eig(bad), ContractError);

  auto rng = make_engine(4);
  const CMatrix h = random_herm(5, rng);
  const auto eh = herm_eig(h);
  CHECK((eh.vectors * eh.values.cast<Complex>().asDiagonal() * eh.vectors.adjoint() - h).norm() <
        1e-12);
}

TEST_CASE("schatten norms") {
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    CHECK(schatten_norm(0.5 * CMatrix::Identity(2, 2), p) ==
          doctest::Approx(std::pow(2.0, 1 / p - 1)).epsilon(1e-12));
  }
  CMatrix x(2, 2);
  x << 0, 1, 1, 0;
  CHECK(schatten_norm(x, 1) == doctest::Approx(2));
  CHECK_THROWS_AS(schatten_norm(x, 0.5), ContractError);

  auto rng = make_engine(8);
  for (int k = 0; k < 20; ++k) {
    const CMatrix m = random_herm(4, rng);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const double lhs = schatten_norm(tensor(m, 0.5 * CMatrix::Identity(2, 2)), p);
      CHECK(std::abs(lhs - std::pow(2.0, 1 / p - 1) * schatten_norm(m, p)) <= 1e-10);
    }
    CHECK(schatten_norm(m, 1) == doctest::Approx(oracle::trace_norm(m)).epsilon(1e-12));
  }
}

TEST_CASE("matrix log and relative entropy") {
  CHECK(matrix_log2(0.25 * CMatrix::Identity(4, 4)).isApprox(-2.0 * CMatrix::Identity(4, 4)));
  CHECK(matrix_log2(CMatrix::Identity(2, 2)).norm() < 1e-14);
  CMatrix half = CMatrix::Zero(4, 4);
  half(0, 0) = half(1, 1) = 0.5;
  CMatrix want = CMatrix::Zero(4, 4);
  want(0, 0) = want(1, 1) = -1;
  CHECK((matrix_log2(half) - want).norm() < 1e-12);

  const CMatrix r = random_mixed({4}, {21}).mat();
  CHECK(std::abs(rel_entropy(r, r)) < 1e-10);
  CHECK(rel_entropy(basis_projector(2, 0), 0.5 * CMatrix::Identity(2, 2)) == doctest::Approx(1));
  CHECK(rel_entropy(basis_projector(2, 0), basis_projector(2, 1)) ==
        std::numeric_limits<double>::infinity());
}

TEST_CASE("entropies") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(0.25) == doctest::Approx(oracle::h2(0.25)));
  const CMatrix r = random_mixed({2, 2}, {31}).mat();
  CHECK(von_neumann_entropy(r) == doctest::Approx(oracle::entropy(r)).epsilon(1e-12));
}

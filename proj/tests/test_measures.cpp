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
#include <random>

#include <doctest.h>

#include "entdist/channels.hpp"
#include "entdist/errors.hpp"
#include "entdist/measures.hpp"
#include "oracles.hpp"

using namespace entdist;

namespace {

const Bipartition kAB{{0}, {1}};

DensityMatrix two_qubit(const CMatrix& m) { return DensityMatrix(m, SystemShape{2, 2}); }

DensityMatrix product_state(std::uint64_t seed) {
  return tensor(random_mixed({2}, {seed}), random_mixed({2}, {seed + 1}));
}

}  // namespace

TEST_CASE("Bipartition validation") {
  const SystemShape s{2, 2, 2};
  CHECK_NOTHROW(Bipartition({{0}, {1, 2}}).validate(s));
  CHECK_THROWS(Bipartition({{}, {1}}).validate(s));
  CHECK_THROWS(Bipartition({{0, 1}, {1}}).validate(s));
  CHECK_THROWS(Bipartition({{0}, {3}}).validate(s));
}

TEST_CASE("concurrence and eof") {
  const auto phi = max_entangled(2).density();
  CHECK(concurrence(phi) == doctest::Approx(1));
  CHECK(concurrence(product_state(3)) < 1e-9);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto r = random_mixed({2, 2}, {s});
    CHECK(concurrence(r) == doctest::Approx(oracle::wootters(r.mat())).epsilon(1e-8));
    CHECK(eof(r, kAB) == doctest::Approx(oracle::eof_from_c(oracle::wootters(r.mat()))).epsilon(1e-7));
  }
  CHECK(eof(phi, kAB) == doctest::Approx(1));
  CHECK(eof_from_concurrence(0) == 0.0);

  const auto w = ef_squared_witness_state();
  CHECK(eof(w, Bipartition{{0, 2}, {1}}) == doctest::Approx(1).epsilon(1e-12));
  CHECK(eof(w, Bipartition{{0}, {1, 2}}) == doctest::Approx(2).epsilon(1e-12));
  CHECK_THROWS_AS(eof(random_mixed({2, 2, 2}, {1}), Bipartition{{0}, {1, 2}}), UnsupportedError);
}

TEST_CASE("negativity family") {
  const auto phi = max_entangled(2).density();
  CHECK(log_negativity(phi, kAB) == doctest::Approx(1));
  CHECK(negativity(phi, kAB) == doctest::Approx(1));
  CHECK(log_negativity(product_state(5), kAB) < 1e-12);
  CHECK(negativity(product_state(7), kAB) < 1e-12);
  // Werner state below the PPT threshold
  CHECK(log_negativity(two_qubit(oracle::bell_diagonal(0.4, 0.2, 0.2, 0.2)), kAB) < 1e-12);

  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto r = random_mixed({2, 3}, {100 + s});
    const double tn = oracle::trace_norm(oracle::pt_first(r.mat(), 2, 3));
    CHECK(log_negativity(r, kAB) == doctest::Approx(std::log2(tn)).epsilon(1e-10));
    CHECK(negativity(r, kAB) == doctest::Approx(std::exp2(log_negativity(r, kAB)) - 1).epsilon(1e-12));

    const auto a = random_pure({2, 2}, {200 + s, Ensemble::haar_pure}).density();
    const auto b = random_mixed({2, 2}, {300 + s});
    const auto ab = tensor(a, b);  // (A1 B1 A2 B2)
    const double joint = log_negativity(ab, Bipartition{{0, 2}, {1, 3}});
    CHECK(joint == doctest::Approx(log_negativity(a, kAB) + log_negativity(b, kAB)).epsilon(1e-10));
  }
}

TEST_CASE("relative entropy of entanglement") {
  const auto sep = product_state(11);
  CHECK(ree_ppt(sep, kAB).value < 1e-6);

  const auto phi = max_entangled(2).density();
  const auto rep = ree_ppt(phi, kAB);
  CHECK(rep.value == doctest::Approx(1).epsilon(1e-4));
  CHECK(rep.converged);
  CHECK(rep.residual <= rep.threshold);

  for (double p : {0.05, 0.25, 0.4}) {
    const auto r = apply_on(phase_damping(p), phi, 1);
    CHECK(std::abs(ree_ppt(r, kAB).value - (1 - oracle::h2(p))) < 1e-4);
  }
  // Bell-diagonal closed form
  const std::array<std::array<double, 4>, 3> ws{{{0.7, 0.1, 0.1, 0.1}, {0.55, 0.3, 0.1, 0.05},
                                                 {0.9, 0.05, 0.03, 0.02}}};
  for (const auto& w : ws) {
    const auto r = two_qubit(oracle::bell_diagonal(w[0], w[1], w[2], w[3]));
    CHECK(std::abs(ree_ppt(r, kAB).value - oracle::ree_bell_diagonal(w[0], w[1], w[2], w[3])) <
          1e-4);
  }
  // sandwich: E_R <= E_f on random states, and the returned sigma is PPT
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto r = random_mixed({2, 2}, {400 + s});
    const auto rr = ree_ppt(r, kAB);
    CHECK(rr.value <= eof(r, kAB) + 1e-6);
    CHECK(oracle::eigvals(oracle::pt_first(rr.point, 2, 2)).front() >= -1e-9);
    CHECK(rr.value == doctest::Approx(rel_entropy(r.mat(), rr.point)).epsilon(1e-8));
  }
}

TEST_CASE("Schatten distances to the PPT set") {
  CHECK(ep_distance(product_state(13), kAB, 2).value < 1e-8);
  CHECK(ep_distance(product_state(13), kAB, 1).value < 1e-8);
  CHECK_THROWS_AS(ep_distance(product_state(13), kAB, 3), ContractError);

  // sigma = P(rho) iff Re Tr[(rho - sigma)(tau - sigma)] <= 0 for every PPT tau
  const auto phi = max_entangled(2).density();
  const auto rep = ep_distance(phi, kAB, 2);
  CHECK(rep.value == doctest::Approx((phi.mat() - rep.point).norm()).epsilon(1e-10));
  CHECK(oracle::eigvals(rep.point).front() >= -1e-9);
  CHECK(oracle::eigvals(oracle::pt_first(rep.point, 2, 2)).front() >= -1e-9);
  auto rng = make_engine(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::uint64_t s = 0; s < 200; ++s) {
    CMatrix tau = product_state(500 + 2 * s).mat();
    if (s % 2) {
      // separable Bell-diagonal: every weight <= 1/2
      std::array<double, 4> w{};
      do {
        double t = 0;
        for (auto& x : w) t += (x = -std::log(u(rng)));
        for (auto& x : w) x /= t;
      } while (*std::max_element(w.begin(), w.end()) > 0.5);
      tau = oracle::bell_diagonal(w[0], w[1], w[2], w[3]);
    }
    const double ip = ((phi.mat() - rep.point) * (tau - rep.point)).trace().real();
    CHECK(ip <= 1e-6);
  }
  // E_1 <= ||rho - P_2(rho)||_1 since the projection is feasible for p = 1
  const auto r1 = ep_distance(phi, kAB, 1);
  CHECK(r1.value <= oracle::trace_norm(phi.mat() - rep.point) + 1e-9);
  CHECK(r1.value >= rep.value - 1e-9);  // ||.||_1 >= ||.||_2
}

TEST_CASE("measured state") {
  const MeasurementBloch z{0, 0};
  const auto diag = two_qubit(oracle::bell_diagonal(0.25, 0.25, 0.25, 0.25));
  CHECK((measured_state(diag, 1, z).mat() - diag.mat()).norm() < 1e-14);
  const auto phi = max_entangled(2).density();
  CMatrix want = CMatrix::Zero(4, 4);
  want(0, 0) = want(3, 3) = 0.5;
  CHECK((measured_state(phi, 1, z).mat() - want).norm() < 1e-14);
  const MeasurementBloch b{1.1, 2.3};
  const auto r = random_mixed({2, 2, 2}, {21});
  const auto once = measured_state(r, 2, b);
  CHECK((measured_state(once, 2, b).mat() - once.mat()).norm() < 1e-13);
  CHECK(measurement_distance(once, 2, b, DiscordDistance::relative_entropy) < 1e-9);
}

TEST_CASE("discord") {
  const auto phi = max_entangled(2).density();
  CHECK(discord(phi, 1, {0}, DiscordDistance::relative_entropy).value ==
        doctest::Approx(1).epsilon(1e-6));
  // measured state of phi+ in any basis is maximally correlated classical
  const MeasurementBloch b{0.7, 1.9};
  CHECK(measurement_distance(phi, 1, b, DiscordDistance::relative_entropy) ==
        doctest::Approx(1).epsilon(1e-10));

  // quantum-classical: sum_i p_i rho_i^{AB} (x) |i><i|^C
  const auto r0 = random_mixed({2, 2}, {31}).mat(), r1 = random_mixed({2, 2}, {32}).mat();
  const CMatrix qc = 0.3 * oracle::kron(r0, basis_projector(2, 0)) +
                     0.7 * oracle::kron(r1, basis_projector(2, 1));
  const DensityMatrix qcs(qc, SystemShape{2, 2, 2});
  for (auto d : {DiscordDistance::relative_entropy, DiscordDistance::schatten1,
                 DiscordDistance::schatten2}) {
    CHECK(discord(qcs, 2, {0, 1}, d).value < 1e-6);
    CHECK(discord(product_state(41), 0, {1}, d).value < 1e-6);
  }
  // classical in a rotated basis on C
  auto rng = make_engine(33);
  const CMatrix v = oracle::kron(CMatrix::Identity(4, 4), random_unitary(2, rng));
  const DensityMatrix rot(v * qc * v.adjoint(), qcs.shape());
  CHECK(discord(rot, 2, {0, 1}, DiscordDistance::schatten2).value < 1e-6);

  // a random state: the optimum is no larger than any fixed basis
  const auto r = random_mixed({2, 2, 2}, {50});
  const auto rep = discord(r, 2, {0, 1}, DiscordDistance::relative_entropy);
  for (double th : {0.0, 0.4, 1.2, 2.0}) {
    CHECK(rep.value <= measurement_distance(r, 2, {th, 0.3}, DiscordDistance::relative_entropy) +
                           1e-9);
  }
  REQUIRE(rep.params.size() == 2);
  CHECK(measurement_distance(r, 2, {rep.params[0], rep.params[1]},
                             DiscordDistance::relative_entropy) ==
        doctest::Approx(rep.value).epsilon(1e-9));

  CHECK_THROWS_AS(discord(random_mixed({3, 2}, {1}), 0, {1}, DiscordDistance::schatten2),
                  UnsupportedError);
  CHECK_THROWS_AS(discord(r, 2, {0, 2}, DiscordDistance::schatten2), ContractError);
}

TEST_CASE("quantifier selectors") {
  const auto phi = max_entangled(2).density();
  CHECK(evaluate(Quantifier::eof_squared, phi, kAB).value == doctest::Approx(1));
  CHECK_FALSE(evaluate(Quantifier::log_negativity, phi, kAB).variational);
  CHECK(evaluate(Quantifier::ree, phi, kAB).variational);
  for (auto q : {Quantifier::log_negativity, Quantifier::negativity, Quantifier::concurrence,
                 Quantifier::eof, Quantifier::eof_squared, Quantifier::ree, Quantifier::schatten1,
                 Quantifier::schatten2}) {
    CHECK(parse_quantifier(to_string(q)) == q);
  }
  CHECK(parse_discord_distance("schatten2") == DiscordDistance::schatten2);
  CHECK_THROWS_AS(parse_quantifier("bogus"), ContractError);
}

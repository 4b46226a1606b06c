// Copyright 2026 The qnlp Authors
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


#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "qnlp/backend/contraction.hpp"
#include "qnlp/backend/statevector.hpp"
#include "qnlp/errors.hpp"
#include "support/oracles.hpp"
#include "support/random_objects.hpp"

using namespace qnlp;

namespace {

TensorNetwork two_vectors(std::size_t dim) {
  TensorNetwork tn;
  tn.nodes = {{NodeKind::Param, "u", {dim}}, {NodeKind::Param, "v", {dim}}};
  tn.edges = {{{0, 0}, {1, 0}}};
  return tn;
}

ParameterStore store(std::initializer_list<std::pair<std::string, std::vector<double>>> values) {
  ParameterStore ps;
  for (const auto& [name, v] : values) {
    DenseTensor<double> t({v.size()});
    for (std::size_t i = 0; i < v.size(); ++i) t[i] = v[i];
    ps.add(name, t.shape());
    ps.set(name, t);
  }
  return ps;
}

Circuit bell() {
  Circuit c;
  c.n_qubits = 2;
  c.ops = {{GateKind::H, {0}, {}}, {GateKind::CX, {0, 1}, {}}};
  c.open = {0, 1};
  return c;
}

double total_variation(const std::vector<std::uint64_t>& counts, const Eigen::VectorXd& p) {
  double n = 0;
  for (auto k : counts) n += static_cast<double>(k);
  double tv = 0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    tv += std::abs(static_cast<double>(counts[i]) / n - p(static_cast<Eigen::Index>(i)));
  return tv / 2;
}

}  // namespace

TEST_CASE("contraction examples", "[backend]") {
  const auto ps = store({{"u", {1, 2}}, {"v", {3, 4}}});
  const auto out = contract(two_vectors(2), ps);
  CHECK(out.rank() == 0);
  CHECK(out[0] == Catch::Approx(11.0));

  TensorNetwork tn;
  tn.nodes = {{NodeKind::Copy, {}, {3, 3, 3}}, {NodeKind::Param, "x", {3}},
              {NodeKind::Param, "u", {3}}, {NodeKind::Param, "v", {3}}};
  tn.edges = {{{1, 0}, {0, 0}}, {{2, 0}, {0, 1}}, {{3, 0}, {0, 2}}};
  const auto ps3 = store({{"x", {1, -2, 0.5}}, {"u", {3, 1, 2}}, {"v", {-1, 4, 2}}});
  CHECK(contract(tn, ps3)[0] == Catch::Approx(1 * 3 * -1 + -2 * 1 * 4 + 0.5 * 2 * 2));

  TensorNetwork mismatch = two_vectors(2);
  mismatch.nodes[1].shape = {3};
  CHECK_THROWS_AS(contract(mismatch, store({{"u", {1, 2}}, {"v", {1, 2, 3}}})), ShapeMismatch);
}

TEST_CASE("contraction order does not change the value", "[backend]") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 100; ++k) {
    ParameterStore ps;
    const TensorNetwork tn = testgen::random_network(rng, 2 + testgen::uniform_index(rng, 4), ps);
    const auto greedy = contract(tn, ps, ContractionOrder::Greedy);
    const auto seq = contract(tn, ps, ContractionOrder::Sequential);
    const auto brute = oracle::brute_force_contract(tn, ps);
    REQUIRE(greedy.shape() == tn.open_shape());
    REQUIRE(greedy.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) {
      REQUIRE(std::abs(greedy[i] - seq[i]) < 1e-12);
      REQUIRE(std::abs(greedy[i] - brute[i]) < 1e-12);
    }
  }
}

TEST_CASE("gradient examples", "[backend]") {
  const auto ps = store({{"u", {1, 2}}, {"v", {3, 4}}});
  const Eigen::VectorXd g = contract_grad(two_vectors(2), ps, DenseTensor<double>::scalar(1.0));
  CHECK(g.size() == 4);
  CHECK(g(ps.entry("u").offset) == Catch::Approx(3));
  CHECK(g(ps.entry("u").offset + 1) == Catch::Approx(4));
  CHECK(g(ps.entry("v").offset) == Catch::Approx(1));
  CHECK(g(ps.entry("v").offset + 1) == Catch::Approx(2));

  TensorNetwork single;
  single.nodes = {{NodeKind::Param, "w", {3}}};
  single.open = {{0, 0}};
  DenseTensor<double> cot({3});
  cot[0] = 0.5;
  cot[1] = -2;
  cot[2] = 7;
  const Eigen::VectorXd gs = contract_grad(single, store({{"w", {9, 9, 9}}}), cot);
  CHECK(gs(0) == 0.5);
  CHECK(gs(1) == -2);
  CHECK(gs(2) == 7);

  // Shared symbol: d/du (u.u) = 2u.
  TensorNetwork shared = two_vectors(2);
  shared.nodes[1].symbol = "u";
  const auto psu = store({{"u", {1, 2}}});
  const Eigen::VectorXd gu = contract_grad(shared, psu, DenseTensor<double>::scalar(1.0));
  CHECK(gu(0) == Catch::Approx(2));
  CHECK(gu(1) == Catch::Approx(4));
}

TEST_CASE("gradient matches central differences", "[backend]") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 30; ++k) {
    ParameterStore ps;
    const TensorNetwork tn = testgen::random_network(rng, 5, ps);
    DenseTensor<double> cot(tn.open_shape());
    for (std::size_t i = 0; i < cot.size(); ++i) cot[i] = testgen::uniform_real(rng, -1, 1);
    auto f = [&](const Eigen::VectorXd& x) {
      ParameterStore q = ps;
      q.values() = x;
      return contract(tn, q).data().dot(cot.data());
    };
    const Eigen::VectorXd fd = oracle::central_differences(f, ps.values(), 1e-4);
    const Eigen::VectorXd g = contract_grad(tn, ps, cot);
    const double scale = std::max(1.0, fd.cwiseAbs().maxCoeff());
    REQUIRE((g - fd).cwiseAbs().maxCoeff() / scale < 1e-5);
  }
}

TEST_CASE("statevector examples", "[backend]") {
  Circuit h;
  h.n_qubits = 1;
  h.ops = {{GateKind::H, {0}, {}}};
  h.open = {0};
  const auto psi = statevector(h, {});
  CHECK(std::abs(psi(0) - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(psi(1) - 1 / std::sqrt(2.0)) < 1e-15);

  const auto b = statevector(bell(), {});
  CHECK(std::abs(b(0) - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(b(3) - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(b(1)) + std::abs(b(2)) < 1e-15);

  Circuit unbound = h;
  unbound.ops.push_back({GateKind::Rz, {0}, Angle::sym("theta")});
  CHECK_THROWS_AS(statevector(unbound, {}), UnboundSymbol);

  // Rx(pi) maps |0> to -i|1>; Rz(t) = diag(e^{-it/2}, e^{it/2}).
  Circuit rx;
  rx.n_qubits = 1;
  rx.ops = {{GateKind::Rx, {0}, Angle::constant(std::numbers::pi)}};
  rx.open = {0};
  CHECK(std::abs(statevector(rx, {})(1) - Complex(0, -1)) < 1e-15);
  rx.ops.push_back({GateKind::Rz, {0}, Angle::constant(0.6)});
  CHECK(std::abs(statevector(rx, {})(1) - Complex(0, -1) * std::exp(Complex(0, 0.3))) < 1e-15);

  // Little-endian: flipping qubit 0 of two sets the low bit; then CX(0, 1)
  // reaches index 3. Both dense and fast paths agree on this.
  Circuit le;
  le.n_qubits = 2;
  le.ops = {{GateKind::Rx, {0}, Angle::constant(std::numbers::pi)}};
  le.open = {0, 1};
  CHECK(std::abs(statevector(le, {})(1)) == Catch::Approx(1.0));
  CHECK(std::abs(oracle::dense_statevector(le, {})(1)) == Catch::Approx(1.0));
  le.ops.push_back({GateKind::CX, {0, 1}, {}});
  CHECK(std::abs(statevector(le, {})(3)) == Catch::Approx(1.0));
  CHECK(std::abs(oracle::dense_statevector(le, {})(3)) == Catch::Approx(1.0));
}

TEST_CASE("statevector matches the dense matrix oracle", "[backend]") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    ParameterStore ps;
    const Circuit c = testgen::random_circuit(rng, 1 + testgen::uniform_index(rng, 3),
                                              testgen::uniform_index(rng, 15), ps);
    const auto fast = statevector(c, ps);
    const auto dense = oracle::dense_statevector(c, ps);
    REQUIRE((fast - dense).cwiseAbs().maxCoeff() < 1e-12);
    REQUIRE(std::abs(fast.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("evaluate", "[backend]") {
  const Eigen::VectorXd p = evaluate(bell(), {});
  CHECK(p.size() == 4);
  CHECK(p(0) == Catch::Approx(0.5));
  CHECK(p(3) == Catch::Approx(0.5));
  CHECK(p(1) == Catch::Approx(0.0).margin(1e-15));

  Circuit empty;
  empty.n_qubits = 1;
  empty.open = {0};
  CHECK(evaluate(empty, {})(0) == 1.0);

  // Postselecting qubit 1 of a Bell pair on 0 leaves qubit 0 in |0>.
  Circuit post = bell();
  post.open = {0};
  post.postselect = {{1, 0}};
  CHECK(evaluate(post, {})(0) == Catch::Approx(1.0));

  Circuit zero;
  zero.n_qubits = 1;
  zero.postselect = {{0, 1}};
  CHECK_THROWS_AS(evaluate(zero, {}), ZeroNorm);
  CHECK_THROWS_AS(sample(zero, {}, 100, 1), AllShotsDiscarded);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    ParameterStore ps;
    Circuit c = testgen::random_circuit(rng, 3, 12, ps);
    c.open = {2};
    c.postselect = {{0, 0}, {1, 1}};
    try {
      const Eigen::VectorXd q = evaluate(c, ps);
      REQUIRE(q.minCoeff() >= 0.0);
      REQUIRE(std::abs(q.sum() - 1.0) < 1e-12);
    } catch (const ZeroNorm&) {
    }
  }
}

TEST_CASE("shot sampling", "[backend]") {
  const auto counts = sample(bell(), {}, 10000, 42);
  CHECK(counts[1] + counts[2] == 0);
  CHECK(counts[0] + counts[3] == 10000);
  CHECK(std::abs(static_cast<double>(counts[0]) - 5000.0) <= 150.0);
  CHECK(sample(bell(), {}, 10000, 42) == counts);
  CHECK(sample(bell(), {}, 10000, 43) != counts);
  CHECK(sample(bell(), {}, 10000, 42, 0.0) == counts);
  CHECK_THROWS_AS(sample(bell(), {}, 0, 1), InvalidConfig);
  CHECK_THROWS_AS(sample(bell(), {}, 10, 1, 1.5), InvalidConfig);
  CHECK(outcome_bitstring(1, 3) == "100");
  CHECK(outcome_bitstring(6, 3) == "011");

  std::mt19937_64 rng(31);
  for (int k = 0; k < 5; ++k) {
    ParameterStore ps;
    Circuit c = testgen::random_circuit(rng, 3, 10, ps);
    c.open = {0, 2};
    c.postselect = {{1, 0}};
    Eigen::VectorXd p;
    try {
      p = evaluate(c, ps);
    } catch (const ZeroNorm&) {
      continue;
    }
    const auto n = sample(c, ps, 100000, 7 + static_cast<std::uint64_t>(k));
    CHECK(total_variation(n, p) < 0.02);
  }
}

TEST_CASE("depolarizing noise", "[backend]") {
  // Noise on a Bell pair leaks weight into the odd-parity outcomes.
  const auto noisy = sample(bell(), {}, 20000, 5, 0.3);
  CHECK(noisy[1] + noisy[2] > 0);
  CHECK(sample(bell(), {}, 20000, 5, 0.3) == noisy);
  // X or Y on either qubit flips parity; each site fires with p and picks
  // a parity flip with 2/3. Both flipping restores parity.
  const double q = 0.3 * 2.0 / 3.0;
  const double odd = 2 * q * (1 - q);
  CHECK(std::abs(static_cast<double>(noisy[1] + noisy[2]) / 20000 - odd) < 0.02);
  const auto all = sample(bell(), {}, 2000, 5, 1.0);
  std::uint64_t total = 0;
  for (auto k : all) total += k;
  CHECK(total == 2000);
}

TEST_CASE("parameter store", "[backend]") {
  ParameterStore ps;
  ps.add("a");
  ps.add("t", {2, 3});
  ps.add("a");
  CHECK(ps.size() == 7);
  CHECK_THROWS_AS(ps.add("a", {2}), ShapeMismatch);
  CHECK_THROWS_AS(ps.entry("missing"), UnboundSymbol);
  CHECK_THROWS_AS(ps.scalar("t"), ShapeMismatch);
  for (Eigen::Index i = 0; i < 7; ++i) ps.values()(i) = 0.25 * static_cast<double>(i) - 1.0 / 3.0;
  const auto back = ParameterStore::from_json(ps.to_json());
  CHECK(back == ps);
  CHECK(back.tensor("t").shape() == Shape{2, 3});
  CHECK_THROWS_AS(ParameterStore::from_json("{\"layout\":[]"), ParseError);
  CHECK_THROWS_AS(ParameterStore::from_json(R"({"layout":[{"name":"a","shape":[]}],"values":[]})"), ParseError);
}

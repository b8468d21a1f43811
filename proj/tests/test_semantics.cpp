// Copyright 2026 The zxq Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "zxq/circuit.hpp"
#include "zxq/harness.hpp"
#include "zxq/semantics.hpp"

namespace zxq {
namespace {

using testing::brute_force_evaluate;

constexpr double kTol = 1e-9;
const Complex kI(0.0, 1.0);

bool close(const ComplexMatrix& a, const ComplexMatrix& b, double tol = 1e-10) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).norm() <= tol;
}

bool proportional(const ComplexMatrix& a, const ComplexMatrix& b) {
  return equal_up_to_scalar(a, b, kTol).equal;
}

ComplexMatrix hadamard() {
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

TEST(Evaluate, MatchesBruteForceOnRandomDiagrams) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const Diagram d = random_diagram(rng, i % 3, (i / 3) % 3, 1 + i % 5);
    if (d.num_edges() > 16) continue;
    const ComplexMatrix fast = evaluate(d);
    const ComplexMatrix slow = brute_force_evaluate(d);
    ASSERT_TRUE(close(fast, slow, 1e-9 * std::max(1.0, slow.norm())))
        << "diagram " << digest_hex(d) << "\nfast\n" << dump_matrix(fast) << "\nslow\n"
        << dump_matrix(slow);
    ++checked;
  }
  EXPECT_GT(checked, 200);
}

TEST(Evaluate, ZSpiderWire) {
  const ComplexMatrix m = evaluate(spider_diagram(VertexType::Z, Phase::exact(1, 4), 1, 1));
  ComplexMatrix expect = ComplexMatrix::Zero(2, 2);
  expect(0, 0) = 1.0;
  expect(1, 1) = std::polar(1.0, kPi / 4);
  EXPECT_TRUE(close(m, expect));
}

TEST(Evaluate, XSpiderWireIsGeneralisedPhaseForm) {
  const double alpha = 0.7;
  const Complex a = std::polar(1.0, alpha);
  ComplexMatrix expect(2, 2);
  expect << 1.0 + a, 1.0 - a, 1.0 - a, 1.0 + a;
  const ComplexMatrix m = evaluate(spider_diagram(VertexType::X, Phase::radians(alpha), 1, 1));
  EXPECT_TRUE(proportional(expect, m));
  EXPECT_TRUE(close(m, expect / 2.0));
}

TEST(Evaluate, ScalarSpiders) {
  const Phase p = Phase::radians(1.3);
  const Complex expect = 1.0 + std::polar(1.0, 1.3);
  Diagram z;
  z.add_spider(VertexType::Z, p);
  Diagram x;
  x.add_spider(VertexType::X, p);
  EXPECT_NEAR(std::abs(evaluate(z)(0, 0) - expect), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(evaluate(x)(0, 0) - expect), 0.0, 1e-12);
  Diagram empty;
  EXPECT_EQ(evaluate(empty)(0, 0), Complex(1.0));
}

TEST(Evaluate, HadamardBox) {
  EXPECT_TRUE(close(evaluate(hadamard_diagram()), hadamard()));
}

TEST(Evaluate, SwapCapCup) {
  ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  EXPECT_TRUE(close(evaluate(swap_diagram()), swap));
  ComplexMatrix bell = ComplexMatrix::Zero(4, 1);
  bell(0, 0) = bell(3, 0) = 1.0;
  EXPECT_TRUE(close(evaluate(cap_diagram()), bell));
  EXPECT_TRUE(close(evaluate(cup_diagram()), bell.transpose()));
  const ComplexMatrix loop = evaluate(compose(cap_diagram(), cup_diagram()));
  EXPECT_NEAR(std::abs(loop(0, 0) - 2.0), 0.0, 1e-12);
}

TEST(Evaluate, SelfLoops) {
  // A Z self-loop is a trace over the diagonal: phase kept.
  Diagram z = spider_diagram(VertexType::Z, Phase::exact(1, 3), 1, 1);
  const VertexId spider = z.neighbors(z.inputs()[0]).front();
  z.add_edge(spider, spider);
  EXPECT_TRUE(close(evaluate(z), brute_force_evaluate(z)));
  // An H self-loop on a spider.
  Diagram h;
  const VertexId in = h.add_input();
  const VertexId s = h.add_spider(VertexType::Z, Phase::exact(1, 4));
  const VertexId b = h.add_hbox();
  const VertexId out = h.add_output();
  h.add_edge(in, s);
  h.add_edge(s, out);
  h.add_edge(s, b, 2);
  h.set_boundary_order({in}, {out});
  EXPECT_TRUE(close(evaluate(h), brute_force_evaluate(h)));
}

TEST(Evaluate, ComposeAndTensorExamples) {
  const Diagram t = spider_diagram(VertexType::Z, Phase::exact(1, 4), 1, 1);
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  s(0, 0) = 1.0;
  s(1, 1) = kI;
  EXPECT_TRUE(proportional(s, evaluate(compose(t, t))));

  EXPECT_TRUE(close(evaluate(tensor(identity_diagram(1), identity_diagram(1))),
                    ComplexMatrix::Identity(4, 4)));

  ComplexMatrix pz(2, 2), px(2, 2);
  pz << 1, 0, 0, -1;
  px << 0, 1, 1, 0;
  const Diagram zpi = spider_diagram(VertexType::Z, Phase::exact(1, 1), 1, 1);
  const Diagram xpi = spider_diagram(VertexType::X, Phase::exact(1, 1), 1, 1);
  EXPECT_TRUE(proportional(kron(pz, px), evaluate(tensor(zpi, xpi))));
}

TEST(Evaluate, PortZeroIsMostSignificant) {
  // X(pi) on wire 0 only.
  const Diagram d = tensor(spider_diagram(VertexType::X, Phase::exact(1, 1), 1, 1),
                           identity_diagram(1));
  const ComplexMatrix m = evaluate(d);
  EXPECT_NEAR(std::abs(m(2, 0)), 1.0, 1e-12);  // |00> -> |10>
  EXPECT_NEAR(std::abs(m(1, 0)), 0.0, 1e-12);
}

TEST(Evaluate, Functoriality) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    const Diagram a = random_diagram(rng, 1, 2, 3);
    const Diagram b = random_diagram(rng, 2, 1, 3);
    const ComplexMatrix ea = evaluate(a), eb = evaluate(b);
    const ComplexMatrix c = evaluate(compose(a, b));
    const ScalarVerdict vc = equal_up_to_scalar(ComplexMatrix(eb * ea), c, kTol);
    EXPECT_TRUE(vc.equal) << vc.residual;
    EXPECT_TRUE(close(evaluate(tensor(a, b)), kron(ea, eb), 1e-9 * (1 + ea.norm() * eb.norm())));
  }
}

TEST(Evaluate, ColourDuality) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 30; ++i) {
    const std::size_t m = i % 3, n = (i / 3) % 3;
    const Phase p = Phase::radians(testing::uniform_angle(rng));
    ComplexMatrix hm = ComplexMatrix::Identity(1, 1), hn = ComplexMatrix::Identity(1, 1);
    for (std::size_t k = 0; k < m; ++k) hm = kron(hm, hadamard());
    for (std::size_t k = 0; k < n; ++k) hn = kron(hn, hadamard());
    const ComplexMatrix z = evaluate(spider_diagram(VertexType::Z, p, n, m));
    const ComplexMatrix x = evaluate(spider_diagram(VertexType::X, p, n, m));
    EXPECT_TRUE(close(x, hm * z * hn)) << m << " " << n;
  }
}

TEST(Evaluate, SpiderLegsAreSymmetric) {
  // Permuting a spider's legs via swaps on either side changes nothing.
  const Phase p = Phase::radians(0.9);
  for (VertexType c : {VertexType::Z, VertexType::X}) {
    const Diagram s = spider_diagram(c, p, 2, 2);
    const ComplexMatrix base = evaluate(s);
    EXPECT_TRUE(close(evaluate(compose(swap_diagram(), s)), base));
    EXPECT_TRUE(close(evaluate(compose(s, swap_diagram())), base));
  }
}

TEST(Evaluate, ResourceCap) {
  const Diagram wide = identity_diagram(11);  // 2^22 entries
  EXPECT_THROW(evaluate(wide), ResourceError);
  EXPECT_NO_THROW(evaluate(wide, EvaluateOptions{std::size_t{1} << 22}));
  EXPECT_NO_THROW(evaluate(identity_diagram(10)));
}

TEST(EqualUpToScalar, ScalarAndResidual) {
  std::mt19937_64 rng(31);
  const ComplexMatrix a = testing::random_matrix(rng, 4, 4);
  const Complex k(0.3, -2.0);
  const ScalarVerdict v = equal_up_to_scalar(a, ComplexMatrix(k * a));
  EXPECT_TRUE(v.equal);
  ASSERT_TRUE(v.scalar.has_value());
  EXPECT_NEAR(std::abs(*v.scalar - k), 0.0, 1e-12);
  EXPECT_LT(v.residual, 1e-12);
  const ScalarVerdict w = equal_up_to_scalar(a, testing::random_matrix(rng, 4, 4));
  EXPECT_FALSE(w.equal);
  EXPECT_GT(w.residual, 1e-3);
}

TEST(EqualUpToScalar, SymmetricAndInverseConsistent) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 50; ++i) {
    const ComplexMatrix a = testing::random_matrix(rng, 2, 4);
    const Complex k(std::uniform_real_distribution<double>(0.1, 3)(rng), 0.5);
    const ComplexMatrix b = (i % 2) ? ComplexMatrix(k * a) : testing::random_matrix(rng, 2, 4);
    const ScalarVerdict ab = equal_up_to_scalar(a, b), ba = equal_up_to_scalar(b, a);
    EXPECT_EQ(ab.equal, ba.equal);
    EXPECT_NEAR(ab.residual, ba.residual, 1e-12);
    if (ab.equal) EXPECT_NEAR(std::abs(*ab.scalar * *ba.scalar - 1.0), 0.0, 1e-9);
  }
}

TEST(EqualUpToScalar, ZeroMatrices) {
  const ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  const ComplexMatrix i = ComplexMatrix::Identity(2, 2);
  EXPECT_TRUE(equal_up_to_scalar(z, z).equal);
  EXPECT_FALSE(equal_up_to_scalar(z, i).equal);
  EXPECT_FALSE(equal_up_to_scalar(i, z).equal);
  EXPECT_THROW(equal_up_to_scalar(i, ComplexMatrix::Identity(4, 4)), std::invalid_argument);
}

TEST(GateMatrix, StandardGates) {
  ComplexMatrix t = ComplexMatrix::Zero(2, 2);
  t(0, 0) = 1.0;
  t(1, 1) = std::polar(1.0, kPi / 4);
  EXPECT_TRUE(close(gate_matrix(Gate::single(GateKind::T, 0), 1), t));

  ComplexMatrix cnot = ComplexMatrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  EXPECT_TRUE(close(gate_matrix(Gate::cnot(0, 1), 2), cnot));

  ComplexMatrix cz = ComplexMatrix::Identity(4, 4);
  cz(3, 3) = -1.0;
  EXPECT_TRUE(close(gate_matrix(Gate::cz(0, 1), 2), cz));
  EXPECT_TRUE(close(gate_matrix(Gate::cz(1, 0), 2), cz));
  EXPECT_TRUE(close(gate_matrix(Gate::single(GateKind::H, 0), 1), hadamard()));
}

TEST(GateMatrix, AllGatesUnitary) {
  using K = GateKind;
  for (K k : {K::H, K::T, K::Tdg, K::S, K::Sdg, K::Z, K::X}) {
    for (std::size_t q = 0; q < 2; ++q) {
      const ComplexMatrix g = gate_matrix(Gate::single(k, q), 2);
      EXPECT_TRUE(close(g.adjoint() * g, ComplexMatrix::Identity(4, 4)));
    }
  }
  for (const Gate& g : {Gate::cnot(1, 0), Gate::swap(0, 1), Gate::rz(1, Phase::radians(0.4)),
                        Gate::rx(0, Phase::exact(1, 3))}) {
    const ComplexMatrix m = gate_matrix(g, 2);
    EXPECT_TRUE(close(m.adjoint() * m, ComplexMatrix::Identity(4, 4)));
  }
}

TEST(DumpMatrix, Format) {
  ComplexMatrix m(1, 2);
  m << Complex(1.0, 0.0), Complex(0.5, -0.25);
  EXPECT_EQ(dump_matrix(m), "1+0i\t0.5-0.25i\n");
}

}  // namespace
}  // namespace zxq

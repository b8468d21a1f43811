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

#include <algorithm>
#include <cmath>
#include <random>

#include "oracle.hpp"
#include "zxq/harness.hpp"
#include "zxq/rewrite.hpp"

namespace zxq {
namespace {

using testing::brute_force_evaluate;

bool proportional(const Diagram& a, const Diagram& b) {
  return equal_up_to_scalar(evaluate(a), evaluate(b), 1e-9).equal;
}

// in - v1 - v2 - ... - out on one wire; returns the inner ids.
struct Chain {
  Diagram d;
  std::vector<VertexId> ids;
};

Chain chain(const std::vector<std::pair<VertexType, Phase>>& items) {
  Chain c;
  VertexId prev = c.d.add_input();
  const VertexId in = prev;
  for (const auto& [t, p] : items) {
    const VertexId v = t == VertexType::H ? c.d.add_hbox() : c.d.add_spider(t, p);
    c.d.add_edge(prev, v);
    c.ids.push_back(v);
    prev = v;
  }
  const VertexId out = c.d.add_output();
  c.d.add_edge(prev, out);
  c.d.set_boundary_order({in}, {out});
  c.d.validate();
  return c;
}

const auto Z = VertexType::Z;
const auto X = VertexType::X;
const auto H = VertexType::H;

TEST(RuleLibrary, HasFifteenNamedRules) {
  const RuleLibrary lib = RuleLibrary::standard();
  std::vector<std::string> names = lib.names();
  std::vector<std::string> expect = {"S1", "S2", "S2'", "B1", "B2", "B2v", "H1", "H2",
                                     "N",  "Nv", "P",   "Hf", "Hex", "Cy", "HH"};
  std::sort(names.begin(), names.end());
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(names, expect);
  EXPECT_TRUE(lib.contains("Hex"));
  EXPECT_FALSE(lib.contains("Q"));
  EXPECT_THROW(lib.get("Q"), std::out_of_range);
}

TEST(FuseSpiders, AddsPhases) {
  const Chain c = chain({{Z, Phase::exact(1, 4)}, {Z, Phase::exact(1, 4)}});
  const Diagram r = fuse_spiders(c.d, c.ids[0], c.ids[1]);
  EXPECT_TRUE(iso_equal(r, spider_diagram(Z, Phase::exact(1, 2), 1, 1)));
}

TEST(FuseSpiders, AbsorbsZeroPhase) {
  const Chain c = chain({{Z, Phase::radians(0.4)}, {Z, Phase()}});
  EXPECT_TRUE(iso_equal(fuse_spiders(c.d, c.ids[0], c.ids[1]),
                        spider_diagram(Z, Phase::radians(0.4), 1, 1)));
}

TEST(FuseSpiders, OppositePhasesLeaveAnIdentity) {
  const Chain c = chain({{X, Phase::exact(1, 4)}, {X, Phase::exact(7, 4)}});
  const Diagram fused = fuse_spiders(c.d, c.ids[0], c.ids[1]);
  EXPECT_TRUE(iso_equal(fused, spider_diagram(X, Phase(), 1, 1)));
  const VertexId v = fused.outputs().empty() ? 0 : fused.neighbors(fused.outputs()[0]).front();
  EXPECT_TRUE(iso_equal(remove_identity(fused, v), identity_diagram(1)));
}

TEST(FuseSpiders, ParallelEdgesBecomeLoops) {
  Chain c = chain({{Z, Phase()}, {Z, Phase::exact(1, 2)}});
  c.d.add_edge(c.ids[0], c.ids[1], 2);  // three edges in total
  const Diagram r = fuse_spiders(c.d, c.ids[0], c.ids[1]);
  EXPECT_EQ(r.spider_count(), 1u);
  const VertexId v = r.neighbors(r.inputs()[0]).front();
  EXPECT_EQ(r.self_loops(v), 2u);
  EXPECT_TRUE(proportional(c.d, r));
}

TEST(FuseSpiders, Preconditions) {
  const Chain c = chain({{Z, Phase()}, {X, Phase()}});
  EXPECT_THROW(fuse_spiders(c.d, c.ids[0], c.ids[1]), MatchError);  // colour mismatch
  EXPECT_THROW(fuse_spiders(c.d, c.ids[0], c.ids[0]), MatchError);  // self anchor
}

TEST(RemoveIdentity, BareWire) {
  for (VertexType t : {Z, X}) {
    const Chain c = chain({{t, Phase()}});
    EXPECT_TRUE(iso_equal(remove_identity(c.d, c.ids[0]), identity_diagram(1)));
  }
}

TEST(RemoveIdentity, InsideChain) {
  const Chain c = chain({{Z, Phase::exact(1, 4)}, {Z, Phase()}, {X, Phase::exact(1, 1)}});
  const Chain expect = chain({{Z, Phase::exact(1, 4)}, {X, Phase::exact(1, 1)}});
  EXPECT_TRUE(iso_equal(remove_identity(c.d, c.ids[1]), expect.d));
  EXPECT_THROW(remove_identity(c.d, c.ids[0]), MatchError);  // non-zero phase
}

TEST(EliminateHH, OnWire) {
  const Chain c = chain({{H, {}}, {H, {}}});
  EXPECT_TRUE(iso_equal(eliminate_hh(c.d, c.ids[0], c.ids[1]), identity_diagram(1)));
}

TEST(EliminateHH, BetweenSpiders) {
  const Chain c = chain({{Z, Phase::exact(1, 4)}, {H, {}}, {H, {}}, {Z, Phase::exact(1, 2)}});
  const Chain expect = chain({{Z, Phase::exact(1, 4)}, {Z, Phase::exact(1, 2)}});
  EXPECT_TRUE(iso_equal(eliminate_hh(c.d, c.ids[1], c.ids[2]), expect.d));
  EXPECT_THROW(eliminate_hh(c.d, c.ids[0], c.ids[1]), MatchError);
}

TEST(ColorChange, XWire) {
  const Phase a = Phase::radians(1.1);
  const Chain c = chain({{X, a}});
  const Chain expect = chain({{H, {}}, {Z, a}, {H, {}}});
  EXPECT_TRUE(iso_equal(color_change(c.d, c.ids[0]), expect.d));
}

TEST(ColorChange, TwiceThenCancelIsIdentity) {
  const Chain c = chain({{Z, Phase::exact(1, 4)}, {X, Phase::exact(3, 4)}});
  Diagram d = color_change(color_change(c.d, c.ids[1]), c.ids[1]);
  const RuleLibrary lib = RuleLibrary::standard();
  const RewriteRule& hh = lib.get("HH");
  for (auto m = hh.matches(d, Direction::Forward); !m.empty();
       m = hh.matches(d, Direction::Forward)) {
    d = hh.apply(d, m.front());
  }
  EXPECT_TRUE(iso_equal(d, c.d));
}

TEST(Hopf, DisconnectsDoubleEdge) {
  Diagram d;
  const VertexId in = d.add_input(), out = d.add_output();
  const VertexId z = d.add_spider(Z), x = d.add_spider(X);
  d.add_edge(in, z);
  d.add_edge(z, x, 2);
  d.add_edge(x, out);
  d.set_boundary_order({in}, {out});
  const Diagram r = apply_hopf(d, z, x);
  EXPECT_EQ(r.multiplicity(z, x), 0u);
  EXPECT_EQ(r.num_edges(), 2u);
  EXPECT_TRUE(proportional(d, r));

  Diagram single = d;
  single.remove_edge(z, x);
  EXPECT_THROW(apply_hopf(single, z, x), MatchError);
}

TEST(ColourSwapRule, HalfPiChain) {
  const Phase q = Phase::exact(1, 2);
  const Chain c = chain({{Z, q}, {X, q}, {Z, q}});
  const Diagram r = apply_p(c.d, {c.ids[0], c.ids[1], c.ids[2]});
  EXPECT_TRUE(proportional(c.d, r));
  const Chain expect = chain({{X, q}, {Z, q}, {X, q}});
  EXPECT_TRUE(proportional(r, expect.d));
  for (VertexId v : c.ids) {
    EXPECT_TRUE(r.phase(v).approx_equal(q));
    EXPECT_NE(r.type(v), c.d.type(v));
  }
}

TEST(ColourSwapRule, SymmetricChainKeepsSymmetry) {
  const Chain c = chain({{Z, Phase::exact(1, 4)}, {X, Phase::exact(1, 2)}, {Z, Phase::exact(1, 4)}});
  const Diagram r = apply_p(c.d, {c.ids[0], c.ids[1], c.ids[2]});
  EXPECT_TRUE(proportional(c.d, r));
  EXPECT_TRUE(r.phase(c.ids[0]).approx_equal(r.phase(c.ids[2])));
}

TEST(ColourSwapRule, DegenerateOutput) {
  const Chain c = chain({{Z, Phase()}, {X, Phase::radians(0.9)}, {Z, Phase()}});
  const Diagram r = apply_p(c.d, {c.ids[0], c.ids[1], c.ids[2]});
  EXPECT_TRUE(r.phase(c.ids[0]).approx_equal(Phase::radians(0.9)));
  EXPECT_TRUE(r.phase(c.ids[1]).approx_equal(Phase()));
  EXPECT_TRUE(r.phase(c.ids[2]).approx_equal(Phase()));
}

TEST(ColourSwapRule, ForwardThenDualIsSemanticIdentity) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 50; ++i) {
    auto ph = [&] { return Phase::radians(testing::uniform_angle(rng)); };
    const Chain c = chain({{Z, ph()}, {X, ph()}, {Z, ph()}});
    const std::array<VertexId, 3> ids{c.ids[0], c.ids[1], c.ids[2]};
    const Diagram once = apply_p(c.d, ids);
    const Diagram twice = apply_p(once, ids);
    EXPECT_EQ(twice.type(ids[0]), Z);
    EXPECT_TRUE(proportional(c.d, twice));
  }
}

TEST(ColourSwapRule, RejectsWrongShape) {
  const Chain c = chain({{Z, Phase()}, {Z, Phase()}, {Z, Phase()}});
  EXPECT_THROW(apply_p(c.d, {c.ids[0], c.ids[1], c.ids[2]}), MatchError);
}

TEST(EulerH, HadamardDecomposes) {
  const Chain c = chain({{H, {}}});
  const Diagram r = apply_euler_h(c.d, Site{{c.ids[0]}});
  EXPECT_EQ(r.hbox_count(), 0u);
  EXPECT_EQ(r.spider_count(), 3u);
  EXPECT_TRUE(proportional(c.d, r));
  const Diagram back = apply_euler_h(r, RuleLibrary::standard().get("H1").matches(r, Direction::Reverse).front(),
                                     Direction::Reverse);
  EXPECT_TRUE(iso_equal(back, c.d));
}

TEST(PiRule, QuarterPhases) {
  // X(pi) on one leg of Z(pi/4) with two more legs.
  Diagram d;
  const VertexId in = d.add_input();
  const VertexId p = d.add_spider(X, Phase::exact(1, 1));
  const VertexId v = d.add_spider(Z, Phase::exact(1, 4));
  const VertexId o1 = d.add_output(), o2 = d.add_output();
  d.add_edge(in, p);
  d.add_edge(p, v);
  d.add_edge(v, o1);
  d.add_edge(v, o2);
  d.set_boundary_order({in}, {o1, o2});
  const Diagram r = apply_pi(d, Site{{p, v}});
  EXPECT_TRUE(proportional(d, r));
  EXPECT_EQ(r.phase(v), Phase::exact(7, 4));
  const Diagram back = apply_pi(r, Site{{v, in}}, Direction::Reverse);
  EXPECT_TRUE(iso_equal(back, d));
}

TEST(Cycle, RemovesLoop) {
  Chain c = chain({{Z, Phase::exact(1, 4)}});
  Diagram looped = c.d;
  looped.add_edge(c.ids[0], c.ids[0]);
  EXPECT_TRUE(iso_equal(apply_cycle(looped, c.ids[0]), c.d));
  EXPECT_TRUE(iso_equal(apply_cycle(c.d, c.ids[0], Direction::Reverse), looped));
  EXPECT_THROW(apply_cycle(c.d, c.ids[0]), MatchError);
}

// Every rule, both directions: the sample site is found by the matcher and
// the rewrite preserves semantics, checked against the brute-force oracle
// where the diagram is small enough.
TEST(RuleSoundness, AllRulesAgainstOracle) {
  const RuleLibrary lib = RuleLibrary::standard();
  for (const std::string& name : lib.names()) {
    const RewriteRule& rule = lib.get(name);
    for (Direction dir : {Direction::Forward, Direction::Reverse}) {
      std::mt19937_64 rng(std::hash<std::string>{}(name) ^ static_cast<unsigned>(dir));
      int oracle_checks = 0;
      for (int i = 0; i < 60; ++i) {
        const RuleSample s = rule.sample(rng, dir);
        s.diagram.validate();
        // Forward sites are found up to vertex order. Reverse sites may carry
        // free parameters, so only require that the matcher finds something.
        const auto sites = rule.matches(s.diagram, dir);
        auto same_vertices = [&](const Site& m) {
          return std::is_permutation(m.vertices.begin(), m.vertices.end(),
                                     s.site.vertices.begin(), s.site.vertices.end());
        };
        if (dir == Direction::Forward) {
          EXPECT_TRUE(std::any_of(sites.begin(), sites.end(), same_vertices))
              << name << " forward sample site not matched";
        } else {
          EXPECT_FALSE(sites.empty()) << name << " reverse: no match on the sample";
        }
        const Diagram before = embed_in_context(s, rng);
        const Diagram after = rule.apply(before, s.site, dir);
        after.validate();
        ComplexMatrix mb, ma;
        if (before.num_edges() <= 18 && after.num_edges() <= 18) {
          mb = brute_force_evaluate(before);
          ma = brute_force_evaluate(after);
          ++oracle_checks;
        } else {
          mb = evaluate(before);
          ma = evaluate(after);
        }
        const ScalarVerdict v = equal_up_to_scalar(mb, ma, 1e-9);
        EXPECT_TRUE(v.equal) << name << " " << to_string(dir) << " residual " << v.residual;
      }
      EXPECT_GT(oracle_checks, 0) << name << " " << to_string(dir);
    }
  }
}

TEST(RuleSoundness, MatchedSitesInRandomDiagramsAreSound) {
  const RuleLibrary lib = RuleLibrary::standard();
  std::mt19937_64 rng(73);
  std::size_t applied = 0;
  for (int i = 0; i < 150; ++i) {
    const Diagram d = random_diagram(rng, 1 + i % 2, 1 + (i / 2) % 2, 5);
    const ComplexMatrix m = evaluate(d);
    for (const std::string& name : lib.names()) {
      const RewriteRule& rule = lib.get(name);
      for (Direction dir : {Direction::Forward, Direction::Reverse}) {
        const auto sites = rule.matches(d, dir);
        if (sites.empty()) continue;
        const Site& s = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
        const Diagram r = rule.apply(d, s, dir);
        if (r.num_vertices() > 40) continue;
        ++applied;
        EXPECT_TRUE(equal_up_to_scalar(m, evaluate(r), 1e-9).equal)
            << name << " " << to_string(dir) << " on " << digest_hex(d);
      }
    }
  }
  EXPECT_GT(applied, 300u);
}

}  // namespace
}  // namespace zxq

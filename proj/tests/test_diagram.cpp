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

#include <random>

#include "zxq/harness.hpp"
#include "zxq/serialize.hpp"

namespace zxq {
namespace {

Diagram z_wire(Phase p) { return spider_diagram(VertexType::Z, p, 1, 1); }

// CNOT built with a caller-chosen vertex and edge insertion order.
Diagram cnot(bool reversed) {
  Diagram d;
  if (!reversed) {
    const VertexId i0 = d.add_input(), i1 = d.add_input();
    const VertexId z = d.add_spider(VertexType::Z), x = d.add_spider(VertexType::X);
    const VertexId o0 = d.add_output(), o1 = d.add_output();
    d.add_edge(i0, z);
    d.add_edge(z, o0);
    d.add_edge(i1, x);
    d.add_edge(x, o1);
    d.add_edge(z, x);
    d.set_boundary_order({i0, i1}, {o0, o1});
  } else {
    const VertexId o1 = d.add_output(), o0 = d.add_output();
    const VertexId x = d.add_spider(VertexType::X), z = d.add_spider(VertexType::Z);
    const VertexId i1 = d.add_input(), i0 = d.add_input();
    d.add_edge(x, z);
    d.add_edge(o1, x);
    d.add_edge(o0, z);
    d.add_edge(x, i1);
    d.add_edge(z, i0);
    d.set_boundary_order({i0, i1}, {o0, o1});
  }
  d.validate();
  return d;
}

TEST(Diagram, BuildAndQuery) {
  Diagram d;
  const VertexId a = d.add_spider(VertexType::Z, Phase::exact(1, 4));
  const VertexId b = d.add_spider(VertexType::X);
  d.add_edge(a, b, 2);
  d.add_edge(a, a);
  EXPECT_EQ(d.multiplicity(a, b), 2u);
  EXPECT_EQ(d.self_loops(a), 1u);
  EXPECT_EQ(d.degree(a), 4u);  // a loop counts twice
  EXPECT_EQ(d.num_edges(), 3u);
  EXPECT_EQ(d.spider_count(), 2u);
  d.remove_edge(a, b);
  EXPECT_EQ(d.multiplicity(a, b), 1u);
  d.remove_vertex(b);
  EXPECT_FALSE(d.contains(b));
  EXPECT_EQ(d.num_edges(), 1u);
  EXPECT_THROW(d.vertex(b), DiagramError);
}

TEST(Diagram, ValidateRejectsBadDegrees) {
  Diagram d;
  const VertexId h = d.add_hbox();
  const VertexId z = d.add_spider(VertexType::Z);
  d.add_edge(h, z, 3);
  EXPECT_THROW(d.validate(), DiagramError);

  Diagram e;
  const VertexId in = e.add_input();
  e.set_boundary_order({in}, {});
  EXPECT_THROW(e.validate(), DiagramError);  // dangling boundary
}

TEST(Diagram, ComposeIdentityWires) {
  const Diagram id1 = identity_diagram(1);
  EXPECT_TRUE(iso_equal(compose(id1, id1), id1));
  EXPECT_TRUE(iso_equal(compose(id1, z_wire(Phase::exact(1, 4))), z_wire(Phase::exact(1, 4))));
}

TEST(Diagram, ComposeArityMismatchThrows) {
  EXPECT_THROW(compose(identity_diagram(2), identity_diagram(1)), DiagramError);
}

TEST(Diagram, TensorUnitAndSignature) {
  const Diagram d = cnot(false);
  EXPECT_TRUE(iso_equal(tensor(Diagram{}, d), d));
  EXPECT_TRUE(iso_equal(tensor(d, Diagram{}), d));
  const Diagram t = tensor(d, identity_diagram(1));
  EXPECT_EQ(t.signature(), (DiagramSignature{3, 3}));
}

TEST(Diagram, CapCupClosesToLoop) {
  const Diagram loop = compose(cap_diagram(), cup_diagram());
  EXPECT_EQ(loop.signature(), (DiagramSignature{0, 0}));
  loop.validate();
}

TEST(Diagram, IsoIgnoresConstructionOrder) {
  EXPECT_TRUE(iso_equal(cnot(false), cnot(true)));
}

TEST(Diagram, IsoDistinguishesKindsPhasesAndPorts) {
  EXPECT_FALSE(iso_equal(z_wire(Phase::exact(1, 4)),
                         spider_diagram(VertexType::X, Phase::exact(1, 4), 1, 1)));
  EXPECT_FALSE(iso_equal(z_wire(Phase::exact(1, 4)), z_wire(Phase::exact(1, 2))));
  EXPECT_TRUE(iso_equal(z_wire(Phase::exact(1, 4)), z_wire(Phase::radians(kPi / 4 + 1e-14))));
  // Swapping the boundary order turns CNOT(0,1) into CNOT(1,0).
  Diagram flipped = cnot(false);
  flipped.set_boundary_order({flipped.inputs()[1], flipped.inputs()[0]},
                             {flipped.outputs()[1], flipped.outputs()[0]});
  EXPECT_FALSE(iso_equal(flipped, cnot(false)));
}

TEST(Diagram, IsoCountsParallelEdges) {
  Diagram a;
  const VertexId z = a.add_spider(VertexType::Z), x = a.add_spider(VertexType::X);
  a.add_edge(z, x, 2);
  Diagram b = a;
  b.add_edge(z, x);
  EXPECT_FALSE(iso_equal(a, b));
}

TEST(Diagram, ComposeAndTensorAreAssociative) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const Diagram a = random_diagram(rng, 1, 2, 3);
    const Diagram b = random_diagram(rng, 2, 2, 3);
    const Diagram c = random_diagram(rng, 2, 1, 3);
    EXPECT_TRUE(iso_equal(compose(compose(a, b), c), compose(a, compose(b, c))));
    EXPECT_TRUE(iso_equal(tensor(tensor(a, b), c), tensor(a, tensor(b, c))));
  }
}

TEST(Diagram, IsoIsAnEquivalence) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    const Diagram a = random_diagram(rng, 1, 1, 4);
    // Composing with identities renumbers every vertex.
    const Diagram b = compose(identity_diagram(1), a);
    const Diagram c = compose(b, identity_diagram(1));
    EXPECT_TRUE(iso_equal(a, a));
    EXPECT_EQ(iso_equal(a, b), iso_equal(b, a));
    EXPECT_TRUE(iso_equal(a, b) && iso_equal(b, c) && iso_equal(a, c));
  }
}

TEST(Serialize, RoundTripRandomDiagrams) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Diagram d = random_diagram(rng, i % 3, (i / 3) % 3, 5);
    const Diagram back = deserialize(serialize(d));
    EXPECT_TRUE(iso_equal(d, back));
    EXPECT_EQ(serialize(back), serialize(deserialize(serialize(back))));
  }
}

TEST(Serialize, ParsesExactPhase) {
  const Diagram d = deserialize(R"({"inputs":["a"],"outputs":["b"],
      "nodes":[{"id":"a","kind":"in"},{"id":"z","kind":"Z","phase":{"num":1,"den":4}},
               {"id":"b","kind":"out"}],
      "edges":[["a","z"],["z","b"]]})");
  bool found = false;
  for (const auto& [id, v] : d.vertices()) {
    if (v.type == VertexType::Z) {
      EXPECT_EQ(v.phase, Phase::exact(1, 4));
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Serialize, HBoxOfDegreeThreeFailsValidation) {
  const char* text = R"({"inputs":[],"outputs":[],
      "nodes":[{"id":"h","kind":"H"},{"id":"z","kind":"Z","phase":{"num":0,"den":1}}],
      "edges":[["h","z"],["h","z"],["h","z"]]})";
  EXPECT_THROW(deserialize(text), DiagramError);
}

TEST(Serialize, ParseErrorsCarryPosition) {
  try {
    deserialize("{\"inputs\": [,]}");
    FAIL() << "expected a parse error";
  } catch (const DiagramParseError& e) {
    EXPECT_EQ(e.where().rfind("1:", 0), 0u) << e.where();  // line:column
  }
  try {
    deserialize(R"({"inputs":[],"outputs":[],"nodes":[{"id":"q","kind":"Q"}],"edges":[]})");
    FAIL() << "expected a parse error";
  } catch (const DiagramParseError& e) {
    EXPECT_EQ(e.where(), "nodes[0].kind");
  }
  EXPECT_THROW(deserialize(R"({"inputs":[],"outputs":[],"nodes":[],"edges":[["a","b"]]})"),
               DiagramParseError);
}

}  // namespace
}  // namespace zxq

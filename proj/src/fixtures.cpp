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

#include "zxq/fixtures.hpp"

#include <array>
#include <functional>
#include <stdexcept>

namespace zxq {

namespace {

constexpr const char* kHeader =
    "# gates are listed in application order: the first line acts first\n"
    "qubits 2\n";

// Sub-circuits of the endpoint identities.
constexpr const char* kA = "s 1\nh 1\nt 1\ncnot 0 1\ntdg 1\nh 1\nsdg 1\n";
constexpr const char* kB =
    "s 0\nh 0\nt 0\nh 0\ncz 0 1\nh 0\ntdg 0\nh 0\nsdg 0\n";
constexpr const char* kC = "t 0\nt 1\ncnot 0 1\ntdg 1\ncnot 0 1\n";
constexpr const char* kD = "cnot 1 0\nt 0\ncnot 1 0\ntdg 0\ntdg 1\n";

struct Entry {
  int id;
  const char* name;
  std::string lhs;
  std::string rhs;
  bool against_identity;
};

std::string repeat(const std::string& body, int times) {
  std::string out;
  for (int i = 0; i < times; ++i) out += body;
  return out;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {1, "H^2 = I", "h 0\nh 0\n", "", false},
      {2, "S^4 = I", repeat("s 0\n", 4), "", false},
      {3, "(S H)^3 = I", repeat("s 0\nh 0\n", 3), "", false},
      {4, "T^2 = S", "t 0\nt 0\n", "s 0\n", false},
      {5, "CZ^2 = I", "cz 0 1\ncz 0 1\n", "", false},
      {6, "S0 commutes with CZ", "cz 0 1\ns 0\n", "s 0\ncz 0 1\n", false},
      {7, "X0 through CZ", "h 0\ns 0\ns 0\nh 0\ncz 0 1\n",
       "cz 0 1\ns 1\ns 1\nh 0\ns 0\ns 0\nh 0\n", false},
      {8, "(CZ H0 H1)^3 = SWAP", repeat("cz 0 1\nh 0\nh 1\n", 3), "swap 0 1\n", false},
      {9, "T0 commutes with CZ", "t 0\ncz 0 1\n", "cz 0 1\nt 0\n", false},
      {10, "T1 commutes with CZ", "t 1\ncz 0 1\n", "cz 0 1\nt 1\n", false},
      {11, "T^8 = I", repeat("t 0\n", 8), "", false},
      {12, "T on the control commutes with CNOT", "cnot 0 1\nt 0\n", "t 0\ncnot 0 1\n", false},
      {13, "X on the target commutes with CNOT", "cnot 0 1\nh 1\ns 1\ns 1\nh 1\n",
       "h 1\ns 1\ns 1\nh 1\ncnot 0 1\n", false},
      {14, "diagonal phase gadgets commute",
       "t 0\nt 1\ncnot 0 1\ntdg 1\ncnot 0 1\n", "cnot 0 1\ntdg 1\ncnot 0 1\nt 0\nt 1\n", false},
      {15, "A^2 = I", std::string(kA) + kA, "", true},
      {16, "B^2 = I", std::string(kB) + kB, "", true},
      {17, "D C = I", std::string(kC) + kD, "", true},
  };
  return table;
}

// Second, independent entry of every relation through the builder API.
// Where the text spells X or Z via S and H, this entry uses the gates
// directly, so agreement is checked on matrices rather than gate lists.
std::pair<Circuit, Circuit> built(int id) {
  auto circuit = [](std::initializer_list<Gate> gates) {
    Circuit c;
    c.width = 2;
    for (const Gate& g : gates) c.add(g);
    return c;
  };
  auto pow = [](Circuit c, int n) {
    Circuit out;
    out.width = c.width;
    for (int i = 0; i < n; ++i) out.append(c);
    return out;
  };
  using K = GateKind;
  const Gate h0 = Gate::single(K::H, 0);
  const Gate h1 = Gate::single(K::H, 1);
  const Gate s0 = Gate::single(K::S, 0);
  const Gate t0 = Gate::single(K::T, 0);
  const Gate t1 = Gate::single(K::T, 1);
  const Gate cz = Gate::cz(0, 1);
  const Gate cx = Gate::cnot(0, 1);
  const Circuit id2 = circuit({});
  switch (id) {
    case 1: return {circuit({h0, h0}), id2};
    case 2: return {pow(circuit({s0}), 4), id2};
    case 3: return {pow(circuit({s0, h0}), 3), id2};
    case 4: return {circuit({t0, t0}), circuit({Gate::rz(0, Phase::exact(1, 2))})};
    case 5: return {circuit({cz, cz}), id2};
    case 6: return {circuit({cz, s0}), circuit({s0, cz})};
    case 7:
      return {circuit({Gate::single(K::X, 0), cz}),
              circuit({cz, Gate::single(K::Z, 1), Gate::single(K::X, 0)})};
    case 8: return {pow(circuit({cz, h0, h1}), 3), circuit({Gate::swap(0, 1)})};
    case 9: return {circuit({t0, cz}), circuit({cz, t0})};
    case 10: return {circuit({t1, cz}), circuit({cz, t1})};
    case 11: return {pow(circuit({Gate::rz(0, Phase::exact(1, 4))}), 8), id2};
    case 12: return {circuit({cx, t0}), circuit({t0, cx})};
    case 13:
      return {circuit({cx, Gate::rx(1, Phase::exact(1, 1))}),
              circuit({Gate::single(K::X, 1), cx})};
    case 14: {
      const Gate tdg1 = Gate::single(K::Tdg, 1);
      return {circuit({t0, t1, cx, tdg1, cx}), circuit({cx, tdg1, cx, t0, t1})};
    }
    case 15: {
      // Controlled-H from qubit 0 to qubit 1.
      const Circuit a = circuit({Gate::single(K::S, 1), h1, t1, cx, Gate::single(K::Tdg, 1), h1,
                                 Gate::single(K::Sdg, 1)});
      return {pow(a, 2), id2};
    }
    case 16: {
      // Controlled-H from qubit 1 to qubit 0, built around CZ.
      const Circuit b = circuit({s0, h0, t0, h0, cz, h0, Gate::single(K::Tdg, 0), h0,
                                 Gate::single(K::Sdg, 0)});
      return {pow(b, 2), id2};
    }
    case 17: {
      const Gate tdg0 = Gate::single(K::Tdg, 0);
      const Gate tdg1 = Gate::single(K::Tdg, 1);
      const Gate xc = Gate::cnot(1, 0);
      Circuit cd = circuit({t0, t1, cx, tdg1, cx});
      cd.append(circuit({xc, t0, xc, tdg0, tdg1}));
      return {cd, id2};
    }
    default: throw std::out_of_range("no relation " + std::to_string(id));
  }
}

const Entry& entry(int id) {
  for (const Entry& e : entries()) {
    if (e.id == id) return e;
  }
  throw std::out_of_range("no relation " + std::to_string(id));
}

}  // namespace

std::string fixture_text(int id, const std::string& side) {
  const Entry& e = entry(id);
  std::string out = "# relation " + std::to_string(id) + " " + side + ": " + e.name + "\n";
  out += kHeader;
  if (side == "lhs") return out + e.lhs;
  if (side == "rhs") return out + e.rhs;
  throw std::invalid_argument("side must be lhs or rhs");
}

Circuit fixture_circuit(char name) {
  const char* body = nullptr;
  switch (name) {
    case 'A': body = kA; break;
    case 'B': body = kB; break;
    case 'C': body = kC; break;
    case 'D': body = kD; break;
    default: throw std::out_of_range(std::string("no sub-circuit ") + name);
  }
  return parse_circuit(std::string(kHeader) + body);
}

std::vector<RelationFixture> clifford_t_relations() {
  std::vector<RelationFixture> out;
  for (const Entry& e : entries()) {
    RelationFixture f;
    f.id = e.id;
    f.name = e.name;
    f.lhs = parse_circuit(fixture_text(e.id, "lhs"));
    f.rhs = parse_circuit(fixture_text(e.id, "rhs"));
    f.against_identity = e.against_identity;

    const auto [lhs2, rhs2] = built(e.id);
    const bool agree =
        equal_up_to_scalar(circuit_matrix(f.lhs), circuit_matrix(lhs2)).equal &&
        equal_up_to_scalar(circuit_matrix(f.rhs), circuit_matrix(rhs2)).equal;
    if (!agree) {
      throw std::logic_error("relation " + std::to_string(e.id) +
                             ": text and builder entries disagree");
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace zxq

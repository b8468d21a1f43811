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

#include "zxq/circuit.hpp"

#include <array>
#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <utility>

namespace zxq {

namespace {

struct GateInfo {
  GateKind kind;
  std::string_view name;
  int qubits;
  bool phase;
};

constexpr std::array<GateInfo, 12> kGates{{
    {GateKind::H, "h", 1, false},
    {GateKind::T, "t", 1, false},
    {GateKind::Tdg, "tdg", 1, false},
    {GateKind::S, "s", 1, false},
    {GateKind::Sdg, "sdg", 1, false},
    {GateKind::Z, "z", 1, false},
    {GateKind::X, "x", 1, false},
    {GateKind::Rz, "rz", 1, true},
    {GateKind::Rx, "rx", 1, true},
    {GateKind::CNOT, "cnot", 2, false},
    {GateKind::CZ, "cz", 2, false},
    {GateKind::SWAP, "swap", 2, false},
}};

const GateInfo& info_of(GateKind kind) {
  for (const auto& s : kGates) {
    if (s.kind == kind) return s;
  }
  throw std::logic_error("unknown gate kind");
}

/// Phase of the Z- or X-type rotation a single-qubit gate denotes.
Phase rotation_phase(const Gate& g) {
  switch (g.kind) {
    case GateKind::T: return Phase::exact(1, 4);
    case GateKind::Tdg: return Phase::exact(7, 4);
    case GateKind::S: return Phase::exact(1, 2);
    case GateKind::Sdg: return Phase::exact(3, 2);
    case GateKind::Z:
    case GateKind::X: return Phase::exact(1, 1);
    default: return g.phase;
  }
}

bool is_x_type(GateKind k) { return k == GateKind::X || k == GateKind::Rx; }

ComplexMatrix single_qubit_matrix(const Gate& g) {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix h(2, 2);
  h << s, s, s, -s;
  if (g.kind == GateKind::H) return h;
  ComplexMatrix rz = ComplexMatrix::Identity(2, 2);
  rz(1, 1) = std::polar(1.0, rotation_phase(g).to_radians());
  if (is_x_type(g.kind)) return h * rz * h;
  return rz;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::size_t parse_index(std::string_view word, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw CircuitParseError(line, "expected a non-negative integer, got '" +
                                      std::string(word) + "'");
  }
  return value;
}

}  // namespace

std::string_view mnemonic(GateKind kind) { return info_of(kind).name; }

Circuit& Circuit::add(const Gate& g) {
  if (g.q0 >= width || (g.is_two_qubit() && g.q1 >= width)) {
    throw std::invalid_argument("gate " + std::string(mnemonic(g.kind)) +
                                " addresses a qubit outside width " +
                                std::to_string(width));
  }
  if (g.is_two_qubit() && g.q0 == g.q1) {
    throw std::invalid_argument("gate " + std::string(mnemonic(g.kind)) +
                                " needs two distinct qubits");
  }
  gates.push_back(g);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  for (const Gate& g : other.gates) add(g);
  return *this;
}

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool have_width = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto words = split_words(line);
    if (words.empty()) continue;

    if (!have_width) {
      if (words[0] != "qubits" || words.size() != 2) {
        throw CircuitParseError(line_no, "expected 'qubits N' header");
      }
      c.width = parse_index(words[1], line_no);
      if (c.width == 0) throw CircuitParseError(line_no, "width must be positive");
      have_width = true;
      continue;
    }

    const GateInfo* info = nullptr;
    for (const auto& s : kGates) {
      if (s.name == words[0]) info = &s;
    }
    if (info == nullptr) {
      throw CircuitParseError(line_no, "unknown gate '" + std::string(words[0]) + "'");
    }
    const std::size_t expected = 1 + static_cast<std::size_t>(info->qubits) + (info->phase ? 1 : 0);
    if (words.size() != expected) {
      throw CircuitParseError(line_no, "gate '" + std::string(info->name) + "' takes " +
                                           std::to_string(expected - 1) + " arguments");
    }
    Gate g;
    g.kind = info->kind;
    g.q0 = parse_index(words[1], line_no);
    if (info->qubits == 2) g.q1 = parse_index(words[2], line_no);
    if (info->phase) {
      try {
        g.phase = Phase::parse(words[2]);
      } catch (const PhaseParseError& e) {
        throw CircuitParseError(line_no, e.what());
      }
    }
    try {
      c.add(g);
    } catch (const std::invalid_argument& e) {
      throw CircuitParseError(line_no, e.what());
    }
  }
  if (!have_width) {
    throw CircuitParseError(std::max<std::size_t>(line_no, 1), "missing 'qubits N' header");
  }
  return c;
}

std::string print_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.width << '\n';
  for (const Gate& g : c.gates) {
    out << mnemonic(g.kind) << ' ' << g.q0;
    if (g.is_two_qubit()) out << ' ' << g.q1;
    if (g.is_parametric()) out << ' ' << g.phase.to_string();
    out << '\n';
  }
  return out.str();
}

bool is_clifford_t(const Circuit& c) {
  for (const Gate& g : c.gates) {
    if (g.is_parametric() && !g.phase.is_clifford_t()) return false;
  }
  return true;
}

ComplexMatrix gate_matrix(const Gate& g, std::size_t width) {
  const std::size_t dim = std::size_t{1} << width;
  auto bit = [width](std::size_t basis, std::size_t q) {
    return (basis >> (width - 1 - q)) & 1u;
  };
  auto flip = [width](std::size_t basis, std::size_t q) {
    return basis ^ (std::size_t{1} << (width - 1 - q));
  };
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  const auto idx = [](std::size_t i) { return static_cast<Eigen::Index>(i); };
  switch (g.kind) {
    case GateKind::CNOT:
      for (std::size_t b = 0; b < dim; ++b) {
        m(idx(bit(b, g.q0) ? flip(b, g.q1) : b), idx(b)) = 1.0;
      }
      return m;
    case GateKind::CZ:
      for (std::size_t b = 0; b < dim; ++b) {
        m(idx(b), idx(b)) = (bit(b, g.q0) && bit(b, g.q1)) ? -1.0 : 1.0;
      }
      return m;
    case GateKind::SWAP:
      for (std::size_t b = 0; b < dim; ++b) {
        std::size_t t = b;
        if (bit(b, g.q0) != bit(b, g.q1)) t = flip(flip(b, g.q0), g.q1);
        m(idx(t), idx(b)) = 1.0;
      }
      return m;
    default: {
      const ComplexMatrix u = single_qubit_matrix(g);
      for (std::size_t b = 0; b < dim; ++b) {
        const std::size_t v = bit(b, g.q0);
        m(idx(b), idx(b)) = u(idx(v), idx(v));
        m(idx(flip(b, g.q0)), idx(b)) = u(idx(1 - v), idx(v));
      }
      return m;
    }
  }
}

Diagram circuit_to_diagram(const Circuit& c) {
  Diagram d;
  std::vector<VertexId> frontier;
  for (std::size_t q = 0; q < c.width; ++q) frontier.push_back(d.add_input());

  auto extend = [&](std::size_t q, VertexId v) {
    d.add_edge(frontier[q], v);
    frontier[q] = v;
  };

  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H:
        extend(g.q0, d.add_hbox());
        break;
      case GateKind::CNOT: {
        const VertexId ctrl = d.add_spider(VertexType::Z);
        const VertexId targ = d.add_spider(VertexType::X);
        extend(g.q0, ctrl);
        extend(g.q1, targ);
        d.add_edge(ctrl, targ);
        break;
      }
      case GateKind::CZ: {
        const VertexId a = d.add_spider(VertexType::Z);
        const VertexId b = d.add_spider(VertexType::Z);
        const VertexId h = d.add_hbox();
        extend(g.q0, a);
        extend(g.q1, b);
        d.add_edge(a, h);
        d.add_edge(h, b);
        break;
      }
      case GateKind::SWAP:
        std::swap(frontier[g.q0], frontier[g.q1]);
        break;
      default:
        extend(g.q0, d.add_spider(is_x_type(g.kind) ? VertexType::X : VertexType::Z,
                                  rotation_phase(g)));
        break;
    }
  }
  for (std::size_t q = 0; q < c.width; ++q) {
    d.add_edge(frontier[q], d.add_output());
  }
  return d;
}

ComplexMatrix circuit_matrix(const Circuit& c, std::size_t max_qubits) {
  if (c.width > max_qubits) {
    throw ResourceError("circuit_matrix: width " + std::to_string(c.width) +
                        " exceeds the cap of " + std::to_string(max_qubits) + " qubits");
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << c.width);
  ComplexMatrix m = ComplexMatrix::Identity(dim, dim);
  for (const Gate& g : c.gates) m = gate_matrix(g, c.width) * m;
  return m;
}

}  // namespace zxq

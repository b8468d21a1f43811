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

#pragma once

#include <cstddef>
#include <string_view>

#include "zxq/phase.hpp"

namespace zxq {

enum class GateKind { H, T, Tdg, S, Sdg, Z, X, Rz, Rx, CNOT, CZ, SWAP };

/// Lower-case .zxc mnemonic ("h", "tdg", "cnot", ...).
std::string_view mnemonic(GateKind kind);

/**
 * One gate of the Clifford+T (+ parametric rotation) set. For CNOT, q0 is
 * the control and q1 the target. Rz(p) is diag(1, e^{ip}) and Rx(p) is
 * H Rz(p) H, so Rz(pi/4) is exactly T.
 */
struct Gate {
  GateKind kind = GateKind::H;
  std::size_t q0 = 0;
  std::size_t q1 = 0;
  Phase phase;

  bool is_two_qubit() const {
    return kind == GateKind::CNOT || kind == GateKind::CZ || kind == GateKind::SWAP;
  }
  bool is_parametric() const { return kind == GateKind::Rz || kind == GateKind::Rx; }

  bool operator==(const Gate&) const = default;

  static Gate single(GateKind kind, std::size_t q) { return {kind, q, 0, {}}; }
  static Gate rz(std::size_t q, Phase p) { return {GateKind::Rz, q, 0, p}; }
  static Gate rx(std::size_t q, Phase p) { return {GateKind::Rx, q, 0, p}; }
  static Gate cnot(std::size_t control, std::size_t target) {
    return {GateKind::CNOT, control, target, {}};
  }
  static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, a, b, {}}; }
  static Gate swap(std::size_t a, std::size_t b) { return {GateKind::SWAP, a, b, {}}; }
};

}  // namespace zxq

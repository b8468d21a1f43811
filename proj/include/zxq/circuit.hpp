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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zxq/diagram.hpp"
#include "zxq/gate.hpp"
#include "zxq/semantics.hpp"

namespace zxq {

class CircuitParseError : public std::runtime_error {
 public:
  CircuitParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Gates in application order (the first gate acts first).
struct Circuit {
  std::size_t width = 1;
  std::vector<Gate> gates;

  bool operator==(const Circuit&) const = default;

  /// Throws std::invalid_argument on an out-of-range or repeated qubit.
  Circuit& add(const Gate& g);
  /// Appends other's gates.
  Circuit& append(const Circuit& other);
};

/// Parses the .zxc text format.
Circuit parse_circuit(std::string_view text);

/// Prints .zxc text that parse_circuit reads back to the same gate list.
std::string print_circuit(const Circuit& c);

/// True iff every phase-carrying gate uses an exact multiple of pi/4.
bool is_clifford_t(const Circuit& c);

/**
 * One wire per qubit. H becomes an H-box, Z-type rotations Z spiders,
 * X-type rotations X spiders, CNOT a Z spider on the control joined to an
 * X spider on the target, CZ two Z spiders joined through an H-box, and
 * SWAP a wire crossing.
 */
Diagram circuit_to_diagram(const Circuit& c);

/// Ordered product of gate unitaries. Throws ResourceError beyond
/// max_qubits.
ComplexMatrix circuit_matrix(const Circuit& c, std::size_t max_qubits = 10);

}  // namespace zxq

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

#include <string>
#include <vector>

#include "zxq/circuit.hpp"

namespace zxq {

/// One relation of the complete 2-qubit Clifford+T presentation. Gates are
/// listed in application order. Relations stated as "= I" have an empty
/// rhs circuit of width 2.
struct RelationFixture {
  int id = 0;
  std::string name;
  Circuit lhs;
  Circuit rhs;
  /// True for the squared / composed endpoint identities (15)-(17).
  bool against_identity = false;
};

/// The 17 relations, parsed from their embedded .zxc text and checked
/// against an independent builder-API entry of the same circuits. Throws
/// std::logic_error if the two entries disagree.
std::vector<RelationFixture> clifford_t_relations();

/// The .zxc text of one side ("lhs" or "rhs") of relation id.
std::string fixture_text(int id, const std::string& side);

/// Named sub-circuits A, B, C, D used by relations 15-17.
Circuit fixture_circuit(char name);

}  // namespace zxq

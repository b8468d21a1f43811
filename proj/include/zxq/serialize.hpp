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

#include <stdexcept>
#include <string>
#include <string_view>

#include "zxq/diagram.hpp"

namespace zxq {

/// Malformed .zxg input. `where` is "line:col" for syntax errors or a JSON
/// path such as "nodes[3].phase" for schema errors.
class DiagramParseError : public std::runtime_error {
 public:
  DiagramParseError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Writes the .zxg JSON form. Node ids are the decimal vertex ids.
std::string serialize(const Diagram& d);

/// Parses .zxg JSON and validates the result. Vertices are numbered in node
/// order. Invariant violations surface as DiagramError.
Diagram deserialize(std::string_view text);

}  // namespace zxq

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

#include <iosfwd>
#include <string>
#include <vector>

#include "zxq/diagram.hpp"

namespace zxq {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Loads a .zxg diagram, or a .zxc circuit translated to a diagram. Files
/// without either extension are sniffed: JSON objects are .zxg.
Diagram load_diagram(const std::string& path);

/**
 * Entry point of the zxq tool. `args` excludes the program name. Returns 0
 * on success, 1 when a check or verification fails, 2 on usage or input
 * errors. Reports go to out, diagnostics to err.
 */
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zxq

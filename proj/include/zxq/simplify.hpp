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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "zxq/diagram.hpp"
#include "zxq/rewrite.hpp"
#include "zxq/semantics.hpp"

namespace zxq {

struct StrategyConfig {
  std::size_t step_budget = 10000;
  /// Rule names the strategy may use; empty means all.
  std::set<std::string> enabled_rules;
  double tolerance = kDefaultTolerance;
  /// Orders the candidates of the optional passes.
  std::uint64_t seed = 0;
  /// Colour-change and colour-swap attempts after the core pass.
  bool optional_passes = true;

  bool enabled(std::string_view rule) const;
  /// Throws std::invalid_argument unless budget > 0 and tolerance is in
  /// (0, 1e-3].
  void validate() const;
};

/// (spiders, edges, H-boxes), compared lexicographically.
struct Cost {
  std::size_t spiders = 0;
  std::size_t edges = 0;
  std::size_t hboxes = 0;
  auto operator<=>(const Cost&) const = default;
};

Cost cost(const Diagram& d);

struct RewriteStep {
  std::string rule;
  Direction direction = Direction::Forward;
  Site site;
  std::uint32_t digest_before = 0;
  std::uint32_t digest_after = 0;
  /// Every rule here holds only up to a non-zero scalar.
  bool up_to_scalar = true;
};

struct RewriteTrace {
  Diagram initial;
  std::vector<RewriteStep> steps;
  Diagram final_diagram;
};

struct SimplifyResult {
  Diagram diagram;
  RewriteTrace trace;
  /// The step budget ran out; diagram is the best found so far.
  bool truncated = false;
};

/**
 * Rewrites until no rule of the core pass applies: fusion (S1), identity
 * removal (S2), H-H cancellation (HH), Hopf (Hf) and self-loop removal
 * (Cy), in that priority. Each of these strictly lowers the cost, so the
 * pass terminates. Then, if enabled, single colour changes (H2, both
 * ways) and colour swaps (P, both ways) are tried, each followed by a
 * core pass, and kept only when the resulting cost is strictly lower.
 */
SimplifyResult simplify(const Diagram& d, const StrategyConfig& config = {});

/// Applies one rule step to d and appends it to trace.
void apply_step(Diagram& d, const RewriteRule& rule, const Site& site, Direction dir,
                RewriteTrace& trace);

/// Re-applies the recorded steps to trace.initial. Throws std::runtime_error
/// if a recorded digest does not match.
Diagram replay(const RewriteTrace& trace, const RuleLibrary& lib = RuleLibrary::standard());

/// `<rule> @ [ids] digest:<hex8>-><hex8>`; reverse steps are named
/// `<rule>:rev`.
std::string format_step(const RewriteStep& step);
std::string format_trace(const RewriteTrace& trace);

}  // namespace zxq

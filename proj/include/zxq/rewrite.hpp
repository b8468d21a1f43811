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

#include <array>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zxq/diagram.hpp"

namespace zxq {

enum class Direction { Forward, Reverse };

std::string_view to_string(Direction dir);

/// Thrown by a rule whose preconditions do not hold at the given site. The
/// diagram is left untouched.
class MatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Anchor of a rule application. Which fields are read depends on the rule
 * and direction; see the per-rule notes in RuleLibrary::standard().
 */
struct Site {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  /// Neighbour ends to move (spider unfusion).
  std::vector<VertexId> legs;
  Phase phase;
  VertexType colour = VertexType::Z;

  bool operator==(const Site&) const = default;
};

struct RuleSample {
  Diagram diagram;
  Site site;
};

class RewriteRule {
 public:
  virtual ~RewriteRule() = default;

  virtual std::string_view name() const = 0;

  /// Every site at which the rule applies in direction dir, in a
  /// deterministic order. Insertion-type reverses (which apply almost
  /// anywhere) list one canonical site per anchor.
  virtual std::vector<Site> matches(const Diagram& d, Direction dir) const = 0;

  /// Rewrites d in place. Throws MatchError, leaving d unchanged, if the
  /// site does not satisfy the rule's preconditions.
  virtual void rewrite(Diagram& d, const Site& site, Direction dir) const = 0;

  /// A small diagram containing the left-hand side of dir, with random
  /// phase parameters and boundary wires on its open legs.
  virtual RuleSample sample(std::mt19937_64& rng, Direction dir) const = 0;

  Diagram apply(const Diagram& d, const Site& site,
                Direction dir = Direction::Forward) const {
    Diagram out = d;
    rewrite(out, site, dir);
    return out;
  }
};

class RuleLibrary {
 public:
  /// S1 S2 S2' B1 B2 B2v H1 H2 N Nv P Hf Hex Cy HH, in that order.
  static RuleLibrary standard();

  void add(std::unique_ptr<RewriteRule> rule);
  /// Replaces the rule of the same name.
  void replace(std::unique_ptr<RewriteRule> rule);

  /// Throws std::out_of_range for an unknown name.
  const RewriteRule& get(std::string_view name) const;
  bool contains(std::string_view name) const;
  std::vector<std::string> names() const;
  std::size_t size() const { return rules_.size(); }

 private:
  std::vector<std::shared_ptr<const RewriteRule>> rules_;
};

// Named single-step operations. Each returns the rewritten copy and throws
// MatchError when the precondition fails.

/// Fuses two adjacent same-colour spiders; extra parallel edges between
/// them become self-loops.
Diagram fuse_spiders(const Diagram& d, VertexId u, VertexId w);
/// Removes a phase-0 degree-2 spider with two distinct neighbours.
Diagram remove_identity(const Diagram& d, VertexId v);
/// Cancels two adjacent H-boxes.
Diagram eliminate_hh(const Diagram& d, VertexId h1, VertexId h2);
/// Flips the colour of v and puts an H-box on every leg.
Diagram color_change(const Diagram& d, VertexId v);
/// Deletes two parallel edges between a Z and an X spider.
Diagram apply_hopf(const Diagram& d, VertexId u, VertexId w);
/// Bialgebra: a Z(0)-X(0) edge (forward) or a complete bipartite block
/// (reverse). Uses the 2x2 rule for degree-3 pairs, the general one
/// otherwise.
Diagram apply_bialgebra(const Diagram& d, const Site& site,
                        Direction dir = Direction::Forward);
/// Copies a Pauli leaf through an opposite-colour spider (forward), or
/// merges same-type leaves (reverse).
Diagram apply_copy(const Diagram& d, const Site& site, Direction dir = Direction::Forward);
/// Pushes a pi spider through a spider of the other colour.
Diagram apply_pi(const Diagram& d, const Site& site, Direction dir = Direction::Forward);
/// pi - alpha - pi chain to -alpha.
Diagram apply_pi_chain(const Diagram& d, const Site& site,
                       Direction dir = Direction::Forward);
/// Removes (forward) or adds (reverse) a self-loop on v.
Diagram apply_cycle(const Diagram& d, VertexId v, Direction dir = Direction::Forward);
Diagram apply_hexagon(const Diagram& d, const Site& site,
                      Direction dir = Direction::Forward);
/// H-box to pi/2 Euler chain, or back.
Diagram apply_euler_h(const Diagram& d, const Site& site,
                      Direction dir = Direction::Forward);
/// Colour swap of a degree-2 chain: Z-X-Z becomes X-Z-X and vice versa.
Diagram apply_p(const Diagram& d, const std::array<VertexId, 3>& chain);

}  // namespace zxq

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
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zxq/circuit.hpp"
#include "zxq/rewrite.hpp"
#include "zxq/semantics.hpp"

namespace zxq {

struct VerificationFailure {
  std::string label;
  /// Human-readable witness (parameters or diagram).
  std::string inputs;
  double residual = 0.0;
  /// Seed that reproduces this case on its own.
  std::uint64_t seed = 0;
};

struct VerificationReport {
  std::string campaign;
  std::size_t cases = 0;
  std::vector<VerificationFailure> failures;
  /// One summary line per rule, relation or sub-campaign.
  std::vector<std::string> lines;
  double wall_seconds = 0.0;

  bool passed() const { return failures.empty(); }
  /// Deterministic text: everything except the wall time.
  std::string body() const;
  /// body() followed by a wall-time line.
  std::string render() const;
};

/// Derives an independent, reproducible seed for case `index` of stream
/// `stream` under the campaign seed.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/**
 * Wraps a rule sample in a random host context: spiders or H-boxes are
 * inserted on boundary wires and the inserted spiders may gain extra edges
 * and boundary legs. The site stays valid.
 */
Diagram embed_in_context(const RuleSample& sample, std::mt19937_64& rng);

/// Soundness of every rule in both directions: evaluate(before) is
/// proportional to evaluate(after) on `samples` embedded instances each.
VerificationReport verify_rules(const RuleLibrary& lib, std::uint64_t seed,
                                std::size_t samples, double tol = kDefaultTolerance);
VerificationReport verify_rules(std::uint64_t seed, std::size_t samples,
                                double tol = kDefaultTolerance);

/// The 17 relations via circuit matrices and via diagram evaluation, plus a
/// simplify pass on each side of relations 1-14 and the scalar against I4
/// for 15-17.
VerificationReport verify_relations(double tol = kDefaultTolerance);

/// Sampling campaigns for the generalised colour swap and the Euler-angle
/// formulas, their special cases and the degenerate pathways.
VerificationReport verify_p_formulas(std::uint64_t seed, std::size_t samples,
                                     double tol = kDefaultTolerance);

/// Uniform gate sequence over h t tdg s sdg z x cnot cz swap.
Circuit random_circuit(std::mt19937_64& rng, std::size_t width, std::size_t length);

/// Random well-formed diagram with the given boundary counts and up to
/// `spiders` internal spiders (some H-boxes), connected by random edges.
Diagram random_diagram(std::mt19937_64& rng, std::size_t n_in, std::size_t n_out,
                       std::size_t spiders);

}  // namespace zxq

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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxq/phase.hpp"

namespace zxq {

using VertexId = std::uint32_t;

enum class VertexType { Z, X, H, Input, Output };

std::string_view to_string(VertexType type);

inline bool is_spider(VertexType t) {
  return t == VertexType::Z || t == VertexType::X;
}
inline bool is_boundary(VertexType t) {
  return t == VertexType::Input || t == VertexType::Output;
}
/// Z <-> X. Other kinds are returned unchanged.
VertexType opposite_colour(VertexType t);

struct Vertex {
  VertexType type = VertexType::Z;
  Phase phase;            // spiders only
  std::size_t port = 0;   // boundaries only
};

/// Unordered vertex pair, stored with a <= b. a == b is a self-loop.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  Edge() = default;
  Edge(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}

  auto operator<=>(const Edge&) const = default;
};

struct DiagramSignature {
  std::size_t n_inputs = 0;
  std::size_t n_outputs = 0;
  bool operator==(const DiagramSignature&) const = default;
};

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Open multigraph of Z/X spiders, Hadamard boxes and ordered boundary
 * vertices. Parallel edges and self-loops are kept as data.
 *
 * Mutators do not enforce the degree constraints, so a Diagram doubles as
 * its own builder; call validate() once construction is finished.
 * Vertex ids are allocated from a monotone counter, so replaying the same
 * sequence of mutations always yields the same ids.
 */
class Diagram {
 public:
  using Adjacency = std::map<VertexId, std::size_t>;

  Diagram() = default;

  /// Boundary kinds are appended to the input/output order.
  VertexId add_vertex(VertexType type, Phase phase = {});
  VertexId add_spider(VertexType colour, Phase phase = {});
  VertexId add_hbox() { return add_vertex(VertexType::H); }
  VertexId add_input() { return add_vertex(VertexType::Input); }
  VertexId add_output() { return add_vertex(VertexType::Output); }

  void add_edge(VertexId a, VertexId b, std::size_t count = 1);
  /// Removes one copy of the edge; throws if absent.
  void remove_edge(VertexId a, VertexId b);
  /// Removes an internal vertex with all incident edges.
  void remove_vertex(VertexId v);

  void set_phase(VertexId v, Phase phase);
  void set_type(VertexId v, VertexType type);

  /// Replaces the boundary order; ids must be exactly the current boundary
  /// vertices of the matching kind.
  void set_boundary_order(std::vector<VertexId> inputs,
                          std::vector<VertexId> outputs);

  bool contains(VertexId v) const { return vertices_.contains(v); }
  const Vertex& vertex(VertexId v) const;
  VertexType type(VertexId v) const { return vertex(v).type; }
  const Phase& phase(VertexId v) const { return vertex(v).phase; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edge_count_; }
  std::vector<VertexId> vertex_ids() const;
  /// Sorted, one entry per parallel copy.
  std::vector<Edge> edges() const;
  const std::map<VertexId, Vertex>& vertices() const { return vertices_; }

  /// Neighbour -> number of parallel edges; self-loops appear under v itself.
  const Adjacency& adjacency(VertexId v) const;
  std::size_t multiplicity(VertexId a, VertexId b) const;
  std::size_t self_loops(VertexId v) const { return multiplicity(v, v); }
  /// Number of edge ends at v (a self-loop counts twice).
  std::size_t degree(VertexId v) const;
  /// One entry per edge end at the far side; a self-loop contributes v twice.
  std::vector<VertexId> neighbors(VertexId v) const;

  const std::vector<VertexId>& inputs() const { return inputs_; }
  const std::vector<VertexId>& outputs() const { return outputs_; }
  DiagramSignature signature() const { return {inputs_.size(), outputs_.size()}; }

  std::size_t spider_count() const;
  std::size_t hbox_count() const;
  VertexId next_id() const { return next_id_; }

  /// Throws DiagramError describing the first violated invariant.
  void validate() const;

  friend Diagram compose(const Diagram& first, const Diagram& second);
  friend Diagram tensor(const Diagram& top, const Diagram& bottom);

 private:
  Vertex& mutable_vertex(VertexId v);
  void erase_vertex(VertexId v);
  /// Deletes two degree-1 boundary vertices and joins their neighbours.
  void join_boundaries(VertexId a, VertexId b);
  void renumber_ports();
  /// Copies every vertex and edge of other with fresh ids, returning the map.
  std::map<VertexId, VertexId> absorb(const Diagram& other);

  std::map<VertexId, Vertex> vertices_;
  std::map<VertexId, Adjacency> adj_;
  std::vector<VertexId> inputs_;
  std::vector<VertexId> outputs_;
  VertexId next_id_ = 0;
  std::size_t edge_count_ = 0;
};

/// Sequential composition: outputs of first are plugged into inputs of
/// second. Throws DiagramError on arity mismatch.
Diagram compose(const Diagram& first, const Diagram& second);

/// Side-by-side composition; bottom's ports are numbered after top's.
Diagram tensor(const Diagram& top, const Diagram& bottom);

/// True iff a boundary-order-preserving isomorphism exists that preserves
/// vertex kinds, phases (exact exactly, approximate within 1e-12) and edge
/// multiplicities.
bool iso_equal(const Diagram& a, const Diagram& b);

/// FNV-1a hash of the id-level content; equal for identical id layouts.
std::uint32_t digest(const Diagram& d);
std::string digest_hex(const Diagram& d);

// Elementary diagrams.
Diagram identity_diagram(std::size_t wires);
Diagram spider_diagram(VertexType colour, Phase phase, std::size_t n_in,
                       std::size_t n_out);
Diagram hadamard_diagram();
Diagram swap_diagram();
/// 0 -> 2
Diagram cap_diagram();
/// 2 -> 0
Diagram cup_diagram();

}  // namespace zxq

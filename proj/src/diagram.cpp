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

#include "zxq/diagram.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <optional>
#include <set>

namespace zxq {

std::string_view to_string(VertexType type) {
  switch (type) {
    case VertexType::Z:
      return "Z";
    case VertexType::X:
      return "X";
    case VertexType::H:
      return "H";
    case VertexType::Input:
      return "in";
    case VertexType::Output:
      return "out";
  }
  return "?";
}

VertexType opposite_colour(VertexType t) {
  if (t == VertexType::Z) return VertexType::X;
  if (t == VertexType::X) return VertexType::Z;
  return t;
}

VertexId Diagram::add_vertex(VertexType type, Phase phase) {
  const VertexId id = next_id_++;
  Vertex v;
  v.type = type;
  if (is_spider(type)) v.phase = phase;
  if (type == VertexType::Input) {
    v.port = inputs_.size();
    inputs_.push_back(id);
  } else if (type == VertexType::Output) {
    v.port = outputs_.size();
    outputs_.push_back(id);
  }
  vertices_.emplace(id, v);
  adj_.emplace(id, Adjacency{});
  return id;
}

VertexId Diagram::add_spider(VertexType colour, Phase phase) {
  if (!is_spider(colour)) throw DiagramError("add_spider needs Z or X");
  return add_vertex(colour, phase);
}

void Diagram::add_edge(VertexId a, VertexId b, std::size_t count) {
  if (!contains(a) || !contains(b)) {
    throw DiagramError("edge endpoint does not exist");
  }
  if (count == 0) return;
  adj_[a][b] += count;
  if (a != b) adj_[b][a] += count;
  edge_count_ += count;
}

void Diagram::remove_edge(VertexId a, VertexId b) {
  if (multiplicity(a, b) == 0) {
    throw DiagramError("no edge " + std::to_string(a) + "-" + std::to_string(b));
  }
  auto drop = [this](VertexId u, VertexId w) {
    auto& row = adj_[u];
    if (--row[w] == 0) row.erase(w);
  };
  drop(a, b);
  if (a != b) drop(b, a);
  --edge_count_;
}

void Diagram::erase_vertex(VertexId v) {
  const Adjacency row = adjacency(v);
  for (const auto& [w, m] : row) {
    for (std::size_t i = 0; i < m; ++i) remove_edge(v, w);
  }
  adj_.erase(v);
  vertices_.erase(v);
}

void Diagram::remove_vertex(VertexId v) {
  if (is_boundary(type(v))) {
    throw DiagramError("boundary vertices cannot be removed");
  }
  erase_vertex(v);
}

Vertex& Diagram::mutable_vertex(VertexId v) {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) {
    throw DiagramError("unknown vertex " + std::to_string(v));
  }
  return it->second;
}

const Vertex& Diagram::vertex(VertexId v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) {
    throw DiagramError("unknown vertex " + std::to_string(v));
  }
  return it->second;
}

void Diagram::set_phase(VertexId v, Phase phase) {
  Vertex& vx = mutable_vertex(v);
  if (!is_spider(vx.type)) throw DiagramError("only spiders carry phases");
  vx.phase = phase;
}

void Diagram::set_type(VertexId v, VertexType type) {
  Vertex& vx = mutable_vertex(v);
  if (is_boundary(vx.type) || is_boundary(type)) {
    throw DiagramError("cannot change boundary kinds");
  }
  vx.type = type;
  if (!is_spider(type)) vx.phase = Phase();
}

void Diagram::set_boundary_order(std::vector<VertexId> inputs,
                                 std::vector<VertexId> outputs) {
  auto check = [this](const std::vector<VertexId>& ids,
                      const std::vector<VertexId>& current, VertexType kind) {
    std::vector<VertexId> a = ids;
    std::vector<VertexId> b = current;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw DiagramError("boundary order must list every boundary once");
    for (VertexId id : ids) {
      if (type(id) != kind) throw DiagramError("boundary kind mismatch");
    }
  };
  check(inputs, inputs_, VertexType::Input);
  check(outputs, outputs_, VertexType::Output);
  inputs_ = std::move(inputs);
  outputs_ = std::move(outputs);
  renumber_ports();
}

void Diagram::renumber_ports() {
  for (std::size_t k = 0; k < inputs_.size(); ++k) vertices_[inputs_[k]].port = k;
  for (std::size_t k = 0; k < outputs_.size(); ++k) vertices_[outputs_[k]].port = k;
}

std::vector<VertexId> Diagram::vertex_ids() const {
  std::vector<VertexId> ids;
  ids.reserve(vertices_.size());
  for (const auto& [id, _] : vertices_) ids.push_back(id);
  return ids;
}

std::vector<Edge> Diagram::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [u, row] : adj_) {
    for (const auto& [w, m] : row) {
      if (w < u) continue;
      for (std::size_t i = 0; i < m; ++i) out.emplace_back(u, w);
    }
  }
  return out;
}

const Diagram::Adjacency& Diagram::adjacency(VertexId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw DiagramError("unknown vertex " + std::to_string(v));
  return it->second;
}

std::size_t Diagram::multiplicity(VertexId a, VertexId b) const {
  const Adjacency& row = adjacency(a);
  auto it = row.find(b);
  return it == row.end() ? 0 : it->second;
}

std::size_t Diagram::degree(VertexId v) const {
  std::size_t d = 0;
  for (const auto& [w, m] : adjacency(v)) d += (w == v) ? 2 * m : m;
  return d;
}

std::vector<VertexId> Diagram::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (const auto& [w, m] : adjacency(v)) {
    const std::size_t ends = (w == v) ? 2 * m : m;
    out.insert(out.end(), ends, w);
  }
  return out;
}

std::size_t Diagram::spider_count() const {
  return static_cast<std::size_t>(std::count_if(
      vertices_.begin(), vertices_.end(),
      [](const auto& kv) { return is_spider(kv.second.type); }));
}

std::size_t Diagram::hbox_count() const {
  return static_cast<std::size_t>(std::count_if(
      vertices_.begin(), vertices_.end(),
      [](const auto& kv) { return kv.second.type == VertexType::H; }));
}

void Diagram::validate() const {
  std::set<VertexId> seen;
  auto check_ports = [&](const std::vector<VertexId>& order, VertexType kind) {
    for (std::size_t k = 0; k < order.size(); ++k) {
      const VertexId id = order[k];
      if (!contains(id)) throw DiagramError("boundary list names unknown vertex");
      const Vertex& v = vertex(id);
      if (v.type != kind) throw DiagramError("boundary list kind mismatch");
      if (v.port != k) throw DiagramError("boundary port numbering is not contiguous");
      if (!seen.insert(id).second) throw DiagramError("boundary listed twice");
    }
  };
  check_ports(inputs_, VertexType::Input);
  check_ports(outputs_, VertexType::Output);
  for (const auto& [id, v] : vertices_) {
    const std::size_t d = degree(id);
    if (v.type == VertexType::H && d != 2) {
      throw DiagramError("H-box " + std::to_string(id) + " has degree " +
                         std::to_string(d) + ", expected 2");
    }
    if (is_boundary(v.type)) {
      if (d != 1) {
        throw DiagramError("boundary " + std::to_string(id) + " has degree " +
                           std::to_string(d) + ", expected 1");
      }
      if (!seen.contains(id)) throw DiagramError("boundary missing from order");
    }
  }
}

std::map<VertexId, VertexId> Diagram::absorb(const Diagram& other) {
  std::map<VertexId, VertexId> remap;
  for (const auto& [id, v] : other.vertices_) {
    const VertexId fresh = next_id_++;
    vertices_.emplace(fresh, v);
    adj_.emplace(fresh, Adjacency{});
    remap.emplace(id, fresh);
  }
  for (const Edge& e : other.edges()) add_edge(remap.at(e.a), remap.at(e.b));
  return remap;
}

void Diagram::join_boundaries(VertexId a, VertexId b) {
  const VertexId x = adjacency(a).begin()->first;
  const VertexId y = adjacency(b).begin()->first;
  erase_vertex(a);
  erase_vertex(b);
  if (x == b) {
    // The two boundaries were wired to each other: a closed loop, which
    // evaluates to the trace of the identity. A phase-free spider with a
    // self-loop has exactly that value.
    const VertexId loop = add_vertex(VertexType::Z);
    add_edge(loop, loop);
  } else {
    add_edge(x, y);
  }
}

Diagram compose(const Diagram& first, const Diagram& second) {
  if (first.outputs_.size() != second.inputs_.size()) {
    throw DiagramError("compose: arity mismatch (" +
                       std::to_string(first.outputs_.size()) + " outputs vs " +
                       std::to_string(second.inputs_.size()) + " inputs)");
  }
  first.validate();
  second.validate();
  Diagram result = first;
  const auto remap = result.absorb(second);
  const std::vector<VertexId> joined_outputs = result.outputs_;
  result.outputs_.clear();
  for (VertexId o : second.outputs_) result.outputs_.push_back(remap.at(o));
  for (std::size_t k = 0; k < joined_outputs.size(); ++k) {
    result.join_boundaries(joined_outputs[k], remap.at(second.inputs_[k]));
  }
  result.renumber_ports();
  return result;
}

Diagram tensor(const Diagram& top, const Diagram& bottom) {
  Diagram result = top;
  const auto remap = result.absorb(bottom);
  for (VertexId i : bottom.inputs_) result.inputs_.push_back(remap.at(i));
  for (VertexId o : bottom.outputs_) result.outputs_.push_back(remap.at(o));
  result.renumber_ports();
  return result;
}

namespace {

bool same_label(const Vertex& a, const Vertex& b) {
  if (a.type != b.type) return false;
  if (!is_spider(a.type)) return true;
  if (a.phase.is_exact() && b.phase.is_exact()) return a.phase == b.phase;
  return angular_distance(a.phase.to_radians(), b.phase.to_radians()) <= 1e-12;
}

class IsoMatcher {
 public:
  IsoMatcher(const Diagram& a, const Diagram& b) : a_(a), b_(b) {}

  bool run() {
    for (std::size_t k = 0; k < a_.inputs().size(); ++k) {
      if (!try_map(a_.inputs()[k], b_.inputs()[k])) return false;
    }
    for (std::size_t k = 0; k < a_.outputs().size(); ++k) {
      if (!try_map(a_.outputs()[k], b_.outputs()[k])) return false;
    }
    build_order();
    return search(0);
  }

 private:
  bool compatible(VertexId v, VertexId c) const {
    return same_label(a_.vertex(v), b_.vertex(c)) && a_.degree(v) == b_.degree(c) &&
           a_.self_loops(v) == b_.self_loops(c);
  }

  // Edges from v (resp. c) into the already-mapped region must agree.
  bool consistent(VertexId v, VertexId c) const {
    std::size_t into_mapped_a = 0;
    for (const auto& [w, m] : a_.adjacency(v)) {
      if (w == v) continue;
      auto it = forward_.find(w);
      if (it == forward_.end()) continue;
      if (b_.multiplicity(c, it->second) != m) return false;
      into_mapped_a += m;
    }
    std::size_t into_mapped_b = 0;
    for (const auto& [w, m] : b_.adjacency(c)) {
      if (w != c && backward_.contains(w)) into_mapped_b += m;
    }
    return into_mapped_a == into_mapped_b;
  }

  bool try_map(VertexId v, VertexId c) {
    if (!compatible(v, c) || !consistent(v, c)) return false;
    forward_[v] = c;
    backward_[c] = v;
    return true;
  }

  void build_order() {
    std::set<VertexId> placed;
    std::deque<VertexId> queue;
    auto visit_from = [&](VertexId start) {
      if (!placed.insert(start).second) return;
      queue.push_back(start);
      while (!queue.empty()) {
        const VertexId u = queue.front();
        queue.pop_front();
        order_.push_back(u);
        for (const auto& [w, m] : a_.adjacency(u)) {
          if (placed.insert(w).second) queue.push_back(w);
        }
      }
    };
    for (VertexId v : a_.inputs()) visit_from(v);
    for (VertexId v : a_.outputs()) visit_from(v);
    for (VertexId v : a_.vertex_ids()) visit_from(v);
  }

  bool search(std::size_t idx) {
    if (idx == order_.size()) return true;
    const VertexId v = order_[idx];
    if (forward_.contains(v)) return search(idx + 1);

    std::vector<VertexId> candidates;
    std::optional<VertexId> anchor;
    for (const auto& [w, m] : a_.adjacency(v)) {
      if (w != v && forward_.contains(w)) {
        anchor = forward_.at(w);
        break;
      }
    }
    if (anchor) {
      for (const auto& [w, m] : b_.adjacency(*anchor)) {
        if (!backward_.contains(w)) candidates.push_back(w);
      }
    } else {
      for (VertexId w : b_.vertex_ids()) {
        if (!backward_.contains(w)) candidates.push_back(w);
      }
    }
    for (VertexId c : candidates) {
      if (!try_map(v, c)) continue;
      if (search(idx + 1)) return true;
      forward_.erase(v);
      backward_.erase(c);
    }
    return false;
  }

  const Diagram& a_;
  const Diagram& b_;
  std::map<VertexId, VertexId> forward_;
  std::map<VertexId, VertexId> backward_;
  std::vector<VertexId> order_;
};

}  // namespace

bool iso_equal(const Diagram& a, const Diagram& b) {
  if (a.signature() != b.signature() || a.num_vertices() != b.num_vertices() ||
      a.num_edges() != b.num_edges() || a.spider_count() != b.spider_count() ||
      a.hbox_count() != b.hbox_count()) {
    return false;
  }
  return IsoMatcher(a, b).run();
}

std::uint32_t digest(const Diagram& d) {
  std::uint32_t h = 2166136261u;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 16777619u;
    }
    h ^= 0xffu;
    h *= 16777619u;
  };
  for (const auto& [id, v] : d.vertices()) {
    feed(std::to_string(id) + ":" + std::string(to_string(v.type)) + ":" +
         (is_spider(v.type) ? v.phase.to_string() : std::string()));
  }
  for (const Edge& e : d.edges()) feed(std::to_string(e.a) + "-" + std::to_string(e.b));
  for (VertexId v : d.inputs()) feed("i" + std::to_string(v));
  for (VertexId v : d.outputs()) feed("o" + std::to_string(v));
  return h;
}

std::string digest_hex(const Diagram& d) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", digest(d));
  return buf;
}

Diagram identity_diagram(std::size_t wires) {
  Diagram d;
  std::vector<VertexId> ins;
  for (std::size_t k = 0; k < wires; ++k) ins.push_back(d.add_input());
  for (std::size_t k = 0; k < wires; ++k) d.add_edge(ins[k], d.add_output());
  return d;
}

Diagram spider_diagram(VertexType colour, Phase phase, std::size_t n_in,
                       std::size_t n_out) {
  Diagram d;
  std::vector<VertexId> ins;
  for (std::size_t k = 0; k < n_in; ++k) ins.push_back(d.add_input());
  const VertexId s = d.add_spider(colour, phase);
  for (VertexId i : ins) d.add_edge(i, s);
  for (std::size_t k = 0; k < n_out; ++k) d.add_edge(s, d.add_output());
  return d;
}

Diagram hadamard_diagram() {
  Diagram d;
  const VertexId i = d.add_input();
  const VertexId h = d.add_hbox();
  d.add_edge(i, h);
  d.add_edge(h, d.add_output());
  return d;
}

Diagram swap_diagram() {
  Diagram d;
  const VertexId i0 = d.add_input();
  const VertexId i1 = d.add_input();
  const VertexId o0 = d.add_output();
  const VertexId o1 = d.add_output();
  d.add_edge(i0, o1);
  d.add_edge(i1, o0);
  return d;
}

Diagram cap_diagram() {
  Diagram d;
  const VertexId o0 = d.add_output();
  d.add_edge(o0, d.add_output());
  return d;
}

Diagram cup_diagram() {
  Diagram d;
  const VertexId i0 = d.add_input();
  d.add_edge(i0, d.add_input());
  return d;
}

}  // namespace zxq

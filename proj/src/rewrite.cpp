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

#include "zxq/rewrite.hpp"

#include <algorithm>
#include <set>

#include "zxq/phase_algebra.hpp"

namespace zxq {

namespace {

const Phase kPiPhase = Phase::exact(1, 1);
const Phase kHalfPi = Phase::exact(1, 2);

void require(bool ok, std::string_view rule, const std::string& what) {
  if (!ok) throw MatchError(std::string(rule) + ": " + what);
}

bool spider_of(const Diagram& d, VertexId v, VertexType colour) {
  return d.contains(v) && d.type(v) == colour;
}

bool is_spider_at(const Diagram& d, VertexId v) {
  return d.contains(v) && is_spider(d.type(v));
}

bool is_pi(const Phase& p) { return p == kPiPhase; }

/// Neighbour ends of v with one edge copy to `skip` left out per entry of
/// skip.
std::vector<VertexId> ends_except(const Diagram& d, VertexId v,
                                  std::initializer_list<VertexId> skip) {
  std::vector<VertexId> out = d.neighbors(v);
  for (VertexId s : skip) {
    auto it = std::find(out.begin(), out.end(), s);
    if (it != out.end()) out.erase(it);
  }
  return out;
}

/// Far end of a degree-2 vertex seen from `from`.
VertexId far_end(const Diagram& d, VertexId mid, VertexId from) {
  return ends_except(d, mid, {from}).front();
}

void insert_on_edge(Diagram& d, VertexId a, VertexId b, VertexId x) {
  d.remove_edge(a, b);
  d.add_edge(a, x);
  d.add_edge(x, b);
}

// ---- random sampling helpers ------------------------------------------

Phase random_phase(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  if (coin(rng)) {
    std::uniform_int_distribution<int> eighth(0, 7);
    return Phase::exact(eighth(rng), 4);
  }
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  return Phase::radians(angle(rng));
}

VertexType random_colour(std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(0, 1)(rng) ? VertexType::X : VertexType::Z;
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Hangs a fresh input or output off v.
void open_leg(Diagram& d, VertexId v, std::mt19937_64& rng) {
  const VertexId b = uniform(rng, 0, 1) ? d.add_input() : d.add_output();
  d.add_edge(b, v);
}

void open_legs(Diagram& d, VertexId v, int n, std::mt19937_64& rng) {
  for (int i = 0; i < n; ++i) open_leg(d, v, rng);
}

// ---- S1: spider fusion --------------------------------------------------

class FuseRule final : public RewriteRule {
 public:
  std::string_view name() const override { return "S1"; }

  std::vector<Site> matches(const Diagram& d, Direction dir) const override {
    std::vector<Site> out;
    for (const auto& [u, vert] : d.vertices()) {
      if (!is_spider(vert.type)) continue;
      if (dir == Direction::Reverse) {
        out.push_back(Site{{u}, {}, {}, {}, vert.type});
        continue;
      }
      for (const auto& [w, m] : d.adjacency(u)) {
        if (w > u && d.type(w) == vert.type) out.push_back(Site{{u, w}});
      }
    }
    return out;
  }

  void rewrite(Diagram& d, const Site& s, Direction dir) const override {
    if (dir == Direction::Forward) {
      require(s.vertices.size() == 2, name(), "site needs two spiders");
      const VertexId u = s.vertices[0];
      const VertexId w = s.vertices[1];
      require(u != w, name(), "cannot fuse a spider with itself");
      require(is_spider_at(d, u) && is_spider_at(d, w) && d.type(u) == d.type(w), name(),
              "fusion needs two spiders of one colour");
      require(d.multiplicity(u, w) > 0, name(), "spiders are not adjacent");
      const Phase sum = d.phase(u) + d.phase(w);
      const Diagram::Adjacency row = d.adjacency(w);
      std::size_t loops = 0;
      for (const auto& [n, m] : row) {
        if (n == u) {
          loops += m - 1;
        } else if (n == w) {
          loops += m;
        } else {
          d.add_edge(u, n, m);
        }
      }
      d.add_edge(u, u, loops);
      d.remove_vertex(w);
      d.set_phase(u, sum);
      return;
    }
    // Unfuse: move site.legs and site.phase onto a new spider joined to v.
    require(s.vertices.size() == 1, name(), "site needs one spider");
    const VertexId v = s.vertices[0];
    require(is_spider_at(d, v), name(), "not a spider");
    std::map<VertexId, std::size_t> want;
    for (VertexId n : s.legs) ++want[n];
    for (const auto& [n, k] : want) {
      require(n != v && d.multiplicity(v, n) >= k, name(), "leg is not incident to the spider");
    }
    const VertexId w = d.add_spider(d.type(v), s.phase);
    for (VertexId n : s.legs) {
      d.remove_edge(v, n);
      d.add_edge(w, n);
    }
    d.add_edge(v, w);
    d.set_phase(v, d.phase(v) - s.phase);
  }

  RuleSample sample(std::mt19937_64& rng, Direction dir) const override {
    Diagram d;
    const VertexType c = random_colour(rng);
    if (dir == Direction::Forward) {
      const VertexId u = d.add_spider(c, random_phase(rng));
      const VertexId w = d.add_spider(c, random_phase(rng));
      d.add_edge(u, w, static_cast<std::size_t>(uniform(rng, 1, 2)));
      if (uniform(rng, 0, 3) == 0) d.add_edge(w, w);
      open_legs(d, u, uniform(rng, 0, 2), rng);
      open_legs(d, w, uniform(rng, 0, 2), rng);
      return {d, Site{{u, w}}};
    }
    const VertexId v = d.add_spider(c, random_phase(rng));
    const int legs = uniform(rng, 0, 4);
    open_legs(d, v, legs, rng);
    Site s{{v}};
    s.phase = random_phase(rng);
    for (VertexId n : d.neighbors(v)) {
      if (uniform(rng, 0, 1)) s.legs.push_back(n);
    }
    return {d, s};
  }
};

// ---- S2: identity removal ----------------------------------------------

class IdentityRule final : public RewriteRule {
 public:
  std::string_view name() const override { return "S2"; }

  std::vector<Site> matches(const Diagram& d, Direction dir) const override {
    std::vector<Site> out;
    if (dir == Direction::Forward) {
      for (const auto& [v, vert] : d.vertices()) {
        if (forward_ok(d, v)) out.push_back(Site{{v}});
      }
      return out;
    }
    std::set<Edge> seen;
    for (const Edge& e : d.edges()) {
      if (e.a != e.b && seen.insert(e).second) out.push_back(Site{{}, {e}});
    }
    return out;
  }

  void rewrite(Diagram& d, const Site& s, Direction dir) const override {
    if (dir == Direction::Forward) {
      require(s.vertices.size() == 1 && forward_ok(d, s.vertices[0]), name(),
              "needs a phase-0 degree-2 spider with two distinct neighbours");
      const VertexId v = s.vertices[0];
      const auto ends = d.neighbors(v);
      d.remove_vertex(v);
      d.add_edge(ends[0], ends[1]);
      return;
    }
    require(s.edges.size() == 1, name(), "site needs one edge");
    const Edge e = s.edges[0];
    require(e.a != e.b && d.contains(e.a) && d.contains(e.b) && d.multiplicity(e.a, e.b) > 0,
            name(), "edge not present");
    require(is_spider(s.colour), name(), "colour must be Z or X");
    insert_on_edge(d, e.a, e.b, d.add_spider(s.colour));
  }

  RuleSample sample(std::mt19937_64& rng, Direction dir) const override {
    Diagram d;
    const VertexType c = random_colour(rng);
    if (dir == Direction::Forward) {
      const VertexId v = d.add_spider(c);
      open_legs(d, v, 2, rng);
      return {d, Site{{v}}};
    }
    const VertexId a = d.add_spider(random_colour(rng), random_phase(rng));
    const VertexId b = d.add_spider(random_colour(rng), random_phase(rng));
    d.add_edge(a, b);
    open_legs(d, a, uniform(rng, 0, 2), rng);
    open_legs(d, b, uniform(rng, 0, 2), rng);
    return {d, Site{{}, {Edge(a, b)}, {}, {}, c}};
  }

 private:
  static bool forward_ok(const Diagram& d, VertexId v) {
    if (!is_spider_at(d, v) || !d.phase(v).is_zero() || d.degree(v) != 2) return false;
    const auto ends = d.neighbors(v);
    return ends[0] != v && ends[1] != v && ends[0] != ends[1];
  }
};

// ---- S2': phase-free degree-2 spiders are colour-blind -------------------

class CompactRule final : public RewriteRule {
 public:
  std::string_view name() const override { return "S2'"; }

  std::vector<Site> matches(const Diagram& d, Direction dir) const override {
    std::vector<Site> out;
    for (const auto& [v, vert] : d.vertices()) {
      if (ok(d, v, dir)) out.push_back(Site{{v}});
    }
    return out;
  }

  void rewrite(Diagram& d, const Site& s, Direction dir) const override {
    require(s.vertices.size() == 1 && ok(d, s.vertices[0], dir), name(),
            "needs a phase-0 degree-2 spider of the source colour");
    d.set_type(s.vertices[0], opposite_colour(d.type(s.vertices[0])));
  }

  RuleSample sample(std::mt19937_64& rng, Direction dir) const override {
    Diagram d;
    const VertexId v = d.add_spider(source(dir));
    open_legs(d, v, 2, rng);
    return {d, Site{{v}}};
  }

 private:
  static VertexType source(Direction dir) {
    return dir == Direction::Forward ? VertexType::Z : VertexType::X;
  }
  static bool ok(const Diagram& d, VertexId v, Direction dir) {
    return spider_of(d, v, source(dir)) && d.phase(v).is_zero() && d.degree(v) == 2;
  }
};

// ---- B1: copy --------------------------------------------------------------

class CopyRule final : public RewriteRule {
 public:
  std::string_view name() const override { return "B1"; }

  std::vector<Site> matches(const Diagram& d, Direction dir) const override {
    std::vector<Site> out;
    if (dir == Direction::Forward) {
      for (const auto& [l, vert] : d.vertices()) {
        if (is_leaf(d, l)) {
          const VertexId v = d.neighbors(l).front();
          if (forward_ok(d, l, v)) out.push_back(Site{{l, v}});
        }
      }
      return out;
    }
    std::map<std::pair<VertexType, bool>, std::vector<VertexId>> groups;
    for (const auto& [l, vert] : d.vertices()) {
      if (is_leaf(d, l) && !is_leaf(d, d.neighbors(l).front())) {
        groups[{vert.type, vert.phase.is_zero()}].push_back(l);
      }
    }
    for (auto& [key, leaves] : groups) out.push_back(Site{leaves});
    return out;
  }

  void rewrite(Diagram& d, const Site& s, Direction dir) const override {
    if (dir == Direction::Forward) {
      require(s.vertices.size() == 2 && forward_ok(d, s.vertices[0], s.vertices[1]), name(),
              "needs a Pauli leaf on a loop-free spider of the other colour");
      const VertexId l = s.vertices[0];
      const VertexId v = s.vertices[1];
      const VertexType colour = d.type(l);
      const Phase phase = d.phase(l);
      const auto ends = ends_except(d, v, {l});
      d.remove_vertex(l);
      d.remove_vertex(v);
      for (VertexId n : ends) d.add_edge(d.add_spider(colour, phase), n);
      return;
    }
    require(!s.vertices.empty(), name(), "site needs at least one leaf");
    std::set<VertexId> leaves(s.vertices.begin(), s.vertices.end());
    require(leaves.size() == s.vertices.size(), name(), "repeated leaf");
    const VertexId first = s.vertices.front();
    require(is_leaf(d, first), name(), "not a Pauli leaf");
    const VertexType colour = d.type(first);
    const Phase phase = d.phase(first);
    std::vector<VertexId> anchors;
    for (VertexId l : s.vertices) {
      require(is_leaf(d, l) && d.type(l) == colour && d.phase(l) == phase, name(),
              "leaves must be Pauli leaves of one type");
      const VertexId n = d.neighbors(l).front();
      require(!leaves.contains(n), name(), "leaves may not touch each other");
      anchors.push_back(n);
    }
    for (VertexId l : s.vertices) d.remove_vertex(l);
    const VertexId v = d.add_spider(opposite_colour(colour));
    for (VertexId n : anchors) d.add_edge(v, n);
    d.add_edge(d.add_spider(colour, phase), v);
  }

  RuleSample sample(std::mt19937_64& rng, Direction dir) const override {
    Diagram d;
    const VertexType c = random_colour(rng);
    const Phase pauli = Phase::exact(uniform(rng, 0, 1), 1);
    if (dir == Direction::Forward) {
      const VertexId v = d.add_spider(opposite_colour(c), random_phase(rng));
      const VertexId l = d.add_spider(c, pauli);
      d.add_edge(l, v);
      open_legs(d, v, uniform(rng, 0, 3), rng);
      return {d, Site{{l, v}}};
    }
    std::vector<VertexId> hosts;
    for (int i = uniform(rng, 1, 2); i > 0; --i) {
      const VertexId h = d.add_spider(random_colour(rng), random_phase(rng));
      open_legs(d, h, uniform(rng, 1, 2), rng);
      hosts.push_back(h);
    }
    Site s;
    for (int i = uniform(rng, 1, 3); i > 0; --i) {
      const VertexId l = d.add_spider(c, pauli);
      d.add_edge(l, hosts[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(hosts.size()) - 1))]);
      s.vertices.push_back(l);
    }
    return {d, s};
  }

 private:
  static bool is_leaf(const Diagram& d, VertexId l) {
    return is_spider_at(d, l) && d.degree(l) == 1 && d.phase(l).is_pauli();
  }
  static bool forward_ok(const Diagram& d, VertexId l, VertexId v) {
    return is_leaf(d, l) && is_spider_at(d, v) && d.multiplicity(l, v) == 1 &&
           d.type(v) == opposite_colour(d.type(l)) && d.self_loops(v) == 0;
  }
};

// ---- B2 / B2v: bialgebra -----------------------------------------------------

class BialgebraRule final : public RewriteRule {
 public:
  explicit BialgebraRule(bool general) : general_(general) {}

  std::string_view name() const override { return general_ ? "B2v" : "B2"; }

  std::vector<Site> matches(const Diagram& d, Direction dir) const override {
    std::vector<Site> out;
    if (dir == Direction::Forward) {
      for (const auto& [u, vert] : d.vertices()) {
        if (vert.type != VertexType::Z) continue;
        for (const auto& [w, m] : d.adjacency(u)) {
          if (forward_ok(d, u, w)) out.push_back(Site{{u, w}});
        }
      }
      return out;
    }
    std::set<std::vector<VertexId>> seen;
    for (const auto& [x, vert] : d.vertices()) {
      if (!is_spider(vert.type) || !vert.phase.is_zero()) continue;
      std::vector<VertexId> side_b;
      for (const auto& [n, m] : d.adjacency(x)) {
        if (m == 1 && n != x && d.type(n) == opposite_colour(vert.type) &&
            d.phase(n).is_zero()) {
          side_b.push_back(n);
        }
      }
      if (side_b.empty() || d.degree(x) != side_b.size() + 1) continue;
      std::vector<VertexId> side_a;
      for (const auto& [y, m] : d.adjacency(side_b.front())) {
        if (y == side_b.front() || d.type(y) != vert.type || !d.phase(y).is_zero()) continue;
        if (d.degree(y) != side_b.size() + 1) continue;
        if (std::all_of(side_b.begin(), side_b.end(),
                        [&](VertexId b) { return d.multiplicity(y, b) == 1; })) {
          side_a.push_back(y);
        }
      }
      std::vector<VertexId> all = side_a;
      all.insert(all.end(), side_b.begin(), side_b.end());
      std::sort(all.begin(), all.end());
      if (reverse_ok(d, all) && seen.insert(all).second) out.push_back(Site{all});
    }
    return out;
  }

  void rewrite(Diagram& d, const Site& s, Direction dir) const override {
    if (dir == Direction::Forward) {
      require(s.vertices.size() == 2 && forward_ok(d, s.vertices[0], s.vertices[1]), name(),
              general_ ? "needs a single edge between phase-0 Z and X spiders"
                       : "needs a single edge between phase-0 degree-3 Z and X spiders");
      const VertexId u = s.vertices[0];
      const VertexId w = s.vertices[1];
      const VertexType cu = d.type(u);
      const VertexType cw = d.type(w);
      const auto pu = ends_except(d, u, {w});
      const auto qw = ends_except(d, w, {u});
      d.remove_vertex(u);
      d.remove_vertex(w);
      std::vector<VertexId> xs;
      std::vector<VertexId> zs;
      for (VertexId p : pu) {
        xs.push_back(d.add_spider(cw));
        d.add_edge(xs.back(), p);
      }
      for (VertexId q : qw) {
        zs.push_back(d.add_spider(cu));
        d.add_edge(zs.back(), q);
      }
      for (VertexId x : xs) {
        for (VertexId z : zs) d.add_edge(x, z);
      }
      return;
    }
    require(reverse_ok(d, s.vertices), name(),
            "needs a complete bipartite block of phase-0 spiders with one outside leg each");
    const VertexType ca = d.type(s.vertices.front());
    std::vector<VertexId> a_ext;
    std::vector<VertexId> b_ext;
    const std::set<VertexId> block(s.vertices.begin(), s.vertices.end());
    for (VertexId v : s.vertices) {
      for (VertexId n : d.neighbors(v)) {
        if (!block.contains(n)) (d.type(v) == ca ? a_ext : b_ext).push_back(n);
      }
    }
    for (VertexId v : s.vertices) d.remove_vertex(v);
    const VertexId u = d.add_spider(opposite_colour(ca));
    const VertexId w = d.add_spider(ca);
    for (VertexId n : a_ext) d.add_edge(u, n);
    for (VertexId n : b_ext) d.add_edge(w, n);
    d.add_edge(u, w);
  }

  RuleSample sample(std::mt19937_64& rng, Direction dir) const override {
    Diagram d;
    const VertexType c = random_colour(rng);
    const int m = general_ ? uniform(rng, 1, 3) : 2;
    const int n = general_ ? uniform(rng, 1, 3) : 2;
    if (dir == Direction::Forward) {
      const VertexId u = d.add_spider(c);
      const VertexId w = d.add_spider(opposite_colour(c));
      d.add_edge(u, w);
      open_legs(d, u, m, rng);
      open_legs(d, w, n, rng);
      return {d, Site{{u, w}}};
    }
    std::vector<VertexId> as;
    std::vector<VertexId> bs;
    for (int i = 0; i < m; ++i) as.push_back(d.add_spider(c));
    for (int j = 0; j < n; ++j) bs.push_back(d.add_spider(opposite_colour(c)));
    for (VertexId a : as) {
      for (VertexId b : bs) d.add_edge(a, b);
    }
    Site s;
    for (VertexId a : as) {
      open_leg(d, a, rng);
      s.vertices.push_back(a);
    }
    for (VertexId b : bs) {
      open_leg(d, b, rng);
      s.vertices.push_back(b);
    }
    return {d, s};
  }

 private:
  bool forward_ok(const Diagram& d, VertexId u, VertexId w) const {
    if (!is_spider_at(d, u) || !is_spider_at(d, w) || u == w) return false;
    if (d.type(w) != opposite_colour(d.type(u))) return false;
    if (!d.phase(u).is_zero() || !d.phase(w).is_zero()) return false;
    if (d.multiplicity(u, w) != 1 || d.self_loops(u) != 0 || d.self_loops(w) != 0) return false;
    if (general_) return d.degree(u) >= 2 && d.degree(w) >= 2;
    return d.degree(u) == 3 && d.degree(w) == 3;
  }

  bool reverse_ok(const Diagram& d, const std::vector<VertexId>& vs) const {
    if (vs.empty()) return false;
    const std::set<VertexId> block(vs.begin(), vs.end());
    if (block.size() != vs.size()) return false;
    if (!is_spider_at(d, vs.front())) return false;
    const VertexType ca = d.type(vs.front());
    std::vector<VertexId> as;
    std::vector<VertexId> bs;
    for (VertexId v : vs) {
      if (!is_spider_at(d, v) || !d.phase(v).is_zero()) return false;
      if (d.type(v) == ca) {
        as.push_back(v);
      } else {
        bs.push_back(v);
      }
    }
    if (as.empty() || bs.empty()) return false;
    if (!general_ && (as.size() != 2 || bs.size() != 2)) return false;
    auto check = [&](const std::vector<VertexId>& side, const std::vector<VertexId>& other) {
      for (VertexId v : side) {
        if (d.degree(v) != other.size() + 1) return false;
        for (VertexId o : other) {
          if (d.multiplicity(v, o) != 1) return false;
        }
        for (VertexId n : d.neighbors(v)) {
          const bool in_other = std::find(other.begin(), other.end(), n) != other.end();
          if (!in_other && block.contains(n)) return false;
        }
      }
      return true;
    };
    return check(as, bs) && check(bs, as);
  }

  bool general_;
};

// ---- H1: Euler decomposition of H -------------------------------------------

class EulerHRule final : public RewriteRule {
 public:
  std::string_view name() const override { return "H1"; }

  std::vector<Site> matches(const Diagram& d, Direction dir) const override {
    std::vector<Site> out;
    for (const auto& [v, vert] : d.vertices()) {
      if (dir == Direction::Forward) {
        if (vert.type == VertexType::H) out.push_back(Site{{v}});
        continue;
      }
      if (!is_spider(vert.type) || d.degree(v) != 2) continue;
      const auto ends = d.neighbors(v);
      const VertexId a = std::min(ends[0], ends[1]);
      const VertexId c = std::max(ends[0], ends[1]);
      if (reverse_ok(d, a, v, c)) out.push_back(Site{{a, v, c}});
    }
    return out;
  }

  void rewrite(Diagram& d, const Site& s, Direction dir) const override {
    if (dir == Direction::Forward) {
      require(s.vertices.size() == 1 && d.contains(s.vertices[0]) &&
                  d.type(s.vertices[0]) == VertexType::H,
              name(), "needs an H-box");
      const VertexId h = s.vertices[0];
      const auto ends = d.neighbors(h);
      const bool loop = ends[0] == h;
      d.remove_vertex(h);
      const VertexId a = d.add_spider(VertexType::Z, kHalfPi);
      const VertexId b = d.add_spider(VertexType::X, kHalfPi);
      const VertexId c = d.add_spider(VertexType::Z, kHalfPi);
      d.add_edge(a, b);
      d.add_edge(b, c);
      if (loop) {
        d.add_edge(a, c);
      } else {
        d.add_edge(ends[0], a);
        d.add_edge(c, ends[1]);
      }
      return;
    }
    require(s.vertices.size() == 3 && reverse_ok(d, s.vertices[0], s.vertices[1], s.vertices[2]),
            name(), "needs a pi/2 chain of alternating colours");
    const VertexId a = s.vertices[0];
    const VertexId b = s.vertices[1];
    const VertexId c = s.vertices[2];
    const VertexId na = far_end(d, a, b);
    const VertexId nc = far_end(d, c, b);
    d.remove_vertex(a);
    d.remove_vertex(b);
    d.remove_vertex(c);
    const VertexId h = d.add_hbox();
    d.add_edge(na, h);
    d.add_edge(h, nc);
  }

  RuleSample sample(std::mt19937_64& rng, Direction dir) const override {
    Diagram d;
    if (dir == Direction::Forward) {
      const VertexId h = d.add_hbox();
      open_legs(d, h, 2, rng);
      return {d, Site{{h}}};
    }
    const VertexType c = random_colour(rng);
    const VertexId a = d.add_spider(c, kHalfPi);
    const VertexId b = d.add_spider(opposite_colour(c), kHalfPi);
    const VertexId e = d.add_spider(c, kHalfPi);
    d.add_edge(a, b);
    d.add_edge(b, e);
    open_leg(d, a, rng);
    open_leg(d, e, rng);
    return {d, Site{{a, b, e}}};
  }

 private:
  static bool reverse_ok(const Diagram& d, VertexId a, VertexId b, VertexId c) {
    if (a == c || a == b || b == c) return false;
    for (VertexId v : {a, b, c}) {
      if (!is_spider_at(d, v) || d.phase(v) != kHalfPi || d.degree(v) != 2 ||
          d.self_loops(v) != 0) {
        return false;
      }
    }
    if (d.type(a) != d.type(c) || d.type(b) != opposite_colour(d.type(a))) return false;
    if (d.multiplicity(a, b) != 1 || d.multiplicity(b, c) != 1) return false;
    const VertexId na = far_end(d, a, b);
    const VertexId nc = far_end(d, c, b);
    return na != b && na != c && nc != b && nc != a;
  }
};

// ---- H2: colour change -------------------------------------------------------

class ColourChangeRule final : public RewriteRule {
 public:
  std::string_view name() const override { return "H2"; }

  std::vector<Site> matches(const Diagram& d, Direction dir) const override {
    std::vector<Site> out;
    for (const auto& [v, vert] : d.vertices()) {
      if (!is_spider(vert.type)) continue;
      if (dir == Direction::Forward || reverse_ok(d, v)) out.push_back(Site{{v}});
    }
    return out;
  }

  void rewrite(Diagram& d, const Site& s, Direction dir) const override {
    require(s.vertices.size() == 1 && is_spider_at(d, s.vertices[0]), name(),
            "needs a spider");
    const VertexId v = s.vertices[0];
    if (dir == Direction::Forward) {
      const std::size_t loops = d.self_loops(v);
      for (VertexId n : ends_except(d, v, {})) {
        if (n != v) insert_on_edge(d, v, n, d.add_hbox());
      }
      for (std::size_t i = 0; i < loops; ++i) {
        d.remove_edge(v, v);
        const VertexId h1 = d.add_hbox();
        const VertexId h2 = d.add_hbox();
        d.add_edge(v, h1);
        d.add_edge(h1, h2);
        d.add_edge(h2, v);
      }
      d.set_type(v, opposite_colour(d.type(v)));
      return;
    }
    require(reverse_ok(d, v), name(), "every leg must carry its own H-box");
    for (VertexId h : d.neighbors(v)) {
      const VertexId f = far_end(d, h, v);
      d.remove_vertex(h);
      d.add_edge(v, f);
    }
    d.set_type(v, opposite_colour(d.type(v)));
  }

  RuleSample sample(std::mt19937_64& rng, Direction dir) const override {
    Diagram d;
    const VertexId v = d.add_spider(random_colour(rng), random_phase(rng));
    const int legs = uniform(rng, 0, 3);
    if (dir == Direction::Forward) {
      open_legs(d, v, legs, rng);
      if (uniform(rng, 0, 3) == 0) d.add_edge(v, v);
      return {d, Site{{v}}};
    }
    for (int i = 0; i < legs; ++i) {
      const VertexId h = d.add_hbox();
      d.add_edge(v, h);
      open_leg(d, h, rng);
    }
    return {d, Site{{v}}};
  }

 private:
  static bool reverse_ok(const Diagram& d, VertexId v) {
    if (!is_spider_at(d, v) || d.self_loops(v) != 0) return false;
    const auto& row = d.adjacency(v);
    for (const auto& [h, m] : row) {
      if (d.type(h) != VertexType::H || m != 1) return false;
      const VertexId f = far_end(d, h, v);
      if (f == v || row.contains(f)) return false;
    }
    return true;
  }
};

// ---- N: pi commutation -----------------------------------------------------

class PiRule final : public RewriteRule {
 public:
  std::string_view name() const override { return "N"; }

  std::vector<Site> matches(const Diagram& d, Direction dir) const override {
    std::vector<Site> out;
    for (const auto& [v, vert] : d.vertices()) {
      if (!is_spider(vert.type)) continue;
      for (const auto& [n, m] : d.adjacency(v)) {
        if (dir == Direction::Forward ? forward_ok(d, n, v) : reverse_ok(d, v, n)) {
          out.push_back(dir == Direction::Forward ? Site{{n, v}} : Site{{v, n}});
        }
      }
    }
    return out;
  }

  void rewrite(Diagram& d, const Site& s, Direction dir) const override {
    require(s.vertices.size() == 2, name(), "site needs two vertices");
    if (dir == Direction::Forward) {
      const VertexId p = s.vertices[0];
      const VertexId v = s.vertices[1];
      require(forward_ok(d, p, v), name(),
              "needs a degree-2 pi spider on a loop-free spider of the other colour");
      const VertexId o = far_end(d, p, v);
      const VertexType pc = d.type(p);
      for (VertexId n : ends_except(d, v, {p})) insert_on_edge(d, v, n, d.add_spider(pc, kPiPhase));
      d.remove_vertex(p);
      d.add_edge(v, o);
      d.set_phase(v, -d.phase(v));
      return;
    }
    const VertexId v = s.vertices[0];
    const VertexId n = s.vertices[1];
    require(reverse_ok(d, v, n), name(),
            "every other leg must carry a degree-2 pi spider of the other colour");
    const VertexType pc = opposite_colour(d.type(v));
    for (VertexId m : ends_except(d, v, {n})) {
      const VertexId f = far_end(d, m, v);
      d.remove_vertex(m);
      d.add_edge(v, f);
    }
    insert_on_edge(d, v, n, d.add_spider(pc, kPiPhase));
    d.set_phase(v, -d.phase(v));
  }

  RuleSample sample(std::mt19937_64& rng, Direction dir) const override {
    Diagram d;
    const VertexType c = random_colour(rng);
    const VertexId v = d.add_spider(c, random_phase(rng));
    const int others = uniform(rng, 0, 3);
    if (dir == Direction::Forward) {
      const VertexId p = d.add_spider(opposite_colour(c), kPiPhase);
      d.add_edge(v, p);
      open_leg(d, p, rng);
      open_legs(d, v, others, rng);
      return {d, Site{{p, v}}};
    }
    const VertexId b = uniform(rng, 0, 1) ? d.add_input() : d.add_output();
    d.add_edge(v, b);
    for (int i = 0; i < others; ++i) {
      const VertexId p = d.add_spider(opposite_colour(c), kPiPhase);
      d.add_edge(v, p);
      open_leg(d, p, rng);
    }
    return {d, Site{{v, b}}};
  }

 private:
  static bool pi_leg(const Diagram& d, VertexId p, VertexId v) {
    return is_spider_at(d, p) && d.type(p) == opposite_colour(d.type(v)) && is_pi(d.phase(p)) &&
           d.degree(p) == 2 && d.self_loops(p) == 0 && d.multiplicity(p, v) == 1;
  }
  static bool forward_ok(const Diagram& d, VertexId p, VertexId v) {
    return p != v && is_spider_at(d, v) && d.self_loops(v) == 0 && pi_leg(d, p, v);
  }
  static bool reverse_ok(const Diagram& d, VertexId v, VertexId n) {
    if (!is_spider_at(d, v) || n == v || !d.contains(n) || d.self_loops(v) != 0 ||
        d.multiplicity(v, n) != 1) {
      return false;
    }
    const auto others = ends_except(d, v, {n});
    const std::set<VertexId> set(others.begin(), others.end());
    for (VertexId m : others) {
      if (!pi_leg(d, m, v)) return false;
      const VertexId f = far_end(d, m, v);
      if (set.contains(f)) return false;
    }
    return true;
  }
};

// ---- Nv: pi - alpha - pi ------------------------------------------------------

class PiChainRule final : public RewriteRule {
 public:
  std::string_view name() const override { return "Nv"; }

  std::vector<Site> matches(const Diagram& d, Direction dir) const override {
    std::vector<Site> out;
    for (const auto& [v, vert] : d.vertices()) {
      if (!is_spider(vert.type) || d.degree(v) != 2 || d.self_loops(v) != 0) continue;
      if (dir == Direction::Reverse) {
        out.push_back(Site{{v}});
        continue;
      }
      const auto ends = d.neighbors(v);
      if (forward_ok(d, ends[0], v, ends[1])) out.push_back(Site{{ends[0], v, ends[1]}});
    }
    return out;
  }

  void rewrite(Diagram& d, const Site& s, Direction dir) const override {
    if (dir == Direction::Forward) {
      require(s.vertices.size() == 3 && forward_ok(d, s.vertices[0], s.vertices[1], s.vertices[2]),
              name(), "needs pi spiders on both legs of a degree-2 spider");
      const VertexId p1 = s.vertices[0];
      const VertexId v = s.vertices[1];
      const VertexId p2 = s.vertices[2];
      const VertexId o1 = far_end(d, p1, v);
      const VertexId o2 = far_end(d, p2, v);
      d.remove_vertex(p1);
      d.remove_vertex(p2);
      d.add_edge(v, o1);
      d.add_edge(v, o2);
      d.set_phase(v, -d.phase(v));
      return;
    }
    require(s.vertices.size() == 1 && is_spider_at(d, s.vertices[0]) &&
                d.degree(s.vertices[0]) == 2 && d.self_loops(s.vertices[0]) == 0,
            name(), "needs a loop-free degree-2 spider");
    const VertexId v = s.vertices[0];
    const VertexType pc = opposite_colour(d.type(v));
    for (VertexId n : d.neighbors(v)) insert_on_edge(d, v, n, d.add_spider(pc, kPiPhase));
    d.set_phase(v, -d.phase(v));
  }

  RuleSample sample(std::mt19937_64& rng, Direction dir) const override {
    Diagram d;
    const VertexType c = random_colour(rng);
    const VertexId v = d.add_spider(c, random_phase(rng));
    if (dir == Direction::Reverse) {
      open_legs(d, v, 2, rng);
      return {d, Site{{v}}};
    }
    const VertexId p1 = d.add_spider(opposite_colour(c), kPiPhase);
    const VertexId p2 = d.add_spider(opposite_colour(c), kPiPhase);
    d.add_edge(p1, v);
    d.add_edge(v, p2);
    open_leg(d, p1, rng);
    open_leg(d, p2, rng);
    return {d, Site{{p1, v, p2}}};
  }

 private:
  static bool forward_ok(const Diagram& d, VertexId p1, VertexId v, VertexId p2) {
    if (p1 == p2 || !is_spider_at(d, v) || d.degree(v) != 2 || d.self_loops(v) != 0) {
      return false;
    }
    for (VertexId p : {p1, p2}) {
      if (p == v || !is_spider_at(d, p) || d.type(p) != opposite_colour(d.type(v)) ||
          !is_pi(d.phase(p)) || d.degree(p) != 2 || d.self_loops(p) != 0 ||
          d.multiplicity(p, v) != 1) {
        return false;
      }
    }
    const VertexId o1 = far_end(d, p1, v);
    const VertexId o2 = far_end(d, p2, v);
    return o1 != p2 && o2 != p1;
  }
};

// ---- P: Euler colour swap ------------------------------------------------------

class ColourSwapRule final : public RewriteRule {
 public:
  std::string_view name() const override { return "P"; }

  std::vector<Site> matches(const Diagram& d, Direction dir) const override {
    std::vector<Site> out;
    const VertexType middle = dir == Direction::Forward ? VertexType::X : VertexType::Z;
    for (const auto& [b, vert] : d.vertices()) {
      if (vert.type != middle || d.degree(b) != 2) continue;
      const auto ends = d.neighbors(b);
      const VertexId a = std::min(ends[0], ends[1]);
      const VertexId c = std::max(ends[0], ends[1]);
      if (chain_ok(d, a, b, c, dir)) out.push_back(Site{{a, b, c}});
    }
    return out;
  }

  void rewrite(Diagram& d, const Site& s, Direction dir) const override {
    require(s.vertices.size() == 3 && chain_ok(d, s.vertices[0], s.vertices[1], s.vertices[2], dir),
            name(),
            dir == Direction::Forward ? "needs a degree-2 Z-X-Z chain"
                                      : "needs a degree-2 X-Z-X chain");
    const VertexId a = s.vertices[0];
    const VertexId b = s.vertices[1];
    const VertexId c = s.vertices[2];
    // Conjugating by H maps the X-Z-X case onto the Z-X-Z one with the same
    // angles, so both directions share one formula.
    const EulerTriple t = p_rule_angles({d.phase(a), d.phase(b), d.phase(c)});
    const VertexType outer = opposite_colour(d.type(a));
    d.set_type(a, outer);
    d.set_type(b, opposite_colour(outer));
    d.set_type(c, outer);
    d.set_phase(a, t.alpha);
    d.set_phase(b, t.beta);
    d.set_phase(c, t.gamma);
  }

  RuleSample sample(std::mt19937_64& rng, Direction dir) const override {
    Diagram d;
    const VertexType outer = dir == Direction::Forward ? VertexType::Z : VertexType::X;
    const VertexId a = d.add_spider(outer, random_phase(rng));
    const VertexId b = d.add_spider(opposite_colour(outer), random_phase(rng));
    const VertexId c = d.add_spider(outer, random_phase(rng));
    d.add_edge(a, b);
    d.add_edge(b, c);
    open_leg(d, a, rng);
    open_leg(d, c, rng);
    return {d, Site{{a, b, c}}};
  }

 private:
  static bool chain_ok(const Diagram& d, VertexId a, VertexId b, VertexId c, Direction dir) {
    const VertexType outer = dir == Direction::Forward ? VertexType::Z : VertexType::X;
    if (a == b || b == c || a == c) return false;
    if (!spider_of(d, a, outer) || !spider_of(d, c, outer) ||
        !spider_of(d, b, opposite_colour(outer))) {
      return false;
    }
    for (VertexId v : {a, b, c}) {
      if (d.degree(v) != 2 || d.self_loops(v) != 0) return false;
    }
    if (d.multiplicity(a, b) != 1 || d.multiplicity(b, c) != 1) return false;
    const VertexId na = far_end(d, a, b);
    const VertexId nc = far_end(d, c, b);
    return na != c && nc != a;
  }
};

// ---- Hf: Hopf law ----------------------------------------------------------------

class HopfRule final : public RewriteRule {
 public:
  std::string_view name() const override { return "Hf"; }

  std::vector<Site> matches(const Diagram& d, Direction dir) const override {
    std::vector<Site> out;
    for (const auto& [u, vert] : d.vertices()) {
      if (!is_spider(vert.type)) continue;
      if (dir == Direction::Reverse) {
        // Any pair of opposite colours, connected or not.
        for (const auto& [w, other] : d.vertices()) {
          if (w > u && other.type == opposite_colour(vert.type)) out.push_back(Site{{u, w}});
        }
        continue;
      }
      for (const auto& [w, m] : d.adjacency(u)) {
        if (w > u && d.type(w) == opposite_colour(vert.type) && m >= 2) {
          out.push_back(Site{{u, w}});
        }
      }
    }
    return out;
  }

  void rewrite(Diagram& d, const Site& s, Direction dir) const override {
    require(s.vertices.size() == 2, name(), "site needs two spiders");
    const VertexId u = s.vertices[0];
    const VertexId w = s.vertices[1];
    require(is_spider_at(d, u) && is_spider_at(d, w) && d.type(w) == opposite_colour(d.type(u)),
            name(), "needs spiders of opposite colours");
    if (dir == Direction::Forward) {
      require(d.multiplicity(u, w) >= 2, name(), "needs at least two parallel edges");
      d.remove_edge(u, w);
      d.remove_edge(u, w);
    } else {
      d.add_edge(u, w, 2);
    }
  }

  RuleSample sample(std::mt19937_64& rng, Direction dir) const override {
    Diagram d;
    const VertexType c = random_colour(rng);
    const VertexId u = d.add_spider(c, random_phase(rng));
    const VertexId w = d.add_spider(opposite_colour(c), random_phase(rng));
    d.add_edge(u, w, static_cast<std::size_t>(dir == Direction::Forward ? uniform(rng, 2, 3)
                                                                        : uniform(rng, 0, 1)));
    open_legs(d, u, uniform(rng, 0, 2), rng);
    open_legs(d, w, uniform(rng, 0, 2), rng);
    return {d, Site{{u, w}}};
  }
};

// ---- Hex: three alternating CNOTs are a crossing -----------------------------------

class HexagonRule final : public RewriteRule {
 public:
  std::string_view name() const override { return "Hex"; }

  // Site order: a b c d p q. a, c, q share one colour, b, d, p the other.
  // Internal edges a-b a-p p-c p-q b-q q-d c-d; a, b, c, d keep one outside
  // leg each and the rule joins out(a)-out(d) and out(b)-out(c).
  std::vector<Site> matches(const Diagram& d, Direction dir) const override {
    std::vector<Site> out;
    if (dir == Direction::Reverse) {
      std::vector<Edge> es;
      for (const Edge& e : d.edges()) {
        if (e.a != e.b) es.push_back(e);
      }
      std::set<std::pair<Edge, Edge>> seen;
      for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
          if (seen.insert({es[i], es[j]}).second) out.push_back(Site{{}, {es[i], es[j]}});
        }
      }
      return out;
    }
    for (const auto& [a, vert] : d.vertices()) {
      if (!candidate(d, a)) continue;
      const VertexType other = opposite_colour(vert.type);
      for (const auto& [b, mb] : d.adjacency(a)) {
        if (!candidate(d, b) || d.type(b) != other) continue;
        for (const auto& [p, mp] : d.adjacency(a)) {
          if (p == b || !candidate(d, p) || d.type(p) != other) continue;
          for (const auto& [q, mq] : d.adjacency(p)) {
            if (q == a || d.type(q) != vert.type) continue;
            for (const auto& [c, mc] : d.adjacency(p)) {
              if (c == a || c == q || d.type(c) != vert.type) continue;
              for (const auto& [x, mx] : d.adjacency(q)) {
                if (x == b || x == p || d.type(x) != other) continue;
                const std::vector<VertexId> site{a, b, c, x, p, q};
                if (forward_ok(d, site)) out.push_back(Site{site});
              }
            }
          }
        }
      }
    }
    return out;
  }

  void rewrite(Diagram& d, const Site& s, Direction dir) const override {
    if (dir == Direction::Forward) {
      require(forward_ok(d, s.vertices), name(), "hexagon pattern not found at site");
      const auto& v = s.vertices;
      const std::set<VertexId> block(v.begin(), v.end());
      auto outside = [&](VertexId x) {
        for (VertexId n : d.neighbors(x)) {
          if (!block.contains(n)) return n;
        }
        return x;
      };
      const VertexId oa = outside(v[0]);
      const VertexId ob = outside(v[1]);
      const VertexId oc = outside(v[2]);
      const VertexId od = outside(v[3]);
      for (VertexId x : v) d.remove_vertex(x);
      d.add_edge(oa, od);
      d.add_edge(ob, oc);
      return;
    }
    require(s.edges.size() == 2 && is_spider(s.colour), name(),
            "site needs two edges and a colour");
    const Edge e1 = s.edges[0];
    const Edge e2 = s.edges[1];
    for (const Edge& e : {e1, e2}) {
      require(e.a != e.b && d.contains(e.a) && d.contains(e.b), name(), "bad edge");
    }
    require(d.multiplicity(e1.a, e1.b) >= (e1 == e2 ? 2u : 1u) &&
                d.multiplicity(e2.a, e2.b) >= 1,
            name(), "edges not present");
    d.remove_edge(e1.a, e1.b);
    d.remove_edge(e2.a, e2.b);
    const VertexType c1 = s.colour;
    const VertexType c2 = opposite_colour(c1);
    const VertexId a = d.add_spider(c1);
    const VertexId b = d.add_spider(c2);
    const VertexId c = d.add_spider(c1);
    const VertexId x = d.add_spider(c2);
    const VertexId p = d.add_spider(c2);
    const VertexId q = d.add_spider(c1);
    d.add_edge(a, b);
    d.add_edge(a, p);
    d.add_edge(p, c);
    d.add_edge(p, q);
    d.add_edge(b, q);
    d.add_edge(q, x);
    d.add_edge(c, x);
    d.add_edge(e1.a, a);
    d.add_edge(x, e1.b);
    d.add_edge(e2.a, b);
    d.add_edge(c, e2.b);
  }

  RuleSample sample(std::mt19937_64& rng, Direction dir) const override {
    Diagram d;
    const VertexType c1 = random_colour(rng);
    if (dir == Direction::Forward) {
      const VertexType c2 = opposite_colour(c1);
      const VertexId a = d.add_spider(c1);
      const VertexId b = d.add_spider(c2);
      const VertexId c = d.add_spider(c1);
      const VertexId x = d.add_spider(c2);
      const VertexId p = d.add_spider(c2);
      const VertexId q = d.add_spider(c1);
      d.add_edge(a, b);
      d.add_edge(a, p);
      d.add_edge(p, c);
      d.add_edge(p, q);
      d.add_edge(b, q);
      d.add_edge(q, x);
      d.add_edge(c, x);
      for (VertexId v : {a, b, c, x}) open_leg(d, v, rng);
      return {d, Site{{a, b, c, x, p, q}}};
    }
    std::vector<VertexId> s;
    for (int i = 0; i < 4; ++i) {
      s.push_back(d.add_spider(random_colour(rng), random_phase(rng)));
      open_leg(d, s.back(), rng);
    }
    d.add_edge(s[0], s[1]);
    d.add_edge(s[2], s[3]);
    Site site{{}, {Edge(s[0], s[1]), Edge(s[2], s[3])}};
    site.colour = c1;
    return {d, site};
  }

 private:
  static bool candidate(const Diagram& d, VertexId v) {
    return is_spider_at(d, v) && d.phase(v).is_zero() && d.degree(v) == 3 &&
           d.self_loops(v) == 0;
  }

  static bool forward_ok(const Diagram& d, const std::vector<VertexId>& v) {
    if (v.size() != 6) return false;
    const std::set<VertexId> block(v.begin(), v.end());
    if (block.size() != 6) return false;
    for (VertexId x : v) {
      if (!candidate(d, x)) return false;
    }
    const VertexType c1 = d.type(v[0]);
    const VertexType c2 = opposite_colour(c1);
    const std::array<VertexType, 6> colours{c1, c2, c1, c2, c2, c1};
    for (std::size_t i = 0; i < 6; ++i) {
      if (d.type(v[i]) != colours[i]) return false;
    }
    const VertexId a = v[0], b = v[1], c = v[2], x = v[3], p = v[4], q = v[5];
    const std::array<std::pair<VertexId, VertexId>, 7> inner{
        {{a, b}, {a, p}, {p, c}, {p, q}, {b, q}, {q, x}, {c, x}}};
    for (const auto& [s, t] : inner) {
      if (d.multiplicity(s, t) != 1) return false;
    }
    // Degree 3 plus the seven single edges pins p and q down completely and
    // leaves exactly one further leg on each of a, b, c, x.
    for (VertexId y : {a, b, c, x}) {
      for (VertexId n : d.neighbors(y)) {
        const bool inner_edge =
            std::any_of(inner.begin(), inner.end(), [&](const auto& e) {
              return (e.first == y && e.second == n) || (e.second == y && e.first == n);
            });
        if (!inner_edge && block.contains(n)) return false;
      }
    }
    return true;
  }
};

// ---- Cy: self-loop removal ---------------------------------------------------------

class CycleRule final : public RewriteRule {
 public:
  std::string_view name() const override { return "Cy"; }

  std::vector<Site> matches(const Diagram& d, Direction dir) const override {
    std::vector<Site> out;
    for (const auto& [v, vert] : d.vertices()) {
      if (is_spider(vert.type) && (dir == Direction::Reverse || d.self_loops(v) > 0)) {
        out.push_back(Site{{v}});
      }
    }
    return out;
  }

  void rewrite(Diagram& d, const Site& s, Direction dir) const override {
    require(s.vertices.size() == 1 && is_spider_at(d, s.vertices[0]), name(), "needs a spider");
    const VertexId v = s.vertices[0];
    if (dir == Direction::Forward) {
      require(d.self_loops(v) > 0, name(), "spider has no self-loop");
      d.remove_edge(v, v);
    } else {
      d.add_edge(v, v);
    }
  }

  RuleSample sample(std::mt19937_64& rng, Direction dir) const override {
    Diagram d;
    const VertexId v = d.add_spider(random_colour(rng), random_phase(rng));
    if (dir == Direction::Forward) d.add_edge(v, v, static_cast<std::size_t>(uniform(rng, 1, 2)));
    open_legs(d, v, uniform(rng, 0, 3), rng);
    return {d, Site{{v}}};
  }
};

// ---- HH: Hadamard cancellation ---------------------------------------------------------

class HadamardPairRule final : public RewriteRule {
 public:
  std::string_view name() const override { return "HH"; }

  std::vector<Site> matches(const Diagram& d, Direction dir) const override {
    std::vector<Site> out;
    if (dir == Direction::Reverse) {
      std::set<Edge> seen;
      for (const Edge& e : d.edges()) {
        if (e.a != e.b && seen.insert(e).second) out.push_back(Site{{}, {e}});
      }
      return out;
    }
    for (const auto& [h, vert] : d.vertices()) {
      if (vert.type != VertexType::H) continue;
      for (const auto& [n, m] : d.adjacency(h)) {
        if (n > h && d.type(n) == VertexType::H) out.push_back(Site{{h, n}});
      }
    }
    return out;
  }

  void rewrite(Diagram& d, const Site& s, Direction dir) const override {
    if (dir == Direction::Forward) {
      require(s.vertices.size() == 2, name(), "site needs two H-boxes");
      const VertexId h1 = s.vertices[0];
      const VertexId h2 = s.vertices[1];
      require(h1 != h2 && d.contains(h1) && d.contains(h2) && d.type(h1) == VertexType::H &&
                  d.type(h2) == VertexType::H && d.multiplicity(h1, h2) > 0,
              name(), "needs two adjacent H-boxes");
      if (d.multiplicity(h1, h2) == 2) {
        // A closed H-H loop is the non-zero scalar 2.
        d.remove_vertex(h1);
        d.remove_vertex(h2);
        return;
      }
      const VertexId n1 = far_end(d, h1, h2);
      const VertexId n2 = far_end(d, h2, h1);
      d.remove_vertex(h1);
      d.remove_vertex(h2);
      d.add_edge(n1, n2);
      return;
    }
    require(s.edges.size() == 1, name(), "site needs one edge");
    const Edge e = s.edges[0];
    require(e.a != e.b && d.contains(e.a) && d.contains(e.b) && d.multiplicity(e.a, e.b) > 0,
            name(), "edge not present");
    d.remove_edge(e.a, e.b);
    const VertexId h1 = d.add_hbox();
    const VertexId h2 = d.add_hbox();
    d.add_edge(e.a, h1);
    d.add_edge(h1, h2);
    d.add_edge(h2, e.b);
  }

  RuleSample sample(std::mt19937_64& rng, Direction dir) const override {
    Diagram d;
    if (dir == Direction::Forward) {
      const VertexId h1 = d.add_hbox();
      const VertexId h2 = d.add_hbox();
      if (uniform(rng, 0, 5) == 0) {
        d.add_edge(h1, h2, 2);
      } else {
        d.add_edge(h1, h2);
        open_leg(d, h1, rng);
        open_leg(d, h2, rng);
      }
      return {d, Site{{h1, h2}}};
    }
    const VertexId a = d.add_spider(random_colour(rng), random_phase(rng));
    const VertexId b = d.add_spider(random_colour(rng), random_phase(rng));
    d.add_edge(a, b);
    open_legs(d, a, uniform(rng, 0, 2), rng);
    open_legs(d, b, uniform(rng, 0, 2), rng);
    return {d, Site{{}, {Edge(a, b)}}};
  }
};

Diagram apply_named(std::string_view rule, const Diagram& d, const Site& s, Direction dir) {
  static const RuleLibrary lib = RuleLibrary::standard();
  return lib.get(rule).apply(d, s, dir);
}

}  // namespace

std::string_view to_string(Direction dir) {
  return dir == Direction::Forward ? "forward" : "reverse";
}

RuleLibrary RuleLibrary::standard() {
  RuleLibrary lib;
  lib.add(std::make_unique<FuseRule>());
  lib.add(std::make_unique<IdentityRule>());
  lib.add(std::make_unique<CompactRule>());
  lib.add(std::make_unique<CopyRule>());
  lib.add(std::make_unique<BialgebraRule>(false));
  lib.add(std::make_unique<BialgebraRule>(true));
  lib.add(std::make_unique<EulerHRule>());
  lib.add(std::make_unique<ColourChangeRule>());
  lib.add(std::make_unique<PiRule>());
  lib.add(std::make_unique<PiChainRule>());
  lib.add(std::make_unique<ColourSwapRule>());
  lib.add(std::make_unique<HopfRule>());
  lib.add(std::make_unique<HexagonRule>());
  lib.add(std::make_unique<CycleRule>());
  lib.add(std::make_unique<HadamardPairRule>());
  return lib;
}

void RuleLibrary::add(std::unique_ptr<RewriteRule> rule) {
  if (contains(rule->name())) {
    throw std::invalid_argument("duplicate rule " + std::string(rule->name()));
  }
  rules_.push_back(std::move(rule));
}

void RuleLibrary::replace(std::unique_ptr<RewriteRule> rule) {
  for (auto& r : rules_) {
    if (r->name() == rule->name()) {
      r = std::move(rule);
      return;
    }
  }
  throw std::out_of_range("no rule named " + std::string(rule->name()));
}

const RewriteRule& RuleLibrary::get(std::string_view name) const {
  for (const auto& r : rules_) {
    if (r->name() == name) return *r;
  }
  throw std::out_of_range("no rule named " + std::string(name));
}

bool RuleLibrary::contains(std::string_view name) const {
  return std::any_of(rules_.begin(), rules_.end(),
                     [&](const auto& r) { return r->name() == name; });
}

std::vector<std::string> RuleLibrary::names() const {
  std::vector<std::string> out;
  for (const auto& r : rules_) out.emplace_back(r->name());
  return out;
}

Diagram fuse_spiders(const Diagram& d, VertexId u, VertexId w) {
  return apply_named("S1", d, Site{{u, w}}, Direction::Forward);
}

Diagram remove_identity(const Diagram& d, VertexId v) {
  return apply_named("S2", d, Site{{v}}, Direction::Forward);
}

Diagram eliminate_hh(const Diagram& d, VertexId h1, VertexId h2) {
  return apply_named("HH", d, Site{{h1, h2}}, Direction::Forward);
}

Diagram color_change(const Diagram& d, VertexId v) {
  return apply_named("H2", d, Site{{v}}, Direction::Forward);
}

Diagram apply_hopf(const Diagram& d, VertexId u, VertexId w) {
  return apply_named("Hf", d, Site{{u, w}}, Direction::Forward);
}

Diagram apply_bialgebra(const Diagram& d, const Site& site, Direction dir) {
  bool small = false;
  if (dir == Direction::Forward) {
    small = site.vertices.size() == 2 &&
            std::all_of(site.vertices.begin(), site.vertices.end(), [&](VertexId v) {
              return d.contains(v) && d.degree(v) == 3;
            });
  } else {
    small = site.vertices.size() == 4 &&
            std::all_of(site.vertices.begin(), site.vertices.end(), [&](VertexId v) {
              return d.contains(v) && d.degree(v) == 3;
            });
  }
  return apply_named(small ? "B2" : "B2v", d, site, dir);
}

Diagram apply_copy(const Diagram& d, const Site& site, Direction dir) {
  return apply_named("B1", d, site, dir);
}

Diagram apply_pi(const Diagram& d, const Site& site, Direction dir) {
  return apply_named("N", d, site, dir);
}

Diagram apply_pi_chain(const Diagram& d, const Site& site, Direction dir) {
  return apply_named("Nv", d, site, dir);
}

Diagram apply_cycle(const Diagram& d, VertexId v, Direction dir) {
  return apply_named("Cy", d, Site{{v}}, dir);
}

Diagram apply_hexagon(const Diagram& d, const Site& site, Direction dir) {
  return apply_named("Hex", d, site, dir);
}

Diagram apply_euler_h(const Diagram& d, const Site& site, Direction dir) {
  return apply_named("H1", d, site, dir);
}

Diagram apply_p(const Diagram& d, const std::array<VertexId, 3>& chain) {
  const Site site{{chain[0], chain[1], chain[2]}};
  const bool zxz = d.contains(chain[0]) && d.type(chain[0]) == VertexType::Z;
  return apply_named("P", d, site, zxz ? Direction::Forward : Direction::Reverse);
}

}  // namespace zxq

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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

#include "zxq/semantics.hpp"

namespace zxq {

namespace {

// Dense tensor over 2-dimensional indices. Bit j of a data offset is the
// value of index labels[j].
struct Tensor {
  std::vector<int> labels;
  std::vector<Complex> data;
};

void check_size(std::size_t rank, const EvaluateOptions& options) {
  if (rank >= 63 || (std::size_t{1} << rank) > options.max_entries) {
    throw ResourceError("evaluate: tensor with " + std::to_string(rank) +
                        " open wires exceeds the configured cap of " +
                        std::to_string(options.max_entries) + " entries");
  }
}

Complex vertex_value(const Vertex& v, const std::vector<int>& leg_values) {
  const std::size_t d = leg_values.size();
  switch (v.type) {
    case VertexType::Z: {
      const Complex phase = std::polar(1.0, v.phase.to_radians());
      if (d == 0) return 1.0 + phase;
      const bool all0 = std::all_of(leg_values.begin(), leg_values.end(),
                                    [](int x) { return x == 0; });
      const bool all1 = std::all_of(leg_values.begin(), leg_values.end(),
                                    [](int x) { return x == 1; });
      if (all0) return 1.0;
      if (all1) return phase;
      return 0.0;
    }
    case VertexType::X: {
      const Complex phase = std::polar(1.0, v.phase.to_radians());
      int parity = 0;
      for (int x : leg_values) parity ^= x;
      const double norm = std::pow(2.0, -0.5 * static_cast<double>(d));
      return norm * (1.0 + (parity ? -phase : phase));
    }
    case VertexType::H: {
      const double s = 1.0 / std::sqrt(2.0);
      return (leg_values[0] & leg_values[1]) ? -s : s;
    }
    default:
      return 1.0;
  }
}

Tensor vertex_tensor(const Vertex& v, const std::vector<int>& legs,
                     const EvaluateOptions& options) {
  Tensor t;
  t.labels = legs;
  std::sort(t.labels.begin(), t.labels.end());
  t.labels.erase(std::unique(t.labels.begin(), t.labels.end()), t.labels.end());
  check_size(t.labels.size(), options);
  std::vector<std::size_t> position(legs.size());
  for (std::size_t k = 0; k < legs.size(); ++k) {
    position[k] = static_cast<std::size_t>(
        std::lower_bound(t.labels.begin(), t.labels.end(), legs[k]) - t.labels.begin());
  }
  const std::size_t n = std::size_t{1} << t.labels.size();
  t.data.resize(n);
  std::vector<int> values(legs.size());
  for (std::size_t bits = 0; bits < n; ++bits) {
    for (std::size_t k = 0; k < legs.size(); ++k) {
      values[k] = static_cast<int>((bits >> position[k]) & 1u);
    }
    t.data[bits] = vertex_value(v, values);
  }
  return t;
}

// Sums out index `label` (used for self-loops, which live inside one tensor).
Tensor trace_out(const Tensor& t, int label) {
  const auto it = std::find(t.labels.begin(), t.labels.end(), label);
  const std::size_t pos = static_cast<std::size_t>(it - t.labels.begin());
  Tensor r;
  r.labels = t.labels;
  r.labels.erase(r.labels.begin() + static_cast<std::ptrdiff_t>(pos));
  r.data.assign(t.data.size() / 2, Complex(0.0));
  const std::size_t low = (std::size_t{1} << pos) - 1;
  for (std::size_t bits = 0; bits < r.data.size(); ++bits) {
    const std::size_t base = (bits & low) | ((bits & ~low) << 1);
    r.data[bits] = t.data[base] + t.data[base | (std::size_t{1} << pos)];
  }
  return r;
}

// Offset table: for every assignment of `sub` (bit j = sub[j]) the offset
// contribution inside a tensor with labels `full`.
std::vector<std::size_t> offsets(const std::vector<int>& sub,
                                 const std::vector<int>& full) {
  std::vector<std::size_t> bit_of(sub.size(), 0);
  std::vector<bool> present(sub.size(), false);
  for (std::size_t j = 0; j < sub.size(); ++j) {
    auto it = std::find(full.begin(), full.end(), sub[j]);
    if (it != full.end()) {
      present[j] = true;
      bit_of[j] = static_cast<std::size_t>(it - full.begin());
    }
  }
  std::vector<std::size_t> table(std::size_t{1} << sub.size(), 0);
  for (std::size_t bits = 0; bits < table.size(); ++bits) {
    std::size_t off = 0;
    for (std::size_t j = 0; j < sub.size(); ++j) {
      if (present[j] && ((bits >> j) & 1u)) off |= std::size_t{1} << bit_of[j];
    }
    table[bits] = off;
  }
  return table;
}

Tensor contract(const Tensor& a, const Tensor& b, const EvaluateOptions& options) {
  std::vector<int> shared;
  std::vector<int> kept;
  for (int l : a.labels) {
    if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end()) {
      shared.push_back(l);
    } else {
      kept.push_back(l);
    }
  }
  for (int l : b.labels) {
    if (std::find(shared.begin(), shared.end(), l) == shared.end()) kept.push_back(l);
  }
  check_size(kept.size(), options);
  check_size(kept.size() + shared.size(), {options.max_entries * 16});

  const auto a_kept = offsets(kept, a.labels);
  const auto b_kept = offsets(kept, b.labels);
  const auto a_shared = offsets(shared, a.labels);
  const auto b_shared = offsets(shared, b.labels);

  Tensor r;
  r.labels = kept;
  r.data.assign(a_kept.size(), Complex(0.0));
  for (std::size_t o = 0; o < a_kept.size(); ++o) {
    Complex acc(0.0);
    for (std::size_t s = 0; s < a_shared.size(); ++s) {
      acc += a.data[a_kept[o] | a_shared[s]] * b.data[b_kept[o] | b_shared[s]];
    }
    r.data[o] = acc;
  }
  return r;
}

}  // namespace

ComplexMatrix evaluate(const Diagram& d, const EvaluateOptions& options) {
  const std::size_t n_in = d.inputs().size();
  const std::size_t n_out = d.outputs().size();
  check_size(n_in + n_out, options);

  // One index label per edge copy.
  std::map<VertexId, std::vector<int>> legs;
  int next_label = 0;
  for (const Edge& e : d.edges()) {
    legs[e.a].push_back(next_label);
    legs[e.b].push_back(next_label);
    ++next_label;
  }
  std::vector<int> owners(static_cast<std::size_t>(next_label), 0);
  for (const auto& [id, v] : d.vertices()) {
    if (is_boundary(v.type)) continue;
    for (int l : legs[id]) ++owners[static_cast<std::size_t>(l)];
  }

  std::vector<Tensor> tensors;
  for (const auto& [id, v] : d.vertices()) {
    if (is_boundary(v.type)) continue;
    Tensor t = vertex_tensor(v, legs[id], options);
    // A label seen only by this vertex, and by no boundary, is a self-loop.
    std::vector<int> loops;
    for (int l : t.labels) {
      if (owners[static_cast<std::size_t>(l)] == 2 &&
          std::count(legs[id].begin(), legs[id].end(), l) == 2) {
        loops.push_back(l);
      }
    }
    for (int l : loops) t = trace_out(t, l);
    tensors.push_back(std::move(t));
  }

  // Greedy pairwise contraction: always merge the sharing pair whose result
  // has the fewest open wires.
  std::vector<bool> alive(tensors.size(), true);
  std::size_t remaining = tensors.size();
  while (remaining > 1) {
    std::map<int, std::vector<std::size_t>> holders;
    for (std::size_t i = 0; i < tensors.size(); ++i) {
      if (!alive[i]) continue;
      for (int l : tensors[i].labels) holders[l].push_back(i);
    }
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    std::size_t best_rank = std::numeric_limits<std::size_t>::max();
    std::size_t best_work = std::numeric_limits<std::size_t>::max();
    for (const auto& [label, who] : holders) {
      if (who.size() != 2) continue;
      const Tensor& a = tensors[who[0]];
      const Tensor& b = tensors[who[1]];
      std::size_t shared = 0;
      for (int l : a.labels) {
        if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end()) ++shared;
      }
      const std::size_t rank = a.labels.size() + b.labels.size() - 2 * shared;
      const std::size_t work = a.labels.size() + b.labels.size() - shared;
      if (rank < best_rank || (rank == best_rank && work < best_work)) {
        best_rank = rank;
        best_work = work;
        best_i = who[0];
        best_j = who[1];
      }
    }
    if (best_rank == std::numeric_limits<std::size_t>::max()) {
      // Disconnected pieces: take outer products of the two smallest.
      std::vector<std::size_t> live;
      for (std::size_t i = 0; i < tensors.size(); ++i) {
        if (alive[i]) live.push_back(i);
      }
      std::sort(live.begin(), live.end(), [&](std::size_t x, std::size_t y) {
        return tensors[x].labels.size() < tensors[y].labels.size() ||
               (tensors[x].labels.size() == tensors[y].labels.size() && x < y);
      });
      best_i = std::min(live[0], live[1]);
      best_j = std::max(live[0], live[1]);
    }
    tensors[best_i] = contract(tensors[best_i], tensors[best_j], options);
    tensors[best_j] = Tensor{};
    alive[best_j] = false;
    --remaining;
  }

  Tensor result;
  result.data = {Complex(1.0)};
  for (std::size_t i = 0; i < tensors.size(); ++i) {
    if (alive[i]) result = std::move(tensors[i]);
  }

  auto boundary_label = [&](VertexId b) { return legs.at(b).front(); };
  std::vector<int> out_labels;
  std::vector<int> in_labels;
  for (VertexId o : d.outputs()) out_labels.push_back(boundary_label(o));
  for (VertexId i : d.inputs()) in_labels.push_back(boundary_label(i));

  const std::size_t rows = std::size_t{1} << n_out;
  const std::size_t cols = std::size_t{1} << n_in;
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(rows),
                                        static_cast<Eigen::Index>(cols));
  std::map<int, int> assignment;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      assignment.clear();
      bool consistent = true;
      auto assign = [&](int label, int value) {
        auto [it, inserted] = assignment.emplace(label, value);
        if (!inserted && it->second != value) consistent = false;
      };
      for (std::size_t k = 0; k < n_out; ++k) {
        assign(out_labels[k], static_cast<int>((r >> (n_out - 1 - k)) & 1u));
      }
      for (std::size_t k = 0; k < n_in; ++k) {
        assign(in_labels[k], static_cast<int>((c >> (n_in - 1 - k)) & 1u));
      }
      if (!consistent) continue;
      std::size_t offset = 0;
      for (std::size_t j = 0; j < result.labels.size(); ++j) {
        if (assignment.at(result.labels[j])) offset |= std::size_t{1} << j;
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = result.data[offset];
    }
  }
  return m;
}

ScalarVerdict equal_up_to_scalar(const ComplexMatrix& a, const ComplexMatrix& b,
                                 double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("equal_up_to_scalar: shape mismatch");
  }
  ScalarVerdict v;
  const double na = a.norm();
  const double nb = b.norm();
  const bool za = na <= kZeroNorm;
  const bool zb = nb <= kZeroNorm;
  if (za && zb) {
    v.equal = true;
    return v;
  }
  if (za || zb) {
    v.residual = 1.0;
    return v;
  }
  const Complex inner = (a.adjoint() * b).trace();  // <A,B>
  v.scalar = inner / (na * na);
  const ComplexMatrix an = a / na;
  const ComplexMatrix bn = b / nb;
  const Complex k = inner / (na * nb);
  v.residual = (bn - k * an).norm();
  v.equal = v.residual <= tol;
  return v;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return r;
}

std::string dump_matrix(const ComplexMatrix& m) {
  std::ostringstream out;
  char buf[96];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex z = m(i, j);
      const double re = z.real() == 0.0 ? 0.0 : z.real();
      const double im = z.imag() == 0.0 ? 0.0 : z.imag();
      std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
      if (j) out << '\t';
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace zxq

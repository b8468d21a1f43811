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

#include "oracle.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace zxq::testing {

ComplexMatrix brute_force_evaluate(const Diagram& d) {
  const std::vector<Edge> edges = d.edges();  // one entry per parallel copy
  if (edges.size() > 20) throw std::invalid_argument("oracle: too many edges");
  std::map<VertexId, std::vector<std::size_t>> incident;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].a].push_back(e);
    incident[edges[e].b].push_back(e);  // self-loops appear twice
  }
  const auto& ins = d.inputs();
  const auto& outs = d.outputs();
  ComplexMatrix m = ComplexMatrix::Zero(Eigen::Index(1) << outs.size(),
                                        Eigen::Index(1) << ins.size());
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << edges.size()); ++bits) {
    auto bit = [&](std::size_t e) { return static_cast<int>((bits >> e) & 1U); };
    Complex value = 1.0;
    for (const auto& [v, vert] : d.vertices()) {
      const auto& inc = incident[v];
      int ones = 0;
      for (std::size_t e : inc) ones += bit(e);
      const int deg = static_cast<int>(inc.size());
      const Complex phase = std::polar(1.0, vert.phase.to_radians());
      switch (vert.type) {
        case VertexType::Z:
          if (ones == 0) {
            value *= deg == 0 ? 1.0 + phase : Complex(1.0);
          } else if (ones == deg) {
            value *= phase;
          } else {
            value = 0.0;
          }
          break;
        case VertexType::X:
          value *= std::pow(2.0, -deg / 2.0) * (1.0 + phase * ((ones % 2) ? -1.0 : 1.0));
          break;
        case VertexType::H:
          value *= inv_sqrt2 * ((bit(inc[0]) && bit(inc[1])) ? -1.0 : 1.0);
          break;
        case VertexType::Input:
        case VertexType::Output:
          break;
      }
      if (value == 0.0) break;
    }
    if (value == 0.0) continue;
    Eigen::Index row = 0;
    Eigen::Index col = 0;
    for (VertexId o : outs) row = (row << 1) | bit(incident[o].front());
    for (VertexId i : ins) col = (col << 1) | bit(incident[i].front());
    m(row, col) += value;
  }
  return m;
}

ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(u(rng), u(rng));
  }
  return m;
}

double uniform_angle(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
}

}  // namespace zxq::testing

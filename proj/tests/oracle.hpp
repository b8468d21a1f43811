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

#include <random>

#include "zxq/diagram.hpp"
#include "zxq/semantics.hpp"

namespace zxq::testing {

/**
 * Reference evaluation by summing over every 0/1 assignment of the edges.
 * Each vertex contributes its tensor entry for the bits on its incident
 * edges; boundaries pin the bit of their edge to the row/column index.
 * Exponential in the edge count, so only for small diagrams.
 */
ComplexMatrix brute_force_evaluate(const Diagram& d);

/// Complex matrix with real and imaginary parts uniform in [-1, 1].
ComplexMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols);

double uniform_angle(std::mt19937_64& rng);

}  // namespace zxq::testing

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

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "zxq/diagram.hpp"
#include "zxq/gate.hpp"

namespace zxq {

using Complex = std::complex<double>;

/// Dense 2^m x 2^n matrix. Basis states are ordered with boundary port 0
/// (or qubit 0) as the most significant bit.
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultTolerance = 1e-9;
/// Frobenius norm at or below which an evaluated matrix counts as zero.
/// Cancelling diagrams leave rounding noise around 1e-16.
inline constexpr double kZeroNorm = 1e-12;

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvaluateOptions {
  /// Upper bound on the entries of any intermediate tensor and the result.
  std::size_t max_entries = std::size_t{1} << 20;
};

/**
 * Evaluates a diagram to its 2^outputs x 2^inputs matrix by contracting the
 * tensor network of its vertices. Spiders use the standard interpretation
 * |0..0><0..0| + e^{ia}|1..1><1..1| in their colour basis; X spiders are
 * Z spiders with a Hadamard on every leg.
 *
 * Throws ResourceError if a tensor would exceed options.max_entries.
 */
ComplexMatrix evaluate(const Diagram& d, const EvaluateOptions& options = {});

struct ScalarVerdict {
  bool equal = false;
  /// <A,B>/<A,A>, set whenever A != 0.
  std::optional<Complex> scalar;
  /// Scale-free distance: min over k of ||B/|B| - k A/|A|||_F.
  double residual = 0.0;
};

/// Equality up to a non-zero scalar. Two zero matrices (norm <= kZeroNorm)
/// are equal (no scalar);
/// exactly one zero matrix is never equal. Throws std::invalid_argument on a
/// shape mismatch.
ScalarVerdict equal_up_to_scalar(const ComplexMatrix& a, const ComplexMatrix& b,
                                 double tol = kDefaultTolerance);

/// Unitary of g acting on `width` qubits (qubit 0 most significant).
ComplexMatrix gate_matrix(const Gate& g, std::size_t width);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Rows of "re+imi" entries, tab separated, one row per line.
std::string dump_matrix(const ComplexMatrix& m);

}  // namespace zxq

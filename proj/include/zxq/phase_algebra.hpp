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

#include <stdexcept>
#include <string_view>

#include "zxq/phase.hpp"
#include "zxq/semantics.hpp"

namespace zxq {

/// Spider parameters taken as arbitrary complex numbers: a Z spider with
/// parameter a is diag(1, a), an X spider is [[1+a, 1-a], [1-a, 1+a]].
struct GeneralPhaseTriple {
  Complex a;
  Complex b;
  Complex c;
};

struct SwapIntermediates {
  Complex tau;
  Complex u;
  Complex v;
  Complex s;
  Complex t;
  /// The square root sqrt(T/S) actually used (after any sign flip).
  Complex rho;
};

struct SwapSolution {
  GeneralPhaseTriple out;
  Complex k;
  SwapIntermediates intermediates;
  /// Relative residual of the defining matrix identity.
  double residual = 0.0;
};

class SingularConfiguration : public std::runtime_error {
 public:
  enum class Reason { TZero, SZero, TauDegenerate };

  SingularConfiguration(Reason reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

std::string_view to_string(SingularConfiguration::Reason reason);

/// diag(1, a)
ComplexMatrix z_general(Complex a);
/// [[1+b, 1-b], [1-b, 1+b]]
ComplexMatrix x_general(Complex b);

/**
 * Solves X_{c2} Z_{b2} X_{a2} = k Z_{c1} X_{b1} Z_{a1} for (a2, b2, c2, k)
 * given (a1, b1, c1), in closed form. Rightmost factors act first.
 *
 * Throws SingularConfiguration when S or T vanish, or when S tau^2 + T
 * vanishes (the denominator tau - i sqrt(T/S) is then zero on one branch),
 * all relative to the magnitude of the inputs.
 */
SwapSolution generalized_color_swap(const GeneralPhaseTriple& in);

/// Relative residual ||X_{c2} Z_{b2} X_{a2} - k Z_{c1} X_{b1} Z_{a1}|| /
/// ||X_{c2} Z_{b2} X_{a2}||.
double color_swap_residual(const GeneralPhaseTriple& in, const GeneralPhaseTriple& out,
                           Complex k);

/// Three angles of a spider chain. alpha labels the spider acting first.
struct EulerTriple {
  Phase alpha;
  Phase beta;
  Phase gamma;
};

/// Z(gamma) X(beta) Z(alpha) with alpha acting first, unit-modulus phases.
ComplexMatrix zxz_matrix(double alpha, double beta, double gamma);
/// X(gamma) Z(beta) X(alpha) with alpha acting first.
ComplexMatrix xzx_matrix(double alpha, double beta, double gamma);
ComplexMatrix zxz_matrix(const EulerTriple& t);
ComplexMatrix xzx_matrix(const EulerTriple& t);

/**
 * Angles (alpha2, beta2, gamma2) of an X-Z-X chain proportional to the
 * Z-X-Z chain with angles `in`. Uses the closed-form argument formulas;
 * inputs where those are undefined (one of z, z1 vanishes, or beta1 = 0)
 * go through euler_xzx_extract instead. Outputs are approximate phases in
 * canonical gauge: gamma2 = 0 whenever beta2 is 0 or pi.
 */
EulerTriple p_rule_angles(const EulerTriple& in);

/**
 * X-Z-X Euler angles of an invertible 2x2 matrix, up to scalar, read off
 * the entries of H U H. beta lies in [0, pi]. Canonical gauge as above.
 * Throws std::invalid_argument for a non-invertible or non-2x2 input.
 */
EulerTriple euler_xzx_extract(const ComplexMatrix& u);

}  // namespace zxq

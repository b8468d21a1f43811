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

#include "zxq/phase_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace zxq {

namespace {

constexpr double kSingularRelative = 1e-12;
constexpr double kBranchTolerance = 1e-9;
constexpr Complex kI{0.0, 1.0};

ComplexMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix h(2, 2);
  h << s, s, s, -s;
  return h;
}

SwapSolution solve_branch(const GeneralPhaseTriple& in, const SwapIntermediates& im,
                          Complex rho) {
  SwapSolution sol;
  sol.intermediates = im;
  sol.intermediates.rho = rho;
  sol.out.a = -kI * (im.u + im.v) / rho;
  sol.out.c = -kI * (im.u - im.v) / rho;
  sol.out.b = (im.tau + kI * rho) / (im.tau - kI * rho);
  sol.k = 8.0 / (im.tau - kI * rho);
  sol.residual = color_swap_residual(in, sol.out, sol.k);
  return sol;
}

Phase angle(double radians) { return Phase::radians(normalize_angle(radians)); }

// beta in {0, pi}: the outer X rotations commute through, so fold gamma
// into alpha.
EulerTriple canonical(double alpha, double beta, double gamma) {
  if (angular_distance(beta, 0.0) <= kPhaseTolerance) {
    return {angle(alpha + gamma), angle(0.0), angle(0.0)};
  }
  if (angular_distance(beta, kPi) <= kPhaseTolerance) {
    return {angle(alpha - gamma), angle(kPi), angle(0.0)};
  }
  return {angle(alpha), angle(beta), angle(gamma)};
}

}  // namespace

std::string_view to_string(SingularConfiguration::Reason reason) {
  switch (reason) {
    case SingularConfiguration::Reason::TZero: return "T=0";
    case SingularConfiguration::Reason::SZero: return "S=0";
    case SingularConfiguration::Reason::TauDegenerate: return "tau-degenerate";
  }
  return "?";
}

ComplexMatrix z_general(Complex a) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = a;
  return m;
}

ComplexMatrix x_general(Complex b) {
  ComplexMatrix m(2, 2);
  m << 1.0 + b, 1.0 - b, 1.0 - b, 1.0 + b;
  return m;
}

double color_swap_residual(const GeneralPhaseTriple& in, const GeneralPhaseTriple& out,
                           Complex k) {
  const ComplexMatrix lhs = x_general(out.c) * z_general(out.b) * x_general(out.a);
  const ComplexMatrix rhs = k * (z_general(in.c) * x_general(in.b) * z_general(in.a));
  const double scale = std::max(lhs.norm(), rhs.norm());
  if (scale == 0.0) return 0.0;
  return (lhs - rhs).norm() / scale;
}

SwapSolution generalized_color_swap(const GeneralPhaseTriple& in) {
  const Complex a = in.a;
  const Complex b = in.b;
  const Complex c = in.c;
  SwapIntermediates im;
  im.tau = (1.0 - b) * (a + c) + (1.0 + b) * (1.0 + a * c);
  im.u = (1.0 + b) * (a * c - 1.0);
  im.v = (1.0 - b) * (a - c);
  im.s = (1.0 - b) * (a + c) - (1.0 + b) * (1.0 + a * c);
  im.t = im.tau * (im.u * im.u - im.v * im.v);

  // S is cubic and T of degree nine in the inputs.
  const double m = std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
  const double m3 = m * m * m;
  const double m9 = m3 * m3 * m3;
  using Reason = SingularConfiguration::Reason;
  if (std::abs(im.s) < kSingularRelative * m3) {
    throw SingularConfiguration(Reason::SZero, "generalized_color_swap: S = 0");
  }
  if (std::abs(im.t) < kSingularRelative * m9) {
    throw SingularConfiguration(Reason::TZero, "generalized_color_swap: T = 0");
  }
  if (std::abs(im.s * im.tau * im.tau + im.t) < kSingularRelative * m9) {
    throw SingularConfiguration(Reason::TauDegenerate,
                                "generalized_color_swap: S tau^2 + T = 0");
  }

  const Complex rho = std::sqrt(im.t / im.s);
  SwapSolution best = solve_branch(in, im, rho);
  if (best.residual > kBranchTolerance) {
    SwapSolution other = solve_branch(in, im, -rho);
    if (other.residual < best.residual) best = other;
  }
  if (!std::isfinite(best.residual) || best.residual > kBranchTolerance) {
    throw SingularConfiguration(Reason::TauDegenerate,
                                "generalized_color_swap: ill-conditioned input");
  }
  return best;
}

ComplexMatrix zxz_matrix(double alpha, double beta, double gamma) {
  const ComplexMatrix h = hadamard();
  const ComplexMatrix xb = h * z_general(std::polar(1.0, beta)) * h;
  return z_general(std::polar(1.0, gamma)) * xb * z_general(std::polar(1.0, alpha));
}

ComplexMatrix xzx_matrix(double alpha, double beta, double gamma) {
  const ComplexMatrix h = hadamard();
  return h * zxz_matrix(alpha, beta, gamma) * h;
}

ComplexMatrix zxz_matrix(const EulerTriple& t) {
  return zxz_matrix(t.alpha.to_radians(), t.beta.to_radians(), t.gamma.to_radians());
}

ComplexMatrix xzx_matrix(const EulerTriple& t) {
  return xzx_matrix(t.alpha.to_radians(), t.beta.to_radians(), t.gamma.to_radians());
}

EulerTriple p_rule_angles(const EulerTriple& in) {
  const double a = in.alpha.to_radians();
  const double b = in.beta.to_radians();
  const double g = in.gamma.to_radians();
  const Complex z{std::cos(b / 2) * std::cos((a + g) / 2),
                  std::sin(b / 2) * std::cos((a - g) / 2)};
  const Complex z1{std::cos(b / 2) * std::sin((a + g) / 2),
                   -std::sin(b / 2) * std::sin((a - g) / 2)};
  if (std::abs(z) < kSingularRelative || std::abs(z1) < kSingularRelative ||
      angular_distance(b, 0.0) < kSingularRelative) {
    return euler_xzx_extract(zxz_matrix(a, b, g));
  }
  const double alpha2 = std::arg(z) + std::arg(z1);
  const double gamma2 = std::arg(z) - std::arg(z1);
  const double beta2 = 2.0 * std::arg(Complex(std::abs(z / z1), 1.0));
  return canonical(alpha2, beta2, gamma2);
}

EulerTriple euler_xzx_extract(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw std::invalid_argument("euler_xzx_extract: expected a 2x2 matrix");
  }
  const double scale = u.squaredNorm();
  if (scale == 0.0 || std::abs(u.determinant()) <= 1e-12 * scale) {
    throw std::invalid_argument("euler_xzx_extract: matrix is not invertible");
  }
  // H U H is proportional to Z(gamma) X(beta) Z(alpha).
  const ComplexMatrix h = hadamard();
  const ComplexMatrix w = h * u * h;
  const double beta = 2.0 * std::atan2(std::abs(w(0, 1)), std::abs(w(0, 0)));
  if (angular_distance(beta, 0.0) <= kPhaseTolerance) {
    return canonical(std::arg(w(1, 1) / w(0, 0)), 0.0, 0.0);
  }
  if (angular_distance(beta, kPi) <= kPhaseTolerance) {
    return canonical(std::arg(w(0, 1) / w(1, 0)), kPi, 0.0);
  }
  const double alpha = std::arg(w(0, 1) / w(0, 0)) + kPi / 2;
  const double gamma = std::arg(w(1, 0) / w(0, 0)) + kPi / 2;
  return canonical(alpha, beta, gamma);
}

}  // namespace zxq

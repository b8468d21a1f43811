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

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zxq {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default absolute tolerance for comparing approximate phases (mod 2pi).
inline constexpr double kPhaseTolerance = 1e-9;

class PhaseParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A spider phase. Either an exact rational multiple of pi, stored as
 * num/den with 0 <= num < 2*den and gcd(num, den) = 1, or an approximate
 * angle in radians stored in [0, 2pi).
 */
class Phase {
 public:
  /// Exact zero.
  Phase() = default;

  static Phase exact(std::int64_t numerator, std::int64_t denominator);
  static Phase radians(double value);

  /// Parses "p/d" or "p" (units of pi) or "f:<float>" (radians).
  static Phase parse(std::string_view text);

  bool is_exact() const { return exact_; }
  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  double to_radians() const;

  bool is_zero() const { return exact_ && num_ == 0; }
  /// Exact multiple of pi/4.
  bool is_clifford_t() const { return exact_ && 4 % den_ == 0; }
  /// Exact 0 or pi.
  bool is_pauli() const { return exact_ && den_ == 1; }

  Phase operator+(const Phase& other) const;
  Phase operator-() const;
  Phase operator-(const Phase& other) const { return *this + (-other); }
  Phase& operator+=(const Phase& other) { return *this = *this + other; }

  /// Representation-level equality: exact values compare exactly,
  /// approximate values compare bit-for-bit.
  bool operator==(const Phase& other) const = default;

  /// Semantic comparison of the angles mod 2pi with absolute tolerance.
  bool approx_equal(const Phase& other, double tol = kPhaseTolerance) const;

  /// Inverse of parse(): "0", "1", "1/4", "7/4", or "f:<radians>".
  std::string to_string() const;

 private:
  bool exact_ = true;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double rad_ = 0.0;
};

/// Distance between two angles on the circle, in [0, pi].
double angular_distance(double a, double b);

/// Reduces an angle into [0, 2pi).
double normalize_angle(double radians);

}  // namespace zxq

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

#include "zxq/phase.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

namespace zxq {

namespace {

// Denominators beyond this fall back to approximate arithmetic so that
// numerator arithmetic cannot overflow.
constexpr std::int64_t kMaxDenominator = std::int64_t{1} << 30;

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw PhaseParseError("invalid phase '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

double normalize_angle(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double angular_distance(double a, double b) {
  double d = normalize_angle(a - b);
  return d > kPi ? kTwoPi - d : d;
}

Phase Phase::exact(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) {
    throw std::invalid_argument("phase denominator must be positive");
  }
  if (denominator > kMaxDenominator) {
    return radians(kPi * static_cast<double>(numerator) /
                   static_cast<double>(denominator));
  }
  const std::int64_t period = 2 * denominator;
  std::int64_t num = numerator % period;
  if (num < 0) num += period;
  Phase p;
  if (num == 0) return p;
  const std::int64_t g = std::gcd(num, denominator);
  p.num_ = num / g;
  p.den_ = denominator / g;
  return p;
}

Phase Phase::radians(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("phase must be finite");
  }
  Phase p;
  p.exact_ = false;
  p.num_ = 0;
  p.den_ = 1;
  p.rad_ = normalize_angle(value);
  return p;
}

double Phase::to_radians() const {
  if (!exact_) return rad_;
  return kPi * static_cast<double>(num_) / static_cast<double>(den_);
}

Phase Phase::operator+(const Phase& other) const {
  if (exact_ && other.exact_) {
    const std::int64_t l = std::lcm(den_, other.den_);
    if (l <= kMaxDenominator) {
      return exact(num_ * (l / den_) + other.num_ * (l / other.den_), l);
    }
  }
  return radians(to_radians() + other.to_radians());
}

Phase Phase::operator-() const {
  if (exact_) return exact(-num_, den_);
  return radians(-rad_);
}

bool Phase::approx_equal(const Phase& other, double tol) const {
  if (exact_ && other.exact_) return num_ == other.num_ && den_ == other.den_;
  return angular_distance(to_radians(), other.to_radians()) <= tol;
}

std::string Phase::to_string() const {
  if (exact_) {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  std::ostringstream out;
  out.precision(17);
  out << "f:" << rad_;
  return out.str();
}

Phase Phase::parse(std::string_view text) {
  if (text.starts_with("f:")) {
    const std::string body(text.substr(2));
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(body, &used);
    } catch (const std::exception&) {
      throw PhaseParseError("invalid phase '" + std::string(text) + "'");
    }
    if (used != body.size() || !std::isfinite(value)) {
      throw PhaseParseError("invalid phase '" + std::string(text) + "'");
    }
    return radians(value);
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return exact(parse_int(text, text), 1);
  }
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den <= 0) {
    throw PhaseParseError("phase denominator must be positive in '" +
                          std::string(text) + "'");
  }
  return exact(num, den);
}

}  // namespace zxq

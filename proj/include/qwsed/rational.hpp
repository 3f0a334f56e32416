// Copyright 2026 The qwsed Authors
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

#ifndef QWSED_RATIONAL_HPP_
#define QWSED_RATIONAL_HPP_

#include <cstdint>
#include <optional>

namespace qwsed {

struct Rational {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// First continued-fraction convergent p/q of x with q <= max_den and
// |x - p/q| <= tol, if any.
std::optional<Rational> rational_approximation(double x, long long max_den, double tol);

// 2-adic valuation. nu2(0) is defined as kNu2Infinity.
inline constexpr int kNu2Infinity = 1 << 20;
int nu2(long long b);

// lcm that returns nullopt instead of exceeding cap.
std::optional<long long> bounded_lcm(long long a, long long b, long long cap);

// Nearest integer to x when |x - round(x)| <= tol.
std::optional<long long> as_integer(double x, double tol);

}  // namespace qwsed

#endif  // QWSED_RATIONAL_HPP_

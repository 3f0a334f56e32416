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

#include "qwsed/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace qwsed {

std::optional<Rational> rational_approximation(double x, long long max_den, double tol) {
  if (!std::isfinite(x) || std::abs(x) > 9e15) return std::nullopt;
  // Convergents h_k / k_k of the continued fraction of x.
  long long h_prev = 1, h = static_cast<long long>(std::floor(x));
  long long k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tol) {
      return Rational{h, k};
    }
    if (frac < 1e-18) break;
    const double inv = 1.0 / frac;
    if (inv > 9e15) break;
    const auto a = static_cast<long long>(std::floor(inv));
    frac = inv - std::floor(inv);
    const long double h_next = static_cast<long double>(a) * h + h_prev;
    const long double k_next = static_cast<long double>(a) * k + k_prev;
    if (k_next > static_cast<long double>(max_den) || std::abs(h_next) > 9e15L) break;
    h_prev = h;
    k_prev = k;
    h = static_cast<long long>(h_next);
    k = static_cast<long long>(k_next);
  }
  return std::nullopt;
}

int nu2(long long b) {
  if (b == 0) return kNu2Infinity;
  unsigned long long u = b < 0 ? 0ull - static_cast<unsigned long long>(b)
                               : static_cast<unsigned long long>(b);
  int e = 0;
  while ((u & 1ull) == 0) {
    u >>= 1;
    ++e;
  }
  return e;
}

std::optional<long long> bounded_lcm(long long a, long long b, long long cap) {
  if (a <= 0 || b <= 0) return std::nullopt;
  const long long g = std::gcd(a, b);
  const long long step = a / g;
  if (step > cap / b) return std::nullopt;
  const long long l = step * b;
  if (l > cap) return std::nullopt;
  return l;
}

std::optional<long long> as_integer(double x, double tol) {
  if (!std::isfinite(x) || std::abs(x) > 9e15) return std::nullopt;
  const double r = std::round(x);
  if (std::abs(x - r) > tol) return std::nullopt;
  return static_cast<long long>(r);
}

}  // namespace qwsed

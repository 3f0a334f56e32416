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

#include "qwsed/lattice.hpp"

#include <cstdlib>
#include <utility>

#include "qwsed/error.hpp"

namespace qwsed {

namespace {

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw NumericalError("integer overflow in lattice reduction");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw NumericalError("integer overflow in lattice reduction");
  return r;
}

// x a + y b = g = gcd(a, b) >= 0.
void extended_gcd(long long a, long long b, long long& g, long long& x, long long& y) {
  long long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const long long q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  x = old_s;
  y = old_t;
}

// Column ops on the stacked matrix rows (A over U).
void combine(IntMatrix& m, std::size_t p, std::size_t c, long long x, long long y, long long u,
             long long v) {
  // col_p <- x col_p + y col_c ; col_c <- u col_p + v col_c
  for (auto& row : m) {
    const long long cp = row[p];
    const long long cc = row[c];
    row[p] = checked_add(checked_mul(x, cp), checked_mul(y, cc));
    row[c] = checked_add(checked_mul(u, cp), checked_mul(v, cc));
  }
}

}  // namespace

std::vector<std::vector<long long>> integer_kernel_basis(const IntMatrix& a) {
  if (a.empty()) return {};
  const std::size_t k = a.size();
  const std::size_t r = a.front().size();
  IntMatrix m = a;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<long long> row(r, 0);
    row[i] = 1;
    m.push_back(std::move(row));
  }
  std::size_t p = 0;
  for (std::size_t i = 0; i < k && p < r; ++i) {
    for (std::size_t c = p + 1; c < r; ++c) {
      if (m[i][c] == 0) continue;
      if (m[i][p] == 0) {
        for (auto& row : m) std::swap(row[p], row[c]);
        continue;
      }
      long long g = 0, x = 0, y = 0;
      extended_gcd(m[i][p], m[i][c], g, x, y);
      combine(m, p, c, x, y, -(m[i][c] / g), m[i][p] / g);
    }
    if (m[i][p] != 0) ++p;
  }
  std::vector<std::vector<long long>> basis;
  for (std::size_t c = p; c < r; ++c) {
    std::vector<long long> v(r);
    for (std::size_t j = 0; j < r; ++j) v[j] = m[k + j][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qwsed

// Copyright 2026 The rankindep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rankindep/hoeffding.hpp"

#include <string>

#include "rankindep/error.hpp"
#include "rankindep/sum_array.hpp"

namespace rankindep {

namespace {

// Calls visit(a, b, c, d) for each position in order. Only c is read from the
// tree; the other three follow from the position and the value:
//   a + c = i - 1,  a + b = n - pi(i),  c + d = pi(i) - 1.
template <class Visit>
void sweep_quadrants(const Permutation& p, Visit&& visit) {
  const std::size_t n = p.size();
  BasicSumArray<std::uint32_t> seen(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t y = p(i);
    const auto c = static_cast<std::int64_t>(seen.prefix_sum(y));
    const std::int64_t a = static_cast<std::int64_t>(i - 1) - c;
    const std::int64_t b = static_cast<std::int64_t>(n - y) - a;
    const std::int64_t d = static_cast<std::int64_t>(y - 1) - c;
    seen.add(y, 1);
    visit(a, b, c, d);
  }
}

}  // namespace

QuadrantCounts quadrant_counts(const Permutation& p) {
  QuadrantCounts q;
  const std::size_t n = p.size();
  q.a.reserve(n);
  q.b.reserve(n);
  q.c.reserve(n);
  q.d.reserve(n);
  sweep_quadrants(p, [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    q.a.push_back(a);
    q.b.push_back(b);
    q.c.push_back(c);
    q.d.push_back(d);
  });
  return q;
}

wide_int hoeffding_d_numerator(const Permutation& p) {
  wide_int sum = 0;
  sweep_quadrants(p, [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    // Each pair product is below n^2 < 2^62; the cross products need 128 bits.
    sum += static_cast<wide_int>(a * (a - 1)) * (d * (d - 1));
    sum += static_cast<wide_int>(b * (b - 1)) * (c * (c - 1));
    sum -= 2 * static_cast<wide_int>(a * b) * (c * d);
  });
  return sum;
}

double hoeffding_d(const Permutation& p) {
  const std::size_t n = p.size();
  if (n < 5) {
    throw Error(Errc::sample_too_small,
                "Hoeffding's D needs n >= 5, got n = " + std::to_string(n));
  }
  const double nd = static_cast<double>(n);
  const double denominator = nd * (nd - 1) * (nd - 2) * (nd - 3) * (nd - 4);
  return static_cast<double>(hoeffding_d_numerator(p)) / denominator;
}

wide_int bkr_b_numerator(const Permutation& p) {
  wide_int sum = 0;
  sweep_quadrants(p, [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    const wide_int diff = static_cast<wide_int>(a * d) - static_cast<wide_int>(b * c);
    sum += diff * diff;
  });
  return sum;
}

double bkr_b(const Permutation& p) {
  const double nd = static_cast<double>(p.size());
  return static_cast<double>(bkr_b_numerator(p)) / (nd * nd * nd * nd * nd);
}

}  // namespace rankindep

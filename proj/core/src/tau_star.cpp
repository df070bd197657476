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

#include "rankindep/tau_star.hpp"

#include <cstdint>
#include <future>
#include <string>

#include "rankindep/error.hpp"
#include "rankindep/hoeffding.hpp"
#include "rankindep/sum_array.hpp"

namespace rankindep {

namespace {

// Cells of the up-down array hold counts of 132/231 occurrences ending at one
// position (< n^2), but its sums reach C(n,3). Below this size C(n,3) < 2^63.
constexpr std::size_t kNarrowUdLimit = 3'000'000;

// How many iterations ahead the tree paths are prefetched.
constexpr std::size_t kLookahead = 8;

// The four sum-arrays of a quad pass, indexed by value y:
//   seen[y]     = 1 iff y = pi(x') for an earlier position x'
//   up[y]       = #12 ending at pi^-1(y)
//   down[y]     = #21 ending at pi^-1(y)
//   up_down[y]  = #132 + #231 ending at pi^-1(y)
// They are always read and written at the same index, so they share one tree
// and each step costs one prefix walk and one update walk.
template <class UdValue>
struct QuadLanes {
  std::int64_t seen = 0;
  std::int64_t up = 0;
  std::int64_t down = 0;
  UdValue up_down = 0;

  QuadLanes& operator+=(const QuadLanes& o) noexcept {
    seen += o.seen;
    up += o.up;
    down += o.down;
    up_down += o.up_down;
    return *this;
  }
  QuadLanes& operator-=(const QuadLanes& o) noexcept {
    seen -= o.seen;
    up -= o.up;
    down -= o.down;
    up_down -= o.up_down;
    return *this;
  }
  friend QuadLanes operator-(QuadLanes a, const QuadLanes& b) noexcept { return a -= b; }
};

template <class UdValue>
wide_int quad_pass(const Permutation& p) {
  using Lanes = QuadLanes<UdValue>;
  const std::size_t n = p.size();
  BasicSumArray<Lanes> arrays(n);

  wide_int total = 0;
  for (std::size_t x = 1; x <= n; ++x) {
    const std::size_t y = p(x);
    if (x + kLookahead <= n) arrays.prefetch(p(x + kLookahead));
    // Cell y is still empty, so prefix_sum(y) equals prefix_sum(y - 1),
    // total - prefix_sum(y) is the suffix sum from y, and the assignment
    // below is an add.
    const Lanes below = arrays.prefix_sum(y);
    const Lanes above = arrays.total() - below;

    const std::int64_t n_u = below.seen;
    const std::int64_t n_d = above.seen;
    const std::int64_t n_du = below.down;
    const std::int64_t n_ud = above.up;
    const wide_int n_udu = below.up_down;

    arrays.add(y, Lanes{1, n_u, n_d, static_cast<UdValue>(n_ud)});

    const wide_int delta = 2 * n_udu - static_cast<wide_int>(n_du) * n_d -
                           static_cast<wide_int>(n_ud) * n_u +
                           static_cast<wide_int>(static_cast<std::int64_t>(x) - 2) * n_u * n_d;
    total += delta;
  }
  return total;
}

}  // namespace

wide_int quad(const Permutation& p) {
  if (p.size() <= kNarrowUdLimit) {
    return quad_pass<std::int64_t>(p);
  }
  return quad_pass<wide_int>(p);
}

wide_int choose4(std::size_t n) {
  if (n < 4) return 0;
  const wide_int m = static_cast<wide_int>(n);
  return m * (m - 1) * (m - 2) * (m - 3) / 24;
}

wide_int discordant_count(const Permutation& p, Execution exec) {
  const Permutation inv = inverse(p);
  wide_int sum = 0;
  if (exec == Execution::parallel) {
    auto f1 = std::async(std::launch::async, [&] { return quad(reverse(p)); });
    auto f2 = std::async(std::launch::async, [&] { return quad(inv); });
    auto f3 = std::async(std::launch::async, [&] { return quad(reverse(inv)); });
    sum = quad(p);
    sum += f1.get();
    sum += f2.get();
    sum += f3.get();
  } else {
    sum = quad(p);
    sum += quad(reverse(p));
    sum += quad(inv);
    sum += quad(reverse(inv));
  }
  return sum / 4;
}

double tau_star(const Permutation& p, Execution exec) {
  const std::size_t n = p.size();
  if (n < 4) {
    throw Error(Errc::sample_too_small, "tau* needs n >= 4, got n = " + std::to_string(n));
  }
  const wide_int quadruples = choose4(n);
  const wide_int discordant = discordant_count(p, exec);
  // 2/3 - discordant / C(n,4), with one rounding at the end.
  return static_cast<double>(2 * quadruples - 3 * discordant) /
         static_cast<double>(3 * quadruples);
}

double t_statistic(const Permutation& p, Execution exec) { return tau_star(p, exec) / 12.0; }

double refined_r(const Permutation& p, Execution exec) {
  const std::size_t n = p.size();
  if (n < 5) {
    throw Error(Errc::sample_too_small,
                "refined statistic needs n >= 5, got n = " + std::to_string(n));
  }
  return (t_statistic(p, exec) - hoeffding_d(p)) / 2.0;
}

}  // namespace rankindep

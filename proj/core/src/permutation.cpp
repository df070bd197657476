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

#include "rankindep/permutation.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "rankindep/error.hpp"

namespace rankindep {

Permutation Permutation::from_one_line(std::vector<value_type> entries) {
  const std::size_t n = entries.size();
  if (n == 0) {
    throw Error(Errc::invalid_permutation, "permutation must have at least one entry");
  }
  if (n > std::numeric_limits<value_type>::max()) {
    throw Error(Errc::invalid_permutation, "permutation too long");
  }
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    const value_type v = entries[i];
    if (v < 1 || v > n || seen[v]) {
      throw Error(Errc::invalid_permutation,
                  "entry " + std::to_string(v) + " at position " + std::to_string(i + 1) +
                      " breaks the bijection on {1.." + std::to_string(n) + "}",
                  i);
    }
    seen[v] = true;
  }
  return Permutation(std::move(entries));
}

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) {
    throw Error(Errc::invalid_permutation, "permutation must have at least one entry");
  }
  std::vector<value_type> entries(n);
  std::iota(entries.begin(), entries.end(), value_type{1});
  return Permutation(std::move(entries));
}

Permutation inverse(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<Permutation::value_type> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    q[p.entries_[i] - 1] = static_cast<Permutation::value_type>(i + 1);
  }
  return Permutation(std::move(q));
}

Permutation reverse(const Permutation& p) {
  return Permutation(std::vector<Permutation::value_type>(p.entries_.rbegin(), p.entries_.rend()));
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(p(i));
  }
  return out;
}

namespace {

// rank[i] in 1..n for every sample, by ascending value. `tiebreak` is either
// empty (ties are errors) or a random strict order used as a secondary key.
std::vector<Permutation::value_type> dense_ranks(std::span<const double> values,
                                                 std::span<const std::uint32_t> tiebreak) {
  const std::size_t n = values.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  if (tiebreak.empty()) {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return values[a] < values[b]; });
    for (std::size_t k = 1; k < n; ++k) {
      if (values[order[k - 1]] == values[order[k]]) {
        const auto i = std::min(order[k - 1], order[k]);
        const auto j = std::max(order[k - 1], order[k]);
        throw Error(Errc::ties_present,
                    "tied values at samples " + std::to_string(i) + " and " + std::to_string(j), i,
                    j);
      }
    }
  } else {
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (values[a] != values[b]) return values[a] < values[b];
      return tiebreak[a] < tiebreak[b];
    });
  }
  std::vector<Permutation::value_type> rank(n);
  for (std::size_t k = 0; k < n; ++k) {
    rank[order[k]] = static_cast<Permutation::value_type>(k + 1);
  }
  return rank;
}

std::vector<std::uint32_t> random_tiebreak(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> key(n);
  std::iota(key.begin(), key.end(), 0U);
  std::shuffle(key.begin(), key.end(), rng);
  return key;
}

}  // namespace

Permutation rank_permutation(std::span<const double> xs, std::span<const double> ys,
                             TiePolicy policy) {
  if (xs.size() != ys.size()) {
    throw Error(Errc::length_mismatch, "xs has " + std::to_string(xs.size()) +
                                           " values but ys has " + std::to_string(ys.size()));
  }
  const std::size_t n = xs.size();
  if (n == 0) {
    throw Error(Errc::zero_size, "cannot rank an empty sample");
  }
  if (n > std::numeric_limits<Permutation::value_type>::max()) {
    throw Error(Errc::invalid_argument, "sample too large to rank");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      throw Error(Errc::non_finite_value, "non-finite value at sample " + std::to_string(i), i);
    }
  }

  std::vector<Permutation::value_type> rx, ry;
  if (policy.mode == TiePolicy::Mode::error) {
    rx = dense_ranks(xs, {});
    ry = dense_ranks(ys, {});
  } else {
    std::mt19937_64 rng(policy.seed);
    const auto kx = random_tiebreak(n, rng);
    const auto ky = random_tiebreak(n, rng);
    rx = dense_ranks(xs, kx);
    ry = dense_ranks(ys, ky);
  }

  std::vector<Permutation::value_type> pi(n);
  for (std::size_t i = 0; i < n; ++i) {
    pi[rx[i] - 1] = ry[i];
  }
  return Permutation::from_one_line(std::move(pi));
}

}  // namespace rankindep

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

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace rankindep {

/// A bijection on {1..n}, stored in one-line notation pi(1) ... pi(n).
///
/// This is the joint-rank summary of a paired sample: position i holds the
/// y-rank of the point whose x-rank is i. Every statistic in the library is a
/// function of a Permutation alone.
class Permutation {
 public:
  using value_type = std::uint32_t;

  /// Validates that `entries` is a bijection on {1..n} with n >= 1.
  /// Throws Error(INVALID_PERMUTATION) otherwise.
  static Permutation from_one_line(std::vector<value_type> entries);

  static Permutation identity(std::size_t n);

  /// Uniformly random element of S_n.
  template <class Urbg>
  static Permutation random(std::size_t n, Urbg& rng) {
    Permutation p = identity(n);
    std::shuffle(p.entries_.begin(), p.entries_.end(), rng);
    return p;
  }

  std::size_t size() const noexcept { return entries_.size(); }

  /// pi(position), 1-based on both sides.
  value_type operator()(std::size_t position) const noexcept { return entries_[position - 1]; }

  std::span<const value_type> one_line() const noexcept { return entries_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  friend Permutation inverse(const Permutation& p);
  friend Permutation reverse(const Permutation& p);

  explicit Permutation(std::vector<value_type> entries) : entries_(std::move(entries)) {}

  std::vector<value_type> entries_;
};

/// q with q(p(i)) = i.
Permutation inverse(const Permutation& p);

/// q with q(i) = p(n + 1 - i).
Permutation reverse(const Permutation& p);

/// "1 3 2 4"
std::string to_string(const Permutation& p);

/// How rank_permutation treats equal values within a column.
struct TiePolicy {
  enum class Mode { error, random };

  Mode mode = Mode::error;
  std::uint64_t seed = 0;

  static TiePolicy error() noexcept { return {}; }
  static TiePolicy random(std::uint64_t seed) noexcept { return {Mode::random, seed}; }
};

/// Ranking permutation of a paired sample: pi(rank x_i) = rank y_i.
///
/// Rejects unequal lengths (LENGTH_MISMATCH), empty input (ZERO_SIZE), NaN or
/// infinite entries (NON_FINITE_VALUE, with the offending index) and, under
/// TiePolicy::error, duplicate values in either column (TIES_PRESENT, with the
/// first tied pair in sorted order). Under TiePolicy::random, tied values are
/// put in a uniformly random strict order drawn from the seed.
Permutation rank_permutation(std::span<const double> xs, std::span<const double> ys,
                             TiePolicy policy = TiePolicy::error());

}  // namespace rankindep

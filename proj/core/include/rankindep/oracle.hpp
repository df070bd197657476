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

#include <cstdint>
#include <span>
#include <vector>

#include "rankindep/permutation.hpp"

// Brute-force reference implementations. They enumerate k-subsets directly
// and share nothing with the sum-array code paths, which makes them suitable
// as test oracles. Size guards throw TOO_LARGE_FOR_ORACLE instead of
// truncating.
namespace rankindep::oracle {

inline constexpr std::size_t kMaxQuadrupleOracleSize = 200;
inline constexpr std::size_t kMaxQuintupleOracleSize = 60;

/// Concordant and discordant elements of S_4, in lexicographic order.
struct PatternClass {
  std::vector<Permutation> concordant;
  std::vector<Permutation> discordant;
};

const PatternClass& pattern_class();

bool is_concordant(const Permutation& sigma);

/// The order-isomorphic pattern of p restricted to `positions` (1-based,
/// strictly increasing).
Permutation pattern_of(const Permutation& p, std::span<const std::size_t> positions);

/// #sigma(p): k-subsets of positions inducing sigma, by full enumeration.
std::uint64_t count_pattern(const Permutation& p, const Permutation& sigma);

/// 12 T_n from the concordant/discordant classification of every 4-subset.
/// 4 <= n <= 200.
double tau_star_bruteforce(const Permutation& p);

/// The eleven-term 4-pattern combination that a single quad pass computes,
/// evaluated by enumeration. n <= 200.
std::int64_t quad_pattern_combination(const Permutation& p);

/// The 5-patterns with middle entry 3 that enter the D_n kernel with
/// weight +4 (8 of them) and -2 (16 of them).
struct HoeffdingKernelPatterns {
  std::vector<Permutation> added;
  std::vector<Permutation> subtracted;
};

const HoeffdingKernelPatterns& hoeffding_kernel_patterns();

/// The 5-pattern sum (4 x added - 2 x subtracted) without the denominator.
std::int64_t hoeffding_d_pattern_sum(const Permutation& p);

/// D_n from 5-subset enumeration. 5 <= n <= 60.
double hoeffding_d_bruteforce(const Permutation& p);

/// Quadrant counts by an O(n^2) double loop; same layout as QuadrantCounts.
struct NaiveQuadrants {
  std::vector<std::int64_t> a, b, c, d;
};
NaiveQuadrants quadrant_counts_naive(const Permutation& p);

/// B_n from the O(n^2) quadrant counts.
double bkr_b_bruteforce(const Permutation& p);

}  // namespace rankindep::oracle

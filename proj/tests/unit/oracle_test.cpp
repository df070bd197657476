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

#include "rankindep/oracle.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "permutations.hpp"
#include "rankindep/error.hpp"

namespace rankindep {
namespace {

using testing::for_each_permutation;
using testing::perm;

TEST(PatternClass, SizesAndMembers) {
  const oracle::PatternClass& pc = oracle::pattern_class();
  EXPECT_EQ(pc.concordant.size(), 8u);
  EXPECT_EQ(pc.discordant.size(), 16u);
  std::set<std::string> all;
  for (const auto& p : pc.concordant) all.insert(to_string(p));
  for (const auto& p : pc.discordant) all.insert(to_string(p));
  EXPECT_EQ(all.size(), 24u);
  for (const auto& s : {perm({1, 2, 3, 4}), perm({1, 2, 4, 3}), perm({2, 1, 3, 4}),
                        perm({2, 1, 4, 3}), perm({3, 4, 1, 2}), perm({3, 4, 2, 1}),
                        perm({4, 3, 1, 2}), perm({4, 3, 2, 1})}) {
    EXPECT_TRUE(oracle::is_concordant(s)) << to_string(s);
  }
  EXPECT_FALSE(oracle::is_concordant(perm({1, 3, 2, 4})));
}

TEST(PatternClass, ClosedUnderReverseAndInverse) {
  for (const auto& s : oracle::pattern_class().concordant) {
    EXPECT_TRUE(oracle::is_concordant(reverse(s)));
    EXPECT_TRUE(oracle::is_concordant(inverse(s)));
  }
}

TEST(PatternOf, Examples) {
  const Permutation p = perm({1, 4, 2, 3});
  const std::vector<std::size_t> two = {2, 4};
  const std::vector<std::size_t> one = {3};
  const std::vector<std::size_t> three = {1, 3, 4};
  EXPECT_EQ(oracle::pattern_of(p, two), perm({2, 1}));
  EXPECT_EQ(oracle::pattern_of(p, one), perm({1}));
  EXPECT_EQ(oracle::pattern_of(p, three), perm({1, 2, 3}));
}

TEST(CountPattern, Examples) {
  EXPECT_EQ(oracle::count_pattern(perm({1, 4, 2, 3}), perm({2, 1})), 2u);
  EXPECT_EQ(oracle::count_pattern(perm({1, 2, 3, 4, 5}), perm({1, 2, 3})), 10u);
  EXPECT_EQ(oracle::count_pattern(perm({1, 3, 2, 4}), perm({1, 3, 2, 4})), 1u);
}

TEST(CountPattern, FourPatternsPartitionQuadruples) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const Permutation p = Permutation::random(4 + k, rng);
    std::uint64_t total = 0;
    for_each_permutation(4, [&](const Permutation& s) { total += oracle::count_pattern(p, s); });
    const std::uint64_t n = p.size();
    EXPECT_EQ(total, n * (n - 1) * (n - 2) * (n - 3) / 24);
  }
}

TEST(CountPattern, RespectsSymmetries) {
  for (std::size_t n = 4; n <= 6; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      for_each_permutation(3, [&](const Permutation& s) {
        const auto count = oracle::count_pattern(p, s);
        ASSERT_EQ(oracle::count_pattern(reverse(p), reverse(s)), count);
        ASSERT_EQ(oracle::count_pattern(inverse(p), inverse(s)), count);
      });
    });
  }
}

TEST(TauStarBruteforce, Examples) {
  EXPECT_DOUBLE_EQ(oracle::tau_star_bruteforce(perm({1, 2, 3, 4})), 2.0 / 3);
  EXPECT_DOUBLE_EQ(oracle::tau_star_bruteforce(perm({1, 3, 2, 4})), -1.0 / 3);
  EXPECT_DOUBLE_EQ(oracle::tau_star_bruteforce(perm({2, 1, 4, 3})), 2.0 / 3);
}

TEST(QuadPatternCombination, Examples) {
  EXPECT_EQ(oracle::quad_pattern_combination(perm({1, 2, 3, 4})), 0);
  EXPECT_EQ(oracle::quad_pattern_combination(perm({1, 3, 2, 4})), 2);
  EXPECT_EQ(oracle::quad_pattern_combination(perm({2, 1, 4, 3})), -1);
}

TEST(HoeffdingKernel, PatternCountsAndRule) {
  const oracle::HoeffdingKernelPatterns& k = oracle::hoeffding_kernel_patterns();
  ASSERT_EQ(k.added.size(), 8u);
  ASSERT_EQ(k.subtracted.size(), 16u);
  for (const auto& s : k.added) {
    EXPECT_EQ(s(3), 3u);
    const bool low_left = std::max(s(1), s(2)) <= 2 && std::min(s(4), s(5)) >= 4;
    const bool low_right = std::max(s(4), s(5)) <= 2 && std::min(s(1), s(2)) >= 4;
    EXPECT_TRUE(low_left || low_right) << to_string(s);
  }
  for (const auto& s : k.subtracted) EXPECT_EQ(s(3), 3u);
}

TEST(HoeffdingDBruteforce, Examples) {
  EXPECT_DOUBLE_EQ(oracle::hoeffding_d_bruteforce(perm({1, 2, 3, 4, 5})), 1.0 / 30);
  EXPECT_EQ(oracle::hoeffding_d_bruteforce(perm({1, 4, 2, 5, 3})), 0.0);
  EXPECT_DOUBLE_EQ(oracle::hoeffding_d_bruteforce(perm({5, 4, 3, 2, 1})), 1.0 / 30);
}

TEST(Oracle, SizeGuards) {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::io_error;
  };
  EXPECT_EQ(code([] { oracle::tau_star_bruteforce(perm({1, 2, 3})); }), Errc::sample_too_small);
  EXPECT_EQ(code([] { oracle::tau_star_bruteforce(Permutation::identity(201)); }),
            Errc::too_large_for_oracle);
  EXPECT_EQ(code([] { oracle::quad_pattern_combination(Permutation::identity(201)); }),
            Errc::too_large_for_oracle);
  EXPECT_EQ(code([] { oracle::hoeffding_d_bruteforce(perm({1, 2, 3, 4})); }),
            Errc::sample_too_small);
  EXPECT_EQ(code([] { oracle::hoeffding_d_bruteforce(Permutation::identity(61)); }),
            Errc::too_large_for_oracle);
}

}  // namespace
}  // namespace rankindep

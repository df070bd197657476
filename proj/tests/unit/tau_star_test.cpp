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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "ks.hpp"
#include "permutations.hpp"
#include "rankindep/error.hpp"
#include "rankindep/hoeffding.hpp"
#include "rankindep/oracle.hpp"

namespace rankindep {
namespace {

using testing::for_each_permutation;
using testing::perm;
using testing::relative_close;

TEST(Quad, SpecExamples) {
  EXPECT_TRUE(quad(perm({1, 2, 3, 4, 5})) == 0);
  EXPECT_TRUE(quad(perm({1, 3, 2, 4})) == 2);
  EXPECT_TRUE(quad(perm({4, 2, 3, 1})) == 0);
  EXPECT_TRUE(quad(perm({2, 1, 4, 3})) == -1);
}

TEST(Quad, MatchesPatternCombinationExhaustively) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      ASSERT_TRUE(quad(p) == oracle::quad_pattern_combination(p)) << to_string(p);
    });
  }
}

TEST(Quad, MatchesPatternCombinationOnRandomPermutations) {
  std::mt19937_64 rng(60);
  for (int k = 0; k < 100; ++k) {
    const Permutation p = Permutation::random(60, rng);
    ASSERT_TRUE(quad(p) == oracle::quad_pattern_combination(p)) << to_string(p);
  }
}

TEST(TauStar, SpecExamples) {
  EXPECT_DOUBLE_EQ(tau_star(perm({1, 2, 3, 4})), 2.0 / 3);
  EXPECT_DOUBLE_EQ(tau_star(perm({1, 3, 2, 4})), -1.0 / 3);
  EXPECT_DOUBLE_EQ(tau_star(perm({4, 3, 2, 1})), 2.0 / 3);
  EXPECT_TRUE(discordant_count(perm({1, 3, 2, 4})) == 1);
}

TEST(TauStar, TooSmall) {
  try {
    tau_star(perm({1, 2, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::sample_too_small);
  }
  EXPECT_THROW(t_statistic(perm({2, 1})), Error);
}

TEST(TauStar, MatchesOracleAndStaysInRange) {
  for (std::size_t n = 4; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      const double t = tau_star(p);
      ASSERT_TRUE(relative_close(t, oracle::tau_star_bruteforce(p), 1e-12)) << to_string(p);
      ASSERT_GE(t, -1.0 / 3 - 1e-15);
      ASSERT_LE(t, 2.0 / 3 + 1e-15);
    });
  }
}

TEST(TauStar, SymmetricUnderReverseAndInverse) {
  for (std::size_t n = 4; n <= 7; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      const wide_int d = discordant_count(p);
      ASSERT_TRUE(discordant_count(reverse(p)) == d);
      ASSERT_TRUE(discordant_count(inverse(p)) == d);
    });
  }
}

TEST(TauStar, ParallelMatchesSequential) {
  std::mt19937_64 rng(4);
  for (const std::size_t n : {4u, 17u, 1000u, 20000u}) {
    const Permutation p = Permutation::random(n, rng);
    EXPECT_TRUE(discordant_count(p, Execution::parallel) ==
                discordant_count(p, Execution::sequential));
  }
}

TEST(TauStar, WideLaneAgreesOnLargeInput) {
  // Above three million points the up-down lane switches to 128 bits; the
  // identity and its reverse must still give exactly 2/3.
  const Permutation p = Permutation::identity(3'000'001);
  EXPECT_TRUE(discordant_count(p) == 0);
  EXPECT_TRUE(discordant_count(reverse(p)) == 0);
}

TEST(TStatistic, SpecExamples) {
  EXPECT_DOUBLE_EQ(t_statistic(perm({1, 2, 3, 4})), 1.0 / 18);
  EXPECT_DOUBLE_EQ(t_statistic(perm({1, 3, 2, 4})), -1.0 / 36);
  EXPECT_DOUBLE_EQ(t_statistic(perm({2, 1, 4, 3})), 1.0 / 18);
}

TEST(RefinedR, SpecExamples) {
  EXPECT_NEAR(refined_r(perm({1, 2, 3, 4, 5})), 1.0 / 90, 1e-16);
  const Permutation p = perm({1, 4, 2, 5, 3});
  EXPECT_DOUBLE_EQ(refined_r(p), oracle::tau_star_bruteforce(p) / 12 / 2);
  for_each_permutation(4, [](const Permutation& q) {
    try {
      refined_r(q);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::sample_too_small);
    }
  });
}

TEST(RefinedR, IdentityWithHoeffding) {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 100; ++k) {
    const Permutation p = Permutation::random(5 + k, rng);
    EXPECT_NEAR(t_statistic(p) - hoeffding_d(p), 2 * refined_r(p), 1e-15);
  }
}

TEST(TStatistic, MeanZeroUnderTheNull) {
  for (const std::size_t n : {100u, 1000u}) {
    std::mt19937_64 rng(n);
    const int draws = 100'000;
    double sum = 0, sum2 = 0;
    for (int k = 0; k < draws; ++k) {
      const double t = t_statistic(Permutation::random(n, rng));
      sum += t;
      sum2 += t * t;
    }
    const double mean = sum / draws;
    const double se = std::sqrt((sum2 / draws - mean * mean) / draws);
    EXPECT_LT(std::abs(mean), 4 * se) << "n = " << n;
  }
}

TEST(ScaledStatistics, ShareOneNullLaw) {
  const std::size_t n = 1000;
  const int draws = 10'000;
  std::vector<double> d, r, t;
  std::mt19937_64 rng(1000);
  for (int k = 0; k < draws; ++k) {
    d.push_back(n * hoeffding_d(Permutation::random(n, rng)));
    r.push_back(n * refined_r(Permutation::random(n, rng)));
    t.push_back(n * tau_star(Permutation::random(n, rng)) / 36);
  }
  const double n_eff = draws / 2.0;
  EXPECT_GT(testing::ks_pvalue(testing::ks_two_sample_distance(d, r), n_eff), 0.001);
  EXPECT_GT(testing::ks_pvalue(testing::ks_two_sample_distance(d, t), n_eff), 0.001);
  EXPECT_GT(testing::ks_pvalue(testing::ks_two_sample_distance(r, t), n_eff), 0.001);
}

TEST(Choose4, SmallValues) {
  EXPECT_TRUE(choose4(3) == 0);
  EXPECT_TRUE(choose4(4) == 1);
  EXPECT_TRUE(choose4(60) == 487635);
}

}  // namespace
}  // namespace rankindep

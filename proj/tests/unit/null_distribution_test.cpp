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

#include "rankindep/null_distribution.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>

#include <unistd.h>

#include "ks.hpp"
#include "permutations.hpp"
#include "rankindep/error.hpp"
#include "rankindep/hoeffding.hpp"
#include "rankindep/tau_star.hpp"

namespace rankindep {
namespace {

using testing::perm;

NullDistSpec small_spec(std::uint64_t samples = 20'000) {
  NullDistSpec spec;
  spec.mc_samples = samples;
  return spec;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         (name + "-" + std::to_string(::getpid()) + ".bin");
}

TEST(LimitEigenvalues, ValuesAndOrder) {
  NullDistSpec spec;
  spec.j_max = 3;
  spec.k_max = 2;
  const std::vector<double> l = limit_eigenvalues(spec);
  ASSERT_EQ(l.size(), 6u);
  const double pi4 = std::pow(std::numbers::pi, 4);
  EXPECT_DOUBLE_EQ(l[0], 1 / pi4);
  EXPECT_NEAR(l[0], 1.0265982e-2, 1e-9);
  EXPECT_DOUBLE_EQ(l[1], 1 / (pi4 * 4));           // (1,2)
  EXPECT_DOUBLE_EQ(l[2], 1 / (pi4 * 4));           // (2,1)
  EXPECT_DOUBLE_EQ(l[3], 1 / (pi4 * 16));          // (2,2)
  EXPECT_DOUBLE_EQ(l[5], 1 / (pi4 * 9 * 4));       // (3,2)
}

TEST(LimitEigenvalues, MassApproachesOneThirtySixth) {
  const NullDistSpec spec;
  const std::vector<double> l = limit_eigenvalues(spec);
  const double mass = std::accumulate(l.begin(), l.end(), 0.0);
  EXPECT_LT(mass, 1.0 / 36);
  EXPECT_LT(1.0 / 36 - mass, (1.0 / 36) * (2.0 / spec.j_max + 2.0 / spec.k_max));
  for (const double v : l) EXPECT_GT(v, 0);
}

TEST(LimitVariance, ClosedForm) {
  // 2 (zeta(4) / pi^4)^2 = 2 / 8100 in the untruncated limit.
  EXPECT_NEAR(limit_variance(NullDistSpec{}), 1.0 / 4050, 1e-4 / 4050);
}

TEST(SampleLimitLaw, Deterministic) {
  const NullDistSpec spec = small_spec();
  EXPECT_EQ(sample_limit_law(spec, 1000), sample_limit_law(spec, 1000));
  NullDistSpec other = spec;
  other.seed = 7;
  EXPECT_NE(sample_limit_law(spec, 1000), sample_limit_law(other, 1000));
}

TEST(SampleLimitLaw, PrefixStable) {
  const NullDistSpec spec = small_spec();
  const std::vector<double> a = sample_limit_law(spec, 70'000);
  const std::vector<double> b = sample_limit_law(spec, 100);
  EXPECT_TRUE(std::equal(b.begin(), b.end(), a.begin()));
}

TEST(SampleLimitLaw, Moments) {
  const NullDistSpec spec;
  const std::vector<double> s = sample_limit_law(spec, 400'000);
  double mean = 0;
  for (const double v : s) mean += v;
  mean /= s.size();
  double var = 0;
  for (const double v : s) var += (v - mean) * (v - mean);
  var /= s.size() - 1;
  EXPECT_LT(std::abs(mean), 4 * std::sqrt(var / s.size()));
  EXPECT_NEAR(var, 1.0 / 4050, 0.02 / 4050);
}

TEST(SampleLimitLaw, HybridMatchesExactSampling) {
  NullDistSpec hybrid;
  hybrid.j_max = hybrid.k_max = 30;
  NullDistSpec exact = hybrid;
  exact.exact_product_limit = 900;
  exact.seed = 99;
  const std::vector<double> a = sample_limit_law(hybrid, 50'000);
  const std::vector<double> b = sample_limit_law(exact, 50'000);
  const double d = testing::ks_two_sample_distance(a, b);
  EXPECT_GT(testing::ks_pvalue(d, 25'000), 0.001) << d;
}

TEST(LimitLawTable, RightTailBoundsAndMonotone) {
  const LimitLawTable table = LimitLawTable::generate(small_spec());
  EXPECT_EQ(table.right_tail(-1e9), 1.0);
  EXPECT_DOUBLE_EQ(table.right_tail(1e9), 1.0 / (1 + table.size()));
  EXPECT_LT(table.right_tail(0.0), 0.5);
  double previous = 1.0;
  for (double s = -0.1; s < 0.3; s += 0.001) {
    const double p = table.right_tail(s);
    EXPECT_LE(p, previous);
    previous = p;
  }
  EXPECT_THROW(table.right_tail(std::nan("")), Error);
  EXPECT_THROW(table.right_tail(INFINITY), Error);
}

TEST(LimitLawTable, SaveLoadRoundTrip) {
  const LimitLawTable table = LimitLawTable::generate(small_spec(1000));
  const auto path = temp_file("ndcache");
  table.save(path);
  EXPECT_EQ(std::filesystem::file_size(path), 16u + 8u * 1000u);
  const LimitLawTable loaded = LimitLawTable::load(path);
  EXPECT_EQ(loaded.j_max(), 100u);
  EXPECT_EQ(loaded.k_max(), 100u);
  ASSERT_EQ(loaded.size(), table.size());
  EXPECT_TRUE(std::equal(loaded.samples().begin(), loaded.samples().end(),
                         table.samples().begin()));
  std::ifstream raw(path, std::ios::binary);
  char magic[8];
  raw.read(magic, 8);
  EXPECT_EQ(std::string(magic, 8), "NDCACHE1");
  std::filesystem::remove(path);
}

TEST(LimitLawTable, RejectsBadFiles) {
  const auto path = temp_file("ndcache-bad");
  {
    std::ofstream out(path, std::ios::binary);
    out << "NOTACACHE-------";
  }
  try {
    LimitLawTable::load(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::io_error);
  }
  {
    std::ofstream out(path, std::ios::binary);
    out << "NDCACHE1";
    const std::uint32_t jk[2] = {100, 100};
    out.write(reinterpret_cast<const char*>(jk), sizeof jk);
    out << "abc";  // not a whole number of doubles
  }
  EXPECT_THROW(LimitLawTable::load(path), Error);
  std::filesystem::remove(path);
  EXPECT_THROW(LimitLawTable::load(path), Error);
}

TEST(LimitLawTable, CachedTableIsReusedFromFile) {
  const NullDistSpec spec = small_spec(3000);
  const auto path = temp_file("ndcache-reuse");
  const auto first = limit_law_table(spec, path);
  ASSERT_TRUE(std::filesystem::exists(path));
  const auto loaded = LimitLawTable::load(path);
  EXPECT_TRUE(std::equal(loaded.samples().begin(), loaded.samples().end(),
                         first->samples().begin()));
  EXPECT_EQ(limit_law_table(spec).get(), first.get());
  std::filesystem::remove(path);
}

TEST(AsymptoticPValue, Examples) {
  const NullDistSpec spec = small_spec();
  EXPECT_LE(asymptotic_pvalue(1e9, spec), 1.0 / (1 + spec.mc_samples));
  EXPECT_EQ(asymptotic_pvalue(-1e9, spec), 1.0);
  EXPECT_LT(asymptotic_pvalue(0.0, spec), 0.5);
  EXPECT_THROW(asymptotic_pvalue(std::nan(""), spec), Error);
}

TEST(PermutationPValue, Extremes) {
  // The identity maximises tau*; a uniform permutation almost never ties it.
  const double p = permutation_pvalue(Statistic::tau_star, Permutation::identity(50), 999, 1);
  EXPECT_DOUBLE_EQ(p, 1.0 / 1000);
  // The minimum of tau* (-1/3) cannot be exceeded from below.
  const double q = permutation_pvalue(Statistic::tau_star, perm({1, 3, 2, 4}), 99, 1);
  EXPECT_DOUBLE_EQ(q, 1.0);
}

TEST(PermutationPValue, DeterministicAndPropagatesErrors) {
  std::mt19937_64 rng(8);
  const Permutation p = Permutation::random(30, rng);
  EXPECT_EQ(permutation_pvalue(Statistic::hoeffding_d, p, 200, 5),
            permutation_pvalue(Statistic::hoeffding_d, p, 200, 5));
  try {
    permutation_pvalue(Statistic::hoeffding_d, perm({1, 2, 3, 4}), 10, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::sample_too_small);
  }
}

TEST(PValues, AsymptoticAgreesWithPermutation) {
  std::mt19937_64 rng(2024);
  const std::size_t n = 1000;
  int compared = 0;
  for (int k = 0; k < 100; ++k) {
    const Permutation p = Permutation::random(n, rng);
    const double scaled = n * hoeffding_d(p);
    const double a = asymptotic_pvalue(scaled);
    const double b = permutation_pvalue(Statistic::hoeffding_d, p, 10'000, k);
    if (a >= 0.01 && a <= 0.99 && b >= 0.01 && b <= 0.99) {
      ++compared;
      EXPECT_LE(std::abs(a - b), 0.05) << "draw " << k;
    }
  }
  EXPECT_GT(compared, 50);
}

TEST(PValues, AsymptoticCalibratedForHoeffding) {
  std::mt19937_64 rng(31);
  const std::size_t n = 1000;
  std::vector<double> ps;
  for (int k = 0; k < 5000; ++k) {
    ps.push_back(asymptotic_pvalue(n * hoeffding_d(Permutation::random(n, rng))));
  }
  EXPECT_LT(testing::ks_uniform_distance(ps), 0.05);
}

}  // namespace
}  // namespace rankindep

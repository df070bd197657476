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
#include <filesystem>
#include <memory>
#include <span>
#include <vector>

#include "rankindep/permutation.hpp"
#include "rankindep/statistic.hpp"

namespace rankindep {

inline constexpr std::uint64_t kDefaultNullSeed = 0x9e3779b97f4a7c15ULL;

/// The limit null law shared by n D_n, n R_n and n tau*/36:
///
///   L = sum_{j<=J, k<=K} lambda_jk (Z_jk^2 - 1),  lambda_jk = 1 / (pi^4 j^2 k^2),
///
/// with Z_jk iid standard normal.
///
/// Terms with j*k <= exact_product_limit are sampled one by one. The rest,
/// whose weights are tiny and numerous, are replaced by a single centred
/// normal with the same total variance 2 sum lambda_jk^2; their combined
/// third cumulant is below 1e-11 for the default limit. Setting
/// exact_product_limit >= J*K samples every term.
struct NullDistSpec {
  std::uint32_t j_max = 100;
  std::uint32_t k_max = 100;
  std::uint64_t mc_samples = 2'000'000;
  std::uint64_t seed = kDefaultNullSeed;
  std::uint32_t exact_product_limit = 16;

  friend bool operator==(const NullDistSpec&, const NullDistSpec&) = default;
};

/// lambda_jk for j = 1..J, k = 1..K, in (j, k) lexicographic order.
std::vector<double> limit_eigenvalues(const NullDistSpec& spec);

/// Variance of the truncated law, 2 sum lambda_jk^2.
double limit_variance(const NullDistSpec& spec);

/// `count` iid draws from the truncated law. Deterministic given spec.seed and
/// independent of the number of worker threads.
std::vector<double> sample_limit_law(const NullDistSpec& spec, std::size_t count);

/// Sorted Monte Carlo sample of the limit law, used as an empirical
/// right-tail function.
class LimitLawTable {
 public:
  static LimitLawTable generate(const NullDistSpec& spec);

  /// Cache file: "NDCACHE1", J and K as little-endian u32, then the samples
  /// as little-endian f64, ascending.
  static LimitLawTable load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  std::uint32_t j_max() const noexcept { return j_max_; }
  std::uint32_t k_max() const noexcept { return k_max_; }
  std::size_t size() const noexcept { return samples_.size(); }
  std::span<const double> samples() const noexcept { return samples_; }

  /// (1 + #{samples >= stat}) / (1 + size()). Non-increasing in stat.
  double right_tail(double scaled_stat) const;

 private:
  LimitLawTable(std::uint32_t j_max, std::uint32_t k_max, std::vector<double> sorted)
      : j_max_(j_max), k_max_(k_max), samples_(std::move(sorted)) {}

  std::uint32_t j_max_;
  std::uint32_t k_max_;
  std::vector<double> samples_;
};

/// Process-wide table for `spec`, generated on first use. Thread safe.
std::shared_ptr<const LimitLawTable> limit_law_table(const NullDistSpec& spec);

/// Loads the table for `spec` from `path` when the file exists and its J, K
/// match; otherwise generates it and writes it to `path`. The result is also
/// installed as the process-wide table for `spec`.
std::shared_ptr<const LimitLawTable> limit_law_table(const NullDistSpec& spec,
                                                      const std::filesystem::path& path);

/// Right-tail probability of the limit law at a scaled statistic
/// (n D_n, n R_n or n tau*/36). Throws NON_FINITE_STAT for NaN/inf.
double asymptotic_pvalue(double scaled_stat, const NullDistSpec& spec = {});

/// (1 + #{uniform pi' : stat(pi') >= stat(p)}) / (1 + resamples).
/// Deterministic given seed.
double permutation_pvalue(Statistic stat, const Permutation& p, std::size_t resamples,
                          std::uint64_t seed);

}  // namespace rankindep

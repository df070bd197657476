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

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>
#include <tuple>

#include "rankindep/error.hpp"

namespace rankindep {

namespace {

constexpr std::size_t kChunkSize = std::size_t{1} << 16;
constexpr std::array<char, 8> kCacheMagic = {'N', 'D', 'C', 'A', 'C', 'H', 'E', '1'};

double eigenvalue(std::uint64_t j, std::uint64_t k) {
  const double pi4 = std::pow(std::numbers::pi, 4);
  const double jk = static_cast<double>(j * k);
  return 1.0 / (pi4 * jk * jk);
}

void check_spec(const NullDistSpec& spec) {
  if (spec.j_max == 0 || spec.k_max == 0) {
    throw Error(Errc::invalid_argument, "truncation bounds J and K must be positive");
  }
}

// Weights sampled term by term, plus the standard deviation of the normal
// standing in for everything else.
struct SamplingPlan {
  std::vector<double> exact;
  double tail_sd = 0;
};

SamplingPlan make_plan(const NullDistSpec& spec) {
  check_spec(spec);
  SamplingPlan plan;
  double tail_var = 0;
  for (std::uint64_t j = 1; j <= spec.j_max; ++j) {
    for (std::uint64_t k = 1; k <= spec.k_max; ++k) {
      const double lambda = eigenvalue(j, k);
      if (j * k <= spec.exact_product_limit) {
        plan.exact.push_back(lambda);
      } else {
        tail_var += 2 * lambda * lambda;
      }
    }
  }
  plan.tail_sd = std::sqrt(tail_var);
  return plan;
}

void sample_chunk(const SamplingPlan& plan, std::uint64_t seed, std::uint64_t chunk,
                  std::span<double> out) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal;
  for (double& draw : out) {
    double sum = 0;
    for (double lambda : plan.exact) {
      const double z = normal(rng);
      sum += lambda * (z * z - 1);
    }
    if (plan.tail_sd > 0) sum += plan.tail_sd * normal(rng);
    draw = sum;
  }
}

void put_u32(std::ostream& os, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::ostream& os, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) os.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_le(const unsigned char* bytes, int width) {
  std::uint64_t v = 0;
  for (int i = width - 1; i >= 0; --i) v = (v << 8) | bytes[i];
  return v;
}

}  // namespace

std::vector<double> limit_eigenvalues(const NullDistSpec& spec) {
  check_spec(spec);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(spec.j_max) * spec.k_max);
  for (std::uint64_t j = 1; j <= spec.j_max; ++j) {
    for (std::uint64_t k = 1; k <= spec.k_max; ++k) {
      out.push_back(eigenvalue(j, k));
    }
  }
  return out;
}

double limit_variance(const NullDistSpec& spec) {
  check_spec(spec);
  // Summed from the smallest terms up.
  double var = 0;
  for (std::uint64_t j = spec.j_max; j >= 1; --j) {
    for (std::uint64_t k = spec.k_max; k >= 1; --k) {
      const double lambda = eigenvalue(j, k);
      var += 2 * lambda * lambda;
    }
  }
  return var;
}

std::vector<double> sample_limit_law(const NullDistSpec& spec, std::size_t count) {
  const SamplingPlan plan = make_plan(spec);
  std::vector<double> out(count);
  const std::size_t chunks = (count + kChunkSize - 1) / kChunkSize;
  const auto run_chunk = [&](std::size_t c) {
    const std::size_t begin = c * kChunkSize;
    const std::size_t end = std::min(count, begin + kChunkSize);
    sample_chunk(plan, spec.seed, c, std::span<double>(out).subspan(begin, end - begin));
  };

  const std::size_t workers =
      std::min<std::size_t>(chunks, std::max(1U, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t c = w; c < chunks; c += workers) run_chunk(c);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

LimitLawTable LimitLawTable::generate(const NullDistSpec& spec) {
  if (spec.mc_samples == 0) {
    throw Error(Errc::invalid_argument, "mc_samples must be positive");
  }
  auto samples = sample_limit_law(spec, spec.mc_samples);
  std::sort(samples.begin(), samples.end());
  return LimitLawTable(spec.j_max, spec.k_max, std::move(samples));
}

LimitLawTable LimitLawTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::io_error, "cannot open null cache " + path.string());
  }
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 16 || !std::equal(kCacheMagic.begin(), kCacheMagic.end(), bytes.begin(),
                                       [](char a, unsigned char b) {
                                         return static_cast<unsigned char>(a) == b;
                                       })) {
    throw Error(Errc::io_error, "null cache " + path.string() + " has no NDCACHE1 header");
  }
  const std::size_t payload = bytes.size() - 16;
  if (payload == 0 || payload % 8 != 0) {
    throw Error(Errc::io_error, "null cache " + path.string() + " has a truncated sample array");
  }
  const auto j_max = static_cast<std::uint32_t>(get_le(bytes.data() + 8, 4));
  const auto k_max = static_cast<std::uint32_t>(get_le(bytes.data() + 12, 4));
  std::vector<double> samples(payload / 8);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i] = std::bit_cast<double>(get_le(bytes.data() + 16 + 8 * i, 8));
  }
  if (!std::is_sorted(samples.begin(), samples.end()) ||
      !std::all_of(samples.begin(), samples.end(), [](double v) { return std::isfinite(v); })) {
    throw Error(Errc::io_error, "null cache " + path.string() + " is not a sorted finite array");
  }
  return LimitLawTable(j_max, k_max, std::move(samples));
}

void LimitLawTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(Errc::io_error, "cannot write null cache " + path.string());
  }
  out.write(kCacheMagic.data(), kCacheMagic.size());
  put_u32(out, j_max_);
  put_u32(out, k_max_);
  for (double v : samples_) put_u64(out, std::bit_cast<std::uint64_t>(v));
  if (!out) {
    throw Error(Errc::io_error, "failed writing null cache " + path.string());
  }
}

double LimitLawTable::right_tail(double scaled_stat) const {
  if (!std::isfinite(scaled_stat)) {
    throw Error(Errc::non_finite_stat, "scaled statistic is not finite");
  }
  const auto first_ge = std::lower_bound(samples_.begin(), samples_.end(), scaled_stat);
  const auto at_or_above = static_cast<double>(std::distance(first_ge, samples_.end()));
  return (1.0 + at_or_above) / (1.0 + static_cast<double>(samples_.size()));
}

namespace {

using SpecKey = std::tuple<std::uint32_t, std::uint32_t, std::uint64_t, std::uint64_t, std::uint32_t>;

SpecKey key_of(const NullDistSpec& s) {
  return {s.j_max, s.k_max, s.mc_samples, s.seed, s.exact_product_limit};
}

struct TableRegistry {
  std::mutex mutex;
  std::map<SpecKey, std::shared_ptr<const LimitLawTable>> tables;
};

TableRegistry& registry() {
  static TableRegistry r;
  return r;
}

}  // namespace

std::shared_ptr<const LimitLawTable> limit_law_table(const NullDistSpec& spec) {
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  auto& slot = reg.tables[key_of(spec)];
  if (!slot) {
    slot = std::make_shared<const LimitLawTable>(LimitLawTable::generate(spec));
  }
  return slot;
}

std::shared_ptr<const LimitLawTable> limit_law_table(const NullDistSpec& spec,
                                                      const std::filesystem::path& path) {
  std::shared_ptr<const LimitLawTable> table;
  if (std::filesystem::exists(path)) {
    auto loaded = LimitLawTable::load(path);
    if (loaded.j_max() == spec.j_max && loaded.k_max() == spec.k_max) {
      table = std::make_shared<const LimitLawTable>(std::move(loaded));
    }
  }
  if (!table) {
    table = std::make_shared<const LimitLawTable>(LimitLawTable::generate(spec));
    table->save(path);
  }
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  reg.tables[key_of(spec)] = table;
  return table;
}

double asymptotic_pvalue(double scaled_stat, const NullDistSpec& spec) {
  if (!std::isfinite(scaled_stat)) {
    throw Error(Errc::non_finite_stat, "scaled statistic is not finite");
  }
  return limit_law_table(spec)->right_tail(scaled_stat);
}

double permutation_pvalue(Statistic stat, const Permutation& p, std::size_t resamples,
                          std::uint64_t seed) {
  if (resamples == 0) {
    throw Error(Errc::invalid_argument, "permutation p-value needs at least one resample");
  }
  const double observed = compute_statistic(stat, p);
  std::mt19937_64 rng(seed);
  std::size_t at_or_above = 0;
  for (std::size_t r = 0; r < resamples; ++r) {
    const Permutation shuffled = Permutation::random(p.size(), rng);
    if (compute_statistic(stat, shuffled) >= observed) ++at_or_above;
  }
  return (1.0 + static_cast<double>(at_or_above)) / (1.0 + static_cast<double>(resamples));
}

}  // namespace rankindep

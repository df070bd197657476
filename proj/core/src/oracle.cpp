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

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "rankindep/error.hpp"

namespace rankindep::oracle {

namespace {

// A k-pattern written as a decimal number, e.g. 1324. Fine for k <= 9.
int pattern_code(std::span<const Permutation::value_type> values) {
  int code = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    int rank = 1;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (values[j] < values[i]) ++rank;
    }
    code = code * 10 + rank;
  }
  return code;
}

int pattern_code(const Permutation& sigma) { return pattern_code(sigma.one_line()); }

std::vector<Permutation> all_permutations(std::size_t k) {
  std::vector<Permutation::value_type> v(k);
  std::iota(v.begin(), v.end(), 1U);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

void require_size(const Permutation& p, std::size_t min_n, std::size_t max_n, const char* what) {
  if (p.size() < min_n) {
    throw Error(Errc::sample_too_small, std::string(what) + " needs n >= " +
                                            std::to_string(min_n) + ", got " +
                                            std::to_string(p.size()));
  }
  if (p.size() > max_n) {
    throw Error(Errc::too_large_for_oracle, std::string(what) + " is limited to n <= " +
                                                std::to_string(max_n) + ", got " +
                                                std::to_string(p.size()));
  }
}

// Calls visit(code) for every 4-subset of positions, code being its pattern.
template <class Visit>
void for_each_quadruple(const Permutation& p, Visit&& visit) {
  const auto v = p.one_line();
  const std::size_t n = v.size();
  std::array<Permutation::value_type, 4> w{};
  for (std::size_t i = 0; i < n; ++i) {
    w[0] = v[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      w[1] = v[j];
      for (std::size_t k = j + 1; k < n; ++k) {
        w[2] = v[k];
        for (std::size_t l = k + 1; l < n; ++l) {
          w[3] = v[l];
          visit(pattern_code(w));
        }
      }
    }
  }
}

template <class Visit>
void for_each_quintuple(const Permutation& p, Visit&& visit) {
  const auto v = p.one_line();
  const std::size_t n = v.size();
  std::array<Permutation::value_type, 5> w{};
  for (std::size_t i = 0; i < n; ++i) {
    w[0] = v[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      w[1] = v[j];
      for (std::size_t k = j + 1; k < n; ++k) {
        w[2] = v[k];
        for (std::size_t l = k + 1; l < n; ++l) {
          w[3] = v[l];
          for (std::size_t m = l + 1; m < n; ++m) {
            w[4] = v[m];
            visit(pattern_code(w));
          }
        }
      }
    }
  }
}

// Weight of each 4-pattern code in one quad pass.
struct QuadWeights {
  std::array<std::int8_t, 4322> weight{};
  QuadWeights() {
    weight[1324] = 2;
    weight[1342] = 1;
    weight[1423] = 3;
    weight[1432] = 2;
    weight[2143] = -1;
    weight[2314] = 2;
    weight[2413] = 2;
    weight[3412] = 1;
    weight[4123] = 2;
    weight[4132] = 1;
    weight[4213] = 1;
  }
};

struct ConcordantTable {
  std::array<bool, 4322> concordant{};
  ConcordantTable() {
    for (int code : {1234, 1243, 2134, 2143, 3412, 3421, 4312, 4321}) concordant[code] = true;
  }
};

const ConcordantTable& concordant_table() {
  static const ConcordantTable table;
  return table;
}

struct HoeffdingWeights {
  std::array<std::int8_t, 54322> weight{};
};

const HoeffdingWeights& hoeffding_weights() {
  static const HoeffdingWeights table = [] {
    HoeffdingWeights w;
    const auto& kernel = hoeffding_kernel_patterns();
    for (const auto& s : kernel.added) w.weight[pattern_code(s)] = 4;
    for (const auto& s : kernel.subtracted) w.weight[pattern_code(s)] = -2;
    return w;
  }();
  return table;
}

}  // namespace

const PatternClass& pattern_class() {
  static const PatternClass classes = [] {
    PatternClass c;
    for (auto& sigma : all_permutations(4)) {
      (concordant_table().concordant[pattern_code(sigma)] ? c.concordant : c.discordant)
          .push_back(std::move(sigma));
    }
    return c;
  }();
  return classes;
}

bool is_concordant(const Permutation& sigma) {
  return sigma.size() == 4 && concordant_table().concordant[pattern_code(sigma)];
}

Permutation pattern_of(const Permutation& p, std::span<const std::size_t> positions) {
  std::vector<Permutation::value_type> values;
  values.reserve(positions.size());
  for (std::size_t pos : positions) {
    if (pos < 1 || pos > p.size()) {
      throw Error(Errc::index_out_of_range, "position " + std::to_string(pos) + " out of range");
    }
    values.push_back(p(pos));
  }
  std::vector<Permutation::value_type> pattern(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    pattern[i] = static_cast<Permutation::value_type>(
        1 + std::count_if(values.begin(), values.end(), [&](auto v) { return v < values[i]; }));
  }
  return Permutation::from_one_line(std::move(pattern));
}

std::uint64_t count_pattern(const Permutation& p, const Permutation& sigma) {
  const std::size_t n = p.size();
  const std::size_t k = sigma.size();
  if (k > n) return 0;
  // Lexicographic walk over k-combinations of {1..n}.
  std::vector<std::size_t> positions(k);
  std::iota(positions.begin(), positions.end(), std::size_t{1});
  std::uint64_t count = 0;
  while (true) {
    if (pattern_of(p, positions) == sigma) ++count;
    std::size_t i = k;
    while (i > 0 && positions[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++positions[i - 1];
    for (std::size_t j = i; j < k; ++j) positions[j] = positions[j - 1] + 1;
  }
  return count;
}

double tau_star_bruteforce(const Permutation& p) {
  require_size(p, 4, kMaxQuadrupleOracleSize, "tau* oracle");
  const auto& table = concordant_table();
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
  for_each_quadruple(p, [&](int code) { ++(table.concordant[code] ? concordant : discordant); });
  const double total = static_cast<double>(concordant + discordant);
  // 12 * (C/18 - D/36) / C(n,4)
  return (2.0 * static_cast<double>(concordant) - static_cast<double>(discordant)) / (3.0 * total);
}

std::int64_t quad_pattern_combination(const Permutation& p) {
  require_size(p, 1, kMaxQuadrupleOracleSize, "quad oracle");
  static const QuadWeights weights;
  std::int64_t sum = 0;
  for_each_quadruple(p, [&](int code) { sum += weights.weight[code]; });
  return sum;
}

const HoeffdingKernelPatterns& hoeffding_kernel_patterns() {
  static const HoeffdingKernelPatterns kernel = [] {
    HoeffdingKernelPatterns k;
    for (auto& sigma : all_permutations(5)) {
      if (sigma(3) != 3) continue;
      const auto low_pair = [&](std::size_t i, std::size_t j) {
        return std::max(sigma(i), sigma(j)) <= 2;
      };
      const auto high_pair = [&](std::size_t i, std::size_t j) {
        return std::min(sigma(i), sigma(j)) >= 4;
      };
      const bool separates =
          (low_pair(1, 2) && high_pair(4, 5)) || (high_pair(1, 2) && low_pair(4, 5));
      (separates ? k.added : k.subtracted).push_back(std::move(sigma));
    }
    if (k.added.size() != 8 || k.subtracted.size() != 16) {
      throw Error(Errc::invalid_argument, "Hoeffding kernel pattern classification is broken");
    }
    return k;
  }();
  return kernel;
}

std::int64_t hoeffding_d_pattern_sum(const Permutation& p) {
  require_size(p, 5, kMaxQuintupleOracleSize, "Hoeffding D oracle");
  const auto& weights = hoeffding_weights();
  std::int64_t sum = 0;
  for_each_quintuple(p, [&](int code) { sum += weights.weight[code]; });
  return sum;
}

double hoeffding_d_bruteforce(const Permutation& p) {
  const std::int64_t sum = hoeffding_d_pattern_sum(p);
  const double n = static_cast<double>(p.size());
  return static_cast<double>(sum) / (n * (n - 1) * (n - 2) * (n - 3) * (n - 4));
}

NaiveQuadrants quadrant_counts_naive(const Permutation& p) {
  const std::size_t n = p.size();
  NaiveQuadrants q;
  q.a.assign(n, 0);
  q.b.assign(n, 0);
  q.c.assign(n, 0);
  q.d.assign(n, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (j == i) continue;
      const bool left = j < i;
      const bool above = p(j) > p(i);
      auto& counter = left ? (above ? q.a : q.c) : (above ? q.b : q.d);
      ++counter[i - 1];
    }
  }
  return q;
}

double bkr_b_bruteforce(const Permutation& p) {
  const auto q = quadrant_counts_naive(p);
  double sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double diff = static_cast<double>(q.a[i] * q.d[i] - q.b[i] * q.c[i]);
    sum += diff * diff;
  }
  return sum / std::pow(static_cast<double>(p.size()), 5);
}

}  // namespace rankindep::oracle

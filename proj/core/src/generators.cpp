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

#include "rankindep/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <random>
#include <unordered_set>

#include "rankindep/error.hpp"

namespace rankindep {

namespace {

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  double uniform() { return unit_(rng_); }
  std::uint64_t bits() { return rng_(); }
  bool coin() { return (rng_() >> 63) != 0; }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

SampleSet make_set(std::size_t n, std::string name, std::uint64_t seed) {
  SampleSet s;
  s.xs.reserve(n);
  s.ys.reserve(n);
  s.generator = std::move(name);
  s.seed = seed;
  return s;
}

// The mirror coin comes from its own stream so the unmirrored pairs are the
// same with and without the flag.
void apply_mirror(SampleSet& s, GeneratorOptions options) {
  if (!options.mirror) return;
  Source signs(s.seed ^ 0xa5a5a5a5a5a5a5a5ULL);
  for (double& x : s.xs) {
    x = signs.coin() ? (1.0 + x) / 2.0 : (1.0 - x) / 2.0;
  }
}

template <class Draw>
SampleSet sample_pairs(std::size_t n, std::uint64_t seed, std::string name,
                       GeneratorOptions options, Draw&& draw) {
  SampleSet s = make_set(n, std::move(name), seed);
  Source src(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [x, y] = draw(src);
    s.xs.push_back(x);
    s.ys.push_back(y);
  }
  apply_mirror(s, options);
  return s;
}

constexpr std::array<std::string_view, 5> kNames = {"independent", "yanagimoto", "hyperbola",
                                                    "binary", "monotone"};

}  // namespace

double yanagimoto_map(double x, double b) noexcept {
  return x > b ? std::min(b, x / 2) : std::max(b, (x + 1) / 2);
}

std::pair<double, double> hyperbola_sweep(double x, double y) noexcept {
  if (x < 0.5) {
    const double upper = 1.0 / (2.0 * (1.0 - x));
    if (y < upper) return {x, upper};
  } else if (x > 0.5) {
    const double lower = 1.0 - 1.0 / (2.0 * x);
    if (y > lower) return {x, lower};
  }
  return {x, y};
}

BinaryPair binary_expansion_pair(std::uint64_t x_bits, std::uint64_t fresh_bits,
                                 unsigned depth) noexcept {
  const std::uint64_t field = depth >= 64 ? ~0ULL : (std::uint64_t{1} << depth) - 1;
  x_bits &= field;
  const std::uint64_t aligned = x_bits << (64 - depth);
  const bool leading_one = (aligned >> 63) != 0;
  unsigned run = leading_one ? static_cast<unsigned>(std::countl_one(aligned))
                             : static_cast<unsigned>(std::countl_zero(aligned));
  run = std::min(run, depth);
  const std::uint64_t run_mask =
      run >= 64 ? ~0ULL : ((std::uint64_t{1} << run) - 1) << (depth - run);
  const std::uint64_t y_bits = (x_bits & ~run_mask) | (fresh_bits & run_mask);
  return {x_bits, y_bits & field, run};
}

SampleSet sample_independent(std::size_t n, std::uint64_t seed, GeneratorOptions options) {
  return sample_pairs(n, seed, "independent", options, [](Source& src) {
    const double x = src.uniform();
    return std::pair{x, src.uniform()};
  });
}

SampleSet sample_yanagimoto(std::size_t n, std::uint64_t seed, GeneratorOptions options) {
  return sample_pairs(n, seed, "yanagimoto", options, [](Source& src) {
    const double x = src.uniform();
    const double b = src.uniform();
    return std::pair{x, yanagimoto_map(x, b)};
  });
}

SampleSet sample_hyperbola(std::size_t n, std::uint64_t seed, GeneratorOptions options) {
  return sample_pairs(n, seed, "hyperbola", options, [](Source& src) {
    const double x = src.uniform();
    const double y = src.uniform();
    return hyperbola_sweep(x, y);
  });
}

SampleSet sample_binary_expansion(std::size_t n, std::uint64_t seed, unsigned depth,
                                  GeneratorOptions options) {
  if (depth < 8 || depth > 62) {
    throw Error(Errc::invalid_argument,
                "binary expansion depth must be in 8..62, got " + std::to_string(depth));
  }
  SampleSet s = make_set(n, "binary", seed);
  Source src(seed);
  std::unordered_set<std::uint64_t> used_x, used_y;
  const double scale = std::ldexp(1.0, -static_cast<int>(depth));
  while (s.xs.size() < n) {
    const std::uint64_t x_bits = src.bits() >> (64 - depth);
    const BinaryPair pair = binary_expansion_pair(x_bits, src.bits() >> (64 - depth), depth);
    // A run reaching the last digits has no well-defined continuation.
    if (pair.run_length >= depth - 1) continue;
    if (used_x.contains(pair.x_bits) || used_y.contains(pair.y_bits)) continue;
    used_x.insert(pair.x_bits);
    used_y.insert(pair.y_bits);
    s.xs.push_back(static_cast<double>(pair.x_bits) * scale);
    s.ys.push_back(static_cast<double>(pair.y_bits) * scale);
  }
  apply_mirror(s, options);
  return s;
}

SampleSet sample_monotone(std::size_t n, std::uint64_t seed, GeneratorOptions options) {
  return sample_pairs(n, seed, "monotone", options, [](Source& src) {
    const double x = src.uniform();
    return std::pair{x, x};
  });
}

std::span<const std::string_view> generator_names() noexcept { return kNames; }

SampleSet generate(std::string_view name, std::size_t n, std::uint64_t seed,
                   GeneratorOptions options) {
  if (name == "independent") return sample_independent(n, seed, options);
  if (name == "yanagimoto") return sample_yanagimoto(n, seed, options);
  if (name == "hyperbola") return sample_hyperbola(n, seed, options);
  if (name == "binary") return sample_binary_expansion(n, seed, 53, options);
  if (name == "monotone") return sample_monotone(n, seed, options);
  throw Error(Errc::invalid_argument, "unknown generator '" + std::string(name) + "'");
}

}  // namespace rankindep

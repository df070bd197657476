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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Samplers for bivariate laws on [0,1]^2 with uniform margins. Besides the
// independent and monotone baselines there are three dependent laws on which
// Hoeffding's D vanishes: the parallelogram construction, the hyperbola sweep
// and the binary-expansion resampling. All are deterministic given the seed.
namespace rankindep {

struct SampleSet {
  std::vector<double> xs;
  std::vector<double> ys;
  std::string generator;
  std::uint64_t seed = 0;
};

struct GeneratorOptions {
  /// Replace x by (1 + s x) / 2 with an independent fair sign s. This is the
  /// "+-X" mirror image rescaled back into [0,1]; it also hides the
  /// dependence from rank correlations.
  bool mirror = false;
};

SampleSet sample_independent(std::size_t n, std::uint64_t seed, GeneratorOptions options = {});

/// x, b iid U(0,1); y = min(b, x/2) if x > b, else max(b, (x+1)/2).
SampleSet sample_yanagimoto(std::size_t n, std::uint64_t seed, GeneratorOptions options = {});

/// Uniform points swept vertically onto the branches 2y(1-x) = 1 (from below,
/// x < 1/2) and 2x(1-y) = 1 (from above, x > 1/2).
SampleSet sample_hyperbola(std::size_t n, std::uint64_t seed, GeneratorOptions options = {});

/// X from `depth` fair bits; Y copies X except for the first run of equal
/// bits, which is resampled. 8 <= depth <= 62.
SampleSet sample_binary_expansion(std::size_t n, std::uint64_t seed, unsigned depth = 53,
                                  GeneratorOptions options = {});

/// y = x.
SampleSet sample_monotone(std::size_t n, std::uint64_t seed, GeneratorOptions options = {});

/// Names accepted by generate(): independent, yanagimoto, hyperbola, binary,
/// monotone.
std::span<const std::string_view> generator_names() noexcept;

/// Dispatch by name; INVALID_ARGUMENT for an unknown name.
SampleSet generate(std::string_view name, std::size_t n, std::uint64_t seed,
                   GeneratorOptions options = {});

// Point maps behind the samplers, exposed for testing.

double yanagimoto_map(double x, double b) noexcept;

std::pair<double, double> hyperbola_sweep(double x, double y) noexcept;

struct BinaryPair {
  std::uint64_t x_bits = 0;  ///< depth bits, first binary digit in the high bit
  std::uint64_t y_bits = 0;
  unsigned run_length = 0;
};

/// Resamples the first run of `x_bits` (a depth-bit field) from the matching
/// high bits of `fresh_bits`.
BinaryPair binary_expansion_pair(std::uint64_t x_bits, std::uint64_t fresh_bits,
                                 unsigned depth) noexcept;

}  // namespace rankindep

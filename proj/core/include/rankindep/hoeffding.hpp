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
#include <vector>

#include "rankindep/permutation.hpp"
#include "rankindep/wide_int.hpp"

namespace rankindep {

/// For the point (i, pi(i)), the number of other points strictly
///   a: NW (left, above)   b: NE (right, above)
///   c: SW (left, below)   d: SE (right, below)
/// Index k of each vector refers to position k + 1.
struct QuadrantCounts {
  std::vector<std::int64_t> a, b, c, d;
};

/// O(n log n) via a single left-to-right sum-array sweep.
QuadrantCounts quadrant_counts(const Permutation& p);

/// sum_i [a(a-1)d(d-1) + b(b-1)c(c-1) - 2abcd], exactly.
wide_int hoeffding_d_numerator(const Permutation& p);

/// Hoeffding's D_n: the numerator above over n(n-1)(n-2)(n-3)(n-4).
/// Requires n >= 5 (SAMPLE_TOO_SMALL otherwise).
double hoeffding_d(const Permutation& p);

/// sum_i (a d - b c)^2, exactly.
wide_int bkr_b_numerator(const Permutation& p);

/// Blum-Kiefer-Rosenblatt B_n = n^-5 sum_i (a d - b c)^2. Defined for n >= 1.
double bkr_b(const Permutation& p);

}  // namespace rankindep

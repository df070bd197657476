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

#include "rankindep/permutation.hpp"
#include "rankindep/wide_int.hpp"

namespace rankindep {

enum class Execution { sequential, parallel };

/// One left-to-right pass over p with four sum-arrays, returning
///
///   2#1324 + #1342 + 3#1423 + 2#1432 - #2143 + 2#2314
///     + 2#2413 + #3412 + 2#4123 + #4132 + #4213
///
/// where #s counts occurrences of the 4-pattern s in p. Exact; O(n log n).
wide_int quad(const Permutation& p);

/// Number of discordant 4-point subsets of p: one quarter of
/// quad(p) + quad(rev p) + quad(inv p) + quad(rev inv p).
/// Execution::parallel runs the four passes on separate threads, each with
/// its own sum-arrays (four times the peak memory).
wide_int discordant_count(const Permutation& p, Execution exec = Execution::sequential);

/// Bergsma-Dassios-Yanagimoto tau*, equal to 2/3 - discordant / C(n,4).
/// Lies in [-1/3, 2/3]. Requires n >= 4.
double tau_star(const Permutation& p, Execution exec = Execution::sequential);

/// T_n = tau* / 12. Requires n >= 4.
double t_statistic(const Permutation& p, Execution exec = Execution::sequential);

/// Refined Hoeffding statistic R_n = (T_n - D_n) / 2. Requires n >= 5.
double refined_r(const Permutation& p, Execution exec = Execution::sequential);

/// C(n, 4), exact.
wide_int choose4(std::size_t n);

}  // namespace rankindep

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

#include <cstddef>
#include <optional>
#include <string_view>

#include "rankindep/permutation.hpp"

namespace rankindep {

enum class Statistic { hoeffding_d, bkr_b, refined_r, tau_star };

enum class PValueMethod { none, asymptotic, permutation };

std::string_view to_string(Statistic s) noexcept;
std::string_view to_string(PValueMethod m) noexcept;

/// Smallest n for which the statistic is defined.
std::size_t minimum_sample_size(Statistic s) noexcept;

/// Raw statistic value; throws SAMPLE_TOO_SMALL below minimum_sample_size.
double compute_statistic(Statistic s, const Permutation& p);

/// The scaling under which D_n, R_n and tau* share one limit null law:
/// n D_n, n R_n, n tau*/36 (= n T_n / 3). B_n is scaled by n as well, but its
/// limit differs by an unspecified offset and has no asymptotic p-value.
double scale_statistic(Statistic s, double value, std::size_t n) noexcept;

class TestResult {
 public:
  TestResult(Statistic statistic, double value, std::size_t n)
      : statistic_(statistic), value_(value), scaled_(scale_statistic(statistic, value, n)), n_(n) {}

  Statistic statistic() const noexcept { return statistic_; }
  double value() const noexcept { return value_; }
  double scaled() const noexcept { return scaled_; }
  std::size_t n() const noexcept { return n_; }
  std::optional<double> p_value() const noexcept { return p_value_; }
  PValueMethod p_method() const noexcept { return p_method_; }

  /// Attaches a p-value; method none clears it.
  void set_p_value(PValueMethod method, double p) noexcept {
    p_method_ = method;
    p_value_ = method == PValueMethod::none ? std::nullopt : std::optional<double>(p);
  }

 private:
  Statistic statistic_;
  double value_;
  double scaled_;
  std::size_t n_;
  std::optional<double> p_value_;
  PValueMethod p_method_ = PValueMethod::none;
};

}  // namespace rankindep

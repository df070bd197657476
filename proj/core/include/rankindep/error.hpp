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
#include <stdexcept>
#include <string>
#include <string_view>

namespace rankindep {

enum class Errc {
  length_mismatch,
  non_finite_value,
  ties_present,
  zero_size,
  index_out_of_range,
  sample_too_small,
  too_large_for_oracle,
  non_finite_stat,
  invalid_permutation,
  invalid_argument,
  io_error,
};

std::string_view to_string(Errc code) noexcept;

// Every failure in the library is reported as an Error. Operations that
// point at a specific sample attach its 0-based index; TIES_PRESENT attaches
// both members of the first tied pair.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what,
        std::optional<std::size_t> index = std::nullopt,
        std::optional<std::size_t> other_index = std::nullopt)
      : std::runtime_error(what), code_(code), index_(index), other_index_(other_index) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }
  std::optional<std::size_t> other_index() const noexcept { return other_index_; }

 private:
  Errc code_;
  std::optional<std::size_t> index_;
  std::optional<std::size_t> other_index_;
};

}  // namespace rankindep

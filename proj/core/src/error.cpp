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

#include "rankindep/error.hpp"

namespace rankindep {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::length_mismatch: return "LENGTH_MISMATCH";
    case Errc::non_finite_value: return "NON_FINITE_VALUE";
    case Errc::ties_present: return "TIES_PRESENT";
    case Errc::zero_size: return "ZERO_SIZE";
    case Errc::index_out_of_range: return "INDEX_OUT_OF_RANGE";
    case Errc::sample_too_small: return "SAMPLE_TOO_SMALL";
    case Errc::too_large_for_oracle: return "TOO_LARGE_FOR_ORACLE";
    case Errc::non_finite_stat: return "NON_FINITE_STAT";
    case Errc::invalid_permutation: return "INVALID_PERMUTATION";
    case Errc::invalid_argument: return "INVALID_ARGUMENT";
    case Errc::io_error: return "IO_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace rankindep

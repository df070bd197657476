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

#include <string>

namespace rankindep {

// Exact accumulator for pattern-count combinations, which grow like n^4.
__extension__ typedef __int128 wide_int;
__extension__ typedef unsigned __int128 wide_uint;

inline std::string to_string(wide_int v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  wide_uint u = negative ? -static_cast<wide_uint>(v) : static_cast<wide_uint>(v);
  std::string digits;
  while (u != 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  return negative ? "-" + digits : digits;
}

}  // namespace rankindep

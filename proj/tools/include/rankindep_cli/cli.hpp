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
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Command-line front end. Everything the `rankindep` executable does goes
// through run(), which tests drive with in-memory streams.
namespace rankindep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitTies = 3;
inline constexpr int kExitTooSmall = 4;

/// A malformed input file. line() is 1-based.
class InputError : public std::runtime_error {
 public:
  InputError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct Columns {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<std::size_t> lines;  ///< source line of each row
};

/// Reads two numeric columns separated by commas, tabs or whitespace (picked
/// from the first data line). Blank lines are skipped, and so is a first line
/// that does not parse as numbers. Throws InputError for anything else,
/// including an input without data rows.
Columns parse_columns(std::istream& in);

/// Least-squares slope of log(seconds) against log(n).
double loglog_slope(std::span<const std::size_t> sizes, std::span<const double> seconds);

/// Runs the command line. Results go to `out`, diagnostics to `err`; the
/// return value is the process exit code.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rankindep::cli

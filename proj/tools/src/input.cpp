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

#include <charconv>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

#include "rankindep_cli/cli.hpp"

namespace rankindep::cli {

namespace {

enum class Separator { comma, tab, whitespace };

constexpr std::string_view kBlank = " \t\r\f\v";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kBlank);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kBlank);
  return s.substr(first, last - first + 1);
}

Separator detect(std::string_view line) {
  if (line.find(',') != std::string_view::npos) return Separator::comma;
  if (line.find('\t') != std::string_view::npos) return Separator::tab;
  return Separator::whitespace;
}

std::optional<double> to_number(std::string_view field) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return std::nullopt;
  double value = 0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size()) return std::nullopt;
  return value;
}

// Splits into exactly two fields; an error message otherwise.
std::optional<std::string> split2(std::string_view line, Separator sep, std::string_view& first,
                                  std::string_view& second) {
  if (sep == Separator::whitespace) {
    const auto a_end = line.find_first_of(kBlank);
    if (a_end == std::string_view::npos) return "expected two columns, found one";
    first = line.substr(0, a_end);
    const std::string_view rest = trim(line.substr(a_end));
    if (rest.find_first_of(kBlank) != std::string_view::npos) {
      return "expected two columns, found more";
    }
    second = rest;
    return std::nullopt;
  }
  const char c = sep == Separator::comma ? ',' : '\t';
  const auto pos = line.find(c);
  if (pos == std::string_view::npos) return "expected two columns, found one";
  if (line.find(c, pos + 1) != std::string_view::npos) return "expected two columns, found more";
  first = line.substr(0, pos);
  second = line.substr(pos + 1);
  return std::nullopt;
}

}  // namespace

Columns parse_columns(std::istream& in) {
  Columns columns;
  std::optional<Separator> sep;
  bool header_allowed = true;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    const Separator this_sep = sep.value_or(detect(line));

    std::string_view first, second;
    const auto shape_error = split2(line, this_sep, first, second);
    const std::optional<double> x = shape_error ? std::nullopt : to_number(first);
    const std::optional<double> y = shape_error ? std::nullopt : to_number(second);
    if (!x || !y) {
      if (header_allowed) {
        header_allowed = false;
        continue;
      }
      if (shape_error) throw InputError(line_no, *shape_error);
      throw InputError(line_no, "not a number: '" + std::string(trim(!x ? first : second)) + "'");
    }
    header_allowed = false;
    sep = this_sep;
    columns.xs.push_back(*x);
    columns.ys.push_back(*y);
    columns.lines.push_back(line_no);
  }
  if (in.bad()) throw InputError(line_no, "read error");
  if (columns.xs.empty()) throw InputError(line_no, "no data rows");
  return columns;
}

}  // namespace rankindep::cli

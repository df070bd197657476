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
#include <string>
#include <vector>

#include "rankindep/error.hpp"
#include "rankindep/large_page_allocator.hpp"

namespace rankindep {

/// Fixed-size numeric array, indexed 1..n, with O(log n) point assignment and
/// O(log n) prefix/suffix sums.
///
/// Backed by a binary indexed tree and nothing else: the current value of a
/// cell is recovered from the tree by a point query (cell = prefix(i) -
/// prefix(i - 1), which only walks the nodes under tree[i]), so assignment is
/// read-then-add. suffix_sum(y) is total() - prefix(y - 1).
///
/// `Value` may be any type with a zero default, `+=`, `-=` and binary `-`;
/// a small struct of counters gives several arrays sharing one index tree.
template <class Value>
class BasicSumArray {
 public:
  using value_type = Value;

  explicit BasicSumArray(std::size_t n) {
    if (n == 0) {
      throw Error(Errc::zero_size, "sum-array size must be positive");
    }
    tree_.assign(n + 1, Value{});
  }

  std::size_t size() const noexcept { return tree_.size() - 1; }

  Value total() const noexcept { return total_; }

  Value cell(std::size_t index) const {
    check(index);
    return point(index);
  }

  void assign(std::size_t index, const Value& value) {
    check(index);
    raw_add(index, value - point(index));
  }

  /// cell[index] += delta. Skips the point query of assign(), which matters
  /// when filling cells known to be empty.
  void add(std::size_t index, const Value& delta) {
    check(index);
    raw_add(index, delta);
  }

  /// cell[1] + ... + cell[y]
  Value prefix_sum(std::size_t y) const {
    check(y);
    return prefix(y);
  }

  /// Cache hint for an upcoming prefix_sum/assign at `index`: touches the
  /// deepest tree nodes of both walks, which are the ones likely to be cold.
  /// Out-of-range indices are ignored.
  void prefetch(std::size_t index) const noexcept {
    const std::size_t n = size();
    if (index < 1 || index > n) return;
    int budget = kPrefetchDepth;
    for (std::size_t i = index; i > 0 && budget > 0; i &= i - 1, --budget) {
      __builtin_prefetch(&tree_[i]);
    }
    budget = kPrefetchDepth;
    for (std::size_t i = index + (index & (~index + 1)); i <= n && budget > 0;
         i += i & (~i + 1), --budget) {
      __builtin_prefetch(&tree_[i], 1);
    }
  }

  /// cell[y] + ... + cell[n]
  Value suffix_sum(std::size_t y) const {
    check(y);
    Value sum = total_;
    sum -= prefix(y - 1);
    return sum;
  }

 private:
  static constexpr int kPrefetchDepth = 6;

  Value prefix(std::size_t y) const noexcept {
    Value sum{};
    for (std::size_t i = y; i > 0; i &= i - 1) {
      sum += tree_[i];
    }
    return sum;
  }

  void raw_add(std::size_t index, const Value& delta) noexcept {
    total_ += delta;
    const std::size_t n = size();
    for (std::size_t i = index; i <= n; i += i & (~i + 1)) {
      tree_[i] += delta;
    }
  }

  // tree[i] covers (i - lowbit(i), i]; peel off everything but cell i.
  Value point(std::size_t index) const noexcept {
    Value v = tree_[index];
    const std::size_t stop = index & (index - 1);
    for (std::size_t i = index - 1; i > stop; i &= i - 1) {
      v -= tree_[i];
    }
    return v;
  }

  void check(std::size_t index) const {
    if (index < 1 || index > size()) {
      throw Error(Errc::index_out_of_range,
                  "sum-array index " + std::to_string(index) + " outside 1.." +
                      std::to_string(size()),
                  index);
    }
  }

  std::vector<Value, LargePageAllocator<Value>> tree_;
  Value total_{};
};

using SumArray = BasicSumArray<std::int64_t>;

}  // namespace rankindep

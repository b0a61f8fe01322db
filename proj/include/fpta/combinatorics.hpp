// Copyright 2026 The fpta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "fpta/errors.hpp"
#include "fpta/rigor/exact.hpp"

namespace fpta {

/// A nonempty set of member indices (codewords or decoders), kept sorted.
class Coalition {
 public:
  Coalition() = default;
  explicit Coalition(std::vector<std::size_t> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (members_.empty()) throw DomainError("empty coalition");
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
      throw DomainError("coalition lists a member twice");
    }
  }

  std::span<const std::size_t> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(std::size_t i) const { return std::binary_search(members_.begin(), members_.end(), i); }

  /// Throws unless every member is < n.
  void check_bounds(std::size_t n) const {
    if (!members_.empty() && members_.back() >= n) {
      throw DomainError("coalition member " + std::to_string(members_.back()) + " out of range (n = " +
                        std::to_string(n) + ")");
    }
  }

  friend bool operator==(const Coalition&, const Coalition&) = default;

 private:
  std::vector<std::size_t> members_;
};

/// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
/// Stops early and returns true as soon as f returns true.
template <class F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    if (f(std::span<const std::size_t>(idx))) return true;
    // Rightmost position that can still advance.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Sum over j = 1..c of C(n, j).
inline ExactInt count_coalitions(std::size_t n, std::size_t c) {
  ExactInt total = 0;
  for (std::size_t j = 1; j <= std::min(c, n); ++j) total += binom(n, j);
  return total;
}

}  // namespace fpta

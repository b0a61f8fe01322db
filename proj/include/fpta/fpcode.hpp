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

// Codes over small alphabets, feasible (descendant) sets and exact
// frame-proof verification.
//
// Two feasible-set definitions are in circulation:
//
//   Unanimity      the coalition can write anything except where all of its
//                  members agree; there the common symbol is forced.
//   CoordinateSet  every coordinate must copy the symbol of some member.
//
// For binary codes both sets coincide, so the frame-proof notions agree. Over
// larger alphabets the coordinate-set feasible set can be strictly smaller.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fpta/combinatorics.hpp"
#include "fpta/errors.hpp"

namespace fpta {

using Symbol = std::uint8_t;
/// Position 0 is the leftmost character of the text format.
using Word = std::vector<Symbol>;

inline constexpr unsigned kMaxAlphabet = 16;

/// n distinct codewords of common length l over {0, ..., s-1}.
class Code {
 public:
  Code(std::vector<Word> words, unsigned alphabet = 2) : words_(std::move(words)), alphabet_(alphabet) {
    if (alphabet_ < 2 || alphabet_ > kMaxAlphabet) {
      throw DomainError("alphabet size must lie in [2, 16], got " + std::to_string(alphabet_));
    }
    if (words_.empty()) throw DomainError("a code needs at least one codeword");
    length_ = words_.front().size();
    if (length_ == 0) throw DomainError("codeword length must be positive");
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i].size() != length_) {
        throw DomainError("codeword " + std::to_string(i) + " has length " + std::to_string(words_[i].size()) +
                          ", expected " + std::to_string(length_));
      }
      for (Symbol s : words_[i]) {
        if (s >= alphabet_) throw DomainError("codeword " + std::to_string(i) + " uses a symbol outside the alphabet");
      }
    }
    std::set<Word> seen(words_.begin(), words_.end());
    if (seen.size() != words_.size()) throw DomainError("codewords must be pairwise distinct");
  }

  std::size_t size() const noexcept { return words_.size(); }
  std::size_t length() const noexcept { return length_; }
  unsigned alphabet() const noexcept { return alphabet_; }
  const Word& word(std::size_t i) const { return words_.at(i); }
  const std::vector<Word>& words() const noexcept { return words_; }

  friend bool operator==(const Code&, const Code&) = default;

 private:
  std::vector<Word> words_;
  std::size_t length_ = 0;
  unsigned alphabet_ = 2;
};

enum class FeasibleDefinition { Unanimity, CoordinateSet };

inline std::string to_string(FeasibleDefinition d) {
  return d == FeasibleDefinition::Unanimity ? "unanimity" : "coordset";
}

/// Per-position constraint on the words a coalition can produce. Each
/// position carries the mask of admissible symbols (bit v set iff v allowed).
class FeasiblePattern {
 public:
  FeasiblePattern(FeasibleDefinition definition, unsigned alphabet, std::vector<std::uint16_t> allowed)
      : definition_(definition), alphabet_(alphabet), allowed_(std::move(allowed)) {}

  FeasibleDefinition definition() const noexcept { return definition_; }
  unsigned alphabet() const noexcept { return alphabet_; }
  std::size_t length() const noexcept { return allowed_.size(); }
  std::uint16_t allowed_mask(std::size_t pos) const { return allowed_.at(pos); }
  bool allows(std::size_t pos, Symbol s) const { return (allowed_.at(pos) >> s) & 1u; }
  bool is_fixed(std::size_t pos) const { return std::popcount(allowed_.at(pos)) == 1; }
  /// Only meaningful when is_fixed(pos).
  Symbol fixed_symbol(std::size_t pos) const {
    return static_cast<Symbol>(std::countr_zero(allowed_.at(pos)));
  }

  friend bool operator==(const FeasiblePattern&, const FeasiblePattern&) = default;

 private:
  FeasibleDefinition definition_;
  unsigned alphabet_;
  std::vector<std::uint16_t> allowed_;
};

inline FeasiblePattern feasible_pattern(const Code& code, const Coalition& coalition, FeasibleDefinition definition) {
  if (coalition.size() == 0) throw DomainError("empty coalition");
  coalition.check_bounds(code.size());
  const auto full = static_cast<std::uint16_t>((1u << code.alphabet()) - 1u);
  std::vector<std::uint16_t> allowed(code.length(), 0);
  for (std::size_t pos = 0; pos < code.length(); ++pos) {
    std::uint16_t present = 0;
    for (std::size_t m : coalition.members()) present |= static_cast<std::uint16_t>(1u << code.word(m)[pos]);
    if (definition == FeasibleDefinition::CoordinateSet) {
      allowed[pos] = present;
    } else {
      allowed[pos] = std::popcount(present) == 1 ? present : full;
    }
  }
  return FeasiblePattern(definition, code.alphabet(), std::move(allowed));
}

inline bool feasible_contains(const FeasiblePattern& pattern, const Word& word) {
  if (word.size() != pattern.length()) {
    throw DomainError("word length " + std::to_string(word.size()) + " does not match pattern length " +
                      std::to_string(pattern.length()));
  }
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    if (word[pos] >= kMaxAlphabet || !pattern.allows(pos, word[pos])) return false;
  }
  return true;
}

inline constexpr std::uint64_t kEnumerationGuard = std::uint64_t{1} << 20;

/// Every word of the feasible set, in lexicographic order (position 0 most
/// significant). Refuses sets larger than `guard`.
inline std::vector<Word> enumerate_feasible(const Code& code, const Coalition& coalition,
                                            FeasibleDefinition definition,
                                            std::uint64_t guard = kEnumerationGuard) {
  const FeasiblePattern pattern = feasible_pattern(code, coalition, definition);
  std::uint64_t count = 1;
  std::vector<std::vector<Symbol>> choices(code.length());
  for (std::size_t pos = 0; pos < code.length(); ++pos) {
    for (Symbol s = 0; s < code.alphabet(); ++s) {
      if (pattern.allows(pos, s)) choices[pos].push_back(s);
    }
    count *= choices[pos].size();
    if (count > guard) {
      throw BudgetExceeded("feasible set exceeds enumeration guard of " + std::to_string(guard) + " words");
    }
  }
  std::vector<Word> out;
  out.reserve(count);
  std::vector<std::size_t> digit(code.length(), 0);
  Word current(code.length());
  for (std::uint64_t i = 0; i < count; ++i) {
    for (std::size_t pos = 0; pos < code.length(); ++pos) current[pos] = choices[pos][digit[pos]];
    out.push_back(current);
    for (std::size_t pos = code.length(); pos-- > 0;) {
      if (++digit[pos] < choices[pos].size()) break;
      digit[pos] = 0;
    }
  }
  return out;
}

struct FrameproofWitness {
  Coalition coalition;
  /// Index of the codeword the coalition can forge.
  std::size_t framed;
};

struct FrameproofVerdict {
  bool is_frameproof = true;
  std::optional<FrameproofWitness> witness;
};

struct FrameproofOptions {
  /// Upper limit on sum_{j<=c} C(n,j) * n * l elementary steps.
  std::uint64_t step_budget = 1'000'000'000;
};

/// Exact c-frame-proof check over all coalitions of size 1..c, sizes
/// ascending and lexicographic within a size. Returns the first witness.
inline FrameproofVerdict is_frameproof(const Code& code, unsigned c, FeasibleDefinition definition,
                                       const FrameproofOptions& options = {}) {
  if (c == 0) throw DomainError("coalition bound c must be positive");
  const std::size_t n = code.size();
  const ExactInt cost = count_coalitions(n, c) * n * code.length();
  if (cost > options.step_budget) {
    throw BudgetExceeded("frame-proof verification needs " + cost.str() + " steps, budget is " +
                         std::to_string(options.step_budget));
  }
  FrameproofVerdict verdict;
  for (std::size_t size = 1; size <= std::min<std::size_t>(c, n); ++size) {
    const bool found = for_each_combination(n, size, [&](std::span<const std::size_t> idx) {
      Coalition coalition(std::vector<std::size_t>(idx.begin(), idx.end()));
      const FeasiblePattern pattern = feasible_pattern(code, coalition, definition);
      for (std::size_t x = 0; x < n; ++x) {
        if (coalition.contains(x)) continue;
        if (feasible_contains(pattern, code.word(x))) {
          verdict.is_frameproof = false;
          verdict.witness = FrameproofWitness{std::move(coalition), x};
          return true;
        }
      }
      return false;
    });
    if (found) break;
  }
  return verdict;
}

/// m codewords built from `copies` identity blocks, then `ones` all-one
/// columns, then `zeros` all-zero columns.
inline Code construct_identity_concat(std::size_t m, std::size_t ones, std::size_t zeros, std::size_t copies) {
  if (m < 2) throw DomainError("identity block size must be at least 2");
  if (copies == 0) throw DomainError("need at least one identity copy");
  const std::size_t length = copies * m + ones + zeros;
  std::vector<Word> words(m, Word(length, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t block = 0; block < copies; ++block) words[i][block * m + i] = 1;
    for (std::size_t j = 0; j < ones; ++j) words[i][copies * m + j] = 1;
  }
  return Code(std::move(words), 2);
}

inline std::size_t hamming_distance(const Word& a, const Word& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

inline std::size_t min_distance(const Code& code) {
  if (code.size() < 2) throw DomainError("minimum distance needs at least two codewords");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) best = std::min(best, hamming_distance(code.word(i), code.word(j)));
  }
  return best;
}

/// Number of nonzero symbols per codeword, deduplicated.
inline std::set<std::size_t> weight_set(const Code& code) {
  std::set<std::size_t> out;
  for (const Word& w : code.words()) {
    out.insert(static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Symbol s) { return s != 0; })));
  }
  return out;
}

}  // namespace fpta

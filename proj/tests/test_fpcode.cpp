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

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fpta/fpcode.hpp"
#include "fpta/text_format.hpp"

namespace fpta {
namespace {

Word w(const std::string& s) {
  Word out;
  for (char ch : s) out.push_back(static_cast<Symbol>(ch - '0'));
  return out;
}

Code code(std::initializer_list<const char*> words, unsigned s = 2) {
  std::vector<Word> v;
  for (const char* x : words) v.push_back(w(x));
  return Code(std::move(v), s);
}

Coalition co(std::vector<std::size_t> m) { return Coalition(std::move(m)); }

// Feasible set written straight from the definitions, by brute force over
// all s^l words: Unanimity keeps words that agree with the coalition where
// it is unanimous; CoordinateSet keeps words whose every coordinate is
// copied from some member.
std::set<Word> feasible_by_definition(const Code& c, const std::vector<std::size_t>& members, FeasibleDefinition def) {
  std::set<Word> out;
  const std::size_t l = c.length();
  std::size_t total = 1;
  for (std::size_t i = 0; i < l; ++i) total *= c.alphabet();
  for (std::size_t idx = 0; idx < total; ++idx) {
    Word x(l);
    std::size_t r = idx;
    for (std::size_t pos = l; pos-- > 0;) {
      x[pos] = static_cast<Symbol>(r % c.alphabet());
      r /= c.alphabet();
    }
    bool ok = true;
    for (std::size_t pos = 0; pos < l && ok; ++pos) {
      bool copied = false, unanimous = true;
      for (std::size_t m : members) {
        copied = copied || c.word(m)[pos] == x[pos];
        unanimous = unanimous && c.word(m)[pos] == c.word(members[0])[pos];
      }
      ok = def == FeasibleDefinition::CoordinateSet ? copied : (!unanimous || copied);
    }
    if (ok) out.insert(x);
  }
  return out;
}

/// Frame-proof verdict by full enumeration of every feasible set.
bool frameproof_by_enumeration(const Code& c, unsigned bound, FeasibleDefinition def) {
  const std::size_t n = c.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(std::popcount(mask)) > bound) continue;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) members.push_back(i);
    }
    const std::set<Word> feasible = feasible_by_definition(c, members, def);
    for (std::size_t x = 0; x < n; ++x) {
      if (!(mask >> x & 1u) && feasible.count(c.word(x))) return false;
    }
  }
  return true;
}

Code random_code(std::mt19937_64& gen, std::size_t n, std::size_t l, unsigned s) {
  std::uniform_int_distribution<unsigned> sym(0, s - 1);
  std::set<Word> seen;
  std::vector<Word> words;
  while (words.size() < n) {
    Word x(l);
    for (auto& v : x) v = static_cast<Symbol>(sym(gen));
    if (seen.insert(x).second) words.push_back(x);
  }
  return Code(std::move(words), s);
}

TEST(Code, Validation) {
  EXPECT_THROW(code({"01", "011"}), DomainError);
  EXPECT_THROW(code({"01", "01"}), DomainError);
  EXPECT_THROW(code({"012"}), DomainError);
  EXPECT_THROW(Code({}, 2), DomainError);
  EXPECT_THROW(code({"0"}, 17), DomainError);
  EXPECT_NO_THROW(code({"012"}, 3));
}

TEST(Feasible, PatternExamples) {
  const Code c = code({"0011", "0110"});
  const FeasiblePattern p = feasible_pattern(c, co({0, 1}), FeasibleDefinition::Unanimity);
  EXPECT_TRUE(p.is_fixed(0));
  EXPECT_EQ(p.fixed_symbol(0), 0);
  EXPECT_FALSE(p.is_fixed(1));
  EXPECT_TRUE(p.is_fixed(2));
  EXPECT_EQ(p.fixed_symbol(2), 1);
  EXPECT_FALSE(p.is_fixed(3));
  EXPECT_FALSE(feasible_contains(p, w("1100")));

  const Code d = code({"0011", "1100"});
  const FeasiblePattern q = feasible_pattern(d, co({0, 1}), FeasibleDefinition::CoordinateSet);
  for (std::size_t pos = 0; pos < 4; ++pos) EXPECT_EQ(q.allowed_mask(pos), 0b11);
  EXPECT_TRUE(feasible_contains(q, w("0110")));

  const FeasiblePattern single = feasible_pattern(c, co({0}), FeasibleDefinition::CoordinateSet);
  EXPECT_EQ(enumerate_feasible(c, co({0}), FeasibleDefinition::Unanimity), std::vector<Word>{w("0011")});
  EXPECT_TRUE(feasible_contains(single, w("0011")));
  EXPECT_THROW(feasible_contains(single, w("001")), DomainError);
}

TEST(Feasible, EnumerationIsLexicographicAndGuarded) {
  const Code c = code({"0011", "0110"});
  const auto words = enumerate_feasible(c, co({0, 1}), FeasibleDefinition::Unanimity);
  EXPECT_EQ(words, (std::vector<Word>{w("0010"), w("0011"), w("0110"), w("0111")}));
  const Code zero_one = code({"0000000000000000000000", "1111111111111111111111"});
  EXPECT_THROW(enumerate_feasible(zero_one, co({0, 1}), FeasibleDefinition::Unanimity), BudgetExceeded);
}

TEST(Frameproof, ThreeWordExampleHasWitness) {
  const Code g = code({"0011", "0110", "1100"});
  const FrameproofVerdict v = is_frameproof(g, 2, FeasibleDefinition::Unanimity);
  ASSERT_FALSE(v.is_frameproof);
  EXPECT_EQ(v.witness->coalition, co({0, 2}));
  EXPECT_EQ(v.witness->framed, 1u);
  EXPECT_EQ(is_frameproof(g, 2, FeasibleDefinition::CoordinateSet).witness->coalition, co({0, 2}));
  EXPECT_TRUE(is_frameproof(g, 1, FeasibleDefinition::Unanimity).is_frameproof);
}

TEST(Frameproof, IdentityConcatenation) {
  const Code gamma = construct_identity_concat(3, 29, 26, 3);
  EXPECT_EQ(gamma.size(), 3u);
  EXPECT_EQ(gamma.length(), 64u);
  EXPECT_EQ(weight_set(gamma), std::set<std::size_t>{32});
  EXPECT_EQ(min_distance(gamma), 6u);
  EXPECT_TRUE(is_frameproof(gamma, 2, FeasibleDefinition::Unanimity).is_frameproof);
  EXPECT_TRUE(frameproof_by_enumeration(construct_identity_concat(3, 2, 1, 1), 2, FeasibleDefinition::Unanimity));
  EXPECT_THROW(construct_identity_concat(1, 0, 0, 1), DomainError);
}

TEST(Frameproof, BudgetGuard) {
  std::mt19937_64 gen(1);
  const Code c = random_code(gen, 40, 16, 2);
  EXPECT_THROW(is_frameproof(c, 6, FeasibleDefinition::Unanimity, {1000}), BudgetExceeded);
}

TEST(Frameproof, QaryDefinitionsDiverge) {
  // Coalition {00, 11} over {0,1,2}: Unanimity lets it write 22, the
  // coordinate-set rule does not.
  const Code c = code({"00", "11", "22"}, 3);
  EXPECT_FALSE(is_frameproof(c, 2, FeasibleDefinition::Unanimity).is_frameproof);
  EXPECT_TRUE(is_frameproof(c, 2, FeasibleDefinition::CoordinateSet).is_frameproof);
}

// Oracle and definition equivalence over 1200 seeded binary codes.
TEST(FrameproofProperty, OracleAndDefinitionEquivalence) {
  std::mt19937_64 gen(20260101);
  std::uniform_int_distribution<std::size_t> nd(1, 4), ld(1, 8);
  int checked = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const std::size_t l = ld(gen);
    const std::size_t n = std::min<std::size_t>(nd(gen), std::size_t{1} << l);
    const Code c = random_code(gen, n, l, 2);
    for (unsigned bound = 1; bound <= n; ++bound) {
      const bool u = is_frameproof(c, bound, FeasibleDefinition::Unanimity).is_frameproof;
      const bool cs = is_frameproof(c, bound, FeasibleDefinition::CoordinateSet).is_frameproof;
      ASSERT_EQ(u, frameproof_by_enumeration(c, bound, FeasibleDefinition::Unanimity));
      ASSERT_EQ(cs, frameproof_by_enumeration(c, bound, FeasibleDefinition::CoordinateSet));
      ASSERT_EQ(u, cs);
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(FrameproofProperty, LibraryEnumerationMatchesDefinition) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned s = 2 + static_cast<unsigned>(trial % 3);
    const Code c = random_code(gen, 3, 4, s);
    for (auto def : {FeasibleDefinition::Unanimity, FeasibleDefinition::CoordinateSet}) {
      const auto lib = enumerate_feasible(c, co({0, 1}), def);
      const auto ref = feasible_by_definition(c, {0, 1}, def);
      ASSERT_EQ(std::set<Word>(lib.begin(), lib.end()), ref);
      ASSERT_TRUE(std::is_sorted(lib.begin(), lib.end()));
    }
  }
}

TEST(FrameproofProperty, MonotoneInCoalitionBound) {
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 400; ++trial) {
    const Code c = random_code(gen, 5, 6, 2);
    bool seen_false = false;
    for (unsigned bound = 1; bound <= 5; ++bound) {
      const bool fp = is_frameproof(c, bound, FeasibleDefinition::Unanimity).is_frameproof;
      if (seen_false) { ASSERT_FALSE(fp); }
      seen_false = seen_false || !fp;
    }
  }
}

TEST(FrameproofProperty, SubcodeClosure) {
  std::mt19937_64 gen(9);
  int frameproof_codes = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const Code c = random_code(gen, 4, 8, 2);
    if (!is_frameproof(c, 2, FeasibleDefinition::Unanimity).is_frameproof) continue;
    ++frameproof_codes;
    for (std::uint32_t mask = 1; mask < 16; ++mask) {
      std::vector<Word> sub;
      for (std::size_t i = 0; i < 4; ++i) {
        if (mask >> i & 1u) sub.push_back(c.word(i));
      }
      ASSERT_TRUE(is_frameproof(Code(sub, 2), 2, FeasibleDefinition::Unanimity).is_frameproof);
    }
  }
  EXPECT_GT(frameproof_codes, 0);
}

TEST(FrameproofProperty, UnanimityContainsCoordinateSet) {
  std::mt19937_64 gen(10);
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned s = 2 + static_cast<unsigned>(trial % 4);
    const Code c = random_code(gen, 3, 5, s);
    const Coalition t = co({0, 2});
    const FeasiblePattern u = feasible_pattern(c, t, FeasibleDefinition::Unanimity);
    const FeasiblePattern cs = feasible_pattern(c, t, FeasibleDefinition::CoordinateSet);
    for (std::size_t pos = 0; pos < c.length(); ++pos) {
      ASSERT_EQ(cs.allowed_mask(pos) & ~u.allowed_mask(pos), 0);
      if (s == 2) { ASSERT_EQ(cs.allowed_mask(pos), u.allowed_mask(pos)); }
    }
    for (std::size_t m : t.members()) ASSERT_TRUE(feasible_contains(cs, c.word(m)));
  }
}

TEST(Distance, Basics) {
  EXPECT_EQ(hamming_distance(w("0011"), w("0110")), 2u);
  EXPECT_EQ(min_distance(code({"0011", "0110", "1100"})), 2u);
  EXPECT_THROW(min_distance(code({"01"})), DomainError);
  EXPECT_EQ(weight_set(code({"0011", "0111"})), (std::set<std::size_t>{2, 3}));
}

TEST(CodeText, RoundTripAndErrors) {
  const Code gamma = construct_identity_concat(3, 29, 26, 3);
  EXPECT_EQ(parse_code(write_code(gamma)), gamma);
  const Code q = parse_code("# ternary\n012\n\n210  # trailing comment\n");
  EXPECT_EQ(q.alphabet(), 3u);
  EXPECT_EQ(q.word(1), w("210"));
  try {
    parse_code("0011\n0110\n110\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_code("0x1\n"), ParseError);
  EXPECT_THROW(parse_code("01\n01\n"), ParseError);
  EXPECT_THROW(parse_code("# only comments\n"), ParseError);
  EXPECT_THROW(parse_code("02\n", 2u), ParseError);
}

}  // namespace
}  // namespace fpta

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

// Reference computations that share no code with the library's numerics.
// Only the big-number types are common.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace oracle {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Rational interval [lo, hi] known to contain some real.
struct Bracket {
  Rat lo, hi;
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool meets(const Rat& a, const Rat& b) const { return !(hi < a || b < lo); }
};

/// Binary expansion of log2(x), x > 0 rational, by repeated squaring of the
/// mantissa: bit i is 1 iff the squared mantissa reaches 2. The mantissa is
/// carried as a fixed-point bracket with `guard` fractional bits, floor for
/// the lower end and ceil for the upper. Stops at `bits` fractional bits or
/// when the bracket straddles 2. Returns a bracket of width 2^-k for the k
/// bits decided.
inline Bracket log2_bits(const Rat& x, unsigned bits) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  // x = m * 2^e with m in [1, 2).
  Int num = numerator(x), den = denominator(x);
  long e = 0;
  while (num >= 2 * den) { den *= 2; ++e; }
  while (num < den) { num *= 2; --e; }
  const unsigned guard = 2 * bits + 40;
  const Int one = Int(1) << guard;
  Int lo = (num << guard) / den;
  Int hi = lo + ((lo * den == (num << guard)) ? 0 : 1);
  Rat value = e;
  unsigned k = 0;
  for (; k < bits; ++k) {
    Int lo2 = (lo * lo) >> guard;  // floor
    Int hi2 = (hi * hi + one - 1) >> guard;  // ceil
    if (lo2 >= 2 * one) {
      value += Rat(1, Int(1) << (k + 1));
      lo = lo2 >> 1;
      hi = (hi2 + 1) >> 1;
    } else if (hi2 < 2 * one) {
      lo = lo2;
      hi = hi2;
    } else {
      break;
    }
  }
  return {value, value + Rat(1, Int(1) << k)};
}

/// ln 2 = sum_{j>=1} 1/(j 2^j); the tail after J terms is below 1/2^J.
inline Bracket ln2(unsigned terms) {
  Rat s = 0;
  for (unsigned j = 1; j <= terms; ++j) s += Rat(1, Int(j) * (Int(1) << j));
  return {s, s + Rat(1, Int(1) << terms)};
}

inline Bracket log2e(unsigned terms) {
  const Bracket l = ln2(terms);
  return {1 / l.hi, 1 / l.lo};
}

inline Bracket add(const Bracket& a, const Bracket& b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline Bracket scale(const Bracket& a, const Rat& s) {
  return s >= 0 ? Bracket{a.lo * s, a.hi * s} : Bracket{a.hi * s, a.lo * s};
}

/// H(x) for 0 < x < 1 from two log brackets.
inline Bracket entropy(const Rat& x, unsigned bits) {
  const Bracket a = scale(log2_bits(x, bits), -x);
  const Bracket b = scale(log2_bits(1 - x, bits), -(1 - x));
  return add(a, b);
}

/// Pascal's triangle up to row n.
inline std::vector<std::vector<Int>> pascal(unsigned n) {
  std::vector<std::vector<Int>> t(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    t[i].assign(i + 1, Int(1));
    for (unsigned j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t;
}

}  // namespace oracle

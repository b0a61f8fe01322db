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

// Rigorous enclosures of log2, the binary entropy function and sqrt.
//
// Logarithms are evaluated in dyadic fixed point: every quantity is a pair of
// integers (lo, hi) scaled by 2^-scale, and every multiplication or division
// rounds lo toward -inf and hi toward +inf. The natural logarithm of a
// reduced argument y in [1, 2) comes from
//
//     ln y = 2 * atanh(z) = 2 * sum_{k>=0} z^(2k+1) / (2k+1),   z = (y-1)/(y+1) <= 1/3,
//
// whose tail after K terms is at most z^(2K+1) * 9/8 / (2K+1) <= z^(2K+1).
// Arguments above sqrt(2) are reflected through ln y = ln 2 - ln(2/y).

#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "fpta/rigor/enclosure.hpp"

namespace fpta {

namespace detail {

/// [lo, hi] * 2^-scale.
struct FixedInterval {
  ExactInt lo;
  ExactInt hi;
};

inline FixedInterval fixed_from_rational(const ExactRational& x, unsigned scale) {
  const ExactInt num = numerator_of(x) << scale;
  const ExactInt& den = denominator_of(x);
  return {floor_div(num, den), ceil_div(num, den)};
}

/// 2*atanh(z) for an exact rational 0 <= z <= 1/3, at `scale` fractional bits.
inline FixedInterval ln_from_atanh_arg(const ExactRational& z, unsigned scale) {
  const FixedInterval zf = fixed_from_rational(z, scale);
  const ExactInt one = pow2_int(scale);
  const ExactInt z2_lo = floor_div(zf.lo * zf.lo, one);
  const ExactInt z2_hi = ceil_div(zf.hi * zf.hi, one);

  ExactInt sum_lo = 0, sum_hi = 0;
  ExactInt pow_lo = zf.lo, pow_hi = zf.hi;
  for (std::uint64_t k = 0;; ++k) {
    const ExactInt denom = 2 * k + 1;
    sum_lo += floor_div(pow_lo, denom);
    sum_hi += ceil_div(pow_hi, denom);
    pow_lo = floor_div(pow_lo * z2_lo, one);
    pow_hi = ceil_div(pow_hi * z2_hi, one);
    if (pow_hi <= 1) break;
  }
  // Remaining tail is below the next power, itself at most one ulp.
  sum_hi += pow_hi;
  return {sum_lo * 2, sum_hi * 2};
}

inline FixedInterval ln2_fixed(unsigned scale) {
  // Per-thread memo; the value depends on `scale` only.
  thread_local std::map<unsigned, FixedInterval> cache;
  if (auto it = cache.find(scale); it != cache.end()) return it->second;
  FixedInterval v = ln_from_atanh_arg(ExactRational(ExactInt(1), ExactInt(3)), scale);
  cache.emplace(scale, v);
  return v;
}

inline unsigned guard_bits(unsigned precision_bits) {
  return 16 + static_cast<unsigned>(bit_length(ExactInt(precision_bits)));
}

/// log2(x) for x > 0 not a power of two, at `scale` fractional bits.
inline Enclosure log2_at_scale(const ExactRational& x, unsigned scale) {
  // x = 2^e * y with y in [1, 2).
  std::int64_t e = bit_length(numerator_of(x)) - bit_length(denominator_of(x));
  ExactRational y = x * pow2_rational(-e);
  if (y < 1) {
    --e;
    y *= 2;
  }
  // Above sqrt(2), use ln y = ln 2 - ln(2/y) so that z <= 3 - 2*sqrt(2).
  const bool reflected = y * y > 2;
  const ExactRational base = reflected ? ExactRational(2 / y) : y;
  const ExactRational z = (base - 1) / (base + 1);
  const FixedInterval ln_base = ln_from_atanh_arg(z, scale);
  const FixedInterval ln2 = ln2_fixed(scale);
  // ln_base >= 0, ln2 > 0: quotient bounds round outward on the same grid.
  ExactInt q_lo = floor_div(ln_base.lo << scale, ln2.hi);
  ExactInt q_hi = ceil_div(ln_base.hi << scale, ln2.lo);
  const ExactInt unit = pow2_int(scale);
  if (reflected) {
    // log2 y = 1 - ln(2/y)/ln 2.
    std::swap(q_lo, q_hi);
    q_lo = unit - q_lo;
    q_hi = unit - q_hi;
  }
  return Enclosure(ExactRational(ExactInt(e)) + ExactRational(q_lo, unit),
                   ExactRational(ExactInt(e)) + ExactRational(q_hi, unit));
}

}  // namespace detail

/// Enclosure of log2(x) of width at most 2^-precision_bits; a point interval
/// exactly when x is a power of two.
inline Enclosure log2_enclosure(const ExactRational& x, unsigned precision_bits) {
  if (x <= 0) throw DomainError("log2 of nonpositive value " + to_string(x));
  if (auto e = exact_log2(x)) return Enclosure(ExactRational(ExactInt(*e)));
  const ExactRational target = pow2_rational(-static_cast<std::int64_t>(precision_bits));
  unsigned scale = precision_bits + detail::guard_bits(precision_bits);
  for (;;) {
    Enclosure r = detail::log2_at_scale(x, scale);
    if (r.width() <= target) return r;
    scale += 16;
  }
}

inline Enclosure log2_enclosure(std::uint64_t x, unsigned precision_bits) {
  return log2_enclosure(ExactRational(ExactInt(x)), precision_bits);
}

/// Enclosure of ln 2.
inline Enclosure ln2_enclosure(unsigned precision_bits) {
  const unsigned scale = precision_bits + detail::guard_bits(precision_bits);
  const detail::FixedInterval f = detail::ln2_fixed(scale);
  const ExactInt unit = pow2_int(scale);
  return Enclosure(ExactRational(f.lo, unit), ExactRational(f.hi, unit));
}

/// Enclosure of log2(e) = 1 / ln 2.
inline Enclosure log2e_enclosure(unsigned precision_bits) {
  const Enclosure ln2 = ln2_enclosure(precision_bits + 2);
  return Enclosure(ExactRational(1)) / ln2;
}

/// Binary entropy H(x) = -x log2 x - (1-x) log2(1-x), with H(0) = H(1) = 0.
inline Enclosure entropy_enclosure(const ExactRational& x, unsigned precision_bits) {
  if (x < 0 || x > 1) throw DomainError("entropy argument " + to_string(x) + " outside [0, 1]");
  if (x == 0 || x == 1) return Enclosure(ExactRational(0));
  const ExactRational y = 1 - x;
  // Width is x*w1 + y*w2 <= max(w1, w2).
  const Enclosure lx = log2_enclosure(x, precision_bits);
  const Enclosure ly = log2_enclosure(y, precision_bits);
  return -(lx * x + ly * y);
}

/// Enclosure of sqrt(x); exact when x is the square of a rational.
inline Enclosure sqrt_enclosure(const ExactRational& x, unsigned precision_bits) {
  if (x < 0) throw DomainError("sqrt of negative value " + to_string(x));
  const ExactInt num = numerator_of(x);
  const ExactInt den = denominator_of(x);
  // sqrt(num/den) = sqrt(num*den) / den.
  const ExactInt prod = num * den;
  const ExactInt root = isqrt(prod);
  if (root * root == prod) return Enclosure(ExactRational(root, den));
  const ExactInt scaled = isqrt(prod << (2 * precision_bits));
  const ExactInt denom = den << precision_bits;
  return Enclosure(ExactRational(scaled, denom), ExactRational(scaled + 1, denom));
}

}  // namespace fpta

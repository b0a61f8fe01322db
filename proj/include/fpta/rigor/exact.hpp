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

// Exact integer and rational helpers.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "fpta/errors.hpp"

namespace fpta {

using ExactInt = boost::multiprecision::mpz_int;
/// Always kept in lowest terms with a positive denominator.
using ExactRational = boost::multiprecision::mpq_rational;

inline ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return ExactRational(num, den);
}

inline ExactInt numerator_of(const ExactRational& r) {
  return boost::multiprecision::numerator(r);
}
inline ExactInt denominator_of(const ExactRational& r) {
  return boost::multiprecision::denominator(r);
}

/// Binomial coefficient C(n, k); zero when k > n.
inline ExactInt binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  ExactInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // Exact at every step: the running value is C(n-k+i, i).
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline ExactInt pow_int(const ExactInt& base, std::uint64_t exp) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

inline ExactInt pow2_int(std::uint64_t exp) {
  ExactInt one = 1;
  return one << exp;
}

/// 2^exp as a rational, exp may be negative.
inline ExactRational pow2_rational(std::int64_t exp) {
  if (exp >= 0) return ExactRational(pow2_int(static_cast<std::uint64_t>(exp)));
  return ExactRational(ExactInt(1), pow2_int(static_cast<std::uint64_t>(-exp)));
}

/// Number of significant bits of |v|; 0 for v == 0.
inline std::int64_t bit_length(const ExactInt& v) {
  if (v == 0) return 0;
  return static_cast<std::int64_t>(boost::multiprecision::msb(ExactInt(boost::multiprecision::abs(v)))) + 1;
}

/// floor(a / b) for b > 0.
inline ExactInt floor_div(const ExactInt& a, const ExactInt& b) {
  ExactInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r < 0) --q;
  return q;
}

/// ceil(a / b) for b > 0.
inline ExactInt ceil_div(const ExactInt& a, const ExactInt& b) {
  ExactInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r > 0) ++q;
  return q;
}

inline ExactInt floor_of(const ExactRational& r) {
  return floor_div(numerator_of(r), denominator_of(r));
}
inline ExactInt ceil_of(const ExactRational& r) {
  return ceil_div(numerator_of(r), denominator_of(r));
}

/// floor(sqrt(v)) for v >= 0.
inline ExactInt isqrt(const ExactInt& v) {
  if (v < 0) throw DomainError("isqrt of negative integer");
  return boost::multiprecision::sqrt(v);
}

/// If v == 2^e for an integer e, returns e.
inline std::optional<std::int64_t> exact_log2(const ExactRational& v) {
  if (v <= 0) return std::nullopt;
  const ExactInt num = numerator_of(v);
  const ExactInt den = denominator_of(v);
  const auto is_pow2 = [](const ExactInt& x) { return (x & (x - 1)) == 0; };
  if (den == 1 && is_pow2(num)) return bit_length(num) - 1;
  if (num == 1 && is_pow2(den)) return -(bit_length(den) - 1);
  return std::nullopt;
}

/// Parses "p", "-p", "p/q" or a plain decimal "1.25".
inline ExactRational parse_rational(std::string_view text) {
  // Boost reads a leading 0 as octal; strip it so "0803" stays decimal.
  const auto decimal = [](std::string_view s) {
    const auto first = s.find_first_not_of('0');
    return first == std::string_view::npos ? ExactInt(0) : ExactInt(std::string(s.substr(first)));
  };
  const auto digits_only = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  ExactRational value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) {
      throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    value = make_rational(decimal(num), decimal(den));
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (!(whole.empty() || digits_only(whole)) || !digits_only(frac)) {
      throw DomainError("malformed decimal '" + std::string(text) + "'");
    }
    const ExactInt scale = pow_int(10, frac.size());
    const ExactInt w = decimal(whole);
    value = make_rational(w * scale + decimal(frac), scale);
  } else {
    if (!digits_only(body)) throw DomainError("malformed number '" + std::string(text) + "'");
    value = ExactRational(decimal(body));
  }
  return negative ? ExactRational(-value) : value;
}

inline std::string to_string(const ExactRational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

enum class Rounding { Down, Up, Nearest };

/// Fixed-point decimal rendering with `digits` fractional digits.
inline std::string to_decimal(const ExactRational& r, unsigned digits, Rounding mode) {
  const ExactInt scale = pow_int(10, digits);
  const ExactRational scaled = r * scale;
  ExactInt q;
  switch (mode) {
    case Rounding::Down: q = floor_of(scaled); break;
    case Rounding::Up: q = ceil_of(scaled); break;
    case Rounding::Nearest: q = floor_of(scaled + ExactRational(ExactInt(1), ExactInt(2))); break;
  }
  const bool negative = q < 0;
  std::string body = ExactInt(boost::multiprecision::abs(q)).str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return negative ? "-" + body : body;
}

}  // namespace fpta

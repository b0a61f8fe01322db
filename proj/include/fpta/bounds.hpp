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

// Rigorous evaluation of the claimed entropy lower bounds on the size of
// frame-proof codes and traceability schemes,
//
//     n > q^-(delta-1) * 2^((H(1/a) - sigma) * l),   a = c (codes) or c^2 (schemes),
//
// against the published upper bounds
//
//     codes:    n <= c * (s^ceil(l/c) - 1)
//     schemes:  n <= C(l, t) / C(k-1, t-1),  t = ceil(k/c).
//
// All magnitudes are compared as base-2 logarithms, so a bound of 2^45 is
// the exact point [45, 45]. A contradiction is certified when
// log2(upper) < log2(lower) strictly.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpta/rigor.hpp"
#include "fpta/tascheme.hpp"

namespace fpta {

/// Trial factorization; q up to 2^32.
inline bool is_prime_power(std::uint64_t q) {
  if (q > (std::uint64_t{1} << 32)) throw DomainError("prime-power check supports q <= 2^32");
  if (q < 2) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  }
  return true;  // q itself is prime
}

/// Frame-proof code hypotheses: c = l/w, l <= q, q a prime power.
struct Thm6Params {
  std::uint64_t q = 0;
  std::uint64_t delta = 0;
  std::uint64_t c = 0;
  ExactRational sigma;
  std::uint64_t l = 0;
  std::uint64_t w = 0;
};

/// Traceability scheme hypotheses: c^2 = 2l/k, l <= q, q a prime power.
struct Thm7Params {
  std::uint64_t q = 0;
  std::uint64_t delta = 0;
  std::uint64_t c = 0;
  ExactRational sigma;
  std::uint64_t l = 0;
  std::uint64_t k = 0;
};

namespace detail {

inline void check_common(std::uint64_t q, std::uint64_t delta, std::uint64_t c, const ExactRational& sigma,
                         std::uint64_t l) {
  if (!is_prime_power(q)) throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
  if (delta < 1) throw DomainError("delta must be at least 1");
  if (c < 2) throw DomainError("c must be at least 2");
  if (sigma <= 0) throw DomainError("sigma must be positive");
  if (l < 1) throw DomainError("l must be positive");
}

inline unsigned extra_bits(std::uint64_t v) { return static_cast<unsigned>(bit_length(ExactInt(v))) + 2; }

/// (H(1/a) - sigma) * l - (delta - 1) * log2 q.
inline Enclosure claimed_lower_log2(std::uint64_t a, const ExactRational& sigma, std::uint64_t l, std::uint64_t delta,
                                    std::uint64_t q, unsigned precision_bits) {
  const Enclosure h = entropy_enclosure(ExactRational(ExactInt(1), ExactInt(a)), precision_bits + extra_bits(l));
  const Enclosure lq = log2_enclosure(q, precision_bits + extra_bits(delta));
  return (h - sigma) * ExactRational(l) - lq * ExactRational(delta - 1);
}

}  // namespace detail

/// Hypothesis violations that do not prevent evaluation.
inline std::vector<std::string> relation_issues(const Thm6Params& p) {
  std::vector<std::string> out;
  if (p.c * p.w != p.l) out.push_back("relation c = l/w violated (c*w = " + std::to_string(p.c * p.w) + ")");
  if (p.l > p.q) out.push_back("length l exceeds q");
  return out;
}

inline std::vector<std::string> relation_issues(const Thm7Params& p) {
  std::vector<std::string> out;
  if (p.c * p.c * p.k != 2 * p.l) {
    out.push_back("relation c^2 = 2l/k violated (c^2*k = " + std::to_string(p.c * p.c * p.k) + ", 2l = " +
                  std::to_string(2 * p.l) + ")");
  }
  if (p.l > p.q) out.push_back("key count l exceeds q");
  return out;
}

/// log2(l)/l < sigma  and  l > (13 + sqrt(13^2 + 48 sigma)) / (12 sigma), both strict.
inline Certainty sigma_constraint(std::uint64_t l, const ExactRational& sigma, PrecisionSchedule sched = {}) {
  if (sigma <= 0) throw DomainError("sigma must be positive");
  if (l == 0) throw DomainError("l must be positive");
  const Certainty first =
      certify_less([l](unsigned bits) { return log2_enclosure(l, bits); }, exactly(sigma * ExactRational(l)), sched);
  const Certainty second = certify_less(
      [sigma](unsigned bits) {
        const Enclosure root = sqrt_enclosure(ExactRational(169) + 48 * sigma, bits + 8);
        return (root + ExactRational(13)) / ExactRational(12 * sigma);
      },
      exactly(ExactRational(l)), sched);
  return certainty_and(first, second);
}

/// Enclosure of log2 of the claimed lower bound for frame-proof codes.
inline Enclosure thm6_lower(const Thm6Params& p, unsigned precision_bits) {
  detail::check_common(p.q, p.delta, p.c, p.sigma, p.l);
  return detail::claimed_lower_log2(p.c, p.sigma, p.l, p.delta, p.q, precision_bits);
}

/// Enclosure of log2 of the claimed lower bound for traceability schemes.
inline Enclosure thm7_lower(const Thm7Params& p, unsigned precision_bits) {
  detail::check_common(p.q, p.delta, p.c, p.sigma, p.l);
  return detail::claimed_lower_log2(p.c * p.c, p.sigma, p.l, p.delta, p.q, precision_bits);
}

/// c * (s^ceil(l/c) - 1).
inline ExactInt ssw_upper(std::uint64_t l, std::uint64_t c, std::uint64_t s) {
  if (s < 2) throw DomainError("alphabet size must be at least 2");
  if (c < 1) throw DomainError("c must be positive");
  return ExactInt(c) * (pow_int(ExactInt(s), (l + c - 1) / c) - 1);
}

/// s^ceil(l/c) + 2c - 2. Reference only: this bound is not valid for
/// c-frame-proof codes and is never used to certify anything.
inline ExactInt invalid_fp_bound_reference_only(std::uint64_t l, std::uint64_t c, std::uint64_t s) {
  if (s < 2 || c < 1) throw DomainError("need s >= 2 and c >= 1");
  return pow_int(ExactInt(s), (l + c - 1) / c) + 2 * c - 2;
}

struct BoundReport {
  Enclosure lower_log2;
  Enclosure upper_log2;
  ExactRational upper_exact;
  bool sigma_ok = false;
  Certainty sigma_check = Certainty::unresolved(0);
  /// CertifiedTrue iff upper_log2.hi < lower_log2.lo.
  Certainty contradiction = Certainty::unresolved(0);
  unsigned precision_bits = 0;
  std::vector<std::string> issues;
};

namespace detail {

inline BoundReport assemble_report(const EnclosureFn& lower, const ExactRational& upper, std::uint64_t l,
                                   const ExactRational& sigma, PrecisionSchedule sched) {
  BoundReport r;
  r.upper_exact = upper;
  r.sigma_check = sigma_constraint(l, sigma, sched);
  r.sigma_ok = r.sigma_check.is_true();
  const Separation sep = separate([upper](unsigned bits) { return log2_enclosure(upper, bits); }, lower,
                                  Relation::Less, sched);
  r.upper_log2 = sep.a;
  r.lower_log2 = sep.b;
  r.contradiction = sep.verdict;
  r.precision_bits = sep.precision_bits;
  return r;
}

}  // namespace detail

/// Claimed frame-proof lower bound against c(s^ceil(l/c) - 1). The lower
/// bound is evaluated even when the sigma constraint fails.
inline BoundReport contradiction_report_thm6(const Thm6Params& p, std::uint64_t s, PrecisionSchedule sched = {}) {
  detail::check_common(p.q, p.delta, p.c, p.sigma, p.l);
  BoundReport r = detail::assemble_report([p](unsigned bits) { return thm6_lower(p, bits); },
                                          ExactRational(ssw_upper(p.l, p.c, s)), p.l, p.sigma, sched);
  r.issues = relation_issues(p);
  return r;
}

/// Claimed traceability lower bound against C(l,t)/C(k-1,t-1).
inline BoundReport contradiction_report_thm7(const Thm7Params& p, PrecisionSchedule sched = {}) {
  detail::check_common(p.q, p.delta, p.c, p.sigma, p.l);
  const SWBoundReport sw = sw_upper_bound(p.l, p.k, p.c);
  BoundReport r = detail::assemble_report([p](unsigned bits) { return thm7_lower(p, bits); }, sw.value, p.l, p.sigma,
                                          sched);
  r.issues = relation_issues(p);
  return r;
}

}  // namespace fpta

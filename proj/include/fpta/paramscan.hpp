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

// Parameter-space infeasibility of the constant-weight construction.
//
// With effective coalition parameter a (a = c for codes, a = c^2 for
// schemes), weight w and length l = w*a, the construction fixes
//
//     sigma(a) = (H(1/a) - 1/a) / 2
//
// and needs an integer delta > 0 inside the half-open window
//
//     (1 - 1/a) w - 1  <  delta  <=  sigma(a) * l / log2(l).
//
// The left end guarantees the frame-proof property, the right end the
// codeword count n > 2^(l/a). The gap
//
//     f(w, a) = sigma(a) * l / log2(l) - [(1 - 1/a) w - 1]
//
// must be positive for the window to be nonempty. Using
// H(1/a) <= (log2 a + log2 e)/a, f(w, a) <= w (1/w + 1/a - 1/2) for w >= 2,
// which leaves the families w = 1, w = 2, a = 2 and five sporadic pairs.
// Each is settled separately (cases a-d below). Everything on the finite
// grid is certified with enclosures; the unbounded remainder rests on the
// monotonicity facts recorded as tail checks.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fpta/rigor.hpp"

namespace fpta {

/// Lower end of the window: (1 - 1/a) w - 1.
inline ExactRational window_lower(std::uint64_t w, std::uint64_t a) {
  return (1 - ExactRational(ExactInt(1), ExactInt(a))) * ExactRational(w) - 1;
}

/// (H(1/a) - 1/a) / 2; the exact point 1/4 at a = 2.
inline Enclosure sigma_construction(std::uint64_t a, unsigned precision_bits) {
  if (a < 2) throw DomainError("effective coalition parameter must be at least 2");
  const ExactRational inv(ExactInt(1), ExactInt(a));
  return (entropy_enclosure(inv, precision_bits + 1) - inv) / ExactRational(2);
}

/// sigma(a) * length / log2(length); length >= 2.
inline Enclosure window_upper(std::uint64_t a, const ExactRational& length, unsigned precision_bits) {
  if (length < 2) throw DomainError("window needs length >= 2");
  const unsigned bits = precision_bits + static_cast<unsigned>(bit_length(ceil_of(length))) + 4;
  return sigma_construction(a, bits) * length / log2_enclosure(length, bits);
}

/// f(w, a) = upper - lower for l = w * a.
inline Enclosure f_value(std::uint64_t w, std::uint64_t a, unsigned precision_bits) {
  if (w < 1) throw DomainError("weight must be positive");
  return window_upper(a, ExactRational(w * a), precision_bits) - window_lower(w, a);
}

struct DeltaWindow {
  std::uint64_t w = 0;
  std::uint64_t a = 0;
  ExactRational length;
  ExactRational lower;
  Enclosure upper;
  /// Some integer delta >= 1 with lower < delta <= upper.
  Certainty integer_exists = Certainty::unresolved(0);
  std::optional<std::uint64_t> smallest_integer;
  unsigned precision_bits = 0;
};

/// Smallest integer delta >= 1 strictly above `lower`.
inline std::uint64_t first_admissible_delta(const ExactRational& lower) {
  const ExactInt cand = floor_of(lower) + 1;
  return cand < 1 ? 1 : cand.convert_to<std::uint64_t>();
}

/// Window for an explicit length; length = w * a is the construction itself.
inline DeltaWindow delta_window_at_length(std::uint64_t w, std::uint64_t a, const ExactRational& length,
                                          PrecisionSchedule sched = {}) {
  if (w < 1) throw DomainError("weight must be positive");
  if (a < 2) throw DomainError("effective coalition parameter must be at least 2");
  DeltaWindow out;
  out.w = w;
  out.a = a;
  out.length = length;
  out.lower = window_lower(w, a);
  const std::uint64_t delta0 = first_admissible_delta(out.lower);
  // Integer delta fits iff the smallest admissible one does: delta0 <= upper.
  const Separation sep = separate(exactly(ExactRational(delta0)),
                                  [a, length](unsigned bits) { return window_upper(a, length, bits); },
                                  Relation::LessEqual, sched);
  out.upper = sep.b;
  out.integer_exists = sep.verdict;
  out.precision_bits = sep.precision_bits;
  if (out.integer_exists.is_true()) out.smallest_integer = delta0;
  return out;
}

inline DeltaWindow delta_window(std::uint64_t w, std::uint64_t a, PrecisionSchedule sched = {}) {
  return delta_window_at_length(w, a, ExactRational(w * a), sched);
}

enum class CaseTag { A_w1, B_w2, C_c2, D_finite_pair, Excluded };

inline std::string to_string(CaseTag t) {
  switch (t) {
    case CaseTag::A_w1: return "A_w1";
    case CaseTag::B_w2: return "B_w2";
    case CaseTag::C_c2: return "C_c2";
    case CaseTag::D_finite_pair: return "D_finite_pair";
    default: return "Excluded";
  }
}

/// 1/w + 1/a > 1/2, i.e. the simplified gap bound w(1/w + 1/a - 1/2) is positive.
inline bool gap_bound_positive(std::uint64_t w, std::uint64_t a) { return 2 * (a + w) > a * w; }

/// Case of (w, a); precedence w = 1, then w = 2, then a = 2.
inline CaseTag classify_case(std::uint64_t w, std::uint64_t a) {
  if (w == 1) return CaseTag::A_w1;
  if (w == 2) return CaseTag::B_w2;
  if (a == 2) return CaseTag::C_c2;
  if (gap_bound_positive(w, a)) return CaseTag::D_finite_pair;
  return CaseTag::Excluded;
}

struct Candidate {
  std::uint64_t w = 0;
  std::uint64_t a = 0;
  CaseTag tag = CaseTag::Excluded;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Pairs (w, a) that survive the gap bound, sorted by (a, w).
inline std::vector<Candidate> candidate_filter(std::uint64_t w_max, std::span<const std::uint64_t> a_values) {
  std::vector<Candidate> out;
  std::vector<std::uint64_t> as(a_values.begin(), a_values.end());
  std::sort(as.begin(), as.end());
  for (std::uint64_t a : as) {
    if (a < 2) throw DomainError("effective coalition parameter must be at least 2");
    for (std::uint64_t w = 1; w <= w_max; ++w) {
      const CaseTag tag = classify_case(w, a);
      if (tag != CaseTag::Excluded) out.push_back({w, a, tag});
    }
  }
  return out;
}

/// a ranges over [2, c_max]. Both extents must reach the sporadic pairs.
inline std::vector<Candidate> candidate_filter(std::uint64_t w_max, std::uint64_t c_max) {
  if (w_max < 5 || c_max < 5) throw PreconditionError("candidate filter needs w_max >= 5 and c_max >= 5");
  std::vector<std::uint64_t> as;
  for (std::uint64_t a = 2; a <= c_max; ++a) as.push_back(a);
  return candidate_filter(w_max, as);
}

/// One certified statement in a report.
struct CheckResult {
  std::string id;
  std::string statement;
  Certainty verdict = Certainty::unresolved(0);
  std::string evidence;
};

inline Certainty all_true(std::span<const CheckResult> checks) {
  Certainty acc = Certainty::certified_true();
  for (const CheckResult& c : checks) acc = certainty_and(acc, c.verdict);
  return acc;
}

/// (log2 e - 2)/(log2 a + 1) + 2/a, the w = 2 gap bound.
inline Enclosure w2_gap_bound(std::uint64_t a, unsigned precision_bits) {
  const Enclosure le = log2e_enclosure(precision_bits + 4);
  const Enclosure la = log2_enclosure(a, precision_bits + 4);
  return (le - ExactRational(2)) / (la + ExactRational(1)) + ExactRational(ExactInt(2), ExactInt(a));
}

/// (1 + (log2 e - 1)/log2 a) / 2, the w = 1 window bound.
inline Enclosure w1_window_bound(std::uint64_t a, unsigned precision_bits) {
  const Enclosure le = log2e_enclosure(precision_bits + 4);
  const Enclosure la = log2_enclosure(a, precision_bits + 4);
  return ((le - ExactRational(1)) / la + ExactRational(1)) / ExactRational(2);
}

/// f(w, 2) = w / (2 log2 2w) - w/2 + 1.
inline Enclosure c2_gap_formula(std::uint64_t w, unsigned precision_bits) {
  const Enclosure l2w = log2_enclosure(2 * w, precision_bits + 4);
  return Enclosure(ExactRational(w)) / (l2w * ExactRational(2)) - ExactRational(ExactInt(w), ExactInt(2)) + ExactRational(1);
}

struct CaseAnalysis {
  std::uint64_t probe_max = 0;
  std::vector<CheckResult> checks;
  /// Largest a whose w = 2 gap bound is certified positive.
  std::optional<std::uint64_t> w2_last_positive;
  /// Weights w >= 2 with f(w, 2) certified positive.
  std::vector<std::uint64_t> c2_positive_weights;
  /// f on the sporadic pairs, keyed (w, a).
  std::vector<std::pair<Candidate, Enclosure>> sporadic_values;

  Certainty verdict() const { return all_true(checks); }
};

inline const std::vector<Candidate>& sporadic_pairs() {
  static const std::vector<Candidate> pairs = {{3, 3, CaseTag::D_finite_pair},
                                               {4, 3, CaseTag::D_finite_pair},
                                               {5, 3, CaseTag::D_finite_pair},
                                               {3, 4, CaseTag::D_finite_pair},
                                               {3, 5, CaseTag::D_finite_pair}};
  return pairs;
}

namespace detail {

struct Accumulator {
  Certainty verdict = Certainty::certified_true();
  std::string first_failure;
  void add(const Certainty& c, const std::string& where) {
    if (!c.is_true() && first_failure.empty()) first_failure = where + ": " + c.name();
    verdict = certainty_and(verdict, c);
  }
  std::string evidence(const std::string& ok) const { return first_failure.empty() ? ok : first_failure; }
};

inline std::string pair_label(std::uint64_t w, std::uint64_t a) {
  return "(w=" + std::to_string(w) + ", a=" + std::to_string(a) + ")";
}

}  // namespace detail

/// The four-case analysis over a in [2, c_probe_max] (and w in [2, c_probe_max]
/// for the a = 2 family).
inline CaseAnalysis verify_cases(std::uint64_t c_probe_max, PrecisionSchedule sched = {}) {
  if (c_probe_max < 19) throw PreconditionError("case analysis needs c_probe_max >= 19");
  CaseAnalysis out;
  out.probe_max = c_probe_max;
  const unsigned p = sched.start_bits;
  const auto log2e = [](unsigned bits) { return log2e_enclosure(bits); };

  // (a) w = 1.
  {
    detail::Accumulator window, bound;
    for (std::uint64_t a = 2; a <= c_probe_max; ++a) {
      window.add(certify_less([a](unsigned b) { return window_upper(a, ExactRational(a), b); }, exactly(1), sched),
                 detail::pair_label(1, a));
      bound.add(certify_less([a](unsigned b) { return window_upper(a, ExactRational(a), b); },
                             [a](unsigned b) { return w1_window_bound(a, b); }, sched),
                detail::pair_label(1, a));
    }
    out.checks.push_back({"a.window", "w=1: window upper end < 1 for all probed a", window.verdict,
                          window.evidence("a in [2, " + std::to_string(c_probe_max) + "]")});
    out.checks.push_back({"a.bound_dominates", "w=1: window upper end < (1 + (log2 e - 1)/log2 a)/2", bound.verdict,
                          bound.evidence("a in [2, " + std::to_string(c_probe_max) + "]")});
    const Separation at2 = separate([](unsigned b) { return w1_window_bound(2, b); }, exactly(1), Relation::Less, sched);
    out.checks.push_back({"a.bound_at_2", "(1 + (log2 e - 1)/log2 2)/2 = log2(e)/2 < 1", at2.verdict,
                          "bound(2) = " + describe(at2.a)});
    out.checks.push_back({"a.bound_decreasing", "log2 e - 1 > 0, so the w=1 bound decreases in a (tail)",
                          certify_less(exactly(1), log2e, sched), "log2 e = " + describe(log2e_enclosure(p))});
  }

  // (b) w = 2.
  {
    detail::Accumulator sign_pos, sign_neg, window, dominated;
    for (std::uint64_t a = 2; a <= c_probe_max; ++a) {
      const auto g = [a](unsigned b) { return w2_gap_bound(a, b); };
      const Certainty positive = certify_positive(g, sched);
      if (a <= 18) {
        sign_pos.add(positive, "a=" + std::to_string(a));
        window.add(certify_less([a](unsigned b) { return window_upper(a, ExactRational(2 * a), b); }, exactly(1),
                                sched),
                   detail::pair_label(2, a));
      } else {
        sign_neg.add(certify_negative(g, sched), "a=" + std::to_string(a));
      }
      if (positive.is_true()) out.w2_last_positive = a;
      dominated.add(certify_less([a](unsigned b) { return f_value(2, a, b); }, g, sched), detail::pair_label(2, a));
    }
    out.checks.push_back({"b.positive_below_19", "w=2 gap bound (log2 e - 2)/(log2 a + 1) + 2/a > 0 for a <= 18",
                          sign_pos.verdict, sign_pos.evidence("a in [2, 18]")});
    out.checks.push_back({"b.negative_from_19", "w=2 gap bound < 0 for 19 <= a <= probe", sign_neg.verdict,
                          sign_neg.evidence("a in [19, " + std::to_string(c_probe_max) + "]")});
    // Bound < 0 iff h(a) = (2 - log2 e) a - 2 log2 a - 2 > 0; h' > 0 once 2 log2 e / a < 2 - log2 e.
    out.checks.push_back(
        {"b.tail_monotone", "2 log2(e)/19 < 2 - log2 e, so the w=2 bound stays negative for all a >= 19",
         certify_less([](unsigned b) { return log2e_enclosure(b) * ExactRational(ExactInt(2), ExactInt(19)); },
                      [](unsigned b) { return ExactRational(2) - log2e_enclosure(b); }, sched),
         "derivative of (2 - log2 e) a - 2 log2 a - 2 is positive from a = 19"});
    out.checks.push_back({"b.window", "w=2, a <= 18: window upper end < 1", window.verdict,
                          window.evidence("a in [2, 18]")});
    bool lhs_below_one = true;
    for (std::uint64_t a = 2; a <= 18; ++a) lhs_below_one = lhs_below_one && window_lower(2, a) < 1;
    out.checks.push_back({"b.window_lower", "w=2, a <= 18: window lower end 1 - 2/a < 1",
                          Certainty::from_bool(lhs_below_one), "exact"});
    out.checks.push_back({"b.gap_dominated", "f(2, a) < w=2 gap bound for all probed a", dominated.verdict,
                          dominated.evidence("a in [2, " + std::to_string(c_probe_max) + "]")});
  }

  // (c) a = 2.
  {
    detail::Accumulator formula, window, only23;
    for (std::uint64_t w = 2; w <= c_probe_max; ++w) {
      const Enclosure f = f_value(w, 2, p);
      const Enclosure g = c2_gap_formula(w, p);
      formula.add(Certainty::from_bool(f.intersects(g)), detail::pair_label(w, 2));
      const Certainty positive = certify_positive([w](unsigned b) { return f_value(w, 2, b); }, sched);
      if (positive.is_true()) out.c2_positive_weights.push_back(w);
      if (w <= 3) {
        only23.add(positive, detail::pair_label(w, 2));
        window.add(certify_less([w](unsigned b) { return window_upper(2, ExactRational(2 * w), b); }, exactly(1),
                                sched),
                   detail::pair_label(w, 2));
      } else {
        only23.add(certify_negative([w](unsigned b) { return f_value(w, 2, b); }, sched), detail::pair_label(w, 2));
      }
    }
    out.checks.push_back({"c.formula", "f(w, 2) agrees with w/(2 log2 2w) - w/2 + 1", formula.verdict,
                          formula.evidence("enclosures intersect for all probed w")});
    out.checks.push_back({"c.positive_only_2_3", "f(w, 2) > 0 exactly for w in {2, 3} (strictly decreasing beyond)",
                          only23.verdict, only23.evidence("w in [2, " + std::to_string(c_probe_max) + "]")});
    out.checks.push_back({"c.window", "a=2, w in {2, 3}: window upper end < 1", window.verdict,
                          window.evidence("both weights")});
  }

  // (d) sporadic pairs.
  {
    detail::Accumulator negative;
    for (const Candidate& cand : sporadic_pairs()) {
      const std::uint64_t w = cand.w, a = cand.a;
      const Separation s =
          separate([w, a](unsigned b) { return f_value(w, a, b); }, exactly(0), Relation::Less, sched);
      negative.add(s.verdict, detail::pair_label(w, a));
      out.sporadic_values.emplace_back(cand, s.a);
    }
    out.checks.push_back({"d.negative", "f < 0 on (3,3), (4,3), (5,3), (3,4), (3,5)", negative.verdict,
                          negative.evidence("all five pairs")});
  }

  // The w >= 2 simplification uses log2 w >= 1 > log2 e - 1.
  out.checks.push_back({"gap_bound_step", "log2 e - 1 < 1 = log2 2 (used for w >= 2)",
                        certify_less(log2e, exactly(2), sched), "log2 e < 2"});
  return out;
}

enum class Side { LeftOnly, RightOnly, Both, Neither };

inline std::string to_string(Side s) {
  switch (s) {
    case Side::LeftOnly: return "LeftOnly";
    case Side::RightOnly: return "RightOnly";
    case Side::Both: return "Both";
    default: return "Neither";
  }
}

struct EitherOr {
  /// lower < delta: the frame-proof guarantee.
  Certainty left = Certainty::unresolved(0);
  /// delta <= upper: the codeword-count guarantee.
  Certainty right = Certainty::unresolved(0);
  std::optional<Side> side;
};

inline EitherOr classify_sides(const Certainty& left, const Certainty& right) {
  EitherOr out{left, right, std::nullopt};
  if (left.is_unresolved() || right.is_unresolved()) return out;
  if (left.is_true()) out.side = right.is_true() ? Side::Both : Side::LeftOnly;
  else out.side = right.is_true() ? Side::RightOnly : Side::Neither;
  return out;
}

inline EitherOr either_or_classify_at_length(std::uint64_t w, std::uint64_t a, const ExactRational& length,
                                             std::uint64_t delta, PrecisionSchedule sched = {}) {
  if (delta < 1) throw DomainError("delta must be a positive integer");
  const Certainty left = Certainty::from_bool(window_lower(w, a) < ExactRational(delta));
  const Certainty right = certify_less_equal(exactly(ExactRational(delta)),
                                             [a, length](unsigned b) { return window_upper(a, length, b); }, sched);
  return classify_sides(left, right);
}

inline EitherOr either_or_classify(std::uint64_t w, std::uint64_t a, std::uint64_t delta,
                                   PrecisionSchedule sched = {}) {
  return either_or_classify_at_length(w, a, ExactRational(w * a), delta, sched);
}

/// Classification reusing an already computed window; refines only when the
/// window's enclosure straddles delta.
inline EitherOr either_or_from_window(const DeltaWindow& win, std::uint64_t delta, PrecisionSchedule sched = {}) {
  const Certainty left = Certainty::from_bool(win.lower < ExactRational(delta));
  Certainty right = certify_less_equal(Enclosure(ExactRational(delta)), win.upper, win.precision_bits);
  if (right.is_unresolved()) {
    return either_or_classify_at_length(win.w, win.a, win.length, delta, sched);
  }
  return classify_sides(left, right);
}

enum class ScanMode { Thm10, Thm11 };

inline std::string to_string(ScanMode m) { return m == ScanMode::Thm10 ? "thm10" : "thm11"; }

enum class ScanVerdict { CertifiedInfeasible, FeasiblePointFound, Unresolved };

inline std::string to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::CertifiedInfeasible: return "CertifiedInfeasible";
    case ScanVerdict::FeasiblePointFound: return "FeasiblePointFound";
    default: return "Unresolved";
  }
}

struct ScanEntry {
  std::uint64_t c = 0;
  DeltaWindow window;
  Enclosure f;
  CaseTag tag = CaseTag::Excluded;
};

struct EitherOrTally {
  std::uint64_t left_only = 0;
  std::uint64_t right_only = 0;
  std::uint64_t both = 0;
  std::uint64_t neither = 0;
  std::uint64_t unresolved = 0;
};

/// One instantiation of the window (a = c, or a = c^2 with l = w a or l = w a / 2).
struct ReadingResult {
  std::string name;
  std::string length_rule;
  std::vector<ScanEntry> entries;
  std::vector<Candidate> candidates;
  std::uint64_t skipped_non_integer_length = 0;
  Certainty grid_verdict = Certainty::unresolved(0);
  std::vector<CheckResult> tail_checks;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> unresolved_points;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> feasible_points;
  /// A point with f certified positive but no admissible integer.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> non_sufficiency_witness;
  EitherOrTally either_or;
  ScanVerdict verdict = ScanVerdict::Unresolved;
};

struct ScanReport {
  ScanMode mode = ScanMode::Thm10;
  std::uint64_t w_max = 0;
  std::uint64_t c_max = 0;
  unsigned precision_bits = 0;
  std::vector<ReadingResult> readings;
  CaseAnalysis cases;
  ScanVerdict verdict = ScanVerdict::Unresolved;
};

namespace detail {

struct LengthRule {
  std::string name;
  std::string description;
  /// l for (w, a); nullopt when not an integer.
  std::optional<ExactRational> (*length)(std::uint64_t w, std::uint64_t a);
};

inline std::optional<ExactRational> length_product(std::uint64_t w, std::uint64_t a) { return ExactRational(w * a); }

inline std::optional<ExactRational> length_half_product(std::uint64_t w, std::uint64_t a) {
  if ((w * a) % 2 != 0) return std::nullopt;
  return ExactRational((w * a) / 2);
}

/// Tail facts for l = w a / 2, a = c^2 >= 4, using H(1/a) <= (log2 a + log2 e)/a:
///   w = 1: upper <= (log2 a + log2 e - 1) / (4 (log2 a - 1)), decreasing, = (1 + log2 e)/4 at a = 4
///   w = 2: upper <= (1 + (log2 e - 1)/log2 a) / 2 <= (1 + (log2 e - 1)/2) / 2
///   w >= 3: f <= 1 - (3/4 - s) w with s = (1 + (log2 e - 1)/2) / 4, negative once 3 (3/4 - s) > 1.
inline std::vector<CheckResult> half_length_tail_checks(PrecisionSchedule sched) {
  std::vector<CheckResult> out;
  out.push_back({"r2.w1", "l = a/2, w = 1: (1 + log2 e)/4 < 1 bounds the window for all a >= 4",
                 certify_less([](unsigned b) { return (log2e_enclosure(b) + ExactRational(1)) / ExactRational(4); },
                              exactly(1), sched),
                 "bound decreasing in a"});
  const auto s_bound = [](unsigned b) {
    return ((log2e_enclosure(b) - ExactRational(1)) / ExactRational(2) + ExactRational(1)) / ExactRational(4);
  };
  out.push_back({"r2.w2", "l = a, w = 2: (1 + (log2 e - 1)/2)/2 < 1 bounds the window for all a >= 4",
                 certify_less([s_bound](unsigned b) { return s_bound(b) * ExactRational(2); }, exactly(1), sched),
                 "log2 a >= 2"});
  out.push_back({"r2.w3plus", "w >= 3: 3 (3/4 - s) > 1, so f < 0 for all a >= 4",
                 certify_less(exactly(1),
                              [s_bound](unsigned b) {
                                return (ExactRational(ExactInt(3), ExactInt(4)) - s_bound(b)) * ExactRational(3);
                              },
                              sched),
                 "s = (1 + (log2 e - 1)/2)/4"});
  return out;
}

inline ReadingResult scan_reading(const std::string& name, const LengthRule& rule, std::uint64_t w_max,
                                  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& c_and_a,
                                  PrecisionSchedule sched) {
  ReadingResult out;
  out.name = name;
  out.length_rule = rule.description;
  std::vector<std::uint64_t> as;
  for (const auto& ca : c_and_a) as.push_back(ca.second);
  out.candidates = candidate_filter(w_max, as);

  Certainty grid = Certainty::certified_true();
  for (const auto& [c, a] : c_and_a) {
    for (std::uint64_t w = 1; w <= w_max; ++w) {
      const auto length = rule.length(w, a);
      if (!length) {
        ++out.skipped_non_integer_length;
        continue;
      }
      ScanEntry e;
      e.c = c;
      e.tag = classify_case(w, a);
      e.window = delta_window_at_length(w, a, *length, sched);
      e.f = e.window.upper - e.window.lower;
      // The window holds no admissible integer: certified false.
      grid = certainty_and(grid, e.window.integer_exists.negated());
      if (e.window.integer_exists.is_unresolved()) out.unresolved_points.emplace_back(w, a);
      if (e.window.integer_exists.is_true()) out.feasible_points.emplace_back(w, a);
      if (!out.non_sufficiency_witness && e.f.lo() > 0 && e.window.integer_exists.is_false()) {
        out.non_sufficiency_witness = std::make_pair(w, a);
      }
      const ExactInt top = ceil_of(e.window.lower) + 2;
      const std::uint64_t delta_max = top < 1 ? 1 : top.convert_to<std::uint64_t>();
      for (std::uint64_t delta = 1; delta <= delta_max; ++delta) {
        const EitherOr eo = either_or_from_window(e.window, delta, sched);
        if (!eo.side) ++out.either_or.unresolved;
        else if (*eo.side == Side::LeftOnly) ++out.either_or.left_only;
        else if (*eo.side == Side::RightOnly) ++out.either_or.right_only;
        else if (*eo.side == Side::Both) ++out.either_or.both;
        else ++out.either_or.neither;
      }
      out.entries.push_back(std::move(e));
    }
  }
  out.grid_verdict = grid;
  return out;
}

inline ScanVerdict combine(const Certainty& grid, std::span<const CheckResult> tail, bool feasible_found) {
  if (feasible_found) return ScanVerdict::FeasiblePointFound;
  if (grid.is_true() && all_true(tail).is_true()) return ScanVerdict::CertifiedInfeasible;
  return ScanVerdict::Unresolved;
}

}  // namespace detail

/// Scans w in [1, w_max] and c in [2, c_max] (Thm10: a = c) or
/// c in [2, floor(sqrt(c_max))] (Thm11: a = c^2, under both length readings).
inline ScanReport scan_infeasibility(std::uint64_t w_max, std::uint64_t c_max, ScanMode mode,
                                     PrecisionSchedule sched = {}) {
  if (w_max < 5 || c_max < 19) throw PreconditionError("scan needs w_max >= 5 and c_max >= 19");
  ScanReport out;
  out.mode = mode;
  out.w_max = w_max;
  out.c_max = c_max;
  out.precision_bits = sched.start_bits;
  out.cases = verify_cases(c_max, sched);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> c_and_a;
  if (mode == ScanMode::Thm10) {
    for (std::uint64_t c = 2; c <= c_max; ++c) c_and_a.emplace_back(c, c);
  } else {
    for (std::uint64_t c = 2; c * c <= c_max; ++c) c_and_a.emplace_back(c, c * c);
  }

  const auto case_checks = [&] {
    std::vector<CheckResult> t = out.cases.checks;
    return t;
  };

  if (mode == ScanMode::Thm10) {
    ReadingResult r = detail::scan_reading("a=c", {"a=c", "l = w*c", &detail::length_product}, w_max, c_and_a, sched);
    r.tail_checks = case_checks();
    r.verdict = detail::combine(r.grid_verdict, r.tail_checks, !r.feasible_points.empty());
    out.readings.push_back(std::move(r));
  } else {
    ReadingResult squared = detail::scan_reading("a=c^2, l=w*a", {"squared", "l = w*c^2", &detail::length_product},
                                                 w_max, c_and_a, sched);
    // Every a = c^2 >= 4 lies inside the a >= 2 case analysis.
    squared.tail_checks = case_checks();
    squared.verdict = detail::combine(squared.grid_verdict, squared.tail_checks, !squared.feasible_points.empty());
    ReadingResult half = detail::scan_reading("a=c^2, l=w*a/2 (k = 2l/c^2)",
                                              {"keys", "l = w*c^2/2", &detail::length_half_product}, w_max, c_and_a,
                                              sched);
    half.tail_checks = detail::half_length_tail_checks(sched);
    half.verdict = detail::combine(half.grid_verdict, half.tail_checks, !half.feasible_points.empty());
    out.readings.push_back(std::move(squared));
    out.readings.push_back(std::move(half));
  }

  out.verdict = ScanVerdict::CertifiedInfeasible;
  for (const ReadingResult& r : out.readings) {
    if (r.verdict == ScanVerdict::FeasiblePointFound) {
      out.verdict = ScanVerdict::FeasiblePointFound;
      break;
    }
    if (r.verdict != ScanVerdict::CertifiedInfeasible) out.verdict = ScanVerdict::Unresolved;
  }
  return out;
}

/// (log2 e - 1 - log2 c) / 2: the bound log2 w must stay below.
inline Enclosure weight_exponent_bound(std::uint64_t c, unsigned precision_bits) {
  return (log2e_enclosure(precision_bits + 2) - ExactRational(1) - log2_enclosure(c, precision_bits + 2)) /
         ExactRational(2);
}

/// (log2 a + log2 e) / a, an upper bound for H(1/a).
inline Enclosure entropy_upper_bound(std::uint64_t a, unsigned precision_bits) {
  return (log2_enclosure(a, precision_bits + 2) + log2e_enclosure(precision_bits + 2)) / ExactRational(a);
}

/// c^2/(4(c-1)) * (H(1/c) - 1/c): the right side log2(wc) must stay below.
inline Enclosure combined_condition_rhs(std::uint64_t c, unsigned precision_bits) {
  const ExactRational inv(ExactInt(1), ExactInt(c));
  const ExactRational factor(ExactInt(c * c), ExactInt(4 * (c - 1)));
  return (entropy_enclosure(inv, precision_bits + 8) - inv) * factor;
}

struct CollapseReport {
  std::uint64_t probe_max = 0;
  std::vector<CheckResult> checks;
  /// (c, enclosure of (log2 e - 1 - log2 c)/2) for c = 2, 3.
  std::vector<std::pair<std::uint64_t, Enclosure>> samples;

  Certainty verdict() const { return all_true(checks); }
};

/// Certifies that sigma = (H(1/c) - 1/c)/2, c = l/w and
/// log2 l < c^2/(2(c-1)) * sigma cannot hold together for integer c >= 2, w >= 1.
inline CollapseReport theorem10_statement_collapse(std::uint64_t probe_max = std::uint64_t{1} << 16,
                                                   PrecisionSchedule sched = {}) {
  if (probe_max < 3) throw PreconditionError("collapse probe needs probe_max >= 3");
  CollapseReport out;
  out.probe_max = probe_max;
  const unsigned p = sched.start_bits;
  const Enclosure log2e = log2e_enclosure(p + 2);

  detail::Accumulator exponent, entropy_bound, direct, factor;
  for (std::uint64_t c = 2; c <= probe_max; ++c) {
    const std::string where = "c=" + std::to_string(c);
    const Enclosure lc = log2_enclosure(c, p + 2);
    const Enclosure rhs17 = (log2e - ExactRational(1) - lc) / ExactRational(2);
    Certainty neg = certify_less(rhs17, Enclosure(ExactRational(0)), p);
    if (neg.is_unresolved()) neg = certify_negative([c](unsigned b) { return weight_exponent_bound(c, b); }, sched);
    exponent.add(neg, where);

    const ExactRational inv(ExactInt(1), ExactInt(c));
    const Enclosure h = entropy_enclosure(inv, p + 2);
    Certainty hb = certify_less(h, (lc + log2e) / ExactRational(c), p);
    if (hb.is_unresolved()) {
      hb = certify_less([inv](unsigned b) { return entropy_enclosure(inv, b); },
                        [c](unsigned b) { return entropy_upper_bound(c, b); }, sched);
    }
    entropy_bound.add(hb, where);

    // Direct route without the entropy bound: the w = 1 instance already
    // fails, and log2(wc) only grows with w.
    const ExactRational fac(ExactInt(c * c), ExactInt(4 * (c - 1)));
    Certainty d = certify_less((h - inv) * fac, lc, p);
    if (d.is_unresolved()) {
      d = certify_less([c](unsigned b) { return combined_condition_rhs(c, b); },
                       [c](unsigned b) { return log2_enclosure(c, b); }, sched);
    }
    direct.add(d, where);

    factor.add(Certainty::from_bool(ExactRational(ExactInt(c), ExactInt(c - 1)) <= 2), where);
    if (c <= 3) out.samples.emplace_back(c, rhs17);
  }
  const std::string range = "c in [2, " + std::to_string(probe_max) + "]";
  out.checks.push_back({"rhs_negative", "(log2 e - 1 - log2 c)/2 < 0, forcing log2 w < 0", exponent.verdict,
                        exponent.evidence(range)});
  out.checks.push_back({"entropy_bound", "H(1/c) < (log2 c + log2 e)/c", entropy_bound.verdict,
                        entropy_bound.evidence(range)});
  out.checks.push_back({"factor", "c/(c-1) <= 2", factor.verdict, factor.evidence(range)});
  out.checks.push_back({"positive_numerator", "log2 c + log2 e - 1 > 0 for c >= 2 (log2 e > 1)",
                        certify_less(exactly(1), [](unsigned b) { return log2e_enclosure(b); }, sched),
                        "log2 e = " + describe(log2e)});
  out.checks.push_back({"direct_w1", "log2 c >= c^2/(4(c-1)) (H(1/c) - 1/c): fails already at w = 1",
                        direct.verdict, direct.evidence(range)});
  out.checks.push_back({"tail", "(log2 e - 1 - log2 c)/2 decreases in c, so c > probe stays negative",
                        Certainty::certified_true(), "log2 c increasing"});
  return out;
}

}  // namespace fpta

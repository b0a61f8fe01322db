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
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include "fpta/rigor/exact.hpp"

namespace fpta {

/// A closed rational interval [lo, hi] certified to contain some real value.
/// Point intervals represent exactly-known values.
class Enclosure {
 public:
  Enclosure() = default;
  explicit Enclosure(const ExactRational& point) : lo_(point), hi_(point) {}
  Enclosure(const ExactRational& lo, const ExactRational& hi) : lo_(lo), hi_(hi) {
    if (hi_ < lo_) throw DomainError("enclosure with lo > hi");
  }
  static Enclosure point(const ExactRational& v) { return Enclosure(v); }

  const ExactRational& lo() const noexcept { return lo_; }
  const ExactRational& hi() const noexcept { return hi_; }
  ExactRational width() const { return hi_ - lo_; }
  ExactRational midpoint() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const ExactRational& v) const { return lo_ <= v && v <= hi_; }
  bool intersects(const Enclosure& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }
  bool certainly_positive() const { return lo_ > 0; }
  bool certainly_negative() const { return hi_ < 0; }

  /// Both enclosures hold the same real value, so their overlap does too.
  Enclosure intersect(const Enclosure& o) const {
    if (!intersects(o)) throw DomainError("intersecting disjoint enclosures of one value");
    return Enclosure(std::max(lo_, o.lo_), std::min(hi_, o.hi_));
  }

  Enclosure operator-() const { return Enclosure(-hi_, -lo_); }

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    if (a.is_point() && b.is_point()) return Enclosure(a.lo_ * b.lo_);
    const ExactRational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
    const ExactRational p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    return Enclosure(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
  }
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b) {
    if (b.contains(0)) throw DomainError("enclosure division by an interval containing zero");
    return a * Enclosure(1 / b.hi_, 1 / b.lo_);
  }
  friend Enclosure operator*(const Enclosure& a, const ExactRational& s) {
    if (s >= 0) return Enclosure(a.lo_ * s, a.hi_ * s);
    return Enclosure(a.hi_ * s, a.lo_ * s);
  }
  friend Enclosure operator*(const ExactRational& s, const Enclosure& a) { return a * s; }
  friend Enclosure operator+(const Enclosure& a, const ExactRational& s) {
    return Enclosure(a.lo_ + s, a.hi_ + s);
  }
  friend Enclosure operator-(const Enclosure& a, const ExactRational& s) {
    return Enclosure(a.lo_ - s, a.hi_ - s);
  }
  friend Enclosure operator-(const ExactRational& s, const Enclosure& a) {
    return Enclosure(s - a.hi_, s - a.lo_);
  }
  friend Enclosure operator/(const Enclosure& a, const ExactRational& s) {
    if (s == 0) throw DomainError("enclosure division by zero");
    return a * ExactRational(1 / s);
  }

  friend bool operator==(const Enclosure& a, const Enclosure& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  ExactRational lo_;
  ExactRational hi_;
};

/// Decimal "mid ± halfwidth" rendering.
inline std::string describe(const Enclosure& e, unsigned digits = 12) {
  if (e.is_point()) return to_string(e.lo());
  return to_decimal(e.midpoint(), digits, Rounding::Nearest) + " ± " +
         to_decimal(e.width() / 2, digits, Rounding::Up);
}

inline std::ostream& operator<<(std::ostream& os, const Enclosure& e) {
  return os << "[" << to_string(e.lo()) << ", " << to_string(e.hi()) << "]";
}

/// Outcome of a rigorous comparison.
class Certainty {
 public:
  enum class Kind { CertifiedTrue, CertifiedFalse, Unresolved };

  static Certainty certified_true() { return Certainty(Kind::CertifiedTrue, 0); }
  static Certainty certified_false() { return Certainty(Kind::CertifiedFalse, 0); }
  /// `precision_bits` is where resolution was abandoned.
  static Certainty unresolved(unsigned precision_bits) {
    return Certainty(Kind::Unresolved, precision_bits);
  }
  static Certainty from_bool(bool value) {
    return value ? certified_true() : certified_false();
  }

  Kind kind() const noexcept { return kind_; }
  bool is_true() const noexcept { return kind_ == Kind::CertifiedTrue; }
  bool is_false() const noexcept { return kind_ == Kind::CertifiedFalse; }
  bool is_unresolved() const noexcept { return kind_ == Kind::Unresolved; }
  unsigned precision_bits() const noexcept { return bits_; }

  Certainty negated() const {
    switch (kind_) {
      case Kind::CertifiedTrue: return certified_false();
      case Kind::CertifiedFalse: return certified_true();
      default: return *this;
    }
  }

  friend bool operator==(const Certainty& a, const Certainty& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Unresolved || a.bits_ == b.bits_);
  }

  std::string name() const {
    switch (kind_) {
      case Kind::CertifiedTrue: return "CertifiedTrue";
      case Kind::CertifiedFalse: return "CertifiedFalse";
      default: return "Unresolved(" + std::to_string(bits_) + ")";
    }
  }

 private:
  Certainty(Kind k, unsigned bits) : kind_(k), bits_(bits) {}
  Kind kind_;
  unsigned bits_;
};

inline std::ostream& operator<<(std::ostream& os, const Certainty& c) { return os << c.name(); }

/// Three-valued conjunction: false dominates, then unresolved.
inline Certainty certainty_and(const Certainty& a, const Certainty& b) {
  if (a.is_false() || b.is_false()) return Certainty::certified_false();
  if (a.is_unresolved()) return a;
  if (b.is_unresolved()) return b;
  return Certainty::certified_true();
}

struct PrecisionSchedule {
  unsigned start_bits = 64;
  unsigned max_bits = 4096;
};

/// An enclosure of a fixed real value at a requested precision.
using EnclosureFn = std::function<Enclosure(unsigned precision_bits)>;

/// Single-shot a < b on fixed enclosures.
inline Certainty certify_less(const Enclosure& a, const Enclosure& b, unsigned bits = 0) {
  if (a.hi() < b.lo()) return Certainty::certified_true();
  if (b.hi() <= a.lo()) return Certainty::certified_false();
  return Certainty::unresolved(bits);
}

/// Single-shot a <= b. True needs a.hi <= b.lo, false needs b.hi < a.lo.
inline Certainty certify_less_equal(const Enclosure& a, const Enclosure& b, unsigned bits = 0) {
  if (a.hi() <= b.lo()) return Certainty::certified_true();
  if (b.hi() < a.lo()) return Certainty::certified_false();
  return Certainty::unresolved(bits);
}

/// Result of a refining comparison together with the last enclosures used.
struct Separation {
  Certainty verdict = Certainty::unresolved(0);
  Enclosure a;
  Enclosure b;
  unsigned precision_bits = 0;
};

enum class Relation { Less, LessEqual };

/// Compares a against b, doubling precision from `sched.start_bits` until the
/// enclosures separate or `sched.max_bits` is passed. The running
/// intersection of successive enclosures is kept, so a later round never
/// loses ground.
inline Separation separate(const EnclosureFn& a, const EnclosureFn& b, Relation rel, PrecisionSchedule sched = {}) {
  Separation out;
  unsigned bits = std::max(1u, sched.start_bits);
  bool first = true;
  while (bits <= sched.max_bits) {
    out.a = first ? a(bits) : out.a.intersect(a(bits));
    out.b = first ? b(bits) : out.b.intersect(b(bits));
    first = false;
    out.precision_bits = bits;
    out.verdict = rel == Relation::Less ? certify_less(out.a, out.b, bits) : certify_less_equal(out.a, out.b, bits);
    if (!out.verdict.is_unresolved()) return out;
    if (out.a.is_point() && out.b.is_point()) break;
    bits *= 2;
  }
  return out;
}

/// Certifies a < b. Equal values end Unresolved unless both are exact points.
inline Certainty certify_less(const EnclosureFn& a, const EnclosureFn& b, PrecisionSchedule sched = {}) {
  return separate(a, b, Relation::Less, sched).verdict;
}

inline Certainty certify_less_equal(const EnclosureFn& a, const EnclosureFn& b, PrecisionSchedule sched = {}) {
  return separate(a, b, Relation::LessEqual, sched).verdict;
}

/// A value known exactly, usable wherever an EnclosureFn is expected.
inline EnclosureFn exactly(const ExactRational& v) {
  return [v](unsigned) { return Enclosure(v); };
}

/// Certifies value > 0 (strict).
inline Certainty certify_positive(const EnclosureFn& value, PrecisionSchedule sched = {}) {
  return certify_less(exactly(0), value, sched);
}

/// Certifies value < 0 (strict).
inline Certainty certify_negative(const EnclosureFn& value, PrecisionSchedule sched = {}) {
  return certify_less(value, exactly(0), sched);
}

}  // namespace fpta

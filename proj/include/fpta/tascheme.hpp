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

// Key-based traceability schemes.
//
// A scheme hands each of n decoders a distinct k-subset of the base keys
// {0, ..., l-1}. A coalition of at most c decoders builds a pirate decoder
// from exactly k keys of the union of its key sets. Tracing accuses every
// decoder of maximum overlap with the pirate; the scheme is c-traceable when,
// for every coalition and every pirate, all accused decoders are colluders
// (a tie with an outsider counts as a failure).

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpta/combinatorics.hpp"
#include "fpta/errors.hpp"
#include "fpta/rigor/enclosure.hpp"
#include "fpta/rigor/exact.hpp"

namespace fpta {

using Key = std::uint32_t;
/// Sorted, duplicate-free key indices.
using KeyList = std::vector<Key>;

class KeyScheme {
 public:
  KeyScheme(std::size_t base_keys, std::vector<KeyList> decoders)
      : base_keys_(base_keys), decoders_(std::move(decoders)) {
    if (base_keys_ == 0) throw DomainError("base key count must be positive");
    if (decoders_.empty()) throw DomainError("a scheme needs at least one decoder");
    keys_per_decoder_ = decoders_.front().size();
    if (keys_per_decoder_ == 0) throw DomainError("decoders must hold at least one key");
    masks_.reserve(decoders_.size());
    for (std::size_t i = 0; i < decoders_.size(); ++i) {
      KeyList& d = decoders_[i];
      std::sort(d.begin(), d.end());
      if (d.size() != keys_per_decoder_) {
        throw DomainError("decoder " + std::to_string(i) + " holds " + std::to_string(d.size()) + " keys, expected " +
                          std::to_string(keys_per_decoder_));
      }
      if (std::adjacent_find(d.begin(), d.end()) != d.end()) {
        throw DomainError("decoder " + std::to_string(i) + " repeats a key");
      }
      if (d.back() >= base_keys_) {
        throw DomainError("decoder " + std::to_string(i) + " uses key " + std::to_string(d.back()) +
                          " outside [0, " + std::to_string(base_keys_) + ")");
      }
      masks_.push_back(to_mask(d));
    }
    std::set<KeyList> seen(decoders_.begin(), decoders_.end());
    if (seen.size() != decoders_.size()) throw DomainError("decoders must be pairwise distinct");
  }

  std::size_t base_keys() const noexcept { return base_keys_; }
  std::size_t size() const noexcept { return decoders_.size(); }
  std::size_t keys_per_decoder() const noexcept { return keys_per_decoder_; }
  const KeyList& decoder(std::size_t i) const { return decoders_.at(i); }
  const std::vector<KeyList>& decoders() const noexcept { return decoders_; }

  /// |keys ∩ decoder_i| for keys already in range.
  std::size_t overlap(std::size_t i, const std::vector<std::uint64_t>& key_mask) const {
    std::size_t count = 0;
    const auto& m = masks_[i];
    for (std::size_t w = 0; w < m.size(); ++w) count += static_cast<std::size_t>(std::popcount(m[w] & key_mask[w]));
    return count;
  }

  std::vector<std::uint64_t> to_mask(const KeyList& keys) const {
    std::vector<std::uint64_t> mask((base_keys_ + 63) / 64, 0);
    for (Key k : keys) mask[k / 64] |= std::uint64_t{1} << (k % 64);
    return mask;
  }

  /// Sorted union of the coalition's key sets.
  KeyList key_union(const Coalition& coalition) const {
    coalition.check_bounds(size());
    KeyList out;
    for (std::size_t m : coalition.members()) out.insert(out.end(), decoders_[m].begin(), decoders_[m].end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const KeyScheme& a, const KeyScheme& b) {
    return a.base_keys_ == b.base_keys_ && a.decoders_ == b.decoders_;
  }

 private:
  std::size_t base_keys_;
  std::vector<KeyList> decoders_;
  std::size_t keys_per_decoder_ = 0;
  std::vector<std::vector<std::uint64_t>> masks_;
};

struct TraceResult {
  std::size_t max_overlap = 0;
  /// Ascending; never empty.
  std::vector<std::size_t> argmax_decoders;
};

inline TraceResult trace(const KeyScheme& scheme, const KeyList& pirate) {
  for (Key k : pirate) {
    if (k >= scheme.base_keys()) throw DomainError("pirate key " + std::to_string(k) + " out of range");
  }
  const auto mask = scheme.to_mask(pirate);
  TraceResult r;
  for (std::size_t i = 0; i < scheme.size(); ++i) {
    const std::size_t o = scheme.overlap(i, mask);
    if (r.argmax_decoders.empty() || o > r.max_overlap) {
      r.max_overlap = o;
      r.argmax_decoders.assign(1, i);
    } else if (o == r.max_overlap) {
      r.argmax_decoders.push_back(i);
    }
  }
  return r;
}

struct TAWitness {
  Coalition coalition;
  KeyList pirate;
  /// Decoder outside the coalition that attains the maximum overlap.
  std::size_t outsider;
};

struct TAVerdict {
  Certainty verdict = Certainty::unresolved(0);
  std::optional<TAWitness> witness;
  /// Samples drawn (sampling verifier) or pirates examined (exhaustive).
  std::uint64_t examined = 0;
  std::string note;
};

namespace detail {

/// The first accused decoder outside the coalition, if any.
inline std::optional<std::size_t> accused_outsider(const KeyScheme& scheme, const Coalition& coalition,
                                                   const KeyList& pirate) {
  const TraceResult r = trace(scheme, pirate);
  for (std::size_t d : r.argmax_decoders) {
    if (!coalition.contains(d)) return d;
  }
  return std::nullopt;
}

}  // namespace detail

struct TAExactOptions {
  std::uint64_t step_budget = 1'000'000'000;
};

/// Exhaustive check over coalitions of size 1..c (ascending, lexicographic)
/// and all k-subsets of each coalition's key union (lexicographic).
inline TAVerdict is_traceable_exact(const KeyScheme& scheme, unsigned c, const TAExactOptions& options = {}) {
  if (c == 0) throw DomainError("coalition bound c must be positive");
  const std::size_t n = scheme.size();
  const std::size_t k = scheme.keys_per_decoder();
  const std::size_t cmax = std::min<std::size_t>(c, n);

  TAVerdict out;
  const ExactInt coalition_cost = count_coalitions(n, cmax) * n;
  if (coalition_cost > options.step_budget) {
    out.note = "budget exceeded: " + coalition_cost.str() + " coalition steps > " + std::to_string(options.step_budget);
    return out;
  }
  ExactInt pirate_cost = 0;
  for (std::size_t size = 1; size <= cmax; ++size) {
    for_each_combination(n, size, [&](std::span<const std::size_t> idx) {
      const Coalition t(std::vector<std::size_t>(idx.begin(), idx.end()));
      pirate_cost += binom(scheme.key_union(t).size(), k) * n;
      return pirate_cost > options.step_budget;
    });
  }
  if (pirate_cost > options.step_budget) {
    out.note = "budget exceeded: more than " + std::to_string(options.step_budget) + " pirate-trace steps";
    return out;
  }

  for (std::size_t size = 1; size <= cmax; ++size) {
    const bool found = for_each_combination(n, size, [&](std::span<const std::size_t> idx) {
      const Coalition t(std::vector<std::size_t>(idx.begin(), idx.end()));
      const KeyList u = scheme.key_union(t);
      return for_each_combination(u.size(), k, [&](std::span<const std::size_t> pick) {
        KeyList pirate(pick.size());
        for (std::size_t i = 0; i < pick.size(); ++i) pirate[i] = u[pick[i]];
        ++out.examined;
        if (auto outsider = detail::accused_outsider(scheme, t, pirate)) {
          out.witness = TAWitness{t, std::move(pirate), *outsider};
          return true;
        }
        return false;
      });
    });
    if (found) {
      out.verdict = Certainty::certified_false();
      return out;
    }
  }
  out.verdict = Certainty::certified_true();
  return out;
}

inline bool decoders_pairwise_disjoint(const KeyScheme& scheme) {
  std::vector<bool> used(scheme.base_keys(), false);
  for (const KeyList& d : scheme.decoders()) {
    for (Key key : d) {
      if (used[key]) return false;
      used[key] = true;
    }
  }
  return true;
}

/// Certifies traceability of a scheme whose decoders share no keys: the k
/// pirate keys come from at most c colluders, so some colluder overlaps the
/// pirate in at least ceil(k/c) >= 1 keys while every outsider overlaps 0.
inline TAVerdict is_traceable_structural_disjoint(const KeyScheme& scheme, unsigned c) {
  if (c == 0) throw DomainError("coalition bound c must be positive");
  if (!decoders_pairwise_disjoint(scheme)) {
    throw PreconditionError("structural verifier requires pairwise disjoint decoders");
  }
  TAVerdict out;
  out.verdict = Certainty::certified_true();
  const std::size_t k = scheme.keys_per_decoder();
  out.note = "disjoint decoders: some colluder overlaps >= " + std::to_string((k + c - 1) / c) +
             ", every outsider overlaps 0";
  return out;
}

/// Bounded uniform draws from mt19937_64 by rejection; the sequence is fixed
/// for a given seed on every platform.
class SeededDraws {
 public:
  explicit SeededDraws(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t reject_under = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = gen_();
      if (r >= reject_under) return r % bound;
    }
  }

  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  /// First `count` entries of a partial Fisher-Yates shuffle, then sorted.
  template <class T>
  std::vector<T> choose(std::vector<T> pool, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(below(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

 private:
  std::mt19937_64 gen_;
};

/// Randomized falsifier. Per trial: coalition size uniform in
/// [min(2, c'), c'] with c' = min(c, n), then a uniform coalition of that
/// size, then a uniform k-subset of its key union. Only a violation is
/// conclusive; without one the verdict stays Unresolved.
inline TAVerdict sample_traceability(const KeyScheme& scheme, unsigned c, std::uint64_t trials, std::uint64_t seed) {
  TAVerdict out;
  out.note = "no violation in sampled coalitions";
  if (trials == 0 || c == 0) return out;
  const std::size_t n = scheme.size();
  const std::size_t k = scheme.keys_per_decoder();
  const std::size_t hi = std::min<std::size_t>(c, n);
  const std::size_t lo = std::min<std::size_t>(2, hi);
  std::vector<std::size_t> everyone(n);
  std::iota(everyone.begin(), everyone.end(), std::size_t{0});

  SeededDraws draws(seed);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    ++out.examined;
    const auto size = static_cast<std::size_t>(draws.between(lo, hi));
    const Coalition t(draws.choose(everyone, size));
    KeyList pirate = draws.choose(scheme.key_union(t), k);
    if (auto outsider = detail::accused_outsider(scheme, t, pirate)) {
      // Re-check by direct tracing before reporting.
      const TraceResult r = trace(scheme, pirate);
      const bool confirmed = !t.contains(*outsider) &&
                             std::find(r.argmax_decoders.begin(), r.argmax_decoders.end(), *outsider) !=
                                 r.argmax_decoders.end();
      if (!confirmed) throw std::logic_error("sampled witness failed re-check");
      out.verdict = Certainty::certified_false();
      out.witness = TAWitness{t, std::move(pirate), *outsider};
      out.note = "violation found at trial " + std::to_string(trial);
      return out;
    }
  }
  return out;
}

/// Decoder i holds keys i*k .. i*k + k - 1.
inline KeyScheme make_disjoint_scheme(std::size_t l, std::size_t n, std::size_t k) {
  if (n * k > l) {
    throw DomainError("disjoint scheme needs n*k <= l (" + std::to_string(n * k) + " > " + std::to_string(l) + ")");
  }
  std::vector<KeyList> decoders(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) decoders[i].push_back(static_cast<Key>(i * k + j));
  }
  return KeyScheme(l, std::move(decoders));
}

/// n <= C(l, t) / C(k-1, t-1) with t = ceil(k/c).
struct SWBoundReport {
  std::uint64_t t = 0;
  ExactInt numerator;
  ExactInt denominator;
  ExactRational value;
};

inline SWBoundReport sw_upper_bound(std::uint64_t l, std::uint64_t k, std::uint64_t c) {
  if (k == 0) throw DomainError("keys per decoder must be positive");
  if (c == 0) throw DomainError("coalition bound c must be positive");
  if (k > l) throw DomainError("keys per decoder exceed the base key count");
  SWBoundReport r;
  r.t = (k + c - 1) / c;
  r.numerator = binom(l, r.t);
  r.denominator = binom(k - 1, r.t - 1);
  r.value = make_rational(r.numerator, r.denominator);
  return r;
}

}  // namespace fpta

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

// Plain-text formats.
//
// Codes: one codeword per line, one character per symbol ('0'-'9', 'a'-'f'),
// leftmost character is position 0. Schemes: a header "l n k", then n lines
// of k strictly increasing 0-based key indices. In both, '#' starts a comment
// and blank lines are ignored.

#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fpta/errors.hpp"
#include "fpta/fpcode.hpp"
#include "fpta/tascheme.hpp"

namespace fpta {

namespace detail {

struct TextLine {
  std::size_t number;
  std::string_view body;
};

/// Non-blank lines with comments stripped, keeping 1-based line numbers.
inline std::vector<TextLine> content_lines(std::string_view text) {
  std::vector<TextLine> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      const auto last = line.find_last_not_of(" \t\r");
      out.push_back({number, line.substr(first, last - first + 1)});
    }
    if (text.empty()) break;
  }
  return out;
}

inline std::vector<std::uint64_t> parse_numbers(const TextLine& line) {
  std::vector<std::uint64_t> out;
  std::string_view rest = line.body;
  while (!rest.empty()) {
    const auto start = rest.find_first_not_of(" \t");
    if (start == std::string_view::npos) break;
    rest = rest.substr(start);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc{} || (ptr != rest.data() + rest.size() && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError(line.number, "expected a non-negative integer, got '" +
                                        std::string(rest.substr(0, rest.find_first_of(" \t"))) + "'");
    }
    out.push_back(v);
    rest = rest.substr(static_cast<std::size_t>(ptr - rest.data()));
  }
  return out;
}

inline int symbol_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  return -1;
}

}  // namespace detail

/// Alphabet defaults to max(2, largest symbol + 1).
inline Code parse_code(std::string_view text, std::optional<unsigned> alphabet = std::nullopt) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(0, "no codewords found");
  std::vector<Word> words;
  int largest = 0;
  for (const auto& line : lines) {
    if (line.body.size() != lines.front().body.size()) {
      throw ParseError(line.number, "codeword has length " + std::to_string(line.body.size()) + ", expected " +
                                        std::to_string(lines.front().body.size()));
    }
    Word w;
    w.reserve(line.body.size());
    for (char ch : line.body) {
      const int v = detail::symbol_value(ch);
      if (v < 0) throw ParseError(line.number, std::string("invalid symbol '") + ch + "'");
      if (alphabet && static_cast<unsigned>(v) >= *alphabet) {
        throw ParseError(line.number, std::string("symbol '") + ch + "' outside alphabet of size " +
                                          std::to_string(*alphabet));
      }
      largest = std::max(largest, v);
      w.push_back(static_cast<Symbol>(v));
    }
    words.push_back(std::move(w));
  }
  for (std::size_t i = 1; i < words.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (words[i] == words[j]) {
        throw ParseError(lines[i].number, "duplicate of codeword on line " + std::to_string(lines[j].number));
      }
    }
  }
  return Code(std::move(words), alphabet.value_or(std::max(2u, static_cast<unsigned>(largest) + 1)));
}

inline std::string write_code(const Code& code) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * (code.length() + 1));
  for (const Word& w : code.words()) {
    for (Symbol s : w) out.push_back(kDigits[s]);
    out.push_back('\n');
  }
  return out;
}

inline KeyScheme parse_scheme(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(0, "missing header line 'l n k'");
  const auto header = detail::parse_numbers(lines.front());
  if (header.size() != 3) throw ParseError(lines.front().number, "header must be 'l n k'");
  const std::uint64_t l = header[0], n = header[1], k = header[2];
  if (k == 0 || n == 0) throw ParseError(lines.front().number, "n and k must be positive");
  if (lines.size() - 1 != n) {
    throw ParseError(lines.size() > n + 1 ? lines[n + 1].number : lines.back().number,
                     "expected " + std::to_string(n) + " decoder lines, found " + std::to_string(lines.size() - 1));
  }
  std::vector<KeyList> decoders;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto keys = detail::parse_numbers(lines[i]);
    if (keys.size() != k) {
      throw ParseError(lines[i].number, "decoder lists " + std::to_string(keys.size()) + " keys, expected " +
                                            std::to_string(k));
    }
    KeyList d;
    for (std::size_t j = 0; j < keys.size(); ++j) {
      if (keys[j] >= l) throw ParseError(lines[i].number, "key " + std::to_string(keys[j]) + " >= l");
      if (j > 0 && keys[j] <= keys[j - 1]) throw ParseError(lines[i].number, "keys must be strictly increasing");
      d.push_back(static_cast<Key>(keys[j]));
    }
    decoders.push_back(std::move(d));
  }
  try {
    return KeyScheme(l, std::move(decoders));
  } catch (const DomainError& e) {
    throw ParseError(0, e.what());
  }
}

inline std::string write_scheme(const KeyScheme& scheme) {
  std::ostringstream out;
  out << scheme.base_keys() << ' ' << scheme.size() << ' ' << scheme.keys_per_decoder() << '\n';
  for (const KeyList& d : scheme.decoders()) {
    for (std::size_t j = 0; j < d.size(); ++j) out << (j ? " " : "") << d[j];
    out << '\n';
  }
  return out.str();
}

}  // namespace fpta

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

// Built-in instances so each reproduction runs without input files.

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fpta/fpcode.hpp"
#include "fpta/tascheme.hpp"
#include "fpta/text_format.hpp"

namespace fpta {

struct Fixture {
  std::string name;
  std::string description;
  std::variant<Code, KeyScheme> object;

  bool is_code() const { return std::holds_alternative<Code>(object); }
  std::string text() const {
    return is_code() ? write_code(std::get<Code>(object)) : write_scheme(std::get<KeyScheme>(object));
  }
};

inline std::vector<Fixture> builtin_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"gamma64", "three identity blocks, 29 one-columns, 26 zero-columns: n=3, l=64, weight 32",
                 construct_identity_concat(3, 29, 26, 3)});
  out.push_back({"lemma3_G", "{0011, 0110, 1100}; not 2-frame-proof", parse_code("0011\n0110\n1100\n")});
  out.push_back({"disjoint_256_8_32", "l=256 keys, 8 disjoint decoders of 32 keys", make_disjoint_scheme(256, 8, 32)});
  out.push_back({"disjoint_6_3_2", "l=6 keys, 3 disjoint decoders of 2 keys", make_disjoint_scheme(6, 3, 2)});
  out.push_back({"triangle", "decoders {0,1}, {1,2}, {0,2}; not 2-traceable",
                 KeyScheme(3, {{0, 1}, {1, 2}, {0, 2}})});
  return out;
}

inline std::optional<Fixture> find_fixture(const std::string& name) {
  for (Fixture& f : builtin_fixtures()) {
    if (f.name == name) return std::move(f);
  }
  return std::nullopt;
}

}  // namespace fpta

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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "fpta/cli.hpp"

namespace fpta::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("fpta_cli_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

TEST(Cli, VerifyFrameproofFixture) {
  const Outcome o = run_cli({"verify-fp", "gamma64", "--c", "2", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = o.json();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["frameproof"], true);
  EXPECT_EQ(j["code"]["n"], 3);
  EXPECT_EQ(j["code"]["l"], 64);
  EXPECT_EQ(j["code"]["weights"], Json::array({32}));
  EXPECT_EQ(j["code"]["min_distance"], 6);
}

TEST(Cli, VerifyFrameproofWitness) {
  const Outcome o = run_cli({"verify-fp", "lemma3_G", "--c", "2", "--format", "json"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.json()["frameproof"], false);
  EXPECT_EQ(o.json()["witness"]["coalition_words"], Json::array({"0011", "1100"}));
  EXPECT_EQ(o.json()["witness"]["framed_word"], "0110");
}

TEST(Cli, ParseErrorNamesLine) {
  const std::string path = temp_file("bad.code", "0011\n# fine\n011\n");
  const Outcome o = run_cli({"verify-fp", path});
  EXPECT_EQ(o.code, kParse);
  EXPECT_NE(o.err.find("line 3"), std::string::npos) << o.err;
}

TEST(Cli, VerifyTraceability) {
  Outcome o = run_cli({"verify-ta", "disjoint_256_8_32", "--c", "4", "--mode", "structural", "--format", "json"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.json()["result"]["verdict"], "CertifiedTrue");

  o = run_cli({"verify-ta", "triangle", "--c", "2", "--mode", "exact", "--format", "json"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.json()["result"]["verdict"], "CertifiedFalse");
  EXPECT_EQ(o.json()["result"]["witness"]["accused_outsider"], 2);

  o = run_cli({"verify-ta", "disjoint_256_8_32", "--c", "4", "--mode", "sample", "--seed", "42", "--trials", "1000",
               "--format", "json"});
  ASSERT_EQ(o.code, 0);
  EXPECT_TRUE(o.json()["result"]["verdict"].get<std::string>().starts_with("Unresolved"));
  EXPECT_FALSE(o.json()["result"].contains("witness"));

  o = run_cli({"verify-ta", "triangle", "--c", "2", "--mode", "structural"});
  EXPECT_EQ(o.code, kUsage);
}

TEST(Cli, Bounds) {
  Outcome o = run_cli({"bounds", "thm6", "--q", "64", "--delta", "3", "--c", "2", "--sigma", "7/64", "--l", "64",
                       "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  Json r = o.json()["report"];
  EXPECT_EQ(r["lower_log2"]["exact"], "45");
  EXPECT_EQ(r["upper_exact"], "8589934590");
  EXPECT_EQ(r["sigma_ok"], true);
  EXPECT_EQ(r["contradiction"], "CertifiedTrue");

  o = run_cli({"bounds", "thm7", "--q", "256", "--delta", "3", "--c", "4", "--sigma", "9/256", "--l", "256", "--k",
               "32", "--precision-bits", "128", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  r = o.json()["report"];
  EXPECT_EQ(r["lower_between"], "2^61 < lower < 2^62");
  EXPECT_EQ(r["upper_below"], "upper < 2^28");
  EXPECT_EQ(r["contradiction"], "CertifiedTrue");

  o = run_cli({"bounds", "thm6", "--q", "6", "--delta", "3", "--c", "2", "--sigma", "7/64", "--l", "64"});
  EXPECT_EQ(o.code, kUsage);
  EXPECT_NE(o.err.find("not a prime power"), std::string::npos);
}

TEST(Cli, Entropy) {
  Outcome o = run_cli({"entropy", "1/2", "--format", "json"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.json()["H"]["exact"], "1");
  o = run_cli({"entropy", "1/16", "--format", "json"});
  EXPECT_TRUE(o.json()["H"]["lo"].get<std::string>().starts_with("0.33729"));
  o = run_cli({"entropy", "3/2"});
  EXPECT_EQ(o.code, kDomain);
}

TEST(Cli, ScanRejectsSmallExtents) {
  EXPECT_EQ(run_cli({"scan", "--wmax", "3", "--cmax", "2"}).code, kUsage);
}

TEST(Cli, ScanSmall) {
  const Outcome o = run_cli({"scan", "--mode", "thm10", "--wmax", "5", "--cmax", "19", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const Json j = o.json();
  EXPECT_EQ(j["verdict"], "CertifiedInfeasible");
  EXPECT_EQ(j["readings"][0]["sporadic_pairs_w_a"].size(), 5u);
  EXPECT_EQ(j["either_or_exhibits"][0]["side"], "LeftOnly");
  EXPECT_EQ(j["either_or_exhibits"][1]["side"], "RightOnly");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"nonsense"}).code, kUsage);
  EXPECT_EQ(run_cli({"verify-fp", "no_such_thing"}).code, kUsage);
  EXPECT_EQ(run_cli({"verify-fp", "gamma64", "--definition", "other"}).code, kUsage);
  EXPECT_EQ(run_cli({"verify-ta", "gamma64"}).code, kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, BudgetExceededExitCode) {
  std::string body;
  for (int i = 0; i < 200; ++i) {
    std::string w(16, '0');
    for (int b = 0; b < 16; ++b) w[b] = (i >> (b % 8)) & 1 ? '1' : '0';
    w[8 + i % 8] = '1';
    body += std::to_string(i % 2) + std::string(w) + std::to_string(i / 100) + std::to_string((i / 10) % 10) +
            std::to_string(i % 10) + "\n";
  }
  const std::string path = temp_file("big.code", body);
  EXPECT_EQ(run_cli({"verify-fp", path, "--c", "8", "--alphabet", "10"}).code, kBudget);
}

TEST(CliProperty, DeterministicOutput) {
  const std::vector<std::vector<std::string>> commands = {
      {"verify-fp", "lemma3_G", "--format", "json"},
      {"verify-ta", "triangle", "--mode", "sample", "--seed", "9", "--trials", "500", "--format", "json"},
      {"bounds", "thm7", "--q", "256", "--delta", "3", "--c", "4", "--sigma", "9/256", "--l", "256", "--k", "32",
       "--format", "json", "--exact"},
      {"scan", "--wmax", "5", "--cmax", "19", "--format", "json"},
      {"entropy", "1/3", "--precision-bits", "200"},
  };
  for (const auto& args : commands) {
    const Outcome a = run_cli(args), b = run_cli(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(CliProperty, FixtureRoundTrip) {
  for (const Fixture& f : builtin_fixtures()) {
    const Outcome o = run_cli({"fixtures", "emit", f.name});
    ASSERT_EQ(o.code, 0);
    EXPECT_EQ(o.out, f.text());
    if (f.is_code()) {
      EXPECT_EQ(parse_code(o.out), std::get<Code>(f.object));
    } else {
      EXPECT_EQ(parse_scheme(o.out), std::get<KeyScheme>(f.object));
    }
    // Written to disk, the file reproduces the fixture's verdicts.
    const std::string path = temp_file(f.name, o.out);
    const std::string cmd = f.is_code() ? "verify-fp" : "verify-ta";
    Json from_file = run_cli({cmd, path, "--format", "json"}).json();
    Json built_in = run_cli({cmd, f.name, "--format", "json"}).json();
    from_file.erase("input");
    built_in.erase("input");
    EXPECT_EQ(from_file, built_in);
  }
  const Outcome list = run_cli({"fixtures", "list", "--format", "json"});
  EXPECT_EQ(list.json()["fixtures"].size(), builtin_fixtures().size());
  EXPECT_EQ(run_cli({"fixtures", "emit", "nope"}).code, kUsage);
}

TEST(CliProperty, TextAndJsonCarrySameVerdict) {
  const Outcome text = run_cli({"verify-fp", "gamma64"});
  EXPECT_NE(text.out.find("frameproof: true"), std::string::npos) << text.out;
  EXPECT_NE(text.out.find("min_distance: 6"), std::string::npos);
}

}  // namespace
}  // namespace fpta::cli

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

// Command-line front end. Every command builds one ordered JSON report;
// --format text renders the same tree as indented "key: value" lines, so
// both formats carry identical content.
//
// Exit status: 0 when the analysis completed (whatever the verdict),
// 2 usage or precondition error, 3 parse error, 4 budget exceeded,
// 5 argument outside the mathematical domain.

#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fpta/bounds.hpp"
#include "fpta/fixtures.hpp"
#include "fpta/fpcode.hpp"
#include "fpta/paramscan.hpp"
#include "fpta/rigor.hpp"
#include "fpta/tascheme.hpp"
#include "fpta/text_format.hpp"

namespace fpta::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kUsage = 2, kParse = 3, kBudget = 4, kDomain = 5 };

struct RunConfig {
  std::string command;
  std::string sub;
  std::string input;
  unsigned c = 2;
  unsigned precision_bits = 64;
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
  std::string format = "text";
  std::string definition = "unanimity";
  std::string mode;
  bool exact = false;
  std::optional<unsigned> alphabet;
  // bounds
  std::uint64_t q = 0, delta = 0, l = 0, w = 0, k = 0, s = 2;
  std::string sigma;
  // scan
  std::uint64_t w_max = 64, c_max = 64;
  std::uint64_t probe = std::uint64_t{1} << 16;
  std::string x;
};

inline constexpr unsigned kDecimalDigits = 15;

inline Json enclosure_json(const Enclosure& e, bool exact) {
  Json j;
  j["lo"] = to_decimal(e.lo(), kDecimalDigits, Rounding::Down);
  j["hi"] = to_decimal(e.hi(), kDecimalDigits, Rounding::Up);
  j["approx"] = describe(e, kDecimalDigits);
  if (e.is_point()) {
    j["exact"] = to_string(e.lo());
  } else if (exact) {
    j["lo_exact"] = to_string(e.lo());
    j["hi_exact"] = to_string(e.hi());
  }
  return j;
}

inline Json certainty_json(const Certainty& c) {
  if (c.is_unresolved()) return c.name() + " (" + std::to_string(c.precision_bits()) + " bits)";
  return c.name();
}

inline std::string word_string(const Word& w) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (Symbol x : w) s.push_back(kDigits[x]);
  return s;
}

inline Json indices_json(std::span<const std::size_t> v) { return Json(std::vector<std::size_t>(v.begin(), v.end())); }

/// Renders a report tree as indented text.
inline void render_text(const Json& j, std::ostream& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  const auto flat = [](const Json& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); });
  };
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      if (v.is_primitive()) {
        out << pad << key << ": " << scalar(v) << '\n';
      } else if (flat(v)) {
        out << pad << key << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        out << "]\n";
      } else {
        out << pad << key << ":\n";
        render_text(v, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const Json& v : j) {
      if (v.is_primitive() || flat(v)) {
        out << pad << "- " << (v.is_primitive() ? scalar(v) : v.dump()) << '\n';
      } else {
        out << pad << "-\n";
        render_text(v, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar(j) << '\n';
  }
}

inline void emit(const Json& report, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    out << report.dump(2) << '\n';
  } else {
    render_text(report, out);
  }
}

inline Json header(const RunConfig& cfg) {
  Json j;
  j["schema"] = 1;
  j["command"] = cfg.sub.empty() ? cfg.command : cfg.command + " " + cfg.sub;
  return j;
}

/// A path on disk, or else the name of a built-in fixture.
inline std::string load_input(const std::string& input, bool want_code) {
  if (std::filesystem::exists(input)) {
    std::ifstream in(input);
    if (!in) throw PreconditionError("cannot read " + input);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  if (auto f = find_fixture(input)) {
    if (f->is_code() != want_code) {
      throw PreconditionError("fixture " + input + " is a " + (f->is_code() ? "code" : "scheme"));
    }
    return f->text();
  }
  throw PreconditionError("no such file or built-in fixture: " + input);
}

inline FeasibleDefinition parse_definition(const std::string& s) {
  return s == "coordset" ? FeasibleDefinition::CoordinateSet : FeasibleDefinition::Unanimity;
}

inline Json cmd_verify_fp(const RunConfig& cfg) {
  const Code code = parse_code(load_input(cfg.input, true), cfg.alphabet);
  const FeasibleDefinition def = parse_definition(cfg.definition);
  const FrameproofVerdict v = is_frameproof(code, cfg.c, def);
  Json j = header(cfg);
  j["input"] = cfg.input;
  j["parameters"] = {{"c", cfg.c}, {"definition", to_string(def)}};
  const auto weights = weight_set(code);
  Json info;
  info["n"] = code.size();
  info["l"] = code.length();
  info["alphabet"] = code.alphabet();
  info["weights"] = Json(std::vector<std::size_t>(weights.begin(), weights.end()));
  info["constant_weight"] = weights.size() == 1;
  if (code.size() >= 2) info["min_distance"] = min_distance(code);
  j["code"] = info;
  j["frameproof"] = v.is_frameproof;
  if (v.witness) {
    Json wj;
    wj["coalition"] = indices_json(v.witness->coalition.members());
    Json words = Json::array();
    for (std::size_t m : v.witness->coalition.members()) words.push_back(word_string(code.word(m)));
    wj["coalition_words"] = words;
    wj["framed"] = v.witness->framed;
    wj["framed_word"] = word_string(code.word(v.witness->framed));
    j["witness"] = wj;
  }
  return j;
}

inline Json ta_verdict_json(const TAVerdict& v) {
  Json j;
  j["verdict"] = certainty_json(v.verdict);
  j["examined"] = v.examined;
  if (!v.note.empty()) j["note"] = v.note;
  if (v.witness) {
    j["witness"] = {{"coalition", indices_json(v.witness->coalition.members())},
                    {"pirate", Json(v.witness->pirate)},
                    {"accused_outsider", v.witness->outsider}};
  }
  return j;
}

inline Json cmd_verify_ta(const RunConfig& cfg) {
  const KeyScheme scheme = parse_scheme(load_input(cfg.input, false));
  const std::string mode = cfg.mode.empty() ? "exact" : cfg.mode;
  Json j = header(cfg);
  j["input"] = cfg.input;
  Json params = {{"c", cfg.c}, {"mode", mode}};
  if (mode == "sample") {
    params["seed"] = cfg.seed;
    params["trials"] = cfg.trials;
  }
  j["parameters"] = params;
  j["scheme"] = {{"l", scheme.base_keys()},
                 {"n", scheme.size()},
                 {"k", scheme.keys_per_decoder()},
                 {"pairwise_disjoint", decoders_pairwise_disjoint(scheme)}};
  TAVerdict v;
  if (mode == "exact") v = is_traceable_exact(scheme, cfg.c);
  else if (mode == "structural") v = is_traceable_structural_disjoint(scheme, cfg.c);
  else v = sample_traceability(scheme, cfg.c, cfg.trials, cfg.seed);
  j["result"] = ta_verdict_json(v);
  return j;
}

inline Json bound_report_json(const BoundReport& r, bool exact) {
  Json j;
  j["lower_log2"] = enclosure_json(r.lower_log2, exact);
  const ExactInt lf = floor_of(r.lower_log2.lo());
  if (lf == floor_of(r.lower_log2.hi()) && !r.lower_log2.is_point()) {
    j["lower_between"] = "2^" + lf.str() + " < lower < 2^" + ExactInt(lf + 1).str();
  }
  j["upper_exact"] = to_string(r.upper_exact);
  j["upper_log2"] = enclosure_json(r.upper_log2, exact);
  const ExactInt uc = ceil_of(r.upper_log2.hi());
  j["upper_below"] = "upper < 2^" + uc.str();
  j["sigma_ok"] = r.sigma_ok;
  j["sigma_check"] = certainty_json(r.sigma_check);
  j["contradiction"] = certainty_json(r.contradiction);
  j["separation"] = "log2(upper) <= " + to_decimal(r.upper_log2.hi(), kDecimalDigits, Rounding::Up) +
                    " vs log2(lower) >= " + to_decimal(r.lower_log2.lo(), kDecimalDigits, Rounding::Down);
  j["precision_bits"] = r.precision_bits;
  j["issues"] = Json(r.issues);
  return j;
}

inline Json cmd_bounds(const RunConfig& cfg) {
  if (cfg.sigma.empty()) throw PreconditionError("--sigma is required");
  const ExactRational sigma = parse_rational(cfg.sigma);
  const PrecisionSchedule sched{cfg.precision_bits, std::max(cfg.precision_bits, 4096u)};
  Json j = header(cfg);
  if (cfg.sub == "thm6") {
    const std::uint64_t w = cfg.w ? cfg.w : (cfg.c ? cfg.l / cfg.c : 0);
    const Thm6Params p{cfg.q, cfg.delta, cfg.c, sigma, cfg.l, w};
    j["parameters"] = {{"q", p.q}, {"delta", p.delta}, {"c", p.c}, {"sigma", to_string(sigma)},
                       {"l", p.l},  {"w", p.w},         {"s", cfg.s}};
    j["report"] = bound_report_json(contradiction_report_thm6(p, cfg.s, sched), cfg.exact);
  } else {
    const Thm7Params p{cfg.q, cfg.delta, cfg.c, sigma, cfg.l, cfg.k};
    const SWBoundReport sw = sw_upper_bound(p.l, p.k, p.c);
    j["parameters"] = {{"q", p.q}, {"delta", p.delta}, {"c", p.c}, {"sigma", to_string(sigma)},
                       {"l", p.l},  {"k", p.k}};
    Json r = bound_report_json(contradiction_report_thm7(p, sched), cfg.exact);
    r["upper_formula"] = {{"t", sw.t}, {"numerator", sw.numerator.str()}, {"denominator", sw.denominator.str()}};
    j["report"] = r;
  }
  return j;
}

inline Json checks_json(std::span<const CheckResult> checks) {
  Json a = Json::array();
  for (const CheckResult& c : checks) {
    a.push_back({{"id", c.id}, {"statement", c.statement}, {"verdict", certainty_json(c.verdict)},
                 {"evidence", c.evidence}});
  }
  return a;
}

inline Json window_json(const DeltaWindow& w, bool exact) {
  Json j;
  j["w"] = w.w;
  j["a"] = w.a;
  j["l"] = to_string(w.length);
  j["lower"] = to_string(w.lower);
  j["upper"] = enclosure_json(w.upper, exact);
  j["integer_exists"] = certainty_json(w.integer_exists);
  if (w.smallest_integer) j["smallest_integer"] = *w.smallest_integer;
  return j;
}

inline Json either_or_json(std::uint64_t w, std::uint64_t a, std::uint64_t delta, PrecisionSchedule sched) {
  const EitherOr e = either_or_classify(w, a, delta, sched);
  return {{"w", w},
          {"a", a},
          {"delta", delta},
          {"left", certainty_json(e.left)},
          {"right", certainty_json(e.right)},
          {"side", e.side ? to_string(*e.side) : std::string("Unresolved")}};
}

inline Json cmd_scan(const RunConfig& cfg) {
  const ScanMode mode = cfg.mode == "thm11" ? ScanMode::Thm11 : ScanMode::Thm10;
  const PrecisionSchedule sched{cfg.precision_bits, std::max(cfg.precision_bits, 4096u)};
  const ScanReport r = scan_infeasibility(cfg.w_max, cfg.c_max, mode, sched);
  Json j = header(cfg);
  j["parameters"] = {{"mode", to_string(mode)}, {"w_max", cfg.w_max}, {"c_max", cfg.c_max},
                     {"precision_bits", cfg.precision_bits}};
  j["verdict"] = to_string(r.verdict);
  Json cases;
  cases["probe_max"] = r.cases.probe_max;
  cases["verdict"] = certainty_json(r.cases.verdict());
  cases["w2_last_positive_a"] = r.cases.w2_last_positive ? Json(*r.cases.w2_last_positive) : Json();
  cases["c2_positive_weights"] = Json(r.cases.c2_positive_weights);
  Json sporadic = Json::array();
  for (const auto& [cand, f] : r.cases.sporadic_values) {
    sporadic.push_back({{"w", cand.w}, {"a", cand.a}, {"f", enclosure_json(f, cfg.exact)}});
  }
  cases["sporadic_f"] = sporadic;
  cases["checks"] = checks_json(r.cases.checks);
  j["case_analysis"] = cases;

  Json readings = Json::array();
  for (const ReadingResult& rd : r.readings) {
    Json x;
    x["reading"] = rd.name;
    x["length_rule"] = rd.length_rule;
    x["verdict"] = to_string(rd.verdict);
    x["grid"] = {{"points", rd.entries.size()},
                 {"skipped_non_integer_length", rd.skipped_non_integer_length},
                 {"no_integer_everywhere", certainty_json(rd.grid_verdict)},
                 {"feasible_points", rd.feasible_points.size()},
                 {"unresolved_points", Json(rd.unresolved_points)}};
    std::map<std::string, std::uint64_t> family_sizes;
    Json sporadic_pairs = Json::array();
    Json cands = Json::array();
    for (const Candidate& cand : rd.candidates) {
      ++family_sizes[to_string(cand.tag)];
      if (cand.tag == CaseTag::D_finite_pair) sporadic_pairs.push_back(Json::array({cand.w, cand.a}));
      const auto it = std::find_if(rd.entries.begin(), rd.entries.end(), [&](const ScanEntry& e) {
        return e.window.w == cand.w && e.window.a == cand.a;
      });
      if (it == rd.entries.end()) continue;
      Json cj = window_json(it->window, cfg.exact);
      cj["c"] = it->c;
      cj["tag"] = to_string(cand.tag);
      cj["f"] = enclosure_json(it->f, cfg.exact);
      cands.push_back(cj);
    }
    x["candidate_families"] = Json(family_sizes);
    x["sporadic_pairs_w_a"] = sporadic_pairs;
    x["tail_checks"] = checks_json(rd.tail_checks);
    if (rd.non_sufficiency_witness) {
      x["non_sufficiency_witness"] = {{"w", rd.non_sufficiency_witness->first},
                                      {"a", rd.non_sufficiency_witness->second},
                                      {"note", "f > 0 certified, yet no integer in the window"}};
    }
    x["either_or_tally"] = {{"LeftOnly", rd.either_or.left_only},   {"RightOnly", rd.either_or.right_only},
                            {"Both", rd.either_or.both},           {"Neither", rd.either_or.neither},
                            {"Unresolved", rd.either_or.unresolved}};
    x["candidates"] = cands;
    readings.push_back(x);
  }
  j["readings"] = readings;
  if (mode == ScanMode::Thm10) {
    j["either_or_exhibits"] = Json::array({either_or_json(32, 2, 16, sched), either_or_json(32, 2, 2, sched)});
  }
  return j;
}

inline Json cmd_collapse(const RunConfig& cfg) {
  const PrecisionSchedule sched{cfg.precision_bits, std::max(cfg.precision_bits, 4096u)};
  const CollapseReport r = theorem10_statement_collapse(cfg.probe, sched);
  Json j = header(cfg);
  j["parameters"] = {{"probe_max", cfg.probe}, {"precision_bits", cfg.precision_bits}};
  j["verdict"] = certainty_json(r.verdict());
  Json samples = Json::array();
  for (const auto& [c, e] : r.samples) samples.push_back({{"c", c}, {"bound", enclosure_json(e, cfg.exact)}});
  j["samples"] = samples;
  j["checks"] = checks_json(r.checks);
  return j;
}

inline Json cmd_entropy(const RunConfig& cfg) {
  const ExactRational x = parse_rational(cfg.x);
  const Enclosure h = entropy_enclosure(x, cfg.precision_bits);
  Json j = header(cfg);
  j["x"] = to_string(x);
  j["precision_bits"] = cfg.precision_bits;
  j["H"] = enclosure_json(h, cfg.exact);
  return j;
}

inline int cmd_fixtures(const RunConfig& cfg, std::ostream& out) {
  if (cfg.sub == "emit") {
    const auto f = find_fixture(cfg.input);
    if (!f) throw PreconditionError("unknown fixture: " + cfg.input);
    out << f->text();
    return kOk;
  }
  Json j = header(cfg);
  Json list = Json::array();
  for (const Fixture& f : builtin_fixtures()) {
    list.push_back({{"name", f.name}, {"kind", f.is_code() ? "code" : "scheme"}, {"description", f.description}});
  }
  j["fixtures"] = list;
  emit(j, cfg, out);
  return kOk;
}

/// Parses `args` (without the program name) and runs one command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Verification of frame-proof codes, traceability schemes and their size bounds", "fpta"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  const auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--precision-bits", cfg.precision_bits, "Starting precision of enclosures")
        ->check(CLI::Range(8u, 4096u));
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--exact", cfg.exact, "Print exact rational endpoints of enclosures");
  };

  CLI::App* fp = app.add_subcommand("verify-fp", "Exact c-frame-proof check of a code");
  fp->add_option("code", cfg.input, "Code file or built-in fixture name")->required();
  fp->add_option("--c", cfg.c, "Coalition bound")->check(CLI::PositiveNumber);
  fp->add_option("--definition", cfg.definition, "Feasible-set definition")
      ->check(CLI::IsMember({"unanimity", "coordset"}));
  fp->add_option("--alphabet", cfg.alphabet, "Alphabet size (default: inferred)")->check(CLI::Range(2u, 16u));
  add_common(fp);

  CLI::App* ta = app.add_subcommand("verify-ta", "c-traceability check of a key scheme");
  ta->add_option("scheme", cfg.input, "Scheme file or built-in fixture name")->required();
  ta->add_option("--c", cfg.c, "Coalition bound")->check(CLI::PositiveNumber);
  ta->add_option("--mode", cfg.mode, "Verifier")->check(CLI::IsMember({"exact", "structural", "sample"}));
  ta->add_option("--seed", cfg.seed, "Sampler seed");
  ta->add_option("--trials", cfg.trials, "Sampler trials");
  add_common(ta);

  CLI::App* bd = app.add_subcommand("bounds", "Claimed lower bound against the published upper bound");
  bd->add_option("which", cfg.sub, "thm6 (codes) or thm7 (schemes)")
      ->required()
      ->check(CLI::IsMember({"thm6", "thm7"}));
  bd->add_option("--q", cfg.q, "Prime power q")->required();
  bd->add_option("--delta", cfg.delta, "Distance parameter delta")->required();
  bd->add_option("--c", cfg.c, "Coalition bound")->required();
  bd->add_option("--sigma", cfg.sigma, "sigma as p/q or decimal")->required();
  bd->add_option("--l", cfg.l, "Code length or key count")->required();
  bd->add_option("--w", cfg.w, "Weight (codes; default l/c)");
  bd->add_option("--k", cfg.k, "Keys per decoder (schemes)");
  bd->add_option("--s", cfg.s, "Alphabet size for the code upper bound");
  add_common(bd);

  CLI::App* sc = app.add_subcommand("scan", "Parameter-space infeasibility scan");
  sc->add_option("--mode", cfg.mode, "thm10 (a = c) or thm11 (a = c^2)")->check(CLI::IsMember({"thm10", "thm11"}));
  sc->add_option("--wmax", cfg.w_max, "Largest weight scanned (>= 5)");
  sc->add_option("--cmax", cfg.c_max, "Largest coalition parameter scanned (>= 19)");
  add_common(sc);

  CLI::App* co = app.add_subcommand("collapse", "Certify that the weight condition forces w < 1");
  co->add_option("--probe", cfg.probe, "Largest c certified on the grid")->check(CLI::Range(3ull, 1ull << 24));
  add_common(co);

  CLI::App* en = app.add_subcommand("entropy", "Enclosure of the binary entropy H(x)");
  en->add_option("x", cfg.x, "Rational in [0, 1]")->required();
  add_common(en);

  CLI::App* fx = app.add_subcommand("fixtures", "List or print built-in instances");
  fx->add_option("action", cfg.sub, "list or emit")->required()->check(CLI::IsMember({"list", "emit"}));
  fx->add_option("name", cfg.input, "Fixture to emit");
  fx->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    if (cfg.command == "fixtures") {
      if (cfg.sub == "emit" && cfg.input.empty()) throw PreconditionError("fixtures emit needs a name");
      return cmd_fixtures(cfg, out);
    }
    Json report;
    if (cfg.command == "verify-fp") report = cmd_verify_fp(cfg);
    else if (cfg.command == "verify-ta") report = cmd_verify_ta(cfg);
    else if (cfg.command == "bounds") report = cmd_bounds(cfg);
    else if (cfg.command == "scan") report = cmd_scan(cfg);
    else if (cfg.command == "collapse") report = cmd_collapse(cfg);
    else report = cmd_entropy(cfg);
    emit(report, cfg, out);
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  }
}

}  // namespace fpta::cli

// Copyright 2026 The strongirr Authors
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

// Command-line front end. Every subcommand maps to one library operation
// and ends with one of five exit codes:
//   0 proved or success, 1 refuted, 2 undecided, 3 input error,
//   4 resource budget exhausted.
// With --json a single report object is printed; its "timing" member is
// the only part that depends on the clock.

#pragma once

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "strongirr/alexander.hpp"
#include "strongirr/families.hpp"
#include "strongirr/localize.hpp"
#include "strongirr/parse.hpp"
#include "strongirr/report.hpp"
#include "strongirr/strongcheck.hpp"

namespace strongirr::cli {

enum ExitCode : int { kSuccess = 0, kRefuted = 1, kUndecided = 2, kInputError = 3, kResource = 4 };

struct Options {
  bool json = false;
  bool laurent = false;
  bool use_stdin = false;
  std::size_t vars = 0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  long max_degree = FactorOptions{}.max_total_degree;
  int max_k = StrongOptions{}.max_uniform_k;
  std::size_t gb_steps = GroebnerOptions{}.max_pairs;

  std::string poly, p, q, f, gens, braid, matrix, family, k;
  std::size_t strands = 0;
  std::size_t n = 1;
  long bound = 2;
  std::size_t limit = 20;
  std::size_t index = 0;  // elementary ideal index
  int degree = 2;
  std::size_t trials = 500;
  int coeff_box = 100;
};

struct Outcome {
  int code = kSuccess;
  report::Json result = report::Json::object();
  std::string text;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

inline int verdict_code(const Verdict& v) {
  switch (v.status) {
    case Status::proved:
      return kSuccess;
    case Status::refuted:
      return kRefuted;
    default:
      return v.reason.rfind("resource:", 0) == 0 ? kResource : kUndecided;
  }
}

inline FactorOptions factor_options(const Options& o) {
  FactorOptions f;
  f.max_total_degree = o.max_degree;
  return f;
}

inline StrongOptions strong_options(const Options& o) {
  StrongOptions s;
  s.max_uniform_k = o.max_k;
  s.factor = factor_options(o);
  s.groebner.max_pairs = o.gb_steps;
  return s;
}

inline CoprimeOptions coprime_options(const Options& o) {
  CoprimeOptions c;
  c.strong = strong_options(o);
  return c;
}

/// Parses several polynomials into one ring: --vars if given, otherwise the
/// largest variable index used by any of them.
inline std::vector<Poly<Int>> parse_polys(const std::vector<std::string>& texts, const Options& o, bool laurent) {
  std::size_t n = o.vars;
  if (n == 0)
    for (const auto& t : texts) n = std::max(n, parse_int_polynomial(t, {.laurent = laurent, .nvars = 0}).nvars());
  std::vector<Poly<Int>> out;
  for (const auto& t : texts) out.push_back(parse_int_polynomial(t, {.laurent = laurent, .nvars = n}));
  return out;
}

inline std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  for (const auto& part : split(s, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(part, &used);
    } catch (const std::exception&) {
      throw InputError("expected an integer, got '" + part + "'");
    }
    if (used != part.size()) throw InputError("expected an integer, got '" + part + "'");
    out.push_back(v);
  }
  return out;
}

inline std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

/// The main polynomial: a family member from --family/--k, stdin, or the
/// positional argument.
inline Poly<Int> main_poly(const Options& o, std::istream& in) {
  if (!o.k.empty()) {
    if (o.family.empty()) throw InputError("--k needs --family");
    return build_family_poly({parse_family(o.family), parse_longs(o.k)});
  }
  std::string text = o.use_stdin ? trim(read_all(in)) : o.poly;
  if (text.empty()) throw InputError("no polynomial given");
  return parse_polys({text}, o, o.laurent)[0];
}

inline ModulePresentation parse_matrix(const std::string& text) {
  report::Json j;
  try {
    j = report::Json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("matrix JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vars") || !j.contains("matrix"))
    throw InputError("matrix JSON needs the members \"vars\" and \"matrix\"");
  if (!j["vars"].is_number_unsigned()) throw InputError("\"vars\" must be a positive integer");
  const std::size_t vars = j["vars"].get<std::size_t>();
  const auto& rows = j["matrix"];
  if (!rows.is_array()) throw InputError("\"matrix\" must be an array of rows");
  std::size_t cols = 0;
  if (j.contains("cols")) {
    if (!j["cols"].is_number_unsigned()) throw InputError("\"cols\" must be a nonnegative integer");
    cols = j["cols"].get<std::size_t>();
  } else if (!rows.empty() && rows[0].is_array()) {
    cols = rows[0].size();
  } else {
    throw InputError("an empty matrix needs \"cols\"");
  }
  LaurentMatrix m;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InputError("each matrix row must be an array");
    std::vector<Poly<Int>> r;
    for (const auto& e : row) {
      if (e.is_string())
        r.push_back(parse_int_polynomial(e.get<std::string>(), {.laurent = true, .nvars = vars}));
      else if (e.is_number_integer())
        r.push_back(Poly<Int>::constant(Ring{vars, true}, Int(e.get<long>())));
      else
        throw InputError("matrix entries must be polynomial strings or integers");
    }
    m.push_back(std::move(r));
  }
  return ModulePresentation(vars, cols, std::move(m));
}

inline std::string matrix_text(const Options& o, std::istream& in) {
  std::string t = o.use_stdin ? read_all(in) : o.matrix;
  if (trim(t).empty()) throw InputError("no matrix given (use --matrix or --stdin)");
  return t;
}

inline std::string presentation_text(const ModulePresentation& m, VarStyle style) {
  std::ostringstream s;
  s << "presentation: " << m.rows << " x " << m.cols << "\n";
  for (const auto& row : m.matrix) {
    s << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) s << (j ? ", " : "") << to_string(row[j], style);
    s << "]\n";
  }
  return s.str();
}

// ---------------------------------------------------------------------------
// Subcommands.

inline Outcome check_irred(const Options& o, std::istream& in) {
  const Poly<Int> p = main_poly(o, in);
  const FactorMode mode = o.laurent ? FactorMode::laurent : FactorMode::ordinary;
  const Verdict v = is_irreducible(p, mode, factor_options(o));
  Outcome r{verdict_code(v)};
  r.result["input"] = to_string(p);
  r.result["mode"] = o.laurent ? "laurent" : "ordinary";
  r.result["verdict"] = report::verdict(v);
  r.text = "input: " + to_string(p) + "\n" + report::verdict_text(v);
  return r;
}

inline Outcome check_strong_irred(const Options& o, std::istream& in) {
  const Poly<Int> p = main_poly(o, in);
  const Verdict v = check_strongly_irreducible(p, strong_options(o));
  Outcome r{verdict_code(v)};
  r.result["input"] = to_string(p);
  r.result["verdict"] = report::verdict(v);
  r.text = "input: " + to_string(p) + "\n" + report::verdict_text(v);
  return r;
}

inline Outcome check_coprime(const Options& o, std::istream&) {
  if (o.p.empty() || o.q.empty()) throw InputError("check-coprime needs --p and --q");
  auto pq = parse_polys({o.p, o.q}, o, o.laurent);
  const Verdict v = check_strongly_coprime(pq[0], pq[1], coprime_options(o));
  Outcome r{verdict_code(v)};
  r.result["p"] = to_string(pq[0]);
  r.result["q"] = to_string(pq[1]);
  r.result["verdict"] = report::verdict(v);
  r.text = "p: " + to_string(pq[0]) + "\nq: " + to_string(pq[1]) + "\n" + report::verdict_text(v);
  return r;
}

inline Outcome check_vector_coprime(const Options& o, std::istream&) {
  auto ps = split(o.p, ';'), qs = split(o.q, ';');
  if (ps.empty() || ps.size() != qs.size()) throw InputError("--p and --q need the same number of ';'-separated entries");
  std::vector<std::string> all = ps;
  all.insert(all.end(), qs.begin(), qs.end());
  auto polys = parse_polys(all, o, o.laurent);
  std::vector<Poly<Int>> P(polys.begin(), polys.begin() + static_cast<long>(ps.size()));
  std::vector<Poly<Int>> Q(polys.begin() + static_cast<long>(ps.size()), polys.end());
  const Verdict v = check_vector_coprime(P, Q, coprime_options(o));
  Outcome r{verdict_code(v)};
  report::Json jp = report::Json::array(), jq = report::Json::array();
  for (const auto& x : P) jp.push_back(to_string(x));
  for (const auto& x : Q) jq.push_back(to_string(x));
  r.result["p"] = std::move(jp);
  r.result["q"] = std::move(jq);
  r.result["verdict"] = report::verdict(v);
  r.text = report::verdict_text(v);
  return r;
}

inline Outcome gen_family(const Options& o, std::istream&) {
  if (o.family.empty()) throw InputError("gen-family needs --family F1 or F2");
  const Family fam = parse_family(o.family);
  std::vector<FamilySpec> specs;
  if (!o.k.empty())
    specs.push_back({fam, parse_longs(o.k)});
  else
    specs = enumerate_family(fam, o.n, o.bound, o.limit);
  Outcome r;
  report::Json members = report::Json::array();
  for (const auto& s : specs) {
    members.push_back(report::family_member(s));
    std::string ks;
    for (long v : s.k) ks += (ks.empty() ? "" : ",") + std::to_string(v);
    r.text += to_string(s.family) + " k=(" + ks + "): " + to_string(build_family_poly(s)) + "\n";
  }
  r.result["members"] = std::move(members);
  return r;
}

inline Outcome slice_poly(const Options& o, std::istream& in) {
  const Poly<Int> p = main_poly(o, in);
  const Poly<Int> s = slice_polynomial(p);
  const bool cop = coprime_with_bar(p);
  Outcome r;
  r.result["input"] = to_string(p);
  r.result["slice"] = to_string(s);
  r.result["coprime_with_bar"] = cop;
  r.text = "input: " + to_string(p) + "\nslice: " + to_string(s) + "\ncoprime with bar: " + (cop ? "yes" : "no") + "\n";
  return r;
}

inline Outcome elementary_ideal_cmd(const Options& o, std::istream& in) {
  const ModulePresentation m = parse_matrix(matrix_text(o, in));
  const LaurentIdeal I = elementary_ideal(m, o.index);
  Outcome r;
  r.result["k"] = o.index;
  r.result["zero_ideal"] = I.is_zero();
  r.result["unit_ideal"] = I.is_unit();
  r.result["generators"] = report::ideal(I);
  r.text = "E_" + std::to_string(o.index) + ":";
  if (I.is_zero()) r.text += " zero ideal";
  for (const auto& g : I.generators) r.text += "\n  " + to_string(g);
  r.text += "\n";
  return r;
}

inline Outcome divisorial_hull_cmd(const Options& o, std::istream& in) {
  std::string text = o.use_stdin ? read_all(in) : o.gens;
  auto parts = split(text, ';');
  Ring ring{std::max<std::size_t>(o.vars, 1), true};
  std::vector<Poly<Int>> gens;
  if (!parts.empty()) {
    gens = parse_polys(parts, o, o.laurent);
    ring = Ring{gens[0].nvars(), true};
    for (auto& g : gens) g = to_laurent(g);
  }
  const DivisorialHull h = divisorial_hull(LaurentIdeal{ring, gens});
  Outcome r;
  report::Json jg = report::Json::array();
  for (const auto& g : gens) jg.push_back(to_string(g));
  r.result["generators"] = std::move(jg);
  r.result["zero_ideal"] = h.zero_ideal;
  r.result["hull"] = to_string(h.generator);
  r.text = "hull: " + to_string(h.generator) + (h.zero_ideal ? " (zero ideal)" : "") + "\n";
  return r;
}

inline Outcome torsion_alex(const Options& o, std::istream& in) {
  ModulePresentation m;
  VarStyle style = VarStyle::x;
  Outcome r;
  if (!o.braid.empty() || o.strands > 0) {
    if (o.strands == 0) throw InputError("--braid needs --strands");
    auto closure = braid_closure(parse_braid(o.braid, o.strands), o.strands);
    m = closure.presentation;
    style = VarStyle::t;
    r.result["source"] = "braid";
    r.result["components"] = closure.components;
  } else {
    m = parse_matrix(matrix_text(o, in));
    r.result["source"] = "matrix";
    r.result["components"] = nullptr;
  }
  const TorsionAlexander t = torsion_alexander(m);
  r.result["delta"] = to_string(t.delta, style);
  r.result["rank"] = t.rank;
  r.result["free_rank"] = t.free_rank;
  r.text = "delta: " + to_string(t.delta, style) + "\nrank: " + std::to_string(t.rank) +
           "\nfree rank: " + std::to_string(t.free_rank) + "\n";
  return r;
}

inline Outcome braid_alex(const Options& o, std::istream&) {
  if (o.strands == 0) throw InputError("braid-alex needs --strands");
  const Braid b = parse_braid(o.braid, o.strands);
  const BraidClosure c = braid_closure(b, o.strands);
  const TorsionAlexander t = torsion_alexander(c.presentation);
  Outcome r;
  r.result["braid"] = b;
  r.result["strands"] = o.strands;
  r.result["components"] = c.components;
  r.result["component_of_strand"] = c.component;
  r.result["presentation"] = report::matrix(c.presentation, VarStyle::t);
  r.result["delta"] = to_string(t.delta, VarStyle::t);
  r.result["rank"] = t.rank;
  r.result["free_rank"] = t.free_rank;
  r.text = "components: " + std::to_string(c.components) + "\n" + presentation_text(c.presentation, VarStyle::t) +
           "delta: " + to_string(t.delta, VarStyle::t) + "\nfree rank: " + std::to_string(t.free_rank) + "\n";
  return r;
}

inline Outcome verify_ribbon(const Options& o, std::istream& in) {
  const RibbonCertificate c = verify_ribbon_presentation(main_poly(o, in));
  Outcome r{c.certified ? kSuccess : kUndecided};
  r.result["p"] = to_string(c.p);
  r.result["p_bar"] = to_string(c.p_bar);
  r.result["coprime"] = c.coprime;
  r.result["h1_torsion"] = to_string(c.h1_torsion);
  r.result["h2_relative"] = to_string(c.h2_relative);
  r.result["product"] = to_string(c.product);
  r.result["quotient_by_p"] = to_string(c.quotient_by_p);
  r.result["quotient_by_pbar"] = to_string(c.quotient_by_pbar);
  r.result["presentation"] = report::matrix(c.presentation);
  r.result["certified"] = c.certified;
  r.text = "p: " + to_string(c.p) + "\ncoprime(p, bar p): " + (c.coprime ? "yes" : "no") +
           "\nH1 torsion order: " + to_string(c.h1_torsion) + "\nH2 piece order: " + to_string(c.h2_relative) +
           "\n" + presentation_text(c.presentation, VarStyle::x) + "certified: " + (c.certified ? "yes" : "no") + "\n";
  return r;
}

inline Outcome blanchfield(const Options& o, std::istream& in) {
  if (o.f.empty()) throw InputError("blanchfield-witness needs --f");
  std::vector<Poly<Int>> pf;
  if (!o.k.empty()) {
    const Poly<Int> p = main_poly(o, in);
    Options fo = o;
    fo.vars = p.nvars();
    pf = {p, parse_polys({o.f}, fo, true)[0]};
  } else {
    if (o.p.empty()) throw InputError("blanchfield-witness needs --p or --family/--k");
    pf = parse_polys({o.p, o.f}, o, true);
  }
  const BlanchfieldWitness w = blanchfield_self_link_witness(pf[0], pf[1], factor_options(o));
  Outcome r{w.nonzero ? kSuccess : kUndecided};
  r.result["p"] = to_string(w.value.p);
  r.result["f"] = to_string(w.f);
  r.result["numerator"] = to_string(w.value.numerator);
  r.result["denominator"] = to_string(w.value.denominator);
  r.result["p_divides_numerator"] = w.p_divides_numerator;
  r.result["nonzero"] = w.nonzero;
  r.text = "numerator: " + to_string(w.value.numerator) + "\ndenominator: " + to_string(w.value.denominator) +
           "\np divides numerator: " + (w.p_divides_numerator ? "yes" : "no") + "\nnonzero: " + (w.nonzero ? "yes" : "no") +
           "\n";
  return r;
}

inline Outcome reduce_ideal(const Options& o, std::istream&) {
  if (o.p.empty() || o.q.empty()) throw InputError("reduce-ideal needs --p and --q");
  auto pq = parse_polys({o.p, o.q}, o, o.laurent);
  std::vector<std::pair<long, long>> gens;
  for (const auto& pair : split(o.gens, ';')) {
    auto v = parse_longs(pair);
    if (v.size() != 2) throw InputError("each generator in --gens is 's,t'");
    gens.emplace_back(v[0], v[1]);
  }
  const LocalizedIdeal I = make_localized_ideal(pq[0], pq[1], gens, factor_options(o));
  const Reduction red = reduce_localized_ideal(I);
  const bool ok = verify_principality(I, red);
  Outcome r{ok ? kSuccess : kUndecided};
  r.result["p"] = to_string(I.primes[0]);
  r.result["q"] = to_string(I.primes[1]);
  report::Json in_gens = report::Json::array();
  for (const auto& [s, t] : gens) in_gens.push_back({s, t});
  r.result["input"] = std::move(in_gens);
  auto jr = report::reduction(red);
  r.result["generator"] = jr["generator"];
  r.result["steps"] = jr["steps"];
  r.result["verified"] = ok;
  r.text = "generator: p^" + std::to_string(red.generator[0]) + " * q^" + std::to_string(red.generator[1]) + "\n";
  for (const auto& st : red.steps)
    if (st.kind == StepKind::combine)
      r.text += "witness: " + to_string(st.witness) + " (coprime to p*q: " + (st.witness_coprime ? "yes" : "no") + ")\n";
  r.text += std::string("verified: ") + (ok ? "yes" : "no") + "\n";
  return r;
}

inline Outcome genericity(const Options& o, std::istream&) {
  GroebnerOptions g;
  g.max_pairs = o.gb_steps;
  const GenericityReport rep = genericity_sample(o.vars == 0 ? 3 : o.vars, o.degree, o.trials, o.coeff_box, o.seed,
                                                 std::max(1u, o.threads), g);
  Outcome r;
  r.result = report::genericity(rep);
  std::ostringstream s;
  s << "vars: " << rep.n_vars << "\ndegree: " << rep.degree << "\ntrials: " << rep.trials << "\npassed: " << rep.passed
    << "\nfailed: " << rep.failed << "\nundecided: " << rep.undecided << "\npass rate: " << rep.pass_rate << "\n";
  r.text = s.str();
  return r;
}

using Handler = std::function<Outcome(const Options&, std::istream&)>;

}  // namespace detail

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact strong-irreducibility, Alexander-module and localization computations", "strongirr"};
  app.require_subcommand(1);
  Options o;
  std::map<std::string, detail::Handler> handlers;
  std::map<std::string, CLI::App*> subs;

  auto add = [&](const std::string& name, const std::string& help, detail::Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_flag("--json", o.json, "Print a JSON report");
    s->add_flag("--laurent", o.laurent, "Allow negative exponents in polynomial arguments");
    s->add_option("--vars", o.vars, "Number of variables of the ambient ring");
    s->add_flag("--stdin", o.use_stdin, "Read the main input from standard input");
    s->add_option("--max-degree", o.max_degree, "Largest total degree handed to the factorizer")->capture_default_str();
    s->add_option("--max-k", o.max_k, "Largest uniform power tried by the refutation search")->capture_default_str();
    s->add_option("--gb-steps", o.gb_steps, "S-pair budget of the Groebner engine")->capture_default_str();
    handlers[name] = std::move(h);
    subs[name] = s;
    return s;
  };
  auto poly_input = [&](CLI::App* s) {
    s->add_option("poly", o.poly, "Polynomial, e.g. \"1 + x1 - x2\"");
    s->add_option("--family", o.family, "Family F1 or F2 (with --k)");
    s->add_option("--k", o.k, "Family coefficients, comma separated");
  };

  poly_input(add("check-irred", "Irreducibility over Z (Laurent ring with --laurent)", detail::check_irred));
  poly_input(add("check-strong-irred", "Irreducibility of every power substitution", detail::check_strong_irred));
  {
    auto* s = add("check-coprime", "Strong coprimality of two polynomials", detail::check_coprime);
    s->add_option("--p", o.p, "First polynomial")->required();
    s->add_option("--q", o.q, "Second polynomial")->required();
  }
  {
    auto* s = add("check-vector-coprime", "Strong coprimality of polynomial vectors", detail::check_vector_coprime);
    s->add_option("--p", o.p, "Entries separated by ';'")->required();
    s->add_option("--q", o.q, "Entries separated by ';'")->required();
  }
  {
    auto* s = add("gen-family", "Enumerate or build family members", detail::gen_family);
    s->add_option("--family", o.family, "F1 or F2")->required();
    s->add_option("--k", o.k, "Build one member from these coefficients");
    s->add_option("--n", o.n, "Size parameter n (2n or 2n+1 coefficients)")->capture_default_str();
    s->add_option("--bound", o.bound, "Coefficient bound")->capture_default_str();
    s->add_option("--limit", o.limit, "Maximum number of members")->capture_default_str();
  }
  poly_input(add("slice-poly", "The symmetric product p * bar(p)", detail::slice_poly));
  {
    auto* s = add("elementary-ideal", "Elementary ideal E_k of a presentation", detail::elementary_ideal_cmd);
    s->add_option("--matrix", o.matrix, "JSON {\"vars\":n,\"matrix\":[[...]]}");
    s->add_option("--k", o.index, "Index k")->capture_default_str();
  }
  {
    auto* s = add("divisorial-hull", "Smallest principal ideal containing the generators", detail::divisorial_hull_cmd);
    s->add_option("--gens", o.gens, "Generators separated by ';'");
  }
  {
    auto* s = add("torsion-alex", "Torsion Alexander polynomial of a presentation or closed braid", detail::torsion_alex);
    s->add_option("--matrix", o.matrix, "JSON {\"vars\":n,\"matrix\":[[...]]}");
    s->add_option("--braid", o.braid, "Braid word such as \"s1 s2^-1\"");
    s->add_option("--strands", o.strands, "Number of strands");
  }
  {
    auto* s = add("braid-alex", "Fox-calculus presentation of a closed braid", detail::braid_alex);
    s->add_option("--braid", o.braid, "Braid word such as \"s1 s2^-1\"");
    s->add_option("--strands", o.strands, "Number of strands")->required();
  }
  poly_input(add("verify-ribbon", "Certify the cyclic presentation of order p * bar(p)", detail::verify_ribbon));
  {
    auto* s = add("blanchfield-witness", "Certify a nonzero self-linking value", detail::blanchfield);
    s->add_option("--p", o.p, "Prime p");
    s->add_option("--f", o.f, "Numerator f of Bl(e1, e2) = f/p")->required();
    s->add_option("--family", o.family, "Family F1 or F2 for p (with --k)");
    s->add_option("--k", o.k, "Family coefficients for p");
  }
  {
    auto* s = add("reduce-ideal", "Reduce <p^s q^t, ...> to one generator after localizing", detail::reduce_ideal);
    s->add_option("--p", o.p, "First prime")->required();
    s->add_option("--q", o.q, "Second prime")->required();
    s->add_option("--gens", o.gens, "Exponent pairs \"s,t;s,t\"")->required();
  }
  {
    auto* s = add("genericity", "Sample random homogeneous polynomials against the criterion", detail::genericity);
    s->add_option("--degree", o.degree, "Degree")->capture_default_str();
    s->add_option("--trials", o.trials, "Number of samples")->capture_default_str();
    s->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    s->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
    s->add_option("--coeff-box", o.coeff_box, "Coefficients are drawn from [-box, box]")->capture_default_str();
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  std::string name;
  for (const auto& [n, s] : subs)
    if (s->parsed()) name = n;

  const auto start = std::chrono::steady_clock::now();
  int code = kSuccess;
  report::Json result, error;
  std::string text;
  try {
    Outcome r = handlers.at(name)(o, in);
    code = r.code;
    result = std::move(r.result);
    text = std::move(r.text);
  } catch (const ResourceExhausted& e) {
    code = kResource;
    error = {{"kind", "resource"}, {"message", e.what()}};
  } catch (const HypothesisError& e) {
    code = kInputError;
    error = {{"kind", "hypothesis"}, {"message", e.what()}};
  } catch (const InputError& e) {
    code = kInputError;
    error = {{"kind", "input"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    code = kUndecided;
    error = {{"kind", "internal"}, {"message", e.what()}};
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.json) {
    report::Json j;
    j["command"] = name;
    j["exit_code"] = code;
    if (error.is_null())
      j["result"] = std::move(result);
    else
      j["error"] = std::move(error);
    j["timing"] = {{"elapsed_ms", ms}};
    out << j.dump(2) << "\n";
  } else if (error.is_null()) {
    out << text;
  } else {
    err << "error (" << error["kind"].get<std::string>() << "): " << error["message"].get<std::string>() << "\n";
  }
  return code;
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args), std::cin, std::cout, std::cerr);
}

}  // namespace strongirr::cli

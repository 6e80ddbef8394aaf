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

// JSON and text renderings of library results. Keys are emitted in a fixed
// order so equal results serialize to equal bytes. Big integers are strings.

#pragma once

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "strongirr/alexander.hpp"
#include "strongirr/families.hpp"
#include "strongirr/localize.hpp"
#include "strongirr/strongcheck.hpp"
#include "strongirr/verdict.hpp"

namespace strongirr::report {

using Json = nlohmann::ordered_json;

inline Json exponents(const Monomial& m) {
  Json a = Json::array();
  for (int e : m.exponents()) a.push_back(e);
  return a;
}

inline Json poly(const Poly<Int>& p, VarStyle style = VarStyle::x) { return to_string(p, style); }

inline Json factorization(const Factorization& f, VarStyle style = VarStyle::x) {
  Json j;
  j["unit"] = f.unit.get_str();
  j["monomial_unit"] = f.monomial_unit.size() == f.ring.nvars ? exponents(f.monomial_unit) : exponents(Monomial(f.ring.nvars));
  Json fs = Json::array();
  for (const auto& [g, e] : f.factors) fs.push_back(Json{{"factor", poly(g, style)}, {"multiplicity", e}});
  j["factors"] = std::move(fs);
  return j;
}

inline std::string factorization_text(const Factorization& f, VarStyle style = VarStyle::x) {
  std::string s;
  auto add = [&](const std::string& part) { s += s.empty() ? part : " * " + part; };
  if (f.unit != 1 || f.factors.empty()) add(f.unit.get_str());
  if (f.monomial_unit.size() == f.ring.nvars && !f.monomial_unit.is_one()) add(monomial_to_string(f.monomial_unit, style));
  for (const auto& [g, e] : f.factors) add("(" + to_string(g, style) + ")" + (e > 1 ? "^" + std::to_string(e) : ""));
  return s;
}

inline Json witness(const Verdict& v, VarStyle style = VarStyle::x) {
  if (const auto* fw = std::get_if<FactorWitness>(&v.witness)) {
    Json j;
    j["type"] = "factorization";
    j["substitution"] = fw->substitution;
    j["substituted"] = poly(fw->substituted, style);
    j["factorization"] = factorization(fw->factorization, style);
    j["verified"] = verify_witness(v);
    return j;
  }
  if (const auto* cw = std::get_if<CommonFactorWitness>(&v.witness)) {
    Json j;
    j["type"] = "common-factor";
    Json ip = Json::array(), iq = Json::array();
    for (const auto& m : cw->images_p) ip.push_back(exponents(m));
    for (const auto& m : cw->images_q) iq.push_back(exponents(m));
    j["images_p"] = std::move(ip);
    j["images_q"] = std::move(iq);
    j["p_eval"] = poly(cw->p_eval, style);
    j["q_eval"] = poly(cw->q_eval, style);
    j["common_factor"] = poly(cw->common_factor, style);
    j["verified"] = verify_witness(v);
    return j;
  }
  return nullptr;
}

inline Json verdict(const Verdict& v, VarStyle style = VarStyle::x) {
  Json j;
  j["status"] = to_string(v.status);
  j["rule"] = v.rule.empty() ? Json(nullptr) : Json(v.rule);
  j["reason"] = v.reason.empty() ? Json(nullptr) : Json(v.reason);
  j["index"] = v.index ? Json(*v.index) : Json(nullptr);
  j["witness"] = witness(v, style);
  return j;
}

inline std::string verdict_text(const Verdict& v, VarStyle style = VarStyle::x) {
  std::ostringstream o;
  o << "status: " << to_string(v.status) << "\n";
  if (!v.rule.empty()) o << "rule: " << v.rule << "\n";
  if (!v.reason.empty()) o << "reason: " << v.reason << "\n";
  if (v.index) o << "index: " << *v.index << "\n";
  if (const auto* fw = std::get_if<FactorWitness>(&v.witness)) {
    if (!fw->substitution.empty()) {
      o << "substitution: (";
      for (std::size_t i = 0; i < fw->substitution.size(); ++i) o << (i ? "," : "") << fw->substitution[i];
      o << ")\n";
    }
    o << "substituted: " << to_string(fw->substituted, style) << "\n";
    o << "factorization: " << factorization_text(fw->factorization, style) << "\n";
    o << "witness verified: " << (verify_witness(v) ? "yes" : "no") << "\n";
  } else if (const auto* cw = std::get_if<CommonFactorWitness>(&v.witness)) {
    o << "p image: " << to_string(cw->p_eval, style) << "\n";
    o << "q image: " << to_string(cw->q_eval, style) << "\n";
    o << "common factor: " << to_string(cw->common_factor, style) << "\n";
    o << "witness verified: " << (verify_witness(v) ? "yes" : "no") << "\n";
  }
  return o.str();
}

inline Json family_member(const FamilySpec& s) {
  Json j;
  j["family"] = to_string(s.family);
  j["k"] = s.k;
  j["polynomial"] = poly(build_family_poly(s));
  return j;
}

inline Json matrix(const ModulePresentation& m, VarStyle style = VarStyle::x) {
  Json rows = Json::array();
  for (const auto& r : m.matrix) {
    Json row = Json::array();
    for (const auto& e : r) row.push_back(poly(e, style));
    rows.push_back(std::move(row));
  }
  Json j;
  j["vars"] = m.ring.nvars;
  j["cols"] = m.cols;
  j["matrix"] = std::move(rows);
  return j;
}

inline Json ideal(const LaurentIdeal& I, VarStyle style = VarStyle::x) {
  Json g = Json::array();
  for (const auto& p : I.generators) g.push_back(poly(p, style));
  return g;
}

inline Json genericity(const GenericityReport& r) {
  Json j;
  j["vars"] = r.n_vars;
  j["degree"] = r.degree;
  j["trials"] = r.trials;
  j["coeff_box"] = r.coeff_box;
  j["seed"] = r.seed;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["undecided"] = r.undecided;
  j["pass_rate"] = r.pass_rate;
  return j;
}

inline Json reduction(const Reduction& r) {
  Json steps = Json::array();
  for (const auto& st : r.steps) {
    Json s;
    s["kind"] = to_string(st.kind);
    s["left"] = st.left;
    s["right"] = st.right;
    s["result"] = st.result;
    s["multiplier"] = st.multiplier.get_str();
    s["witness"] = st.kind == StepKind::combine ? Json(to_string(st.witness)) : Json(nullptr);
    s["witness_coprime"] = st.witness_coprime;
    steps.push_back(std::move(s));
  }
  Json j;
  j["generator"] = r.generator;
  j["steps"] = std::move(steps);
  return j;
}

}  // namespace strongirr::report

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

// Certified answers. A Verdict is PROVED (naming the rule that certifies it),
// REFUTED (carrying a witness anyone can re-check by exact arithmetic), or
// UNDECIDED (with a reason tag).

#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "strongirr/gcd.hpp"
#include "strongirr/ring.hpp"

namespace strongirr {

enum class Status { proved, refuted, undecided };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::proved: return "PROVED";
    case Status::refuted: return "REFUTED";
    default: return "UNDECIDED";
  }
}

/// p = unit * monomial_unit * prod factor^multiplicity.
struct Factorization {
  Ring ring;
  Int unit = 1;
  Monomial monomial_unit;  // nontrivial only in Laurent rings
  std::vector<std::pair<Poly<Int>, int>> factors;
};

inline Poly<Int> expand(const Factorization& f) {
  Poly<Int> r = Poly<Int>::monomial(f.ring, f.monomial_unit.size() == f.ring.nvars ? f.monomial_unit : Monomial(f.ring.nvars), f.unit);
  for (const auto& [g, e] : f.factors) r = r * pow(g, e);
  return r;
}

/// Number of irreducible factors counted with multiplicity.
inline int factor_count(const Factorization& f) {
  int n = 0;
  for (const auto& fe : f.factors) n += fe.second;
  return n;
}

/// A reducible power substitution: substituted = p(x^t), factored.
struct FactorWitness {
  std::vector<int> substitution;  // empty when p itself is factored
  Poly<Int> substituted;
  Factorization factorization;
};

/// Evaluations of p and q at two monomial image sets sharing a factor.
struct CommonFactorWitness {
  std::vector<Monomial> images_p;
  std::vector<Monomial> images_q;
  Poly<Int> p_eval;
  Poly<Int> q_eval;
  Poly<Int> common_factor;
};

using Witness = std::variant<std::monostate, FactorWitness, CommonFactorWitness>;

struct Verdict {
  Status status = Status::undecided;
  std::string rule;    // certifying rule for PROVED
  std::string reason;  // tag for REFUTED / UNDECIDED
  Witness witness;
  /// Index into a vector query that decided the answer, when applicable.
  std::optional<std::size_t> index;

  static Verdict proved(std::string rule) { return {Status::proved, std::move(rule), "", {}, {}}; }
  static Verdict refuted(std::string reason, Witness w) { return {Status::refuted, "", std::move(reason), std::move(w), {}}; }
  static Verdict undecided(std::string reason) { return {Status::undecided, "", std::move(reason), {}, {}}; }
};

/// True when a factorization is nontrivial: two or more non-unit factors
/// counted with multiplicity, one non-unit factor with a non-unit integer, or
/// a composite integer alone.
inline bool is_nontrivial(const Factorization& f) {
  int count = factor_count(f);
  if (count >= 2) return true;
  if (count == 1) return abs_int(f.unit) != 1;
  return abs_int(f.unit) > 1 && !is_probable_prime(abs_int(f.unit));
}

/// Re-checks a REFUTED witness by exact arithmetic.
inline bool verify_witness(const Verdict& v) {
  if (v.status != Status::refuted) return false;
  if (const auto* fw = std::get_if<FactorWitness>(&v.witness)) {
    return expand(fw->factorization) == fw->substituted && is_nontrivial(fw->factorization);
  }
  if (const auto* cw = std::get_if<CommonFactorWitness>(&v.witness)) {
    if (is_laurent_unit(cw->common_factor) || cw->common_factor.is_zero()) return false;
    return divides(cw->common_factor, cw->p_eval) && divides(cw->common_factor, cw->q_eval);
  }
  return false;
}

}  // namespace strongirr

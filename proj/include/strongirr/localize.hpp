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

// Localization of the Laurent ring away from finitely many primes.
//
// Membership in the divisor set S_p (products of monomial evaluations of
// polynomials strongly coprime to p) and the reduction of an ideal generated
// by products of powers of primes p_1, ..., p_k to a single generator, in
// the ring where every element coprime to p_1 * ... * p_k is inverted.
//
// Two generators g = P^e and h = P^f with m = min(e, f) satisfy
//   g + c h = P^m (P^{e-m} + c P^{f-m}),
// and the bracket is invertible once it is coprime to every p_j. With two
// primes c = 1 always works; with more, a small integer c is searched.

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strongirr/factor.hpp"
#include "strongirr/gcd.hpp"
#include "strongirr/ring.hpp"
#include "strongirr/strongcheck.hpp"

namespace strongirr {

// ---------------------------------------------------------------------------
// Divisor sets.

struct DivisorCandidate {
  Poly<Int> q;
  /// Monomial images a_1, ..., a_s in the ring of p, one per variable of q.
  /// Empty means x_i -> x_i.
  std::vector<Monomial> images;
};

struct DivisorSetQuery {
  Poly<Int> p;
  std::vector<DivisorCandidate> candidates;
};

namespace detail {

/// q viewed in a Laurent ring with `n` variables, keeping its variables first.
inline Poly<Int> pad_to(const Poly<Int>& q, std::size_t n) {
  if (q.nvars() == n) return to_laurent(q);
  std::vector<std::size_t> keep(q.nvars());
  std::iota(keep.begin(), keep.end(), 0);
  return expand_variables(to_laurent(q), keep, Ring{n, true});
}

/// Rank of integer exponent vectors over Q.
inline std::size_t exponent_rank(const std::vector<Monomial>& v) {
  if (v.empty()) return 0;
  std::vector<std::vector<Rat>> a;
  for (const auto& m : v) {
    std::vector<Rat> row;
    for (int e : m.exponents()) row.emplace_back(e);
    a.push_back(std::move(row));
  }
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && sgn(a[piv][c]) == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace detail

/// The S_p element q(a_1, ..., a_s) in the ring of p.
inline Poly<Int> divisor_element(const Poly<Int>& p, const DivisorCandidate& c) {
  const std::size_t n = std::max(p.nvars(), c.q.nvars());
  if (c.images.empty()) return detail::pad_to(c.q, n);
  if (c.images.size() != c.q.nvars()) throw InputError("one monomial image per variable of q is required");
  for (const auto& m : c.images)
    if (m.size() != p.nvars()) throw InputError("monomial images must live in the ring of p");
  if (detail::exponent_rank(c.images) != c.images.size()) throw InputError("monomial images are not linearly independent");
  return monomial_substitute(to_laurent(c.q), std::span<const Monomial>(c.images), Ring{p.nvars(), true});
}

/// PROVED when every candidate is certified strongly coprime to p; REFUTED
/// as soon as one is isogenous to p. Candidates must have q(1, ..., 1) != 0.
inline Verdict divisor_set_member(const DivisorSetQuery& query, const CoprimeOptions& opt = {}) {
  if (query.p.is_zero()) throw InputError("the localizing polynomial must be nonzero");
  if (query.candidates.empty()) throw InputError("no candidate factors given");
  bool all_proved = true;
  std::string undecided;
  for (std::size_t i = 0; i < query.candidates.size(); ++i) {
    const auto& c = query.candidates[i];
    if (c.q.is_zero()) throw InputError("candidate factor " + std::to_string(i) + " is zero");
    if (sgn(eval_at_ones(c.q)) == 0)
      throw InputError("candidate factor " + std::to_string(i) + " vanishes at (1, ..., 1)");
    divisor_element(query.p, c);  // validates images
    const std::size_t n = std::max(query.p.nvars(), c.q.nvars());
    Verdict v = check_strongly_coprime(detail::pad_to(query.p, n), detail::pad_to(c.q, n), opt);
    v.index = i;
    if (v.status == Status::refuted) return v;
    if (v.status == Status::undecided) {
      all_proved = false;
      if (undecided.empty()) undecided = v.reason;
    }
  }
  if (all_proved) return Verdict::proved("strongly-coprime");
  return Verdict::undecided(undecided);
}

// ---------------------------------------------------------------------------
// Ideals generated by prime powers.

using Exponents = std::vector<long>;

struct LocalizedIdeal {
  std::vector<Poly<Int>> primes;      // certified irreducible, pairwise coprime
  std::vector<Exponents> generators;  // each one P^e up to units of the localization
};

/// Certifies the primes and validates the exponent vectors.
inline LocalizedIdeal make_localized_ideal(std::vector<Poly<Int>> primes, std::vector<Exponents> gens,
                                           const FactorOptions& fopt = {}) {
  if (primes.empty()) throw InputError("at least one prime is required");
  const std::size_t n = primes[0].nvars();
  for (auto& p : primes) {
    if (p.nvars() != n) throw InputError("primes must share a variable count");
    p = to_laurent(p);
    const Verdict v = is_irreducible(p, FactorMode::laurent, fopt);
    if (v.status != Status::proved)
      throw HypothesisError(to_string(p) + " is not certified irreducible (" + to_string(v.status) + ")");
  }
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j)
      if (!coprime(primes[i], primes[j]))
        throw HypothesisError(to_string(primes[i]) + " and " + to_string(primes[j]) + " are not coprime");
  if (gens.empty()) throw InputError("the generator list is empty");
  for (const auto& e : gens) {
    if (e.size() != primes.size()) throw InputError("each generator needs one exponent per prime");
    for (long x : e)
      if (x < 0) throw InputError("exponents must be nonnegative");
  }
  return {std::move(primes), std::move(gens)};
}

inline LocalizedIdeal make_localized_ideal(const Poly<Int>& p, const Poly<Int>& q, const std::vector<std::pair<long, long>>& gens,
                                           const FactorOptions& fopt = {}) {
  std::vector<Exponents> e;
  for (const auto& [s, t] : gens) e.push_back({s, t});
  return make_localized_ideal({p, q}, std::move(e), fopt);
}

enum class StepKind { divides, combine };

inline std::string to_string(StepKind k) { return k == StepKind::divides ? "divides" : "combine"; }

/// One reduction step on two available elements. Elements are numbered with
/// the inputs first and each step's result appended after them.
struct ReductionStep {
  StepKind kind = StepKind::divides;
  std::size_t left = 0, right = 0;
  Exponents result;
  Int multiplier{1};           // c in g + c h
  Poly<Int> witness;           // P^{e-m} + c P^{f-m}; empty for divides
  bool witness_coprime = false;
};

struct Reduction {
  Exponents generator;
  std::vector<ReductionStep> steps;
};

namespace detail {

inline bool dominated(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Poly<Int> prime_power(const std::vector<Poly<Int>>& primes, const Exponents& e) {
  Poly<Int> r = Poly<Int>::one(primes[0].ring());
  for (std::size_t i = 0; i < primes.size(); ++i) r = r * pow(primes[i], e[i]);
  return r;
}

inline Poly<Int> product_of(const std::vector<Poly<Int>>& primes) {
  Poly<Int> r = Poly<Int>::one(primes[0].ring());
  for (const auto& p : primes) r = r * p;
  return r;
}

}  // namespace detail

/// Reduces the generators to one, pairwise in input order. Throws if no
/// multiplier in the search range yields a bracket coprime to the primes.
inline Reduction reduce_localized_ideal(const LocalizedIdeal& ideal, long max_multiplier = 8) {
  if (ideal.generators.empty()) throw InputError("the generator list is empty");
  const Poly<Int> all = detail::product_of(ideal.primes);
  std::vector<Exponents> avail = ideal.generators;
  Reduction out;
  std::size_t cur = 0;
  for (std::size_t i = 1; i < ideal.generators.size(); ++i) {
    const Exponents& a = avail[cur];
    const Exponents& b = avail[i];
    ReductionStep st;
    st.left = cur;
    st.right = i;
    if (detail::dominated(a, b) || detail::dominated(b, a)) {
      st.kind = StepKind::divides;
      st.result = detail::dominated(a, b) ? a : b;
      st.witness_coprime = true;
    } else {
      st.kind = StepKind::combine;
      Exponents m(a.size()), da(a.size()), db(a.size());
      for (std::size_t j = 0; j < a.size(); ++j) {
        m[j] = std::min(a[j], b[j]);
        da[j] = a[j] - m[j];
        db[j] = b[j] - m[j];
      }
      st.result = m;
      const Poly<Int> A = detail::prime_power(ideal.primes, da);
      const Poly<Int> B = detail::prime_power(ideal.primes, db);
      for (long c = 1; c <= max_multiplier && !st.witness_coprime; ++c)
        for (long sign : {1L, -1L}) {
          Poly<Int> w = A + scale(B, Int(sign * c));
          if (!w.is_zero() && coprime(w, all)) {
            st.multiplier = sign * c;
            st.witness = std::move(w);
            st.witness_coprime = true;
            break;
          }
        }
      if (!st.witness_coprime)
        throw std::logic_error("no invertible combination found; the prime certificates are inconsistent");
    }
    avail.push_back(st.result);
    cur = avail.size() - 1;
    out.steps.push_back(std::move(st));
  }
  out.generator = avail[cur];
  return out;
}

/// Audits a claimed single generator P^gen: every input is a multiple of it,
/// every combination step satisfies its identity on expanded polynomials with
/// a bracket coprime to the primes, and P^gen is a multiple of some element
/// reached by the steps. Divisibility between prime powers is read off the
/// exponents, which is exact because the primes are certified irreducible and
/// pairwise coprime.
inline bool verify_principality(const LocalizedIdeal& ideal, const Exponents& gen, std::span<const ReductionStep> steps) {
  if (gen.size() != ideal.primes.size()) return false;
  for (long x : gen)
    if (x < 0) return false;
  for (const auto& e : ideal.generators)
    if (e.size() != gen.size() || !detail::dominated(gen, e)) return false;

  const Poly<Int> all = detail::product_of(ideal.primes);
  std::vector<Exponents> avail = ideal.generators;
  for (const auto& st : steps) {
    if (st.left >= avail.size() || st.right >= avail.size() || st.result.size() != gen.size()) return false;
    const Exponents& a = avail[st.left];
    const Exponents& b = avail[st.right];
    if (st.kind == StepKind::divides) {
      if (st.result != a && st.result != b) return false;
    } else {
      // g_a + c g_b = P^m w with w coprime to every prime.
      if (st.witness.is_zero() || !coprime(st.witness, all)) return false;
      const Poly<Int> lhs =
          detail::prime_power(ideal.primes, a) + scale(detail::prime_power(ideal.primes, b), st.multiplier);
      if (lhs != detail::prime_power(ideal.primes, st.result) * st.witness) return false;
    }
    avail.push_back(st.result);
  }
  for (const auto& e : avail)
    if (detail::dominated(e, gen)) return true;
  return false;
}

inline bool verify_principality(const LocalizedIdeal& ideal, const Reduction& r) {
  return verify_principality(ideal, r.generator, r.steps);
}

}  // namespace strongirr

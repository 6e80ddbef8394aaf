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

// Strong irreducibility and strong coprimality.
//
// A polynomial p is strongly irreducible when p(x1^t1, ..., xn^tn) stays
// irreducible in the Laurent ring for every nonzero integer vector t. The
// sufficient test used here: homogenize p to P(z0, ..., zn) and ask whether
// the system z_i dP/dz_i = 0 has only the zero solution over C. When the test
// fails, a bounded search over power substitutions looks for an explicit
// factorization. Anything left over is reported as UNDECIDED.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "strongirr/factor.hpp"
#include "strongirr/gcd.hpp"
#include "strongirr/groebner.hpp"
#include "strongirr/ring.hpp"
#include "strongirr/verdict.hpp"

namespace strongirr {

struct StrongOptions {
  /// Uniform substitutions x -> x^k are tried for k = 1..max_uniform_k.
  int max_uniform_k = 6;
  /// Mixed substitutions range over {1..box}^m.
  int box = 4;
  /// Disable to get a criterion-only answer (PROVED or UNDECIDED).
  bool refute = true;
  GroebnerOptions groebner{};
  FactorOptions factor{};
};

/// Ideal generated by z_i * dP/dz_i for every variable of P.
inline IdealBasis criterion_system(const HomogPoly<Int>& P) {
  if (P.inner.is_constant()) throw InputError("criterion_system of a constant polynomial");
  if (!P.inner.is_homogeneous()) throw InputError("criterion_system needs a homogeneous polynomial");
  const Ring ring = P.inner.ring();
  std::vector<Poly<Int>> gens;
  for (std::size_t i = 0; i < ring.nvars; ++i)
    gens.push_back(mul_monomial(derivative(P.inner, i), Monomial::unit(ring.nvars, i)));
  return IdealBasis(ring, std::move(gens));
}

/// Wraps an already homogeneous ordinary polynomial.
inline HomogPoly<Int> as_homogeneous(const Poly<Int>& P) {
  if (P.is_zero() || !P.is_homogeneous()) throw InputError("polynomial is not homogeneous");
  return {with_ring(P, Ring{P.nvars(), false}), P.total_degree()};
}

/// The system z_i dP/dz_i = 0 has only the trivial solution.
inline bool criterion_holds(const HomogPoly<Int>& P, const GroebnerOptions& opt = {}) {
  return only_trivial_solution(criterion_system(P), opt);
}

/// Irreducibility of p(x^t) for one substitution vector, with the vector
/// recorded in the witness. p is taken modulo Laurent units.
inline Verdict check_power_substitution(const Poly<Int>& p, std::span<const int> t, const FactorOptions& opt = {}) {
  if (p.is_zero()) throw InputError("power substitution of the zero polynomial");
  if (is_laurent_unit(p)) throw InputError("strong irreducibility of a Laurent unit");
  for (int v : t)
    if (v <= 0) throw InputError("substitution exponents must be positive (negative ones reduce to positive)");
  Poly<Int> part = laurent_normalize(p).part;
  Poly<Int> sub = power_substitute(part, t);
  Verdict v = is_irreducible(sub, FactorMode::ordinary, opt);
  if (auto* fw = std::get_if<FactorWitness>(&v.witness)) fw->substitution.assign(t.begin(), t.end());
  if (v.status == Status::refuted) v.reason = "power-substitution";
  return v;
}

/// Irreducibility of p(x1^k, ..., xn^k).
inline Verdict refute_at_uniform(const Poly<Int>& p, int k, const FactorOptions& opt = {}) {
  if (k <= 0) throw InputError("uniform power must be positive");
  std::vector<int> t(p.nvars(), k);
  return check_power_substitution(p, t, opt);
}

namespace detail {

/// Smallest prime l with c an l-th power in Q, or 4 when c is -4 times a
/// fourth power; 0 when neither holds. By Capelli's theorem x^k - c is then
/// irreducible over Q for every k exactly when the answer is 0.
inline int capelli_obstruction(const Rat& c) {
  const Int num = c.get_num(), den = c.get_den();
  if (sgn(num) == 0) return 0;
  const std::size_t bits = std::max(mpz_sizeinbase(num.get_mpz_t(), 2), mpz_sizeinbase(den.get_mpz_t(), 2));
  for (unsigned long l = 2; l <= bits + 3; ++l) {
    if (!is_probable_prime(Int(l))) continue;
    if (is_perfect_power(num, l) && is_perfect_power(den, l)) return static_cast<int>(l);
  }
  Rat q = c / Rat(-4);
  if (sgn(q) > 0 && is_perfect_power(q.get_num(), 4) && is_perfect_power(q.get_den(), 4)) return 4;
  return 0;
}

inline Verdict content_refutation(const Poly<Int>& part) {
  std::vector<int> ones(part.nvars(), 1);
  Factorization f = factorize(part);
  return Verdict::refuted("content", FactorWitness{ones, part, std::move(f)});
}

inline Int lcm_of(std::span<const int> t) {
  Int l = 1;
  for (int v : t) l = lcm(l, Int(v));
  return l;
}

/// Lexicographic walk through {1..box}^m.
inline bool next_tuple(std::vector<int>& t, int box) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] < box) {
      ++t[i];
      return true;
    }
    t[i] = 1;
  }
  return false;
}

}  // namespace detail

/// PROVED by the singular-locus criterion (or by Capelli's theorem for a
/// degree-1 polynomial in one variable), REFUTED with an explicit
/// factorization of some p(x^t), otherwise UNDECIDED.
inline Verdict check_strongly_irreducible(const Poly<Int>& p, const StrongOptions& opt = {}) {
  if (p.is_zero()) throw InputError("strong irreducibility of the zero polynomial");
  if (is_laurent_unit(p)) throw InputError("strong irreducibility of a Laurent unit");
  const Poly<Int> part = laurent_normalize(p).part;
  const std::size_t n = part.nvars();

  if (part.is_constant()) {
    Verdict v = is_irreducible(part, FactorMode::ordinary, opt.factor);
    if (auto* fw = std::get_if<FactorWitness>(&v.witness)) fw->substitution.assign(n, 1);
    return v;
  }
  if (content(part) != 1) return detail::content_refutation(part);

  auto [compact, keep] = compact_variables(part);
  const std::size_t m = compact.nvars();
  std::string undecided = m >= 2 ? "criterion-failed-no-witness" : "univariate-no-witness";

  if (m >= 2) {
    try {
      if (criterion_holds(homogenize(compact), opt.groebner)) return Verdict::proved("criterion");
    } catch (const ResourceExhausted&) {
      undecided = "resource:groebner";
    }
  } else if (compact.total_degree() == 1) {
    // b x + a: x^k + a/b is irreducible for every k unless -a/b is an l-th
    // power or -4 times a fourth power.
    const std::size_t v = keep[0];
    Rat a(part.constant_term()), b(part.leading_coefficient());
    int k = detail::capelli_obstruction(Rat(-a / b));
    if (k == 0) return Verdict::proved("capelli");
    std::vector<int> t(n, 1);
    t[v] = k;
    return check_power_substitution(part, t, opt.factor);
  }
  if (!opt.refute) return Verdict::undecided(undecided);

  // Uniform powers first; a factorization at a mixed t also shows up at
  // the uniform power lcm(t), so the mixed box only adds the lcms that the
  // uniform pass did not settle.
  std::set<long> settled;
  for (int k = 1; k <= opt.max_uniform_k; ++k) {
    std::vector<int> t(n, 1);
    for (auto v : keep) t[v] = k;
    Verdict v = check_power_substitution(part, t, opt.factor);
    if (v.status == Status::refuted) return v;
    if (v.status == Status::proved) settled.insert(k);
  }
  if (m >= 2) {
    std::vector<int> tc(m, 1);
    do {
      if (std::all_of(tc.begin(), tc.end(), [&](int x) { return x == tc[0]; })) continue;
      const Int l = detail::lcm_of(tc);
      if (l.fits_slong_p() && settled.count(l.get_si())) continue;
      std::vector<int> t(n, 1);
      for (std::size_t i = 0; i < m; ++i) t[keep[i]] = tc[i];
      Poly<Int> sub = power_substitute(part, t);
      if (sub.total_degree() > opt.factor.max_total_degree) continue;
      Verdict v = check_power_substitution(part, t, opt.factor);
      if (v.status == Status::refuted) return v;
    } while (detail::next_tuple(tc, opt.box));
  }
  return Verdict::undecided(undecided);
}

// ---------------------------------------------------------------------------
// Strong coprimality.

struct CoprimeOptions {
  StrongOptions strong{};
  /// Images a_i = kp e_i and b_i = +-kq e_sigma(i) with kp, kq <= max_power.
  int max_power = 2;
  /// All permutations and sign patterns are tried up to this many variables;
  /// beyond it only transpositions and the two uniform sign patterns.
  std::size_t exhaustive_vars = 4;
};

namespace detail {

inline std::size_t used_after_normalizing(const Poly<Int>& p) {
  return laurent_normalize(p).part.used_variable_count();
}

inline std::vector<std::vector<std::size_t>> image_permutations(std::size_t n, std::size_t exhaustive) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  if (n <= exhaustive) {
    auto perm = id;
    do out.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }
  out.push_back(id);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto perm = id;
      std::swap(perm[i], perm[j]);
      out.push_back(perm);
    }
  return out;
}

inline std::vector<std::vector<int>> sign_patterns(std::size_t n, std::size_t exhaustive) {
  std::vector<std::vector<int>> out;
  if (n <= exhaustive) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<int> s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
      out.push_back(s);
    }
    return out;
  }
  out.emplace_back(n, 1);
  out.emplace_back(n, -1);
  return out;
}

}  // namespace detail

/// Searches pairs of independent monomial image sets for evaluations of p
/// and q with a common nonunit factor.
inline std::optional<CommonFactorWitness> find_isogeny(const Poly<Int>& p, const Poly<Int>& q, const CoprimeOptions& opt = {}) {
  if (p.nvars() != q.nvars()) throw InputError("polynomials must share a variable count");
  const std::size_t n = p.nvars();
  const Ring target{n, true};
  const auto perms = detail::image_permutations(n, opt.exhaustive_vars);
  const auto signs = detail::sign_patterns(n, opt.exhaustive_vars);
  for (int kp = 1; kp <= opt.max_power; ++kp)
    for (int kq = 1; kq <= opt.max_power; ++kq) {
      // Scaling both image sets by a common factor is an injective ring map
      // that preserves coprimality, so only coprime pairs are needed.
      if (std::gcd(kp, kq) != 1) continue;
      std::vector<Monomial> ip;
      for (std::size_t i = 0; i < n; ++i) ip.push_back(Monomial::unit(n, i, kp));
      const Poly<Int> pe = monomial_substitute(p, ip, target);
      for (const auto& perm : perms)
        for (const auto& sg : signs) {
          std::vector<Monomial> iq;
          for (std::size_t i = 0; i < n; ++i) iq.push_back(Monomial::unit(n, perm[i], sg[i] * kq));
          const Poly<Int> qe = monomial_substitute(q, iq, target);
          if (coprime(pe, qe)) continue;
          Poly<Int> g = gcd(pe, qe);
          if (is_laurent_unit(g)) continue;
          return CommonFactorWitness{ip, iq, pe, qe, g};
        }
    }
  return std::nullopt;
}

/// PROVED by the fewer-variables rule (one side certified strongly
/// irreducible in strictly more variables than the other) or when one side is
/// a unit; REFUTED with evaluations sharing a factor; otherwise UNDECIDED.
inline Verdict check_strongly_coprime(const Poly<Int>& p, const Poly<Int>& q, const CoprimeOptions& opt = {}) {
  if (p.nvars() != q.nvars()) throw InputError("polynomials must share a variable count");
  if (p.is_zero() || q.is_zero()) throw InputError("strong coprimality of the zero polynomial");
  if (is_laurent_unit(p) || is_laurent_unit(q)) return Verdict::proved("unit");

  const Poly<Int> pl = to_laurent(p), ql = to_laurent(q);
  if (!coprime(pl, ql)) {
    std::vector<Monomial> id;
    for (std::size_t i = 0; i < p.nvars(); ++i) id.push_back(Monomial::unit(p.nvars(), i));
    return Verdict::refuted("common-factor", CommonFactorWitness{id, id, pl, ql, gcd(pl, ql)});
  }

  StrongOptions crit = opt.strong;
  crit.refute = false;
  const std::size_t np = detail::used_after_normalizing(p), nq = detail::used_after_normalizing(q);
  if (np > nq && check_strongly_irreducible(p, crit).status == Status::proved) return Verdict::proved("fewer-variables");
  if (nq > np && check_strongly_irreducible(q, crit).status == Status::proved) return Verdict::proved("fewer-variables");

  if (auto w = find_isogeny(p, q, opt)) return Verdict::refuted("isogenous", std::move(*w));
  return Verdict::undecided("no-rule-no-witness");
}

/// Existential over indices: PROVED as soon as one index is proved; REFUTED
/// only when every index is refuted.
inline Verdict check_vector_coprime(const std::vector<Poly<Int>>& P, const std::vector<Poly<Int>>& Q, const CoprimeOptions& opt = {}) {
  if (P.empty() || P.size() != Q.size()) throw InputError("polynomial vectors must be nonempty and of equal length");
  bool all_refuted = true;
  Verdict first_refuted;
  for (std::size_t k = 0; k < P.size(); ++k) {
    Verdict v = check_strongly_coprime(P[k], Q[k], opt);
    v.index = k;
    if (v.status == Status::proved) return v;
    if (v.status == Status::refuted) {
      if (k == 0) first_refuted = v;
    } else {
      all_refuted = false;
    }
  }
  if (all_refuted) {
    first_refuted.reason = "isogenous-at-every-index";
    return first_refuted;
  }
  return Verdict::undecided("no-index-proved");
}

// ---------------------------------------------------------------------------
// Genericity sampling.

struct GenericityReport {
  std::size_t n_vars = 0;
  int degree = 0;
  std::size_t trials = 0;
  int coeff_box = 0;
  std::uint64_t seed = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t undecided = 0;  // Groebner budget exhausted
  double pass_rate = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// All exponent vectors of total degree d in n variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace detail

/// Random homogeneous polynomial with coefficients uniform in [-box, box],
/// redrawn while all coefficients are zero.
inline Poly<Int> random_homogeneous(std::mt19937_64& rng, std::size_t n_vars, int degree, int box) {
  const Ring ring{n_vars, false};
  const auto monos = detail::monomials_of_degree(n_vars, degree);
  std::uniform_int_distribution<int> co(-box, box);
  for (;;) {
    std::vector<Poly<Int>::Term> t;
    for (const auto& m : monos) t.emplace_back(m, Int(co(rng)));
    Poly<Int> P(ring, std::move(t));
    if (!P.is_zero()) return P;
  }
}

/// Draws homogeneous polynomials and reports how often the criterion holds.
/// Trial i uses its own generator seeded from (seed, i), so the report does
/// not depend on the thread count.
inline GenericityReport genericity_sample(std::size_t n_vars, int degree, std::size_t trials, int coeff_box, std::uint64_t seed,
                                          unsigned threads = 1, const GroebnerOptions& gopt = {}) {
  if (n_vars < 3) throw InputError("genericity sampling needs at least 3 variables");
  if (degree < 1) throw InputError("degree must be at least 1");
  if (trials < 1) throw InputError("trials must be at least 1");
  if (coeff_box < 1) throw InputError("coefficient box must be at least 1");
  std::vector<int> outcome(trials, 0);  // 1 pass, 0 fail, -1 undecided
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < trials;) {
      std::mt19937_64 rng(detail::splitmix64(seed ^ detail::splitmix64(i)));
      Poly<Int> P = random_homogeneous(rng, n_vars, degree, coeff_box);
      try {
        outcome[i] = criterion_holds(as_homogeneous(P), gopt) ? 1 : 0;
      } catch (const ResourceExhausted&) {
        outcome[i] = -1;
      }
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  GenericityReport r{n_vars, degree, trials, coeff_box, seed, 0, 0, 0, 0};
  for (int o : outcome) (o == 1 ? r.passed : o == 0 ? r.failed : r.undecided)++;
  r.pass_rate = static_cast<double>(r.passed) / static_cast<double>(trials);
  return r;
}

}  // namespace strongirr

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

// Dense univariate polynomials over Z and Z/p, and the classical
// factorization pipeline over Z: squarefree decomposition, distinct-degree
// and equal-degree factorization modulo a small prime, quadratic Hensel
// lifting along a factor tree, and Zassenhaus recombination.
//
// Coefficient vectors are stored lowest degree first with no trailing zeros,
// so the zero polynomial is the empty vector.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "strongirr/integer.hpp"
#include "strongirr/ring.hpp"

namespace strongirr::dense {

using ZPoly = std::vector<Int>;
using ZpPoly = std::vector<std::uint64_t>;

// ---------------------------------------------------------------------------
// Z[x]

inline void trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

inline long degree(const ZPoly& a) { return a.empty() ? kNegInfDegree : static_cast<long>(a.size()) - 1; }
inline const Int& lc(const ZPoly& a) { return a.back(); }

inline ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

inline ZPoly scale(const ZPoly& a, const Int& c) {
  ZPoly r(a);
  for (auto& v : r) v *= c;
  trim(r);
  return r;
}

inline Int content(const ZPoly& a) {
  Int g = 0;
  for (const auto& c : a) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

/// Primitive part with positive leading coefficient.
inline ZPoly primitive_part(const ZPoly& a) {
  if (a.empty()) return a;
  Int c = content(a);
  if (sgn(a.back()) < 0) c = -c;
  ZPoly r(a);
  if (c != 1)
    for (auto& v : r) v = divexact(v, c);
  return r;
}

inline ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

inline Int evaluate(const ZPoly& a, const Int& x) {
  Int r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

/// a / b when b divides a exactly over Z; nullopt otherwise.
inline std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw InputError("division by the zero polynomial");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  // Cheap necessary conditions before the long division.
  if (sgn(b[0]) != 0 && !divisible(a[0], b[0])) return std::nullopt;
  ZPoly r(a);
  ZPoly q(a.size() - b.size() + 1);
  const Int& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Int& top = r[k + b.size() - 1];
    if (sgn(top) == 0) continue;
    if (!divisible(top, lb)) return std::nullopt;
    q[k] = divexact(top, lb);
    for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
  }
  for (const auto& v : r)
    if (sgn(v) != 0) return std::nullopt;
  trim(q);
  return q;
}

// ---------------------------------------------------------------------------
// Z/p[x] for word-size primes p < 2^31.

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw Error("element not invertible modulo p");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

inline void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long degree(const ZpPoly& a) { return a.empty() ? kNegInfDegree : static_cast<long>(a.size()) - 1; }

inline ZpPoly reduce(const ZPoly& a, std::uint64_t p) {
  ZpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_u64(a[i], p);
  trim(r);
  return r;
}

inline ZpPoly add(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
  ZpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

inline ZpPoly sub(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
  ZpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

inline ZpPoly mul(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

inline ZpPoly scale(const ZpPoly& a, std::uint64_t c, std::uint64_t p) {
  ZpPoly r(a);
  for (auto& v : r) v = mulmod(v, c, p);
  trim(r);
  return r;
}

inline ZpPoly monic(const ZpPoly& a, std::uint64_t p) {
  if (a.empty()) return a;
  return scale(a, invmod(a.back(), p), p);
}

/// Quotient and remainder; b must be nonzero.
inline std::pair<ZpPoly, ZpPoly> divmod(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
  if (b.empty()) throw Error("division by zero polynomial mod p");
  if (a.size() < b.size()) return {{}, a};
  ZpPoly r(a);
  ZpPoly q(a.size() - b.size() + 1, 0);
  const std::uint64_t inv = invmod(b.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::uint64_t top = r[k + b.size() - 1];
    if (top == 0) continue;
    std::uint64_t c = mulmod(top, inv, p);
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = (r[k + j] + p - mulmod(c, b[j], p)) % p;
  }
  trim(q);
  trim(r);
  return {q, r};
}

inline ZpPoly rem(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) { return divmod(a, b, p).second; }

inline ZpPoly mulmod_poly(const ZpPoly& a, const ZpPoly& b, const ZpPoly& m, std::uint64_t p) {
  return rem(mul(a, b, p), m, p);
}

/// Monic gcd.
inline ZpPoly gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
  while (!b.empty()) {
    ZpPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

/// Returns (g, s, t) with s*a + t*b = g monic.
inline std::tuple<ZpPoly, ZpPoly, ZpPoly> extended_gcd(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
  ZpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    ZpPoly s2 = sub(s0, mul(q, s1, p), p);
    ZpPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  std::uint64_t inv = invmod(r0.back(), p);
  return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

inline ZpPoly derivative(const ZpPoly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  ZpPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
  trim(r);
  return r;
}

/// base^e mod m with an arbitrary-precision exponent.
inline ZpPoly powmod_poly(const ZpPoly& base, const Int& e, const ZpPoly& m, std::uint64_t p) {
  ZpPoly result{1};
  result = rem(result, m, p);
  ZpPoly b = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod_poly(result, result, m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod_poly(result, b, m, p);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Primes.

/// Odd primes 3, 5, 7, ... in order; index i returns the (i+1)-th odd prime.
inline std::uint64_t small_odd_prime(std::size_t i) {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> v;
    for (std::uint64_t n = 3; v.size() < 2000; n += 2) {
      bool prime = true;
      for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) {
          prime = false;
          break;
        }
      if (prime) v.push_back(n);
    }
    return v;
  }();
  if (i >= table.size()) throw ResourceExhausted("ran out of small primes");
  return table[i];
}

/// Primes just below 2^31, descending.
inline std::uint64_t large_prime(std::size_t i) {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> v;
    for (std::uint64_t n = (1ULL << 31) - 1; v.size() < 400; n -= 2)
      if (is_probable_prime(Int(static_cast<unsigned long>(n)))) v.push_back(n);
    return v;
  }();
  if (i >= table.size()) throw ResourceExhausted("ran out of word-size primes");
  return table[i];
}

// ---------------------------------------------------------------------------
// gcd over Z by Chinese remaindering of modular images, certified by trial
// division.

inline ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return primitive_part(b).empty() ? ZPoly{} : scale(primitive_part(b), content(b));
  if (b.empty()) return scale(primitive_part(a), content(a));
  const Int c = gcd(content(a), content(b));
  const ZPoly A = primitive_part(a), B = primitive_part(b);
  if (A.size() == 1 || B.size() == 1) return {c};
  const Int d = gcd(lc(A), lc(B));

  ZPoly acc;  // coefficients modulo `modulus`, nonnegative
  Int modulus = 0;
  long acc_deg = kNegInfDegree;
  ZPoly last;
  for (std::size_t i = 0;; ++i) {
    const std::uint64_t p = large_prime(i);
    if (mod_u64(d, p) == 0) continue;
    ZpPoly ap = reduce(A, p), bp = reduce(B, p);
    ZpPoly g = gcd(ap, bp, p);
    long dg = degree(g);
    if (dg == 0) return {c};
    if (acc_deg != kNegInfDegree && dg > acc_deg) continue;  // unlucky prime
    g = scale(g, mod_u64(d, p), p);
    g.resize(static_cast<std::size_t>(dg) + 1, 0);
    if (acc_deg == kNegInfDegree || dg < acc_deg) {
      acc.assign(g.size(), 0);
      for (std::size_t k = 0; k < g.size(); ++k) acc[k] = Int(static_cast<unsigned long>(g[k]));
      modulus = Int(static_cast<unsigned long>(p));
      acc_deg = dg;
      last.clear();
      continue;
    }
    // CRT: x = acc + modulus * ((g - acc) * modulus^{-1} mod p).
    const Int P(static_cast<unsigned long>(p));
    Int inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), P.get_mpz_t());
    for (std::size_t k = 0; k < acc.size(); ++k) {
      Int diff = Int(static_cast<unsigned long>(g[k])) - acc[k];
      Int t = mod_nonneg(diff * inv, P);
      acc[k] += modulus * t;
    }
    modulus *= P;
    ZPoly sym(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) sym[k] = mod_symmetric(acc[k], modulus);
    trim(sym);
    if (sym == last) {
      ZPoly cand = primitive_part(sym);
      if (!cand.empty() && divide_exact(A, cand) && divide_exact(B, cand)) return scale(cand, c);
    }
    last = std::move(sym);
  }
}

// ---------------------------------------------------------------------------
// Squarefree decomposition (Yun). Input primitive with positive leading
// coefficient; returns a_1, a_2, ... with f = prod a_i^i.

inline std::vector<ZPoly> squarefree_decomposition(const ZPoly& f) {
  std::vector<ZPoly> out;
  if (f.size() <= 1) return out;
  ZPoly fp = derivative(f);
  ZPoly a0 = primitive_part(gcd(f, fp));
  ZPoly b = *divide_exact(f, a0);
  ZPoly c = *divide_exact(fp, a0);
  ZPoly d = sub(c, derivative(b));
  while (b.size() > 1) {
    ZPoly a = d.empty() ? b : primitive_part(gcd(b, d));
    out.push_back(a);
    b = *divide_exact(b, a);
    c = d.empty() ? ZPoly{} : *divide_exact(d, a);
    d = sub(c, derivative(b));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Factorization over Z/p.

namespace detail {

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

}  // namespace detail

/// Distinct-degree factorization of a monic squarefree f: pairs (g, d) where g
/// is the product of all irreducible factors of degree d.
inline std::vector<std::pair<ZpPoly, long>> distinct_degree(ZpPoly f, std::uint64_t p) {
  std::vector<std::pair<ZpPoly, long>> out;
  const ZpPoly x{0, 1};
  ZpPoly h = rem(x, f, p);
  const Int P(static_cast<unsigned long>(p));
  for (long d = 1; 2 * d <= degree(f); ++d) {
    h = powmod_poly(h, P, f, p);
    ZpPoly g = gcd(sub(h, x, p), f, p);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(monic(f, p), degree(f));
  return out;
}

/// Splits a monic product of irreducibles of degree d (p odd).
inline void equal_degree(const ZpPoly& g, long d, std::uint64_t p, detail::SplitMix& rng, std::vector<ZpPoly>& out) {
  const long n = degree(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  Int e = pow_int(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  for (;;) {
    ZpPoly a(static_cast<std::size_t>(n));
    for (auto& v : a) v = rng.next() % p;
    trim(a);
    if (degree(a) < 1) continue;
    ZpPoly b = sub(powmod_poly(a, e, g, p), ZpPoly{1}, p);
    ZpPoly h = gcd(b, g, p);
    if (degree(h) > 0 && degree(h) < n) {
      equal_degree(h, d, p, rng, out);
      equal_degree(divmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

/// Monic irreducible factors of a squarefree f modulo an odd prime.
inline std::vector<ZpPoly> factor_mod_p(const ZpPoly& f, std::uint64_t p) {
  std::vector<ZpPoly> out;
  detail::SplitMix rng{p * 0x100000001b3ULL + f.size()};
  for (auto& [g, d] : distinct_degree(monic(f, p), p)) equal_degree(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), [](const ZpPoly& a, const ZpPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting over Z/M for M a power of p.

namespace detail {

inline ZPoly mod_poly(const ZPoly& a, const Int& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_nonneg(a[i], m);
  trim(r);
  return r;
}

inline ZPoly lift_zp(const ZpPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Int(static_cast<unsigned long>(a[i]));
  return r;
}

/// Division by a monic b over Z/m.
inline std::pair<ZPoly, ZPoly> divmod_monic(const ZPoly& a, const ZPoly& b, const Int& m) {
  if (a.size() < b.size()) return {{}, mod_poly(a, m)};
  ZPoly r = mod_poly(a, m);
  r.resize(a.size());
  ZPoly q(a.size() - b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    Int c = mod_nonneg(r[k + b.size() - 1], m);
    q[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = mod_nonneg(r[k + j] - c * b[j], m);
  }
  return {mod_poly(q, m), mod_poly(r, m)};
}

/// One quadratic Hensel step: from f = g h mod m and s g + t h = 1 mod m
/// (h monic) to the same identities modulo m^2.
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
  const Int m2 = m * m;
  ZPoly e = mod_poly(sub(f, mul(g, h)), m2);
  auto [q, r] = divmod_monic(mul(s, e), h, m2);
  ZPoly g2 = mod_poly(add(add(g, mul(t, e)), mul(q, g)), m2);
  ZPoly h2 = mod_poly(add(h, r), m2);
  ZPoly b = mod_poly(sub(add(mul(s, g2), mul(t, h2)), ZPoly{Int(1)}), m2);
  auto [c, d] = divmod_monic(mul(s, b), h2, m2);
  ZPoly s2 = mod_poly(sub(s, d), m2);
  ZPoly t2 = mod_poly(sub(sub(t, mul(t, b)), mul(c, g2)), m2);
  g = std::move(g2);
  h = std::move(h2);
  s = std::move(s2);
  t = std::move(t2);
}

/// Lifts the monic factorization f = lc(f) * prod u_i (mod p) to modulus M =
/// p^(2^j); returns the lifted monic factors in the same order.
inline std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<ZpPoly>& u, std::uint64_t p, const Int& M) {
  if (u.size() == 1) {
    Int inv;
    Int l = mod_nonneg(lc(f), M);
    mpz_invert(inv.get_mpz_t(), l.get_mpz_t(), M.get_mpz_t());
    return {mod_poly(scale(f, inv), M)};
  }
  const std::size_t k = u.size() / 2;
  std::vector<ZpPoly> left(u.begin(), u.begin() + static_cast<long>(k)), right(u.begin() + static_cast<long>(k), u.end());
  ZpPoly g0{mod_u64(lc(f), p)};
  for (const auto& x : left) g0 = mul(g0, x, p);
  ZpPoly h0{1};
  for (const auto& x : right) h0 = mul(h0, x, p);
  auto [one, s0, t0] = extended_gcd(g0, h0, p);
  if (one != ZpPoly{1}) throw Error("Hensel lifting requires coprime modular factors");
  ZPoly g = lift_zp(g0), h = lift_zp(h0), s = lift_zp(s0), t = lift_zp(t0);
  Int m(static_cast<unsigned long>(p));
  while (m < M) {
    hensel_step(mod_poly(f, m * m), g, h, s, t, m);
    m *= m;
  }
  auto a = multifactor_lift(g, left, p, M);
  auto b = multifactor_lift(h, right, p, M);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline ZPoly symmetric(const ZPoly& a, const Int& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_symmetric(a[i], m);
  trim(r);
  return r;
}

/// Subset sums of factor degrees that are achievable, as a bitmap over 0..n.
inline std::vector<bool> degree_set(const std::vector<std::pair<ZpPoly, long>>& ddf, long n) {
  std::vector<bool> can(static_cast<std::size_t>(n) + 1, false);
  can[0] = true;
  for (const auto& [g, d] : ddf) {
    long count = degree(g) / d;
    for (long c = 0; c < count; ++c)
      for (long s = n; s >= d; --s)
        if (can[static_cast<std::size_t>(s - d)]) can[static_cast<std::size_t>(s)] = true;
  }
  return can;
}

}  // namespace detail

struct FactorBudget {
  /// Maximum number of candidate subsets tried during recombination.
  std::size_t max_subsets = 200000;
  /// Number of good primes compared when choosing the lifting prime.
  std::size_t primes_to_compare = 3;
};

/// Irreducible factors over Z of a squarefree primitive f with positive
/// leading coefficient and degree >= 1. Factors are primitive with positive
/// leading coefficient, sorted by (degree, coefficients).
inline std::vector<ZPoly> factor_squarefree(const ZPoly& f, const FactorBudget& budget = {}) {
  const long n = degree(f);
  if (n <= 1) return {f};

  struct Candidate {
    std::uint64_t p;
    std::vector<std::pair<ZpPoly, long>> ddf;
    std::size_t count;
  };
  std::optional<Candidate> best;
  std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
  std::size_t found = 0;
  for (std::size_t i = 0; found < budget.primes_to_compare; ++i) {
    const std::uint64_t p = small_odd_prime(i);
    if (mod_u64(lc(f), p) == 0) continue;
    ZpPoly fp = reduce(f, p);
    if (degree(gcd(fp, derivative(fp, p), p)) != 0) continue;
    ++found;
    auto ddf = distinct_degree(monic(fp, p), p);
    std::size_t count = 0;
    for (const auto& [g, d] : ddf) count += static_cast<std::size_t>(degree(g) / d);
    if (count == 1) return {f};
    auto can = detail::degree_set(ddf, n);
    bool any = false;
    for (long s = 1; s < n; ++s) {
      possible[static_cast<std::size_t>(s)] = possible[static_cast<std::size_t>(s)] && can[static_cast<std::size_t>(s)];
      any = any || possible[static_cast<std::size_t>(s)];
    }
    if (!any) return {f};
    if (!best || count < best->count) best = Candidate{p, std::move(ddf), count};
  }

  const std::uint64_t p = best->p;
  std::vector<ZpPoly> u;
  {
    detail::SplitMix rng{p * 0x100000001b3ULL + static_cast<std::uint64_t>(n)};
    for (auto& [g, d] : best->ddf) equal_degree(g, d, p, rng, u);
  }

  // Coefficient bound for lc(f) times any factor of f.
  Int norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Int norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Int bound = pow_int(Int(2), static_cast<unsigned long>(n)) * norm * abs_int(lc(f));
  const Int target = 2 * bound + 1;
  Int M(static_cast<unsigned long>(p));
  while (M < target) M *= M;

  std::vector<ZPoly> lifted = detail::multifactor_lift(f, u, p, M);

  std::vector<ZPoly> factors;
  ZPoly F = f;
  std::size_t tried = 0;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      if (++tried > budget.max_subsets) throw ResourceExhausted("factor recombination budget exceeded");
      {
        // Constant-term pretest.
        Int c0 = mod_nonneg(lc(F), M);
        for (auto i : idx) c0 = mod_nonneg(c0 * lifted[i][0], M);
        c0 = mod_symmetric(c0, M);
        bool plausible = sgn(c0) == 0 ? sgn(F[0]) == 0 : divisible(lc(F) * F[0], c0);
        if (plausible) {
          ZPoly cand{lc(F)};
          for (auto i : idx) cand = detail::mod_poly(mul(cand, lifted[i]), M);
          cand = primitive_part(detail::symmetric(cand, M));
          if (auto q = divide_exact(F, cand)) {
            factors.push_back(cand);
            F = *q;
            std::vector<ZPoly> rest;
            for (std::size_t i = 0, j = 0; i < r; ++i) {
              if (j < s && idx[j] == i) {
                ++j;
                continue;
              }
              rest.push_back(std::move(lifted[i]));
            }
            lifted = std::move(rest);
            hit = true;
            break;
          }
        }
      }
      // Next combination.
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == r - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (degree(F) > 0) factors.push_back(primitive_part(F));
  std::sort(factors.begin(), factors.end(), [](const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return factors;
}

struct UnivariateFactorization {
  Int unit;                                  // signed content
  std::vector<std::pair<ZPoly, int>> factors;  // primitive irreducibles, positive lc
};

/// Complete factorization over Z of a nonzero polynomial.
inline UnivariateFactorization factor(const ZPoly& f, const FactorBudget& budget = {}) {
  if (f.empty()) throw InputError("factor of the zero polynomial");
  UnivariateFactorization out;
  out.unit = content(f);
  if (sgn(lc(f)) < 0) out.unit = -out.unit;
  ZPoly g = primitive_part(f);
  std::size_t shift = 0;
  while (sgn(g[shift]) == 0) ++shift;
  if (shift > 0) {
    out.factors.emplace_back(ZPoly{Int(0), Int(1)}, static_cast<int>(shift));
    g.erase(g.begin(), g.begin() + static_cast<long>(shift));
  }
  auto parts = squarefree_decomposition(g);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() <= 1) continue;
    for (auto& h : factor_squarefree(parts[i], budget)) out.factors.emplace_back(std::move(h), static_cast<int>(i + 1));
  }
  return out;
}

/// True when f (nonzero, degree >= 1, primitive) is irreducible over Z.
inline bool is_irreducible(const ZPoly& f, const FactorBudget& budget = {}) {
  if (degree(f) < 1) return false;
  if (content(f) != 1) return false;
  if (degree(f) == 1) return true;
  if (sgn(f[0]) == 0) return false;
  ZPoly g = primitive_part(f);
  ZPoly dg = derivative(g);
  if (degree(gcd(g, dg)) > 0) return false;
  return factor_squarefree(g, budget).size() == 1;
}

/// Irreducibility over Q of a polynomial of degree >= 1 (content ignored).
inline bool is_irreducible_over_q(const ZPoly& f, const FactorBudget& budget = {}) {
  if (degree(f) < 1) return false;
  return is_irreducible(primitive_part(f), budget);
}

}  // namespace strongirr::dense

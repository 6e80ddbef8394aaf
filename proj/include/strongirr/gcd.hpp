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

// Exact division, gcd and coprimality for multivariate integer polynomials,
// ordinary or Laurent.
//
// The gcd is the recursive primitive polynomial remainder sequence with the
// highest-index variable as main variable. coprime() first tries a cheap
// certificate: the Kronecker images of both inputs reduced modulo a word
// prime that keeps the leading coefficient, whose gcd is constant only when
// the inputs share no nonconstant factor.

#pragma once

#include <optional>
#include <vector>

#include "strongirr/ring.hpp"
#include "strongirr/upoly.hpp"

namespace strongirr {

// ---------------------------------------------------------------------------
// Coefficients with respect to one variable.

/// Coefficient list c_0..c_d with p = sum c_k * x_v^k; each c_k keeps the
/// ring of p and does not involve x_v. Ordinary polynomials only.
inline std::vector<Poly<Int>> coefficients_in(const Poly<Int>& p, std::size_t v) {
  const long d = p.degree_in(v);
  std::vector<std::vector<Poly<Int>::Term>> buckets(d < 0 ? 0 : static_cast<std::size_t>(d) + 1);
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e = m.exponents();
    int k = e[v];
    e[v] = 0;
    buckets[static_cast<std::size_t>(k)].emplace_back(Monomial(std::move(e)), c);
  }
  std::vector<Poly<Int>> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(p.ring(), std::move(b));
  return out;
}

inline Poly<Int> from_coefficients(const std::vector<Poly<Int>>& coeffs, std::size_t v, Ring ring) {
  std::vector<Poly<Int>::Term> t;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& [m, c] : coeffs[k].terms()) {
      std::vector<int> e = m.exponents();
      e[v] += static_cast<int>(k);
      t.emplace_back(Monomial(std::move(e)), c);
    }
  return Poly<Int>(ring, std::move(t));
}

/// Leading coefficient with respect to x_v.
inline Poly<Int> leading_coefficient_in(const Poly<Int>& p, std::size_t v) {
  const long d = p.degree_in(v);
  std::vector<Poly<Int>::Term> t;
  for (const auto& [m, c] : p.terms())
    if (m[v] == d) {
      std::vector<int> e = m.exponents();
      e[v] = 0;
      t.emplace_back(Monomial(std::move(e)), c);
    }
  return Poly<Int>(p.ring(), std::move(t));
}

// ---------------------------------------------------------------------------
// Exact division.

/// a / b over Z when the quotient exists in the ring of a; nullopt otherwise.
/// Laurent inputs are handled by dividing normalized parts and restoring units.
inline std::optional<Poly<Int>> divide_exact(const Poly<Int>& a, const Poly<Int>& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw InputError("division by the zero polynomial");
  if (a.is_zero()) return a;
  if (a.ring().laurent) {
    auto na = laurent_normalize(a);
    auto nb = laurent_normalize(b);
    auto q = divide_exact(na.part, nb.part);
    if (!q) return std::nullopt;
    return mul_monomial(to_laurent(*q), na.unit / nb.unit);
  }
  if (b.is_monomial()) {
    const auto& [mb, cb] = b.leading();
    std::vector<Poly<Int>::Term> t;
    for (const auto& [m, c] : a.terms()) {
      if (!mb.divides(m) || !divisible(c, cb)) return std::nullopt;
      t.emplace_back(m / mb, divexact(c, cb));
    }
    return Poly<Int>(a.ring(), std::move(t));
  }
  // Degree screens before the division loop.
  if (a.total_degree() < b.total_degree()) return std::nullopt;
  for (std::size_t v = 0; v < a.nvars(); ++v)
    if (a.degree_in(v) < b.degree_in(v)) return std::nullopt;

  const Monomial& lm = b.leading_monomial();
  const Int& lc = b.leading_coefficient();
  std::vector<Poly<Int>::Term> q;
  Poly<Int> r = a;
  while (!r.is_zero()) {
    const auto& [m, c] = r.leading();
    if (!lm.divides(m) || !divisible(c, lc)) return std::nullopt;
    Monomial qm = m / lm;
    Int qc = divexact(c, lc);
    r = linear_combination(Int(1), r, qc, qm, b);
    q.emplace_back(std::move(qm), std::move(qc));
  }
  return Poly<Int>(a.ring(), std::move(q));
}

inline bool divides(const Poly<Int>& b, const Poly<Int>& a) { return divide_exact(a, b).has_value(); }

// ---------------------------------------------------------------------------
// gcd.

namespace detail {

inline Poly<Int> gcd_ordinary(const Poly<Int>& a, const Poly<Int>& b);

/// gcd of a list of polynomials, stopping early once it is constant.
inline Poly<Int> gcd_list(const std::vector<Poly<Int>>& polys, Ring ring) {
  Poly<Int> g(ring);
  // Small polynomials first: their gcd tends to settle quickly.
  std::vector<const Poly<Int>*> order;
  for (const auto& p : polys)
    if (!p.is_zero()) order.push_back(&p);
  std::sort(order.begin(), order.end(), [](const Poly<Int>* x, const Poly<Int>* y) { return x->size() < y->size(); });
  for (const auto* p : order) {
    g = g.is_zero() ? primitive_part(*p) : gcd_ordinary(g, *p);
    if (g.is_constant()) return Poly<Int>::one(ring);
  }
  return g;
}

/// Pseudo-remainder of a by b with respect to x_v (sparse variant).
inline Poly<Int> pseudo_remainder(Poly<Int> a, const Poly<Int>& b, std::size_t v) {
  const long db = b.degree_in(v);
  const Poly<Int> lb = leading_coefficient_in(b, v);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const long da = a.degree_in(v);
    Poly<Int> la = leading_coefficient_in(a, v);
    Monomial shift = Monomial::unit(a.nvars(), v, static_cast<int>(da - db));
    a = lb * a - mul_monomial(la, shift) * b;
  }
  return a;
}

/// Primitive part with respect to x_v (content over the other variables),
/// with positive leading coefficient.
inline Poly<Int> primitive_in(const Poly<Int>& p, std::size_t v) {
  Poly<Int> c = gcd_list(coefficients_in(p, v), p.ring());
  Poly<Int> q = c.is_constant() ? primitive_part(p) : *divide_exact(p, c);
  return primitive_part(q);
}

inline Poly<Int> gcd_ordinary(const Poly<Int>& a, const Poly<Int>& b) {
  const Ring ring = a.ring();
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.is_constant() || b.is_constant()) return Poly<Int>::one(ring);
  if (a == b) return primitive_part(a);

  // Common monomial factor.
  std::vector<int> mins(ring.nvars);
  for (std::size_t v = 0; v < ring.nvars; ++v)
    mins[v] = static_cast<int>(std::min(a.min_degree_in(v), b.min_degree_in(v)));
  Monomial common(mins);
  if (!common.is_one()) {
    Poly<Int> g = gcd_ordinary(*divide_exact(a, Poly<Int>::monomial(ring, common)),
                               *divide_exact(b, Poly<Int>::monomial(ring, common)));
    return mul_monomial(g, common);
  }

  std::size_t v = ring.nvars;
  for (std::size_t i = ring.nvars; i-- > 0;)
    if (a.uses_variable(i) || b.uses_variable(i)) {
      v = i;
      break;
    }
  if (!a.uses_variable(v)) return gcd_ordinary(a, gcd_list(coefficients_in(b, v), ring));
  if (!b.uses_variable(v)) return gcd_ordinary(b, gcd_list(coefficients_in(a, v), ring));

  const Poly<Int> ca = gcd_list(coefficients_in(a, v), ring);
  const Poly<Int> cb = gcd_list(coefficients_in(b, v), ring);
  const Poly<Int> c = gcd_ordinary(ca, cb);
  Poly<Int> A = primitive_part(ca.is_constant() ? a : *divide_exact(a, ca));
  Poly<Int> B = primitive_part(cb.is_constant() ? b : *divide_exact(b, cb));
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  while (!B.is_zero() && B.degree_in(v) > 0) {
    Poly<Int> R = pseudo_remainder(A, B, v);
    A = std::move(B);
    B = R.is_zero() ? R : primitive_in(R, v);
  }
  // B == 0: A is the primitive gcd; otherwise the remainder sequence hit a
  // polynomial free of x_v and the primitive parts are coprime.
  Poly<Int> g = B.is_zero() ? primitive_part(A) : Poly<Int>::one(ring);
  return primitive_part(g * c);
}

}  // namespace detail

/// Primitive gcd with positive leading coefficient, times the gcd of the
/// integer contents. Laurent inputs give a Laurent result with no monomial
/// factor.
inline Poly<Int> gcd(const Poly<Int>& a, const Poly<Int>& b) {
  require_same_ring(a.ring(), b.ring());
  const Int c = strongirr::gcd(content(a), content(b));
  if (a.ring().laurent) {
    if (a.is_zero() && b.is_zero()) return a;
    Poly<Int> A = a.is_zero() ? a : laurent_normalize(a).part;
    Poly<Int> B = b.is_zero() ? b : laurent_normalize(b).part;
    if (A.is_zero()) A = Poly<Int>(B.ring());
    if (B.is_zero()) B = Poly<Int>(A.ring());
    Poly<Int> g = detail::gcd_ordinary(A, B);
    return scale(to_laurent(g), c);
  }
  if (a.is_zero() && b.is_zero()) return a;
  return scale(detail::gcd_ordinary(a, b), c);
}

// ---------------------------------------------------------------------------
// Coprimality.

namespace detail {

/// Kronecker image x_i -> y^(w_i) as a dense polynomial.
inline std::optional<dense::ZPoly> kronecker_image(const Poly<Int>& p, const std::vector<Int>& weights, long max_degree) {
  Int top = 0;
  for (const auto& [m, c] : p.terms()) {
    Int e = 0;
    for (std::size_t i = 0; i < m.size(); ++i) e += weights[i] * m[i];
    if (e > top) top = e;
  }
  if (top > max_degree) return std::nullopt;
  dense::ZPoly out(top.get_ui() + 1);
  for (const auto& [m, c] : p.terms()) {
    Int e = 0;
    for (std::size_t i = 0; i < m.size(); ++i) e += weights[i] * m[i];
    out[e.get_ui()] += c;
  }
  dense::trim(out);
  return out;
}

/// Mixed-radix Kronecker weights with digit ranges exceeding every degree
/// of the given polynomials.
inline std::vector<Int> kronecker_weights(const std::vector<const Poly<Int>*>& polys, std::size_t nvars) {
  std::vector<Int> w(nvars);
  Int acc = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    long d = 0;
    for (const auto* p : polys) d = std::max(d, p->degree_in(i));
    w[i] = acc;
    acc *= (d + 1);
  }
  return w;
}

/// True when a cheap modular certificate shows that the ordinary primitive
/// polynomials a and b share no nonconstant factor. False means "unknown".
inline bool coprime_certificate(const Poly<Int>& a, const Poly<Int>& b) {
  auto w = kronecker_weights({&a, &b}, a.nvars());
  auto fa = kronecker_image(a, w, 20000);
  auto fb = kronecker_image(b, w, 20000);
  if (!fa || !fb) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::uint64_t p = dense::large_prime(i);
    if (mod_u64(dense::lc(*fa), p) == 0) continue;
    dense::ZpPoly g = dense::gcd(dense::reduce(*fa, p), dense::reduce(*fb, p), p);
    if (dense::degree(g) == 0) return true;
  }
  return false;
}

}  // namespace detail

/// True when gcd(p, q) is a unit: +-1 in the ordinary ring, +-monomial in
/// the Laurent ring.
inline bool coprime(const Poly<Int>& p, const Poly<Int>& q) {
  require_same_ring(p.ring(), q.ring());
  if (p.is_zero() || q.is_zero()) throw InputError("coprime() of the zero polynomial");
  if (strongirr::gcd(content(p), content(q)) != 1) return false;
  Poly<Int> a = primitive_part(p.ring().laurent ? laurent_normalize(p).part : p);
  Poly<Int> b = primitive_part(q.ring().laurent ? laurent_normalize(q).part : q);
  if (a.is_constant() || b.is_constant()) return true;
  if (!p.ring().laurent) {
    // A shared variable factor x_i.
    for (std::size_t v = 0; v < a.nvars(); ++v)
      if (a.min_degree_in(v) > 0 && b.min_degree_in(v) > 0) return false;
  }
  if (detail::coprime_certificate(a, b)) return true;
  return detail::gcd_ordinary(a, b).is_constant();
}

}  // namespace strongirr

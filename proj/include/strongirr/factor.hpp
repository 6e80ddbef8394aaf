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

// Bounded-effort factorization over Z of multivariate polynomials, ordinary
// or Laurent.
//
// Splitting a primitive polynomial p proceeds through cheap certificates
// before the complete (but expensive) Kronecker search:
//
//  1. linear in some variable v: p = a v + b is irreducible iff gcd(a, b) = 1;
//  2. a nonconstant content with respect to some variable is a factor;
//  3. specialization: if p is primitive with respect to v and, at an integer
//     point of the other variables that keeps the leading coefficient in v
//     nonzero, the univariate image is irreducible over Q, then p is
//     irreducible (a factorization of p would specialize to one of the image);
//  4. Kronecker substitution x_i -> y^(w_i) with mixed-radix weights
//     w_i = prod_{j<i} (deg_j p + 1), univariate factorization of the image,
//     and exact trial division of every subset product mapped back.

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "strongirr/gcd.hpp"
#include "strongirr/ring.hpp"
#include "strongirr/upoly.hpp"
#include "strongirr/verdict.hpp"

namespace strongirr {

enum class FactorMode { ordinary, laurent };

struct FactorOptions {
  std::size_t max_vars = 6;
  long max_total_degree = 12;
  /// Largest univariate Kronecker image attempted.
  long max_image_degree = 2000;
  /// Recombination subsets tried in the Kronecker search.
  std::size_t max_subsets = 20000;
  /// Integer points tried per variable by the specialization certificate.
  int specialization_attempts = 4;
  dense::FactorBudget univariate{};
};

namespace detail {

inline dense::ZPoly to_dense(const Poly<Int>& p, std::size_t v) {
  dense::ZPoly out(static_cast<std::size_t>(std::max(0L, p.degree_in(v))) + 1);
  for (const auto& [m, c] : p.terms()) out[static_cast<std::size_t>(m[v])] += c;
  dense::trim(out);
  return out;
}

inline Poly<Int> from_dense(const dense::ZPoly& f, Ring ring, std::size_t v) {
  std::vector<Poly<Int>::Term> t;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (sgn(f[k]) != 0) t.emplace_back(Monomial::unit(ring.nvars, v, static_cast<int>(k)), f[k]);
  return Poly<Int>(ring, std::move(t));
}

/// Univariate image: every variable but v set to the given integers.
inline dense::ZPoly specialize(const Poly<Int>& p, std::size_t v, const std::vector<Int>& point) {
  dense::ZPoly out(static_cast<std::size_t>(std::max(0L, p.degree_in(v))) + 1);
  for (const auto& [m, c] : p.terms()) {
    Int term = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != v && m[i] != 0) term *= pow_int(point[i], static_cast<unsigned long>(m[i]));
    out[static_cast<std::size_t>(m[v])] += term;
  }
  dense::trim(out);
  return out;
}

inline Int evaluate_at(const Poly<Int>& p, const std::vector<Int>& point) {
  Int s = 0;
  for (const auto& [m, c] : p.terms()) {
    Int term = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) term *= pow_int(point[i], static_cast<unsigned long>(m[i]));
    s += term;
  }
  return s;
}

/// Maps a dense Kronecker image back through mixed-radix digits; nullopt if a
/// digit exceeds the allowed degree.
inline std::optional<Poly<Int>> kronecker_inverse(const dense::ZPoly& f, const std::vector<long>& degs, Ring ring) {
  std::vector<Poly<Int>::Term> t;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (sgn(f[k]) == 0) continue;
    std::vector<int> e(ring.nvars);
    std::size_t rest = k;
    for (std::size_t i = 0; i < ring.nvars; ++i) {
      std::size_t base = static_cast<std::size_t>(degs[i]) + 1;
      e[i] = static_cast<int>(rest % base);
      rest /= base;
      if (e[i] > degs[i]) return std::nullopt;
    }
    if (rest != 0) return std::nullopt;
    t.emplace_back(Monomial(std::move(e)), f[k]);
  }
  return Poly<Int>(ring, std::move(t));
}

/// Support on a line: every exponent vector is a + k v for one primitive v.
struct SupportLine {
  std::vector<int> direction;
  dense::ZPoly f;  // p = x^a f(x^v)
};

inline std::optional<SupportLine> support_line(const Poly<Int>& p) {
  if (p.size() < 2) return std::nullopt;
  const std::size_t n = p.nvars();
  const Monomial& base = p.terms().front().first;
  std::vector<int> dir(n, 0);
  long g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    dir[i] = p.terms().back().first[i] - base[i];
    g = std::gcd(g, static_cast<long>(dir[i]));
  }
  for (auto& d : dir) d = static_cast<int>(d / g);
  // Coordinate of each term along dir, relative to base.
  std::vector<long> coord;
  for (const auto& [m, c] : p.terms()) {
    long k = 0;
    bool set = false;
    for (std::size_t i = 0; i < n; ++i) {
      const long diff = m[i] - base[i];
      if (dir[i] == 0) {
        if (diff != 0) return std::nullopt;
        continue;
      }
      if (diff % dir[i] != 0) return std::nullopt;
      const long q = diff / dir[i];
      if (set && q != k) return std::nullopt;
      k = q;
      set = true;
    }
    coord.push_back(k);
  }
  const long lo = *std::min_element(coord.begin(), coord.end());
  const long hi = *std::max_element(coord.begin(), coord.end());
  SupportLine out{dir, dense::ZPoly(static_cast<std::size_t>(hi - lo) + 1)};
  for (std::size_t j = 0; j < coord.size(); ++j) out.f[static_cast<std::size_t>(coord[j] - lo)] = p.terms()[j].second;
  return out;
}

/// For p ordinary, primitive over Z, nonconstant, with no monomial factor and
/// using every variable of its ring: a proper nonconstant factor, or nullopt
/// when p is irreducible. Throws ResourceExhausted past the budget.
inline std::optional<Poly<Int>> find_factor(const Poly<Int>& p, const FactorOptions& opt) {
  const Ring ring = p.ring();
  const std::size_t n = ring.nvars;
  if (n == 1) {
    auto uf = dense::factor(to_dense(p, 0), opt.univariate);
    if (uf.factors.size() == 1 && uf.factors[0].second == 1) return std::nullopt;
    return from_dense(uf.factors[0].first, ring, 0);
  }
  if (auto line = support_line(p)) {
    // p = x^a f(x^v) with v primitive. A monomial change of coordinates
    // sends x^v to a variable, so the factors of p are those of f.
    if (static_cast<long>(line->f.size()) - 1 > opt.max_image_degree)
      throw ResourceExhausted("factor: univariate degree above budget");
    auto uf = dense::factor(line->f, opt.univariate);
    if (uf.factors.size() == 1 && uf.factors[0].second == 1) return std::nullopt;
    std::vector<Poly<Int>::Term> t;
    const auto& g = uf.factors[0].first;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (sgn(g[k]) == 0) continue;
      std::vector<int> e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<int>(k) * line->direction[i];
      t.emplace_back(Monomial(std::move(e)), g[k]);
    }
    return laurent_normalize(Poly<Int>(Ring{n, true}, std::move(t))).part;
  }
  if (n > opt.max_vars) throw ResourceExhausted("factor: too many variables");
  if (p.total_degree() > opt.max_total_degree) throw ResourceExhausted("factor: total degree above budget");

  // 1. Linear in some variable.
  for (std::size_t v = 0; v < n; ++v) {
    if (p.degree_in(v) != 1) continue;
    auto c = coefficients_in(p, v);
    if (coprime(c[1], c[0])) return std::nullopt;
    return gcd(c[1], c[0]);
  }

  // 2. Contents with respect to each variable.
  for (std::size_t v = 0; v < n; ++v) {
    Poly<Int> c = gcd_list(coefficients_in(p, v), ring);
    if (!c.is_constant()) return c;
  }

  // 3. Specialization certificate.
  dense::detail::SplitMix rng{0x5eed0000ULL + n};
  for (std::size_t v = 0; v < n; ++v) {
    const Poly<Int> lc = leading_coefficient_in(p, v);
    for (int attempt = 0; attempt < opt.specialization_attempts; ++attempt) {
      std::vector<Int> point(n, Int(0));
      for (std::size_t i = 0; i < n; ++i) {
        if (i == v) continue;
        long val = 2 + static_cast<long>(rng.next() % 29);
        if (rng.next() & 1) val = -val;
        point[i] = val;
      }
      if (sgn(evaluate_at(lc, point)) == 0) continue;
      dense::ZPoly img = specialize(p, v, point);
      if (dense::degree(img) != p.degree_in(v)) continue;
      if (dense::is_irreducible_over_q(img, opt.univariate)) return std::nullopt;
    }
  }

  // 4. Kronecker search (complete).
  std::vector<long> degs(n);
  std::vector<Int> weights(n);
  Int acc = 1;
  for (std::size_t i = 0; i < n; ++i) {
    degs[i] = p.degree_in(i);
    weights[i] = acc;
    acc *= degs[i] + 1;
  }
  auto image = kronecker_image(p, weights, opt.max_image_degree);
  if (!image) throw ResourceExhausted("factor: Kronecker image degree above budget");
  auto uf = dense::factor(*image, opt.univariate);
  // Powers of y in the image are spread over the true factors, so they are
  // handled as a separate shift j instead of as recombination pieces.
  std::vector<dense::ZPoly> pieces;
  long y_power = 0;
  for (const auto& [f, e] : uf.factors) {
    if (f.size() == 2 && sgn(f[0]) == 0) {
      y_power += e;
      continue;
    }
    for (int k = 0; k < e; ++k) pieces.push_back(f);
  }
  const std::size_t r = pieces.size();
  if (r <= 1) return std::nullopt;
  std::size_t tried = 0;
  for (std::size_t s = 1; 2 * s <= r; ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      if (++tried > opt.max_subsets) throw ResourceExhausted("factor: recombination budget exceeded");
      dense::ZPoly prod{Int(1)};
      for (auto i : idx) prod = dense::mul(prod, pieces[i]);
      for (long j = 0; j <= y_power; ++j) {
        dense::ZPoly shifted(static_cast<std::size_t>(j), Int(0));
        shifted.insert(shifted.end(), prod.begin(), prod.end());
        if (auto cand = kronecker_inverse(shifted, degs, ring)) {
          Poly<Int> g = primitive_part(*cand);
          if (!g.is_constant() && divides(g, p)) return g;
        }
      }
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == r - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

/// Runs find_factor on the compacted form of p and re-embeds the factor.
inline std::optional<Poly<Int>> find_factor_embedded(const Poly<Int>& p, const FactorOptions& opt) {
  auto [q, keep] = compact_variables(p);
  auto f = find_factor(q, opt);
  if (!f) return std::nullopt;
  return expand_variables(*f, std::span<const std::size_t>(keep), p.ring());
}

/// Strips content and monomial factor; returns the primitive remainder with
/// positive leading coefficient (ordinary ring).
struct Stripped {
  Int unit;
  Monomial monomial;
  Poly<Int> rest;
};

inline Stripped strip(const Poly<Int>& p) {
  Poly<Int> q = p;
  Monomial mono(p.nvars());
  if (p.ring().laurent) {
    auto n = laurent_normalize(p);
    q = n.part;
    mono = n.unit;
  } else {
    std::vector<int> mins(p.nvars());
    for (std::size_t v = 0; v < p.nvars(); ++v) mins[v] = static_cast<int>(p.min_degree_in(v));
    mono = Monomial(mins);
    if (!mono.is_one()) q = *divide_exact(p, Poly<Int>::monomial(p.ring(), mono));
  }
  Int unit = content(q);
  if (sgn(q.leading_coefficient()) < 0) unit = -unit;
  return {unit, mono, primitive_part(q)};
}

}  // namespace detail

/// Complete factorization. In the Laurent mode the monomial part is a unit and
/// is reported in monomial_unit; in the ordinary mode each x_i dividing p is
/// listed as a factor. Throws ResourceExhausted past the budget.
inline Factorization factorize(const Poly<Int>& p, FactorMode mode = FactorMode::ordinary, const FactorOptions& opt = {}) {
  if (p.is_zero()) throw InputError("factorization of the zero polynomial");
  const bool laurent = mode == FactorMode::laurent;
  const Ring out_ring{p.nvars(), laurent || p.ring().laurent};
  if (!laurent && p.ring().laurent) {
    for (const auto& t : p.terms())
      if (!t.first.is_nonnegative()) throw InputError("ordinary factorization of a polynomial with negative exponents");
  }
  Poly<Int> work = laurent ? to_laurent(p) : with_ring(p, Ring{p.nvars(), false});
  auto st = detail::strip(work);

  Factorization f;
  f.ring = out_ring;
  f.monomial_unit = Monomial(p.nvars());
  std::vector<Poly<Int>> irreducible;
  if (laurent) {
    f.monomial_unit = st.monomial;
  } else {
    for (std::size_t v = 0; v < p.nvars(); ++v)
      for (int k = 0; k < st.monomial[v]; ++k) irreducible.push_back(Poly<Int>::variable(st.rest.ring(), v));
  }

  std::vector<Poly<Int>> stack;
  if (!st.rest.is_constant()) stack.push_back(st.rest);
  while (!stack.empty()) {
    Poly<Int> q = std::move(stack.back());
    stack.pop_back();
    auto g = detail::find_factor_embedded(q, opt);
    if (!g) {
      irreducible.push_back(q);
      continue;
    }
    Poly<Int> h = primitive_part(*divide_exact(q, *g));
    stack.push_back(primitive_part(*g));
    stack.push_back(h);
  }

  std::map<std::string, std::pair<Poly<Int>, int>> merged;
  for (auto& q : irreducible) {
    Poly<Int> r = with_ring(q, out_ring);
    auto [it, inserted] = merged.try_emplace(to_string(r), r, 0);
    it->second.second += 1;
  }
  std::vector<std::pair<Poly<Int>, int>> factors;
  for (auto& [k, v] : merged) factors.push_back(std::move(v));
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    int c = grlex_compare(a.first.leading_monomial(), b.first.leading_monomial());
    if (c != 0) return c < 0;
    return to_string(a.first) < to_string(b.first);
  });
  f.factors = std::move(factors);
  f.unit = 1;
  Poly<Int> prod = expand(f);
  Poly<Int> target = with_ring(work, out_ring);
  f.unit = divexact(target.leading_coefficient(), prod.leading_coefficient());
  return f;
}

/// Decides irreducibility in the ordinary ring or, after factoring out the
/// monomial part, in the Laurent ring. REFUTED carries the factorization.
inline Verdict is_irreducible(const Poly<Int>& p, FactorMode mode = FactorMode::ordinary, const FactorOptions& opt = {}) {
  if (p.is_zero()) throw InputError("irreducibility of the zero polynomial");
  const bool laurent = mode == FactorMode::laurent;
  if (laurent ? is_laurent_unit(p) : (p.is_constant() && abs_int(p.constant_term()) == 1))
    throw InputError("irreducibility of a unit");
  if (!laurent && p.ring().laurent)
    for (const auto& t : p.terms())
      if (!t.first.is_nonnegative()) throw InputError("ordinary irreducibility of a polynomial with negative exponents");
  try {
    Poly<Int> work = laurent ? to_laurent(p) : with_ring(p, Ring{p.nvars(), false});
    auto st = detail::strip(work);
    const bool has_mono = !laurent && !st.monomial.is_one();
    const bool nonconstant = !st.rest.is_constant();
    bool irreducible = false;
    std::string rule = "factor";
    if (!nonconstant && !has_mono) {
      irreducible = is_probable_prime(abs_int(st.unit));
      rule = "prime-constant";
    } else if (!nonconstant && has_mono) {
      irreducible = abs_int(st.unit) == 1 && st.monomial.degree() == 1;
    } else if (abs_int(st.unit) == 1 && !has_mono) {
      irreducible = !detail::find_factor_embedded(st.rest, opt).has_value();
      if (st.rest.total_degree() == 1) rule = "degree-1";
    }
    if (irreducible) return Verdict::proved(rule);
    Factorization f = factorize(p, mode, opt);
    return Verdict::refuted("reducible", FactorWitness{{}, with_ring(work, f.ring), std::move(f)});
  } catch (const ResourceExhausted& e) {
    return Verdict::undecided("resource:factor");
  }
}

}  // namespace strongirr

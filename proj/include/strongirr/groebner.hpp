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

// Reduced Groebner bases over Q in graded lexicographic order.
//
// Buchberger's algorithm with the normal selection strategy (smallest lcm
// first) and the Gebauer-Moeller installation of new pairs, which applies
// both of Buchberger's criteria. Integer inputs are made primitive before the
// run; arithmetic inside is over Q with monic basis elements.

#pragma once

#include <algorithm>
#include <vector>

#include "strongirr/ring.hpp"

namespace strongirr {

struct GroebnerOptions {
  /// S-pairs reduced before giving up.
  std::size_t max_pairs = 100000;
  /// Basis elements allowed before giving up.
  std::size_t max_basis = 5000;
};

/// Generators of an ideal in an ordinary polynomial ring; zeros are dropped.
struct IdealBasis {
  Ring ring;
  std::vector<Poly<Int>> generators;

  IdealBasis() = default;
  IdealBasis(Ring r, std::vector<Poly<Int>> gens) : ring(r) {
    if (r.laurent) throw InputError("an ideal basis lives in an ordinary polynomial ring");
    for (auto& g : gens) {
      require_same_ring(g.ring(), r);
      if (!g.is_zero()) generators.push_back(std::move(g));
    }
  }
};

/// Reduced basis, monic, sorted by increasing leading monomial.
struct GroebnerBasis {
  Ring ring;
  std::vector<Poly<Rat>> basis;
  std::string order = "grlex";

  bool is_unit_ideal() const { return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero(); }
};

namespace detail {

inline Poly<Rat> make_monic(const Poly<Rat>& p) {
  if (p.is_zero() || is_one(p.leading_coefficient())) return p;
  return scale(p, Rat(1 / p.leading_coefficient()));
}

/// Remainder of p on division by the monic polynomials `divisors`.
inline Poly<Rat> reduce_full(Poly<Rat> p, const std::vector<const Poly<Rat>*>& divisors) {
  std::vector<Poly<Rat>::Term> rem;
  const Ring ring = p.ring();
  while (!p.is_zero()) {
    const auto& [m, c] = p.leading();
    const Poly<Rat>* hit = nullptr;
    for (const auto* g : divisors)
      if (g->leading_monomial().divides(m)) {
        hit = g;
        break;
      }
    if (hit) {
      p = linear_combination(Rat(1), p, Rat(c), m / hit->leading_monomial(), *hit);
    } else {
      rem.emplace_back(m, c);
      std::vector<Poly<Rat>::Term> tail(p.terms().begin() + 1, p.terms().end());
      p = Poly<Rat>(ring, std::move(tail));
    }
  }
  return Poly<Rat>(ring, std::move(rem));
}

}  // namespace detail

/// Normal form of f modulo a Groebner basis.
inline Poly<Rat> normal_form(const Poly<Rat>& f, const GroebnerBasis& G) {
  require_same_ring(f.ring(), G.ring);
  std::vector<const Poly<Rat>*> d;
  for (const auto& g : G.basis) d.push_back(&g);
  return detail::reduce_full(f, d);
}

inline GroebnerBasis buchberger(const std::vector<Poly<Rat>>& gens, Ring ring, const GroebnerOptions& opt = {}) {
  if (ring.laurent) throw InputError("Groebner bases need an ordinary polynomial ring");
  std::vector<Poly<Rat>> store;
  std::vector<bool> active;
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;

  auto lm = [&](std::size_t i) -> const Monomial& { return store[i].leading_monomial(); };

  // Gebauer-Moeller update for a new element with index h.
  auto update = [&](std::size_t h) {
    std::vector<std::size_t> C;
    for (std::size_t g = 0; g < store.size(); ++g)
      if (active[g] && g != h) C.push_back(g);
    std::vector<std::size_t> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const std::size_t g1 = C[a];
      const Monomial l1 = lcm(lm(h), lm(g1));
      bool keep = disjoint(lm(h), lm(g1));
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (lcm(lm(h), lm(C[b])).divides(l1)) keep = false;
        for (std::size_t g2 : D)
          if (keep && lcm(lm(h), lm(g2)).divides(l1)) keep = false;
      }
      if (keep) D.push_back(g1);
    }
    std::vector<Pair> next;
    for (const auto& pr : pairs) {
      const bool drop = lm(h).divides(pr.lcm) && lcm(lm(pr.i), lm(h)) != pr.lcm && lcm(lm(pr.j), lm(h)) != pr.lcm;
      if (!drop) next.push_back(pr);
    }
    for (std::size_t g : D)
      if (!disjoint(lm(h), lm(g))) next.push_back({g, h, lcm(lm(h), lm(g))});
    pairs = std::move(next);
    for (std::size_t g = 0; g < store.size(); ++g)
      if (active[g] && g != h && lm(h).divides(lm(g))) active[g] = false;
  };

  auto active_divisors = [&]() {
    std::vector<const Poly<Rat>*> d;
    for (std::size_t g = 0; g < store.size(); ++g)
      if (active[g]) d.push_back(&store[g]);
    return d;
  };

  auto add = [&](Poly<Rat> h) {
    store.push_back(detail::make_monic(h));
    active.push_back(true);
    if (store.size() > opt.max_basis) throw ResourceExhausted("groebner: basis size budget exceeded");
    update(store.size() - 1);
  };

  // Seed with the inputs, smallest leading monomial first, each reduced by
  // the elements already present.
  std::vector<Poly<Rat>> sorted;
  for (const auto& g : gens) {
    require_same_ring(g.ring(), ring);
    if (!g.is_zero()) sorted.push_back(g);
  }
  std::sort(sorted.begin(), sorted.end(), [](const Poly<Rat>& a, const Poly<Rat>& b) {
    return grlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (const auto& g : sorted) {
    Poly<Rat> h = detail::reduce_full(g, active_divisors());
    if (!h.is_zero()) add(h);
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      int c = grlex_compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair pr = *it;
    pairs.erase(it);
    if (++processed > opt.max_pairs) throw ResourceExhausted("groebner: S-pair budget exceeded");
    const Poly<Rat>& f = store[pr.i];
    const Poly<Rat>& g = store[pr.j];
    Poly<Rat> s = linear_combination(Rat(1), mul_monomial(f, pr.lcm / f.leading_monomial()), Rat(1),
                                     pr.lcm / g.leading_monomial(), g);
    Poly<Rat> h = detail::reduce_full(s, active_divisors());
    if (!h.is_zero()) add(h);
  }

  // Interreduce the minimal basis.
  std::vector<Poly<Rat>> minimal;
  for (std::size_t g = 0; g < store.size(); ++g)
    if (active[g]) minimal.push_back(store[g]);
  GroebnerBasis out{ring, {}, "grlex"};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Poly<Rat>*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    Poly<Rat> lead = Poly<Rat>::monomial(ring, minimal[i].leading_monomial(), minimal[i].leading_coefficient());
    Poly<Rat> tail = minimal[i] - lead;
    out.basis.push_back(detail::make_monic(lead + detail::reduce_full(tail, others)));
  }
  std::sort(out.basis.begin(), out.basis.end(), [](const Poly<Rat>& a, const Poly<Rat>& b) {
    return grlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return out;
}

inline std::vector<Poly<Rat>> to_rational_generators(const std::vector<Poly<Int>>& gens) {
  std::vector<Poly<Rat>> out;
  for (const auto& g : gens)
    if (!g.is_zero()) out.push_back(to_rational(primitive_part(g)));
  return out;
}

inline GroebnerBasis buchberger(const std::vector<Poly<Int>>& gens, Ring ring, const GroebnerOptions& opt = {}) {
  return buchberger(to_rational_generators(gens), ring, opt);
}

inline GroebnerBasis buchberger(const IdealBasis& I, const GroebnerOptions& opt = {}) {
  return buchberger(I.generators, I.ring, opt);
}

inline bool ideal_member(const Poly<Rat>& f, const GroebnerBasis& G) { return normal_form(f, G).is_zero(); }

inline bool ideal_member(const Poly<Int>& f, const GroebnerBasis& G) { return ideal_member(to_rational(f), G); }

/// f vanishes on the complex zero set of the ideal: 1 is in <I, 1 - y f>
/// with y a new last variable.
inline bool radical_member(const Poly<Rat>& f, const std::vector<Poly<Rat>>& gens, Ring ring, const GroebnerOptions& opt = {}) {
  if (f.is_zero()) return true;
  const std::size_t n = ring.nvars;
  const Ring big{n + 1, false};
  std::vector<Poly<Rat>> ext;
  for (const auto& g : gens) ext.push_back(extend_variables(g, n + 1));
  Poly<Rat> y = Poly<Rat>::variable(big, n);
  ext.push_back(Poly<Rat>::one(big) - y * extend_variables(f, n + 1));
  return buchberger(ext, big, opt).is_unit_ideal();
}

inline bool radical_member(const Poly<Int>& f, const std::vector<Poly<Int>>& gens, Ring ring, const GroebnerOptions& opt = {}) {
  return radical_member(to_rational(f), to_rational_generators(gens), ring, opt);
}

inline bool radical_member(const Poly<Int>& f, const IdealBasis& I, const GroebnerOptions& opt = {}) {
  return radical_member(f, I.generators, I.ring, opt);
}

namespace detail {
inline void require_homogeneous(const std::vector<Poly<Rat>>& gens) {
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw InputError("only_trivial_solution requires homogeneous generators");
}
}  // namespace detail

/// The homogeneous system has only the zero solution over C. Decided from one
/// Groebner basis: for a homogeneous ideal the zero set is a cone, so it is
/// {0} exactly when the ideal is zero-dimensional, i.e. each variable has a
/// pure power among the leading monomials.
inline bool only_trivial_solution(const std::vector<Poly<Rat>>& gens, Ring ring, const GroebnerOptions& opt = {}) {
  detail::require_homogeneous(gens);
  GroebnerBasis G = buchberger(gens, ring, opt);
  if (G.basis.empty()) return ring.nvars == 0;
  if (G.is_unit_ideal()) return true;
  for (std::size_t v = 0; v < ring.nvars; ++v) {
    bool pure = false;
    for (const auto& g : G.basis) {
      const Monomial& m = g.leading_monomial();
      if (m[v] > 0 && m.degree() == m[v]) {
        pure = true;
        break;
      }
    }
    if (!pure) return false;
  }
  return true;
}

inline bool only_trivial_solution(const std::vector<Poly<Int>>& gens, Ring ring, const GroebnerOptions& opt = {}) {
  return only_trivial_solution(to_rational_generators(gens), ring, opt);
}

inline bool only_trivial_solution(const IdealBasis& I, const GroebnerOptions& opt = {}) {
  return only_trivial_solution(I.generators, I.ring, opt);
}

/// The same decision through one radical membership test per variable.
inline bool only_trivial_solution_by_radical(const std::vector<Poly<Rat>>& gens, Ring ring, const GroebnerOptions& opt = {}) {
  detail::require_homogeneous(gens);
  for (std::size_t v = 0; v < ring.nvars; ++v)
    if (!radical_member(Poly<Rat>::variable(ring, v), gens, ring, opt)) return false;
  return true;
}

}  // namespace strongirr

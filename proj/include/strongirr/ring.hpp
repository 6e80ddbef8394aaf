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

// Exact multivariate polynomials over Z and Q, in the ordinary ring
// R[x1..xn] and in the Laurent ring R[x1^{+-1}..xn^{+-1}].
//
// A Poly is an immutable value: a ring descriptor plus a vector of
// (monomial, coefficient) terms kept sorted descending in graded
// lexicographic order with no zero coefficients. Two polynomials are equal
// exactly when their term vectors are equal, so the canonical text form is
// a faithful serialization.

#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "strongirr/integer.hpp"

namespace strongirr {

/// Degree reported for the zero polynomial.
inline constexpr long kNegInfDegree = std::numeric_limits<long>::min();

struct Ring {
  std::size_t nvars = 0;
  bool laurent = false;

  friend bool operator==(const Ring&, const Ring&) = default;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}
  Monomial(std::initializer_list<int> exps) : e_(exps) {}

  static Monomial unit(std::size_t nvars, std::size_t var, int power = 1) {
    Monomial m(nvars);
    m.e_[var] = power;
    return m;
  }

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  long degree() const { return std::accumulate(e_.begin(), e_.end(), 0L); }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v >= 0; });
  }

  /// Componentwise a <= b (a divides b in the ordinary ring).
  bool divides(const Monomial& b) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > b.e_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }
  Monomial inverse() const {
    Monomial r(size());
    for (std::size_t i = 0; i < size(); ++i) r.e_[i] = -e_[i];
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
  }
  /// True when the two monomials share no variable.
  friend bool disjoint(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.e_[i] > 0 && b.e_[i] > 0) return false;
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> e_;
};

/// Graded lexicographic comparison with x1 > x2 > ... ; returns -1, 0 or 1.
inline int grlex_compare(const Monomial& a, const Monomial& b) {
  long da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

enum class VarStyle { x, z, t };

template <Coefficient C>
class Poly {
 public:
  using Term = std::pair<Monomial, C>;

  Poly() = default;
  explicit Poly(Ring ring) : ring_(ring) {}
  Poly(Ring ring, std::vector<Term> terms) : ring_(ring), terms_(std::move(terms)) {
    validate();
    canonicalize();
  }

  static Poly constant(Ring ring, const C& c) {
    return Poly(ring, {Term{Monomial(ring.nvars), c}});
  }
  static Poly one(Ring ring) { return constant(ring, C(1)); }
  static Poly variable(Ring ring, std::size_t var) {
    if (var >= ring.nvars) throw InputError("variable index out of range");
    return Poly(ring, {Term{Monomial::unit(ring.nvars, var), C(1)}});
  }
  static Poly monomial(Ring ring, Monomial m, const C& c = C(1)) {
    return Poly(ring, {Term{std::move(m), c}});
  }

  const Ring& ring() const { return ring_; }
  std::size_t nvars() const { return ring_.nvars; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Leading term in graded lex order; caller guarantees nonzero.
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().first; }
  const C& leading_coefficient() const { return terms_.front().second; }

  /// Coefficient of the constant monomial.
  C constant_term() const {
    for (const auto& [m, c] : terms_)
      if (m.is_one()) return c;
    return C(0);
  }

  long total_degree() const { return terms_.empty() ? kNegInfDegree : terms_.front().first.degree(); }

  long degree_in(std::size_t var) const {
    long d = kNegInfDegree;
    for (const auto& t : terms_) d = std::max<long>(d, t.first[var]);
    return d;
  }
  long min_degree_in(std::size_t var) const {
    if (terms_.empty()) return kNegInfDegree;
    long d = std::numeric_limits<long>::max();
    for (const auto& t : terms_) d = std::min<long>(d, t.first[var]);
    return d;
  }
  bool uses_variable(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.first[var] != 0; });
  }
  std::size_t used_variable_count() const {
    std::size_t n = 0;
    for (std::size_t v = 0; v < nvars(); ++v) n += uses_variable(v) ? 1 : 0;
    return n;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = terms_.front().first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.first.degree() == d; });
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  void validate() const {
    for (const auto& t : terms_) {
      if (t.first.size() != ring_.nvars) throw InputError("monomial length does not match ring");
      if (!ring_.laurent && !t.first.is_nonnegative())
        throw InputError("negative exponent outside a Laurent ring");
    }
  }
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_compare(a.first, b.first) > 0; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().first == t.first) {
        merged.back().second += t.second;
      } else {
        if (!merged.empty() && strongirr::is_zero(merged.back().second)) merged.pop_back();
        merged.push_back(std::move(t));
      }
    }
    if (!merged.empty() && strongirr::is_zero(merged.back().second)) merged.pop_back();
    terms_ = std::move(merged);
  }

  // Sorted-input constructor used by the merge-based arithmetic below.
  struct Presorted {};
  Poly(Ring ring, std::vector<Term> terms, Presorted) : ring_(ring), terms_(std::move(terms)) {}

  template <Coefficient D>
  friend Poly<D> linear_combination(const D&, const Poly<D>&, const D&, const Monomial&, const Poly<D>&);

  Ring ring_{};
  std::vector<Term> terms_;
};

using ZPolyM = Poly<Int>;
using QPolyM = Poly<Rat>;

inline void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw InputError("ring mismatch");
}

/// ca*a - cb*m*b computed by a single merge pass.
template <Coefficient C>
Poly<C> linear_combination(const C& ca, const Poly<C>& a, const C& cb, const Monomial& m, const Poly<C>& b) {
  require_same_ring(a.ring(), b.ring());
  using Term = typename Poly<C>::Term;
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0, j = 0;
  const bool shift = !m.is_one();
  auto b_mono = [&](std::size_t k) { return shift ? tb[k].first * m : tb[k].first; };
  std::optional<Monomial> mb;
  if (j < tb.size()) mb = b_mono(j);
  while (i < ta.size() || j < tb.size()) {
    int cmp;
    if (i == ta.size()) cmp = -1;
    else if (j == tb.size()) cmp = 1;
    else cmp = grlex_compare(ta[i].first, *mb);
    if (cmp > 0) {
      C c = ca * ta[i].second;
      if (!is_zero(c)) out.emplace_back(ta[i].first, std::move(c));
      ++i;
    } else if (cmp < 0) {
      C c = -(cb * tb[j].second);
      if (!is_zero(c)) out.emplace_back(std::move(*mb), std::move(c));
      ++j;
      if (j < tb.size()) mb = b_mono(j);
    } else {
      C c = ca * ta[i].second - cb * tb[j].second;
      if (!is_zero(c)) out.emplace_back(ta[i].first, std::move(c));
      ++i;
      ++j;
      if (j < tb.size()) mb = b_mono(j);
    }
  }
  return Poly<C>(a.ring(), std::move(out), typename Poly<C>::Presorted{});
}

template <Coefficient C>
Poly<C> operator+(const Poly<C>& a, const Poly<C>& b) {
  return linear_combination(C(1), a, C(-1), Monomial(a.nvars()), b);
}
template <Coefficient C>
Poly<C> operator-(const Poly<C>& a, const Poly<C>& b) {
  return linear_combination(C(1), a, C(1), Monomial(a.nvars()), b);
}
template <Coefficient C>
Poly<C> operator-(const Poly<C>& a) {
  std::vector<typename Poly<C>::Term> t = a.terms();
  for (auto& x : t) x.second = -x.second;
  return Poly<C>(a.ring(), std::move(t));
}

template <Coefficient C>
Poly<C> scale(const Poly<C>& a, const C& c) {
  if (is_zero(c)) return Poly<C>(a.ring());
  std::vector<typename Poly<C>::Term> t = a.terms();
  for (auto& x : t) x.second *= c;
  return Poly<C>(a.ring(), std::move(t));
}

template <Coefficient C>
Poly<C> mul_monomial(const Poly<C>& a, const Monomial& m, const C& c = C(1)) {
  if (is_zero(c)) return Poly<C>(a.ring());
  std::vector<typename Poly<C>::Term> t;
  t.reserve(a.size());
  for (const auto& [mono, coef] : a.terms()) t.emplace_back(mono * m, coef * c);
  return Poly<C>(a.ring(), std::move(t));
}

template <Coefficient C>
Poly<C> operator*(const Poly<C>& a, const Poly<C>& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Poly<C>(a.ring());
  const Poly<C>& small = a.size() <= b.size() ? a : b;
  const Poly<C>& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return mul_monomial(large, small.leading().first, small.leading().second);
  std::vector<typename Poly<C>::Term> t;
  t.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) t.emplace_back(ma * mb, ca * cb);
  return Poly<C>(a.ring(), std::move(t));
}

/// Non-negative integer power; negative powers are allowed only for
/// Laurent monomials with unit coefficient.
template <Coefficient C>
Poly<C> pow(const Poly<C>& a, long e) {
  if (e < 0) {
    if (!a.ring().laurent) throw InputError("negative power outside a Laurent ring");
    if (!a.is_monomial() || !(a.leading_coefficient() == 1 || a.leading_coefficient() == -1))
      throw InputError("negative power of a non-unit");
    const auto& [m, c] = a.leading();
    Monomial r(a.nvars());
    for (long k = 0; k < -e; ++k) r = r * m.inverse();
    C cc = ((-e) % 2 == 0) ? C(1) : c;
    return Poly<C>::monomial(a.ring(), r, cc);
  }
  Poly<C> result = Poly<C>::one(a.ring());
  Poly<C> base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Ring conversions and coefficient utilities.

template <Coefficient C>
Poly<C> with_ring(const Poly<C>& p, Ring ring) {
  if (ring.nvars != p.nvars()) throw InputError("ring variable count mismatch");
  return Poly<C>(ring, p.terms());
}

template <Coefficient C>
Poly<C> to_laurent(const Poly<C>& p) {
  return with_ring(p, Ring{p.nvars(), true});
}

/// Embed into a ring with more variables (new variables appended).
template <Coefficient C>
Poly<C> extend_variables(const Poly<C>& p, std::size_t nvars) {
  if (nvars < p.nvars()) throw InputError("cannot shrink variable count");
  std::vector<typename Poly<C>::Term> t;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e = m.exponents();
    e.resize(nvars, 0);
    t.emplace_back(Monomial(std::move(e)), c);
  }
  return Poly<C>(Ring{nvars, p.ring().laurent}, std::move(t));
}

inline Poly<Rat> to_rational(const Poly<Int>& p) {
  std::vector<Poly<Rat>::Term> t;
  for (const auto& [m, c] : p.terms()) t.emplace_back(m, Rat(c));
  return Poly<Rat>(p.ring(), std::move(t));
}

/// Gcd of the coefficients, non-negative; 0 for the zero polynomial.
inline Int content(const Poly<Int>& p) {
  Int g = 0;
  for (const auto& t : p.terms()) {
    g = gcd(g, t.second);
    if (g == 1) break;
  }
  return g;
}

/// p / content(p) with positive leading coefficient.
inline Poly<Int> primitive_part(const Poly<Int>& p) {
  if (p.is_zero()) return p;
  Int c = content(p);
  if (sgn(p.leading_coefficient()) < 0) c = -c;
  if (c == 1) return p;
  std::vector<Poly<Int>::Term> t;
  for (const auto& [m, k] : p.terms()) t.emplace_back(m, divexact(k, c));
  return Poly<Int>(p.ring(), std::move(t));
}

/// Clears denominators: returns the primitive integer polynomial with positive
/// leading coefficient that is a rational multiple of p.
inline Poly<Int> primitive_integer(const Poly<Rat>& p) {
  Int den = 1;
  for (const auto& t : p.terms()) den = lcm(den, t.second.get_den());
  std::vector<Poly<Int>::Term> t;
  for (const auto& [m, c] : p.terms()) t.emplace_back(m, Int(c.get_num() * divexact(den, c.get_den())));
  return primitive_part(Poly<Int>(p.ring(), std::move(t)));
}

/// Integer polynomial from a rational one; throws if a coefficient is not integral.
inline Poly<Int> to_integer(const Poly<Rat>& p) {
  std::vector<Poly<Int>::Term> t;
  for (const auto& [m, c] : p.terms()) {
    if (c.get_den() != 1) throw InputError("non-integral coefficient where an integer polynomial is required");
    t.emplace_back(m, Int(c.get_num()));
  }
  return Poly<Int>(p.ring(), std::move(t));
}

/// p(1,...,1): the sum of the coefficients.
template <Coefficient C>
C eval_at_ones(const Poly<C>& p) {
  C s = 0;
  for (const auto& t : p.terms()) s += t.second;
  return s;
}

/// Partial derivative with respect to one variable (ordinary or Laurent).
template <Coefficient C>
Poly<C> derivative(const Poly<C>& p, std::size_t var) {
  std::vector<typename Poly<C>::Term> t;
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    std::vector<int> e = m.exponents();
    C k = c * C(m[var]);
    e[var] -= 1;
    t.emplace_back(Monomial(std::move(e)), std::move(k));
  }
  return Poly<C>(p.ring(), std::move(t));
}

// ---------------------------------------------------------------------------
// Substitutions.

/// x_i -> x_i^{-1}.
template <Coefficient C>
Poly<C> bar_involution(const Poly<C>& p) {
  std::vector<typename Poly<C>::Term> t;
  t.reserve(p.size());
  for (const auto& [m, c] : p.terms()) t.emplace_back(m.inverse(), c);
  return Poly<C>(Ring{p.nvars(), true}, std::move(t));
}

/// x_i -> x_i^{t_i}. Every t_i must be nonzero; negative t_i need a Laurent ring.
template <Coefficient C>
Poly<C> power_substitute(const Poly<C>& p, std::span<const int> t) {
  if (t.size() != p.nvars()) throw InputError("substitution vector length does not match ring");
  bool negative = false;
  for (int v : t) {
    if (v == 0) throw InputError("power substitution exponent must be nonzero");
    negative = negative || v < 0;
  }
  if (negative && !p.ring().laurent) throw InputError("negative power substitution outside a Laurent ring");
  std::vector<typename Poly<C>::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e = m.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) e[i] *= t[i];
    terms.emplace_back(Monomial(std::move(e)), c);
  }
  return Poly<C>(p.ring(), std::move(terms));
}

template <Coefficient C>
Poly<C> power_substitute(const Poly<C>& p, std::initializer_list<int> t) {
  std::vector<int> v(t);
  return power_substitute(p, std::span<const int>(v));
}

/// Replaces x_i by the monomial images[i] of the target ring.
template <Coefficient C>
Poly<C> monomial_substitute(const Poly<C>& p, std::span<const Monomial> images, Ring target) {
  if (images.size() != p.nvars()) throw InputError("image count does not match variable count");
  for (const auto& img : images) {
    if (img.size() != target.nvars) throw InputError("image length does not match target ring");
    if (img.is_one()) throw InputError("monomial image must be a nonzero exponent vector");
  }
  std::vector<typename Poly<C>::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    Monomial r(target.nvars);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (long k = 0; k < std::abs(m[i]); ++k) r = m[i] > 0 ? r * images[i] : r / images[i];
    terms.emplace_back(std::move(r), c);
  }
  return Poly<C>(target, std::move(terms));
}

template <Coefficient C>
struct Normalized {
  Poly<C> part;   // ordinary polynomial not divisible by any variable
  Monomial unit;  // p = part * unit
};

/// Factors out the monomial x^{min exponents}; p = part * unit.
template <Coefficient C>
Normalized<C> laurent_normalize(const Poly<C>& p) {
  if (p.is_zero()) throw InputError("laurent_normalize of the zero polynomial");
  std::vector<int> mins(p.nvars());
  for (std::size_t v = 0; v < p.nvars(); ++v) mins[v] = static_cast<int>(p.min_degree_in(v));
  Monomial unit(mins);
  std::vector<typename Poly<C>::Term> t;
  t.reserve(p.size());
  for (const auto& [m, c] : p.terms()) t.emplace_back(m / unit, c);
  return {Poly<C>(Ring{p.nvars(), false}, std::move(t)), std::move(unit)};
}

/// True for c * monomial with c a unit of the coefficient ring.
template <Coefficient C>
bool is_laurent_unit(const Poly<C>& p) {
  if (!p.is_monomial()) return false;
  if constexpr (std::same_as<C, Int>) return abs_int(p.leading_coefficient()) == 1;
  else return true;
}

/// Drops the variables p does not use; returns the compacted polynomial and
/// the original index of each kept variable.
template <Coefficient C>
std::pair<Poly<C>, std::vector<std::size_t>> compact_variables(const Poly<C>& p) {
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < p.nvars(); ++v)
    if (p.uses_variable(v)) keep.push_back(v);
  std::vector<typename Poly<C>::Term> t;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e;
    e.reserve(keep.size());
    for (auto v : keep) e.push_back(m[v]);
    t.emplace_back(Monomial(std::move(e)), c);
  }
  return {Poly<C>(Ring{keep.size(), p.ring().laurent}, std::move(t)), std::move(keep)};
}

/// Inverse of compact_variables.
template <Coefficient C>
Poly<C> expand_variables(const Poly<C>& p, std::span<const std::size_t> keep, Ring target) {
  std::vector<typename Poly<C>::Term> t;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(target.nvars, 0);
    for (std::size_t i = 0; i < keep.size(); ++i) e[keep[i]] = m[i];
    t.emplace_back(Monomial(std::move(e)), c);
  }
  return Poly<C>(target, std::move(t));
}

// ---------------------------------------------------------------------------
// Homogenization.

template <Coefficient C>
struct HomogPoly {
  Poly<C> inner;  // ordinary, variables z0..zn
  long total_degree = 0;
};

/// P(z0..zn) = z0^deg(p) p(z1/z0, ..., zn/z0).
template <Coefficient C>
HomogPoly<C> homogenize(const Poly<C>& p) {
  if (p.is_zero()) throw InputError("homogenize of the zero polynomial");
  for (const auto& t : p.terms())
    if (!t.first.is_nonnegative()) throw InputError("homogenize requires an ordinary polynomial");
  const long d = p.total_degree();
  const std::size_t n = p.nvars();
  std::vector<typename Poly<C>::Term> t;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(n + 1);
    e[0] = static_cast<int>(d - m.degree());
    for (std::size_t i = 0; i < n; ++i) e[i + 1] = m[i];
    t.emplace_back(Monomial(std::move(e)), c);
  }
  return {Poly<C>(Ring{n + 1, false}, std::move(t)), d};
}

/// Sets z0 = 1.
template <Coefficient C>
Poly<C> dehomogenize(const HomogPoly<C>& P) {
  const std::size_t n = P.inner.nvars() - 1;
  std::vector<typename Poly<C>::Term> t;
  for (const auto& [m, c] : P.inner.terms()) {
    std::vector<int> e(m.exponents().begin() + 1, m.exponents().end());
    t.emplace_back(Monomial(std::move(e)), c);
  }
  return Poly<C>(Ring{n, false}, std::move(t));
}

// ---------------------------------------------------------------------------
// Canonical text form.

inline std::string variable_name(std::size_t index, std::size_t nvars, VarStyle style) {
  switch (style) {
    case VarStyle::z:
      return "z" + std::to_string(index);
    case VarStyle::t:
      return nvars == 1 ? std::string("t") : "t" + std::to_string(index + 1);
    case VarStyle::x:
    default:
      return "x" + std::to_string(index + 1);
  }
}

inline std::string monomial_to_string(const Monomial& m, VarStyle style = VarStyle::x) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += variable_name(i, m.size(), style);
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

/// Terms descending in graded lex order, e.g. `x1 - x2 + 1`, `3*x1^-1*x2 - 1/2`.
template <Coefficient C>
std::string to_string(const Poly<C>& p, VarStyle style = VarStyle::x) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    C mag = negative ? C(-c) : c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += strongirr::to_string(mag);
    } else {
      if (!is_one(mag)) s += strongirr::to_string(mag) + "*";
      s += monomial_to_string(m, style);
    }
  }
  return s;
}

}  // namespace strongirr

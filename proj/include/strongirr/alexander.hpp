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

// Finitely presented modules over Z[x1^{+-1}, ..., xn^{+-1}]: elementary
// ideals, divisorial hulls and torsion Alexander polynomials. Also Fox
// calculus for closed braids, the cyclic presentation Z[Z^n]/<p * bar(p)>
// and the self-linking arithmetic of a cyclic Blanchfield form.
//
// A presentation with p rows and q columns describes R^p -> R^q -> M -> 0,
// so rows are relations and columns are generators.

#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strongirr/factor.hpp"
#include "strongirr/gcd.hpp"
#include "strongirr/ring.hpp"

namespace strongirr {

using LaurentMatrix = std::vector<std::vector<Poly<Int>>>;

struct ModulePresentation {
  Ring ring;
  std::size_t rows = 0;
  std::size_t cols = 0;
  LaurentMatrix matrix;
  /// Set for Fox matrices of closed braids. Those present the module of the
  /// cover relative to a lifted basepoint, which carries one extra free
  /// summand compared to the link module itself.
  bool augmented = false;

  ModulePresentation() = default;

  /// Entries are moved to the Laurent ring on `nvars` variables.
  ModulePresentation(std::size_t nvars, std::size_t ncols, LaurentMatrix m, bool aug = false)
      : ring{nvars, true}, rows(m.size()), cols(ncols), augmented(aug) {
    if (nvars == 0) throw InputError("module presentation needs at least one variable");
    for (auto& row : m) {
      if (row.size() != ncols)
        throw InputError("presentation matrix is not rectangular: expected " + std::to_string(ncols) + " columns, got " +
                         std::to_string(row.size()));
      std::vector<Poly<Int>> r;
      for (auto& e : row) {
        if (e.nvars() != nvars) throw InputError("matrix entry lives in a ring with a different variable count");
        r.push_back(to_laurent(e));
      }
      matrix.push_back(std::move(r));
    }
  }
};

/// Generators of an ideal of the Laurent ring. No generators means the zero
/// ideal.
struct LaurentIdeal {
  Ring ring;
  std::vector<Poly<Int>> generators;

  bool is_zero() const { return generators.empty(); }
  bool is_unit() const {
    return std::any_of(generators.begin(), generators.end(), [](const auto& g) { return is_laurent_unit(g); });
  }
};

namespace detail {

inline Poly<Int> exact_quotient(const Poly<Int>& a, const Poly<Int>& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("fraction-free elimination produced an inexact division");
  return *q;
}

struct Elimination {
  std::size_t rank = 0;
  Poly<Int> last_pivot;  // determinant for square full-rank input, up to sign
  int sign = 1;
};

/// Fraction-free Gaussian elimination in place. Pivots are chosen with the
/// fewest terms in their column to limit expression swell.
inline Elimination bareiss(LaurentMatrix& a, Ring ring) {
  Elimination out;
  out.last_pivot = Poly<Int>::one(ring);
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  Poly<Int> prev = Poly<Int>::one(ring);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t best = m;
    for (std::size_t i = r; i < m; ++i)
      if (!a[i][c].is_zero() && (best == m || a[i][c].size() < a[best][c].size())) best = i;
    if (best == m) continue;
    if (best != r) {
      std::swap(a[best], a[r]);
      out.sign = -out.sign;
    }
    const Poly<Int>& piv = a[r][c];
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Poly<Int> num = piv * a[i][j] - a[i][c] * a[r][j];
        a[i][j] = num.is_zero() ? num : exact_quotient(num, prev);
      }
      a[i][c] = Poly<Int>(ring);
    }
    prev = piv;
    ++r;
  }
  out.rank = r;
  out.last_pivot = prev;
  return out;
}

inline Poly<Int> determinant(LaurentMatrix a, Ring ring) {
  if (a.empty()) return Poly<Int>::one(ring);
  auto e = bareiss(a, ring);
  if (e.rank < a.size()) return Poly<Int>(ring);
  return e.sign < 0 ? -e.last_pivot : e.last_pivot;
}

/// Advances a sorted k-subset of {0..n-1}; false after the last one.
inline bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
  const std::size_t k = s.size();
  for (std::size_t i = k; i-- > 0;) {
    if (s[i] < n - k + i) {
      ++s[i];
      for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Determinant of a square Laurent matrix.
inline Poly<Int> determinant(const LaurentMatrix& a, Ring ring) {
  for (const auto& row : a)
    if (row.size() != a.size()) throw InputError("determinant of a non-square matrix");
  return detail::determinant(a, ring);
}

/// Rank over the fraction field.
inline std::size_t rank(const ModulePresentation& m) {
  LaurentMatrix a = m.matrix;
  return detail::bareiss(a, m.ring).rank;
}

/// E_k(M): the ideal of (q-k)-minors. Unit ideal when q-k <= 0, zero ideal
/// when q-k exceeds the number of relations. Zero and repeated minors are
/// dropped; the order follows the lexicographic order of (rows, columns).
inline LaurentIdeal elementary_ideal(const ModulePresentation& m, std::size_t k) {
  LaurentIdeal out{m.ring, {}};
  if (k >= m.cols) {
    out.generators.push_back(Poly<Int>::one(m.ring));
    return out;
  }
  const std::size_t s = m.cols - k;
  if (s > m.rows) return out;
  std::vector<std::size_t> rs(s), cs(s);
  std::iota(rs.begin(), rs.end(), 0);
  do {
    std::iota(cs.begin(), cs.end(), 0);
    do {
      LaurentMatrix sub(s, std::vector<Poly<Int>>(s));
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) sub[i][j] = m.matrix[rs[i]][cs[j]];
      Poly<Int> d = detail::determinant(std::move(sub), m.ring);
      if (!d.is_zero() && std::find(out.generators.begin(), out.generators.end(), d) == out.generators.end())
        out.generators.push_back(std::move(d));
    } while (detail::next_subset(cs, m.cols));
  } while (detail::next_subset(rs, m.rows));
  return out;
}

/// Representative of p up to units +-x^a: no monomial factor and a positive
/// leading coefficient. Integer content is kept since it is not a unit.
inline Poly<Int> canonical_associate(const Poly<Int>& p) {
  if (p.is_zero()) return to_laurent(p);
  Poly<Int> r = to_laurent(laurent_normalize(to_laurent(p)).part);
  return sgn(r.leading_coefficient()) < 0 ? -r : r;
}

/// Two Laurent polynomials differ by a unit.
inline bool associated(const Poly<Int>& a, const Poly<Int>& b) { return canonical_associate(a) == canonical_associate(b); }

struct DivisorialHull {
  Poly<Int> generator;  // canonical associate; 0 for the zero ideal
  bool zero_ideal = false;
};

/// Smallest principal ideal containing I, generated by the gcd of its
/// generators.
inline DivisorialHull divisorial_hull(const LaurentIdeal& ideal) {
  if (ideal.is_zero()) return {Poly<Int>(ideal.ring), true};
  Poly<Int> g(ideal.ring);
  for (const auto& f : ideal.generators) {
    g = g.is_zero() ? to_laurent(f) : gcd(g, to_laurent(f));
    if (is_laurent_unit(g)) break;
  }
  return {canonical_associate(g), false};
}

struct TorsionAlexander {
  Poly<Int> delta;
  std::size_t rank = 0;       // rank of the relation matrix
  std::size_t free_rank = 0;  // rank of the module, net of the augmentation summand
};

/// Torsion Alexander polynomial: the hull of E_r with r = q - rank, the
/// number of generators not cut down by relations over the fraction field.
inline TorsionAlexander torsion_alexander(const ModulePresentation& m) {
  const std::size_t rk = rank(m);
  const std::size_t r = m.cols - rk;
  TorsionAlexander out;
  out.rank = rk;
  out.free_rank = m.augmented && r > 0 ? r - 1 : r;
  out.delta = divisorial_hull(elementary_ideal(m, r)).generator;
  return out;
}

inline Poly<Int> torsion_alexander_poly(const ModulePresentation& m) { return torsion_alexander(m).delta; }

// ---------------------------------------------------------------------------
// Free groups and Fox calculus.

struct Letter {
  std::size_t gen = 0;  // 0-based generator
  int exp = 1;          // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->exp});
  return r;
}

/// Appends with free cancellation.
inline void append_reduced(Word& w, const Word& tail) {
  for (const auto& l : tail) {
    if (!w.empty() && w.back().gen == l.gen && w.back().exp == -l.exp)
      w.pop_back();
    else
      w.push_back(l);
  }
}

/// Parses words such as `x1 x2^-1 x1^2` (generators 1-based) or, with
/// prefix 's', braid words such as `s1 s2^-1`. Powers expand to repeated
/// letters.
inline Word parse_word(std::string_view text, char prefix, std::size_t ngens) {
  Word w;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw InputError("malformed word at column " + std::to_string(i + 1) + ": " + msg);
  };
  auto read_int = [&](bool allow_sign) -> long {
    bool neg = false;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a number");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i++] - '0');
      if (v > 1000000) fail("number too large");
    }
    return neg ? -v : v;
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
      ++i;
      continue;
    }
    if (ch != prefix) fail(std::string("expected '") + prefix + "'");
    ++i;
    const long g = read_int(false);
    if (g < 1 || static_cast<std::size_t>(g) > ngens)
      fail("generator index " + std::to_string(g) + " outside 1.." + std::to_string(ngens));
    long e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      e = read_int(true);
      if (e == 0) fail("zero exponent");
    }
    for (long k = 0; k < std::abs(e); ++k) w.push_back({static_cast<std::size_t>(g - 1), e > 0 ? 1 : -1});
  }
  return w;
}

/// Fox derivative d(word)/d(x_j), pushed to the Laurent ring through the
/// abelianization x_i -> images[i].
inline Poly<Int> fox_derivative(const Word& w, std::size_t j, const std::vector<Monomial>& images, Ring ring) {
  if (!ring.laurent) throw InputError("Fox derivatives live in a Laurent ring");
  if (j >= images.size()) throw InputError("Fox derivative with respect to an undeclared generator");
  std::vector<Poly<Int>::Term> terms;
  Monomial prefix(ring.nvars);
  for (const auto& l : w) {
    if (l.gen >= images.size()) throw InputError("word uses an undeclared generator");
    if (l.exp != 1 && l.exp != -1) throw InputError("word letters must have exponent +-1");
    const Monomial& x = images[l.gen];
    if (l.exp == 1) {
      if (l.gen == j) terms.emplace_back(prefix, Int(1));
      prefix = prefix * x;
    } else {
      prefix = prefix / x;
      if (l.gen == j) terms.emplace_back(prefix, Int(-1));
    }
  }
  return Poly<Int>(ring, std::move(terms));
}

// ---------------------------------------------------------------------------
// Closed braids.

/// Signed 1-based Artin generators: +i is sigma_i, -i its inverse.
using Braid = std::vector<int>;

inline Braid parse_braid(std::string_view text, std::size_t strands) {
  if (strands == 0) throw InputError("a braid needs at least one strand");
  Braid b;
  if (strands == 1) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) throw InputError("a 1-strand braid has no generators");
    return b;
  }
  for (const auto& l : parse_word(text, 's', strands - 1)) b.push_back(static_cast<int>(l.gen + 1) * l.exp);
  return b;
}

struct BraidClosure {
  ModulePresentation presentation;
  std::vector<std::size_t> component;  // strand -> component, labeled by first strand
  std::size_t components = 0;
  std::vector<Word> relations;         // all s relators before dropping the last
};

/// Alexander module of the closure of `braid` via the Artin action on the
/// free group of the punctured disk. Each component of the closure gets its
/// own variable; a knot gives a presentation over Z[t^{+-1}].
inline BraidClosure braid_closure(const Braid& braid, std::size_t strands) {
  if (strands == 0) throw InputError("a braid needs at least one strand");
  for (int g : braid)
    if (g == 0 || static_cast<std::size_t>(std::abs(g)) >= strands)
      throw InputError("braid generator s" + std::to_string(std::abs(g)) + " outside 1.." + std::to_string(strands - 1));

  // Components from the permutation.
  std::vector<std::size_t> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  for (int g : braid) {
    const std::size_t i = static_cast<std::size_t>(std::abs(g)) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  BraidClosure out;
  out.component.assign(strands, strands);
  for (std::size_t s = 0; s < strands; ++s) {
    if (out.component[s] != strands) continue;
    for (std::size_t c = s; out.component[c] == strands; c = perm[c]) out.component[c] = out.components;
    ++out.components;
  }

  // beta(x_j) for the composite automorphism, applying the last letter first.
  std::vector<Word> image(strands);
  for (std::size_t j = 0; j < strands; ++j) image[j] = {{j, 1}};
  for (auto it = braid.rbegin(); it != braid.rend(); ++it) {
    const std::size_t i = static_cast<std::size_t>(std::abs(*it)) - 1;
    Word xi{{i, 1}}, xi1{{i + 1, 1}};
    Word gi, gi1;  // images of x_i and x_{i+1}
    if (*it > 0) {
      append_reduced(gi, {{i, 1}, {i + 1, 1}, {i, -1}});
      gi1 = xi;
    } else {
      gi = xi1;
      append_reduced(gi1, {{i + 1, -1}, {i, 1}, {i + 1, 1}});
    }
    for (auto& w : image) {
      Word nw;
      for (const auto& l : w) {
        if (l.gen == i)
          append_reduced(nw, l.exp > 0 ? gi : inverse(gi));
        else if (l.gen == i + 1)
          append_reduced(nw, l.exp > 0 ? gi1 : inverse(gi1));
        else
          append_reduced(nw, {l});
      }
      w = std::move(nw);
    }
  }

  const Ring ring{out.components, true};
  std::vector<Monomial> abel;
  for (std::size_t j = 0; j < strands; ++j) abel.push_back(Monomial::unit(out.components, out.component[j]));
  for (std::size_t j = 0; j < strands; ++j) {
    Word r = image[j];
    append_reduced(r, {{j, -1}});
    out.relations.push_back(std::move(r));
  }
  LaurentMatrix m;
  for (std::size_t j = 0; j + 1 < strands; ++j) {
    std::vector<Poly<Int>> row;
    for (std::size_t g = 0; g < strands; ++g) row.push_back(fox_derivative(out.relations[j], g, abel, ring));
    m.push_back(std::move(row));
  }
  out.presentation = ModulePresentation(out.components, strands, std::move(m), true);
  return out;
}

inline ModulePresentation braid_to_presentation(const Braid& braid, std::size_t strands) {
  return braid_closure(braid, strands).presentation;
}

// ---------------------------------------------------------------------------
// The cyclic module Z[Z^n]/<p * bar(p)>.

struct RibbonCertificate {
  Poly<Int> p;
  Poly<Int> p_bar;
  /// Boundary of the 2-cell on the basis (t, x1, ..., xn): t * p.
  ModulePresentation boundary;
  Poly<Int> h1_torsion;      // order of the torsion of C1 / im(d2), expected p
  Poly<Int> h2_relative;     // conjugated cokernel of the dual map, expected bar(p)
  bool coprime = false;      // p and bar(p) share no factor
  Poly<Int> product;         // p * bar(p)
  Poly<Int> quotient_by_p;   // product / p, equal to bar(p)
  Poly<Int> quotient_by_pbar;
  ModulePresentation presentation;  // certified cyclic presentation [p * bar(p)]
  bool certified = false;
};

/// Builds the chain-level data of the complement with one 2-cell attached
/// along t * p and certifies that its torsion is cyclic of order p * bar(p).
/// A polynomial coprime to its conjugate is required.
inline RibbonCertificate verify_ribbon_presentation(const Poly<Int>& input) {
  if (input.is_zero()) throw InputError("ribbon presentation of the zero polynomial");
  const Poly<Int> p = to_laurent(input);
  const std::size_t n = p.nvars();
  const Ring ring{n, true};
  RibbonCertificate c;
  c.p = p;
  c.p_bar = bar_involution(p);
  c.product = p * c.p_bar;
  if (is_laurent_unit(p)) {
    // Nothing is attached beyond a unit multiple: the torsion is trivial.
    c.coprime = true;
    c.h1_torsion = c.h2_relative = Poly<Int>::one(ring);
    c.quotient_by_p = c.p_bar;
    c.quotient_by_pbar = p;
    c.boundary = ModulePresentation(n, n + 1, {});
    c.presentation = ModulePresentation(n, 1, {{Poly<Int>::one(ring)}});
    c.certified = true;
    return c;
  }
  c.coprime = coprime(p, c.p_bar);
  if (!c.coprime) throw HypothesisError("p and bar(p) share a factor: " + to_string(gcd(p, c.p_bar)));

  // d2(alpha) = t * p on the basis (t, x1, ..., xn).
  LaurentMatrix d2(1, std::vector<Poly<Int>>(n + 1, Poly<Int>(ring)));
  d2[0][0] = p;
  c.boundary = ModulePresentation(n, n + 1, d2);
  // C1/im(d2) splits as Z[Z^n]/<p> plus a free part; the x-part of the
  // kernel of d1 is free, so its torsion is the torsion of H1.
  c.h1_torsion = torsion_alexander_poly(c.boundary);
  // The dual map C^1 -> C^2 has cokernel Z[Z^n]/<p>; duality conjugates it.
  LaurentMatrix dual(n + 1, std::vector<Poly<Int>>(1, Poly<Int>(ring)));
  dual[0][0] = p;
  c.h2_relative = canonical_associate(bar_involution(torsion_alexander_poly(ModulePresentation(n, 1, dual))));

  // Both pieces divide the product, and by coprimality any element killed
  // by both is a multiple of it.
  auto qp = divide_exact(c.product, p);
  auto qpb = divide_exact(c.product, c.p_bar);
  if (!qp || !qpb) throw std::logic_error("p * bar(p) failed an exact division");
  c.quotient_by_p = *qp;
  c.quotient_by_pbar = *qpb;
  c.presentation = ModulePresentation(n, 1, {{c.product}});
  c.certified = associated(c.h1_torsion, p) && associated(c.h2_relative, c.p_bar) && associated(*qp, c.p_bar) &&
                associated(*qpb, p) && associated(torsion_alexander_poly(c.presentation), c.product);
  return c;
}

// ---------------------------------------------------------------------------
// Self-linking in the cyclic Blanchfield form.

enum class BlanchfieldDenominator { p, p_bar, product };

inline std::string to_string(BlanchfieldDenominator d) {
  switch (d) {
    case BlanchfieldDenominator::p:
      return "p";
    case BlanchfieldDenominator::p_bar:
      return "pbar";
    default:
      return "p*pbar";
  }
}

/// numerator / denominator in Q(Z^n)/Z[Z^n] where the denominator is named
/// by a tag relative to p.
struct BlanchfieldValue {
  Poly<Int> numerator;
  BlanchfieldDenominator denominator = BlanchfieldDenominator::product;
  Poly<Int> p;

  Poly<Int> denominator_poly() const {
    switch (denominator) {
      case BlanchfieldDenominator::p:
        return p;
      case BlanchfieldDenominator::p_bar:
        return bar_involution(p);
      default:
        return p * bar_involution(p);
    }
  }
  /// Zero exactly when the denominator divides the numerator.
  bool is_zero() const { return divides(denominator_poly(), numerator); }
};

struct BlanchfieldWitness {
  BlanchfieldValue value;
  Poly<Int> f;
  bool p_divides_numerator = true;
  bool nonzero = false;
};

/// For Bl(e1, e2) = f/p, the self-linking of e1 + e2 is
/// (f bar(p) + bar(f) p) / (p bar(p)). Certifies it is nonzero by checking
/// that the prime p does not divide the numerator.
inline BlanchfieldWitness blanchfield_self_link_witness(const Poly<Int>& p_in, const Poly<Int>& f_in,
                                                        const FactorOptions& fopt = {}) {
  if (p_in.nvars() != f_in.nvars()) throw InputError("p and f must have the same variable count");
  const Poly<Int> p = to_laurent(p_in);
  const Poly<Int> f = to_laurent(f_in);
  if (p.is_zero() || is_laurent_unit(p)) throw HypothesisError("p must be a nonunit");
  const Verdict irr = is_irreducible(p, FactorMode::laurent, fopt);
  if (irr.status != Status::proved) throw HypothesisError("p is not certified irreducible (" + to_string(irr.status) + ")");
  const Poly<Int> pb = bar_involution(p);
  if (!coprime(p, pb)) throw HypothesisError("p and bar(p) share a factor");
  if (f.is_zero() || divides(p, f)) throw HypothesisError("p divides f, so Bl(e1, e2) = f/p vanishes");

  BlanchfieldWitness w;
  w.f = f;
  w.value.p = p;
  w.value.denominator = BlanchfieldDenominator::product;
  w.value.numerator = f * pb + bar_involution(f) * p;
  w.p_divides_numerator = divides(p, w.value.numerator);
  w.nonzero = !w.p_divides_numerator;
  return w;
}

}  // namespace strongirr

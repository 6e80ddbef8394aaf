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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "strongirr/groebner.hpp"
#include "test_support.hpp"

namespace strongirr {
namespace {

using testing_support::P;

std::vector<Poly<Rat>> Q(std::initializer_list<const char*> texts, std::size_t nvars) {
  std::vector<Poly<Rat>> out;
  for (const char* t : texts) out.push_back(to_rational(P(t, nvars)));
  return out;
}

std::vector<std::string> strings(const GroebnerBasis& G) {
  std::vector<std::string> s;
  for (const auto& g : G.basis) s.push_back(to_string(g));
  return s;
}

// Test-side Buchberger criterion: every S-polynomial of the basis reduces to
// zero by plain (non-optimized) multivariate division.
bool s_pairs_reduce(const GroebnerBasis& G) {
  for (std::size_t i = 0; i < G.basis.size(); ++i)
    for (std::size_t j = i + 1; j < G.basis.size(); ++j) {
      const auto& f = G.basis[i];
      const auto& g = G.basis[j];
      Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
      Poly<Rat> s = mul_monomial(f, l / f.leading_monomial(), Rat(Rat(1) / f.leading_coefficient())) -
                    mul_monomial(g, l / g.leading_monomial(), Rat(Rat(1) / g.leading_coefficient()));
      Poly<Rat> r = s;
      Poly<Rat> rem(G.ring);
      while (!r.is_zero()) {
        bool divided = false;
        for (const auto& h : G.basis)
          if (h.leading_monomial().divides(r.leading_monomial())) {
            r = r - mul_monomial(h, r.leading_monomial() / h.leading_monomial(), Rat(r.leading_coefficient() / h.leading_coefficient()));
            divided = true;
            break;
          }
        if (!divided) {
          auto lt = Poly<Rat>::monomial(G.ring, r.leading_monomial(), r.leading_coefficient());
          rem = rem + lt;
          r = r - lt;
        }
      }
      if (!rem.is_zero()) return false;
    }
  return true;
}

bool is_reduced(const GroebnerBasis& G) {
  for (std::size_t i = 0; i < G.basis.size(); ++i) {
    if (G.basis[i].leading_coefficient() != 1) return false;
    for (std::size_t j = 0; j < G.basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : G.basis[j].terms())
        if (G.basis[i].leading_monomial().divides(t.first)) return false;
    }
  }
  return true;
}

TEST(Buchberger, Examples) {
  Ring r2{2, false};
  EXPECT_EQ(strings(buchberger(Q({"x1", "x2"}, 2), r2)), (std::vector<std::string>{"x2", "x1"}));
  auto unit = buchberger(Q({"1"}, 2), r2);
  EXPECT_TRUE(unit.is_unit_ideal());
  EXPECT_TRUE(buchberger(std::vector<Poly<Rat>>{}, r2).basis.empty());
  EXPECT_TRUE(buchberger(std::vector<Poly<Rat>>{Poly<Rat>(r2)}, r2).basis.empty());
  EXPECT_THROW(buchberger(Q({"x1"}, 2), Ring{2, true}), InputError);
}

TEST(Buchberger, TwistedCubicGolden) {
  Ring r3{3, false};
  auto G = buchberger(Q({"x1^2 - x2", "x1^3 - x3"}, 3), r3);
  // Hand S-polynomial computation in graded lex order with x1 > x2 > x3.
  EXPECT_EQ(strings(G), (std::vector<std::string>{"x1*x3 - x2^2", "x1*x2 - x3", "x1^2 - x2", "x2^3 - x3^2"}));
  EXPECT_TRUE(is_reduced(G));
  EXPECT_TRUE(s_pairs_reduce(G));
  EXPECT_TRUE(ideal_member(P("x2^2 - x1*x3"), G));
  EXPECT_TRUE(ideal_member(P("x1^2 - x2", 3), G));
  EXPECT_FALSE(ideal_member(P("x1 - x3", 3), G));
  // Every element vanishes on the parametrization (s, s^2, s^3).
  for (const auto& g : G.basis) {
    Poly<Rat> curve = monomial_substitute(g, std::vector<Monomial>{{1}, {2}, {3}}, Ring{1, false});
    EXPECT_TRUE(curve.is_zero()) << to_string(g);
  }
}

TEST(Membership, Examples) {
  Ring r2{2, false};
  auto G = buchberger(Q({"x1", "x2"}, 2), r2);
  EXPECT_FALSE(ideal_member(P("1", 2), G));
  auto f = P("x1^2 + x2 - 3");
  auto g = P("x1*x2 + 1");
  auto H = buchberger(std::vector<Poly<Int>>{f, g}, r2);
  EXPECT_TRUE(ideal_member(f, H));
  EXPECT_TRUE(ideal_member(f * P("x1 - 7*x2 + 2"), H));

  EXPECT_TRUE(radical_member(P("x1", 2), {P("x1^2", 2)}, r2));
  EXPECT_FALSE(radical_member(P("x1", 2), {P("x2", 2)}, r2));
  EXPECT_TRUE(radical_member(P("x1 + x2"), {P("x1^2", 2), P("x2^2", 2)}, r2));
  EXPECT_FALSE(ideal_member(P("x1 + x2"), buchberger(std::vector<Poly<Int>>{P("x1^2", 2), P("x2^2", 2)}, r2)));
}

TEST(TrivialSolution, Examples) {
  Ring r3{3, false};
  EXPECT_TRUE(only_trivial_solution(std::vector<Poly<Int>>{P("x1", 3), P("x2", 3), P("x3", 3)}, r3));
  EXPECT_FALSE(only_trivial_solution(std::vector<Poly<Int>>{P("x1^2", 3), P("x2*x3", 3), P("x2*x3", 3)}, r3));
  EXPECT_TRUE(only_trivial_solution(std::vector<Poly<Int>>{P("x1", 3), P("x2", 3), P("-x3", 3)}, r3));
  EXPECT_THROW(only_trivial_solution(std::vector<Poly<Int>>{P("x1 + 1", 3)}, r3), InputError);
  EXPECT_FALSE(only_trivial_solution_by_radical(Q({"x1^2", "x2*x3"}, 3), r3));
  EXPECT_TRUE(only_trivial_solution_by_radical(Q({"x1", "x2", "-x3"}, 3), r3));
}

TEST(Budget, ExhaustionIsReported) {
  GroebnerOptions tight;
  tight.max_pairs = 1;
  EXPECT_THROW(buchberger(Q({"x1^2 - x2", "x1^3 - x3"}, 3), Ring{3, false}, tight), ResourceExhausted);
}

Poly<Rat> random_homogeneous(std::mt19937_64& rng, Ring ring, int degree, int coeff, int terms) {
  std::uniform_int_distribution<int> co(-coeff, coeff);
  std::uniform_int_distribution<std::size_t> var(0, ring.nvars - 1);
  std::vector<Poly<Rat>::Term> t;
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(ring.nvars, 0);
    for (int d = 0; d < degree; ++d) ++e[var(rng)];
    t.emplace_back(Monomial(std::move(e)), Rat(co(rng)));
  }
  return Poly<Rat>(ring, std::move(t));
}

TEST(GroebnerProperties, ReducedBasisIsPermutationInvariant) {
  std::mt19937_64 rng(5);
  Ring r3{3, false};
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Poly<Rat>> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_homogeneous(rng, r3, 1 + k % 2, 4, 3));
    auto G = buchberger(gens, r3);
    ASSERT_TRUE(is_reduced(G));
    ASSERT_TRUE(s_pairs_reduce(G));
    for (const auto& g : gens) ASSERT_TRUE(ideal_member(g, G));
    std::shuffle(gens.begin(), gens.end(), rng);
    ASSERT_EQ(strings(buchberger(gens, r3)), strings(G));
    for (auto& g : gens) g = scale(g, Rat(-3));
    ASSERT_EQ(strings(buchberger(gens, r3)), strings(G));
  }
}

// Exact rank of an integer matrix by fraction-free elimination over Q.
std::size_t rank_of(std::vector<std::vector<Rat>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      Rat f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

TEST(TrivialSolutionProperties, LinearSystemsMatchRank) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> co(-2, 2), nv(2, 5), ng(1, 6);
  int full = 0, deficient = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(nv(rng));
    Ring ring{n, false};
    std::vector<std::vector<Rat>> mat;
    std::vector<Poly<Rat>> gens;
    const int rows = ng(rng);
    for (int r = 0; r < rows; ++r) {
      std::vector<Rat> row(n);
      Poly<Rat> g(ring);
      for (std::size_t v = 0; v < n; ++v) {
        row[v] = co(rng);
        g = g + scale(Poly<Rat>::variable(ring, v), row[v]);
      }
      mat.push_back(row);
      if (!g.is_zero()) gens.push_back(g);
    }
    const bool expected = rank_of(mat) == n;
    (expected ? full : deficient)++;
    ASSERT_EQ(only_trivial_solution(gens, ring), expected);
  }
  EXPECT_GT(full, 20);
  EXPECT_GT(deficient, 20);
}

TEST(TrivialSolutionProperties, GridRootFalsifiesAndRadicalAgrees) {
  std::mt19937_64 rng(13);
  Ring r3{3, false};
  int roots = 0;
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<Poly<Rat>> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_homogeneous(rng, r3, 2, 2, 2));
    const bool answer = only_trivial_solution(gens, r3);
    ASSERT_EQ(only_trivial_solution_by_radical(gens, r3), answer);
    // A nonzero common root on a small grid proves the answer must be false.
    bool found = false;
    for (int a = -2; a <= 2 && !found; ++a)
      for (int b = -2; b <= 2 && !found; ++b)
        for (int c = -2; c <= 2 && !found; ++c) {
          if (a == 0 && b == 0 && c == 0) continue;
          bool all = true;
          for (const auto& g : gens) {
            Rat v = 0;
            for (const auto& [m, coef] : g.terms())
              v += coef * Rat(pow_int(Int(a), m[0]) * pow_int(Int(b), m[1]) * pow_int(Int(c), m[2]));
            if (v != 0) all = false;
          }
          found = all;
        }
    if (found) {
      ++roots;
      ASSERT_FALSE(answer);
    }
  }
  EXPECT_GT(roots, 0);
}

}  // namespace
}  // namespace strongirr

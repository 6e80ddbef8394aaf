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

#include <random>

#include "strongirr/factor.hpp"
#include "strongirr/gcd.hpp"
#include "test_support.hpp"

namespace strongirr {
namespace {

using testing_support::L;
using testing_support::P;
using testing_support::random_factor;
using testing_support::random_poly;

dense::ZPoly Z(std::initializer_list<long> c) {
  dense::ZPoly r;
  for (long v : c) r.emplace_back(v);
  dense::trim(r);
  return r;
}

// Independent oracle for tiny univariate cases: a degree-d integer polynomial
// with a rational root r = a/b has b | lc and a | const.
bool has_rational_root(const dense::ZPoly& f) {
  if (sgn(f[0]) == 0) return true;
  Int c0 = abs_int(f[0]), cl = abs_int(f.back());
  for (Int a = 1; a <= c0; ++a) {
    if (!divisible(c0, a)) continue;
    for (Int b = 1; b <= cl; ++b) {
      if (!divisible(cl, b)) continue;
      for (int s : {1, -1}) {
        // b^d f(s a / b) = sum f_i (s a)^i b^(d-i)
        Int acc = 0;
        const std::size_t d = f.size() - 1;
        for (std::size_t i = 0; i <= d; ++i)
          acc += f[i] * pow_int(Int(s) * a, i) * pow_int(b, d - i);
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

TEST(Univariate, Examples) {
  auto f = dense::factor(Z({-1, 0, 1}));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].first, Z({-1, 1}));
  EXPECT_EQ(f.factors[1].first, Z({1, 1}));
  EXPECT_TRUE(dense::is_irreducible(Z({1, -1, 1})));
  auto g = dense::factor(Z({0, 6}));
  EXPECT_EQ(g.unit, 6);
  ASSERT_EQ(g.factors.size(), 1u);
  EXPECT_EQ(g.factors[0].first, Z({0, 1}));
}

TEST(Univariate, CyclotomicAndSwinnertonDyerStyle) {
  // x^12 - 1 = product of cyclotomics Phi_1, Phi_2, Phi_3, Phi_4, Phi_6, Phi_12.
  dense::ZPoly f(13);
  f[0] = -1;
  f[12] = 1;
  auto r = dense::factor(f);
  EXPECT_EQ(r.factors.size(), 6u);
  // x^4 + 1 is irreducible over Z but splits modulo every prime.
  EXPECT_TRUE(dense::is_irreducible(Z({1, 0, 0, 0, 1})));
  // x^4 - 10x^2 + 1 (minimal polynomial of sqrt2 + sqrt3).
  EXPECT_TRUE(dense::is_irreducible(Z({1, 0, -10, 0, 1})));
}

TEST(Univariate, SquarefreeDecomposition) {
  // (x - 1)^3 (x + 2)^2 x.
  auto f = dense::mul(dense::mul(dense::mul(dense::mul(Z({-1, 1}), Z({-1, 1})), Z({-1, 1})), dense::mul(Z({2, 1}), Z({2, 1}))), Z({0, 1}));
  auto r = dense::factor(f);
  int total = 0;
  for (auto& [g, e] : r.factors) total += e;
  EXPECT_EQ(total, 6);
}

TEST(UnivariateProperties, ReassemblyAndRationalRootOracle) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> co(-6, 6), dg(1, 4), nf(1, 3);
  for (int trial = 0; trial < 300; ++trial) {
    dense::ZPoly f{Int(1)};
    int count = nf(rng);
    for (int k = 0; k < count; ++k) {
      dense::ZPoly g(static_cast<std::size_t>(dg(rng)) + 1);
      for (auto& c : g) c = co(rng);
      if (sgn(g.back()) == 0) g.back() = 1;
      dense::trim(g);
      f = dense::mul(f, g);
    }
    if (f.empty()) continue;
    auto r = dense::factor(f);
    dense::ZPoly prod{r.unit};
    for (auto& [g, e] : r.factors) {
      for (int k = 0; k < e; ++k) prod = dense::mul(prod, g);
      ASSERT_TRUE(dense::is_irreducible(g));
      if (dense::degree(g) >= 2 && dense::degree(g) <= 3) {
        // Irreducible of degree 2 or 3 over Q iff no rational root.
        ASSERT_FALSE(has_rational_root(g));
      }
    }
    ASSERT_EQ(prod, f);
  }
}

TEST(UnivariateProperties, GcdDividesBoth) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> co(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    dense::ZPoly common(3), a(4), b(3);
    for (auto& c : common) c = co(rng);
    for (auto& c : a) c = co(rng);
    for (auto& c : b) c = co(rng);
    dense::trim(common);
    dense::trim(a);
    dense::trim(b);
    if (common.empty() || a.empty() || b.empty()) continue;
    auto A = dense::mul(a, common), B = dense::mul(b, common);
    auto g = dense::gcd(A, B);
    ASSERT_TRUE(dense::divide_exact(A, g).has_value());
    ASSERT_TRUE(dense::divide_exact(B, g).has_value());
    ASSERT_TRUE(dense::divide_exact(g, dense::primitive_part(common)).has_value());
  }
}

TEST(Multivariate, IrreducibilityExamples) {
  auto v = is_irreducible(P("1 + x1 - x2"));
  EXPECT_EQ(v.status, Status::proved);
  EXPECT_EQ(v.rule, "degree-1");
  auto w = is_irreducible(P("x1^2 - x2^2"));
  ASSERT_EQ(w.status, Status::refuted);
  EXPECT_TRUE(verify_witness(w));
  const auto& fw = std::get<FactorWitness>(w.witness);
  ASSERT_EQ(fw.factorization.factors.size(), 2u);
  EXPECT_EQ(to_string(fw.factorization.factors[0].first), "x1 + x2");
  EXPECT_EQ(to_string(fw.factorization.factors[1].first), "x1 - x2");
  EXPECT_THROW(is_irreducible(L("x1*x2"), FactorMode::laurent), InputError);
  EXPECT_THROW(is_irreducible(Poly<Int>(Ring{2, false})), InputError);
}

TEST(Multivariate, LaurentModeNormalizes) {
  // x1^-1 * (x1 - x2)(x1 + x2): reducible in both rings.
  auto v = is_irreducible(L("x1 - x1^-1*x2^2"), FactorMode::laurent);
  ASSERT_EQ(v.status, Status::refuted);
  EXPECT_TRUE(verify_witness(v));
  // x1 * (1 + x1 - x2) is reducible in the ordinary ring only.
  EXPECT_EQ(is_irreducible(P("x1 + x1^2 - x1*x2")).status, Status::refuted);
  EXPECT_EQ(is_irreducible(P("x1 + x1^2 - x1*x2"), FactorMode::laurent).status, Status::proved);
  // Contents are not units.
  EXPECT_EQ(is_irreducible(P("2 + 2*x1 - 2*x2")).status, Status::refuted);
}

TEST(Multivariate, PowerSubstitutionsOfXYMinusOne) {
  auto v = is_irreducible(P("x1^2*x2^2 - 1"));
  ASSERT_EQ(v.status, Status::refuted);
  const auto& fw = std::get<FactorWitness>(v.witness);
  ASSERT_EQ(fw.factorization.factors.size(), 2u);
  EXPECT_EQ(to_string(fw.factorization.factors[0].first), "x1*x2 + 1");
  EXPECT_EQ(to_string(fw.factorization.factors[1].first), "x1*x2 - 1");
  EXPECT_EQ(is_irreducible(P("x1*x2 - 1")).status, Status::proved);
  EXPECT_EQ(is_irreducible(P("x1^2*x2 - 1")).status, Status::proved);
}

TEST(Multivariate, KroneckerRoundTrip) {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    Ring ring{3, false};
    auto a = random_factor(rng, ring, 3, 2, 4);
    auto b = random_factor(rng, ring, 3, 2, 4);
    auto p = a * b;
    if (p.total_degree() > 12) continue;
    Factorization f = factorize(p);
    ASSERT_EQ(expand(f), p) << to_string(p);
    // Each constructed factor is reassembled from the reported factors.
    for (const auto* part : {&a, &b}) {
      Poly<Int> rest = *part;
      for (const auto& [g, e] : f.factors)
        for (int k = 0; k < e; ++k)
          if (auto q = divide_exact(rest, g)) rest = *q;
      ASSERT_TRUE(rest.is_constant()) << to_string(*part) << " from " << to_string(p);
    }
    for (const auto& [g, e] : f.factors) ASSERT_EQ(is_irreducible(g).status, Status::proved) << to_string(g);
    ++checked;
  }
  EXPECT_GT(checked, 60);
}

TEST(Multivariate, ResourceBudgetIsReported) {
  FactorOptions tight;
  tight.max_total_degree = 3;
  auto v = is_irreducible(P("x1^4*x2^4 - x3^2 + 1"), FactorMode::ordinary, tight);
  EXPECT_EQ(v.status, Status::undecided);
  EXPECT_EQ(v.reason, "resource:factor");
}

TEST(Gcd, CoprimeExamples) {
  auto p = L("1 + x1 - x2");
  EXPECT_TRUE(coprime(p, bar_involution(p)));
  EXPECT_FALSE(coprime(p, p));
  EXPECT_TRUE(coprime(P("x1 - 1", 2), P("x2 - 1")));
  EXPECT_FALSE(coprime(P("2*x1 + 2", 2), P("2*x2")));
  EXPECT_FALSE(coprime(P("x1*x2"), P("x1 + x1*x2")));
  EXPECT_TRUE(coprime(L("x1*x2"), L("x1 + x1*x2")));
}

TEST(Gcd, ExtractsCommonFactor) {
  auto p = P("1 + x1 - x2");
  auto q = P("x1*x2 + 3");
  auto r = P("x1^2 - x2 + 5");
  EXPECT_EQ(gcd(p * q, p * r), p);
  EXPECT_EQ(gcd(P("x1 - 1", 2), P("x2 - 1")), P("1", 2));
}

TEST(GcdProperties, DividesBothWithExactQuotients) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    Ring ring{3, trial % 2 == 0};
    auto c = random_factor(rng, ring, 3, 2, 5);
    auto a = random_factor(rng, ring, 3, 2, 5) * c;
    auto b = random_factor(rng, ring, 3, 2, 5) * c;
    auto g = gcd(a, b);
    auto qa = divide_exact(a, g);
    auto qb = divide_exact(b, g);
    ASSERT_TRUE(qa.has_value());
    ASSERT_TRUE(qb.has_value());
    ASSERT_EQ(*qa * g, a);
    ASSERT_TRUE(divides(primitive_part(ring.laurent ? laurent_normalize(c).part : c),
                        ring.laurent ? laurent_normalize(g).part : g));
    ASSERT_FALSE(coprime(a, b) && !is_laurent_unit(c) && !c.is_constant());
  }
}

}  // namespace
}  // namespace strongirr

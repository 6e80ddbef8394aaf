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

#include <map>
#include <random>

#include "strongirr/parse.hpp"
#include "strongirr/ring.hpp"
#include "test_support.hpp"

namespace strongirr {
namespace {

using testing_support::P;
using testing_support::L;
using testing_support::random_poly;

TEST(Ring, DifferenceOfSquares) {
  EXPECT_EQ(P("1 + x1") * P("1 - x1"), P("1 - x1^2"));
  EXPECT_EQ(to_string(P("(1 + x1)*(1 - x1)")), "-x1^2 + 1");
}

TEST(Ring, MultiplicativeIdentity) {
  auto p = P("3*x1^2*x2 - x2 + 7");
  EXPECT_EQ(p * Poly<Int>::one(p.ring()), p);
}

TEST(Ring, LaurentUnitAction) {
  EXPECT_EQ(L("x1^-1 + 1") * L("x1"), L("1 + x1"));
}

TEST(Ring, RingMismatchThrows) {
  auto a = P("x1", 1);
  auto b = P("x1 + x2", 2);
  EXPECT_THROW(a + b, InputError);
  EXPECT_THROW(Poly<Int>(Ring{1, false}, {{Monomial{-1}, Int(1)}}), InputError);
}

TEST(Ring, ZeroPolynomialDegreeSentinel) {
  Poly<Int> z(Ring{2, false});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.total_degree(), kNegInfDegree);
  EXPECT_EQ(to_string(z), "0");
}

TEST(Ring, CanonicalTextForm) {
  EXPECT_EQ(to_string(P("1 + x1 - x2")), "x1 - x2 + 1");
  // Degree ties among Laurent monomials break lexicographically: 1 > x1^-1*x2.
  EXPECT_EQ(to_string(L("x1^-1*x2 - 3")), "-3 + x1^-1*x2");
  EXPECT_EQ(to_string(L("x1^-1 + x2")), "x2 + x1^-1");
  EXPECT_EQ(to_string(parse_polynomial("1/2*x1 - 2/4")), "1/2*x1 - 1/2");
  EXPECT_EQ(to_string(P("x1*x2 - 1"), VarStyle::z), "z0*z1 - 1");
  EXPECT_EQ(to_string(P("t^2 - t + 1"), VarStyle::t), "t^2 - t + 1");
}

TEST(Bar, NegatesExponents) {
  EXPECT_EQ(bar_involution(L("1 + x1 - x2")), L("1 + x1^-1 - x2^-1"));
  EXPECT_EQ(bar_involution(L("5", 2)), L("5", 2));
}

TEST(Homogenize, Examples) {
  auto h = homogenize(P("1 + x1 - x2"));
  EXPECT_EQ(h.total_degree, 1);
  EXPECT_EQ(h.inner, parse_int_polynomial("z0 + z1 - z2"));
  auto h2 = homogenize(P("x1*x2 - 1"));
  EXPECT_EQ(h2.inner, parse_int_polynomial("z1*z2 - z0^2"));
  EXPECT_EQ(h2.total_degree, 2);
  auto h3 = homogenize(P("x1^2 + x1*x2"));
  EXPECT_EQ(h3.inner, parse_int_polynomial("z1^2 + z1*z2"));
  EXPECT_THROW(homogenize(Poly<Int>(Ring{2, false})), InputError);
}

TEST(PowerSubstitute, Examples) {
  std::vector<int> t{2, 3};
  EXPECT_EQ(power_substitute(P("1 + x1 - x2"), std::span<const int>(t)), P("1 + x1^2 - x2^3"));
  std::vector<int> ones{1, 1};
  EXPECT_EQ(power_substitute(P("1 + x1 - x2"), std::span<const int>(ones)), P("1 + x1 - x2"));
  std::vector<int> neg{-1, -1};
  auto p = L("1 + x1 - x2");
  EXPECT_EQ(power_substitute(p, std::span<const int>(neg)), bar_involution(p));
  std::vector<int> zero{0, 1};
  EXPECT_THROW(power_substitute(p, std::span<const int>(zero)), InputError);
  EXPECT_THROW(power_substitute(P("1 + x1 - x2"), std::span<const int>(neg)), InputError);
}

TEST(MonomialSubstitute, Examples) {
  Ring r2{2, false};
  std::vector<Monomial> img{Monomial{1, 1}};
  EXPECT_EQ(monomial_substitute(P("1 + x1", 1), std::span<const Monomial>(img), r2), P("1 + x1*x2"));
  std::vector<Monomial> id{Monomial{1, 0}, Monomial{0, 1}};
  EXPECT_EQ(monomial_substitute(P("1 + x1 - x2"), std::span<const Monomial>(id), r2), P("1 + x1 - x2"));
  std::vector<Monomial> tw{Monomial{2, 0}, Monomial{1, 1}};
  EXPECT_EQ(monomial_substitute(P("1 + x1 - x2"), std::span<const Monomial>(tw), r2), P("1 + x1^2 - x1*x2"));
  std::vector<Monomial> bad{Monomial{0, 0}, Monomial{0, 1}};
  EXPECT_THROW(monomial_substitute(P("1 + x1 - x2"), std::span<const Monomial>(bad), r2), InputError);
}

TEST(LaurentNormalize, Examples) {
  auto n = laurent_normalize(L("x1^-1*x2 - x1^-1"));
  EXPECT_EQ(n.part, P("x2 - 1"));
  EXPECT_EQ(n.unit, (Monomial{-1, 0}));
  auto n2 = laurent_normalize(P("1 + x1 - x2"));
  EXPECT_EQ(n2.part, P("1 + x1 - x2"));
  EXPECT_TRUE(n2.unit.is_one());
  auto n3 = laurent_normalize(P("x1^2*x2"));
  EXPECT_EQ(n3.part, P("1", 2));
  EXPECT_EQ(n3.unit, (Monomial{2, 1}));
  EXPECT_THROW(laurent_normalize(Poly<Int>(Ring{1, true})), InputError);
}

TEST(Parse, ErrorsCarryColumn) {
  try {
    parse_polynomial("1 + + x1");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parse_polynomial("x1^-1"), ParseError);
  EXPECT_NO_THROW(parse_polynomial("x1^-1", {.laurent = true}));
  EXPECT_THROW(parse_polynomial("x1 + z2"), ParseError);
  EXPECT_THROW(parse_polynomial("x0"), ParseError);
  EXPECT_THROW(parse_polynomial("x1 +"), ParseError);
  EXPECT_THROW(parse_polynomial("(x1"), ParseError);
  EXPECT_THROW(parse_polynomial("x3", {.nvars = 2}), ParseError);
  EXPECT_THROW(parse_polynomial("y1"), ParseError);
  EXPECT_THROW(parse_int_polynomial("1/2*x1"), InputError);
}

TEST(Parse, ImplicitMultiplicationAndGrouping) {
  EXPECT_EQ(P("2x1x2"), P("2*x1*x2"));
  EXPECT_EQ(P("(x1 + 1)^2"), P("x1^2 + 2*x1 + 1"));
  EXPECT_EQ(P("-(x1 - x2)"), P("x2 - x1"));
  EXPECT_EQ(P("t^2 - t + 1", 1), P("x1^2 - x1 + 1"));
  EXPECT_EQ(L("(x1*x2)^-2"), L("x1^-2*x2^-2"));
}

// Property tests over random samples.

TEST(RingProperties, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 1000; ++trial) {
    Ring ring{3, trial % 2 == 1};
    auto a = random_poly(rng, ring, 4, 3, 5);
    auto b = random_poly(rng, ring, 4, 3, 5);
    auto c = random_poly(rng, ring, 4, 3, 5);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a - b) + b, a);
  }
}

TEST(RingProperties, MultiplicationMatchesDenseOracle) {
  // Independent oracle: accumulate products in an ordered map keyed by exponents.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Ring ring{2, true};
    auto a = random_poly(rng, ring, 5, 3, 9);
    auto b = random_poly(rng, ring, 5, 3, 9);
    std::map<std::vector<int>, Int> acc;
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) acc[(ma * mb).exponents()] += ca * cb;
    std::vector<Poly<Int>::Term> terms;
    for (auto& [e, c] : acc) terms.emplace_back(Monomial(e), c);
    ASSERT_EQ(a * b, Poly<Int>(ring, terms));
  }
}

TEST(RingProperties, CanonicalSerializationAndRoundTrip) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    Ring ring{3, true};
    auto a = random_poly(rng, ring, 6, 3, 20);
    auto b = random_poly(rng, ring, 6, 3, 20);
    ASSERT_EQ(a == b, to_string(a) == to_string(b));
    ASSERT_EQ(parse_int_polynomial(to_string(a), {.laurent = true, .nvars = 3}), a);
    // Same abstract polynomial built in a different term order serializes identically.
    auto terms = a.terms();
    std::reverse(terms.begin(), terms.end());
    ASSERT_EQ(to_string(Poly<Int>(ring, terms)), to_string(a));
  }
}

TEST(RingProperties, HomogenizeRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_poly(rng, Ring{3, false}, 6, 4, 9);
    if (p.is_zero()) continue;
    auto h = homogenize(p);
    ASSERT_TRUE(h.inner.is_homogeneous());
    ASSERT_EQ(h.inner.total_degree(), h.total_degree);
    ASSERT_EQ(dehomogenize(h), p);
  }
}

TEST(RingProperties, PowerSubstitutionComposes) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_poly(rng, Ring{3, true}, 5, 3, 9);
    std::vector<int> s(3), t(3), st(3);
    for (int i = 0; i < 3; ++i) {
      do s[i] = pick(rng); while (s[i] == 0);
      do t[i] = pick(rng); while (t[i] == 0);
      st[i] = s[i] * t[i];
    }
    ASSERT_EQ(power_substitute(power_substitute(p, std::span<const int>(s)), std::span<const int>(t)),
              power_substitute(p, std::span<const int>(st)));
  }
}

TEST(RingProperties, LaurentNormalizeInvariants) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_poly(rng, Ring{3, true}, 5, 3, 9);
    if (p.is_zero()) continue;
    auto n = laurent_normalize(p);
    for (std::size_t v = 0; v < 3; ++v) ASSERT_EQ(n.part.min_degree_in(v), 0);
    ASSERT_EQ(mul_monomial(to_laurent(n.part), n.unit), p);
    ASSERT_EQ(bar_involution(bar_involution(p)), p);
  }
}

}  // namespace
}  // namespace strongirr

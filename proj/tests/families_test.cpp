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

#include "strongirr/families.hpp"
#include "strongirr/strongcheck.hpp"
#include "test_support.hpp"

namespace strongirr {
namespace {

using testing_support::L;
using testing_support::random_poly;

TEST(Families, BuildExamples) {
  EXPECT_EQ(to_string(build_family_poly({Family::F1, {1, 1, 1, 1}})), "x1 - x2 + x3 - x4 + 1");
  EXPECT_EQ(to_string(build_family_poly({Family::F2, {1, 1, 1}})), "-x1 + 2*x2 - x3 + 1");
  EXPECT_THROW(build_family_poly({Family::F1, {1, 1, 1, 2}}), InputError);
  EXPECT_THROW(build_family_poly({Family::F1, {0, 0}}), InputError);
  EXPECT_THROW(build_family_poly({Family::F1, {1, 1, 1}}), InputError);
  EXPECT_THROW(build_family_poly({Family::F2, {1, 1}}), InputError);
  EXPECT_EQ(build_family_poly({Family::F1, {1, 1, 1, 1}}), L("1 + x1 - x2 + x3 - x4"));
}

TEST(Families, EvalAtOnes) {
  EXPECT_EQ(eval_at_ones(build_family_poly({Family::F1, {1, 2, 2, 1}})), 1);
  EXPECT_EQ(eval_at_ones(Poly<Int>(Ring{2, true})), 0);
  EXPECT_EQ(eval_at_ones(L("3*x1 - x2")), 2);
}

TEST(Families, SlicePolynomial) {
  EXPECT_EQ(slice_polynomial(L("1 + x1 - x2")), L("(1 + x1 - x2)*(1 + x1^-1 - x2^-1)"));
  EXPECT_EQ(to_string(slice_polynomial(L("1 + x1 - x2"))), "x1 - x2 - x1*x2^-1 + 3 - x1^-1*x2 - x2^-1 + x1^-1");
  EXPECT_EQ(slice_polynomial(L("1", 2)), L("1", 2));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_poly(rng, Ring{3, true}, 4, 2, 4);
    if (p.is_zero()) continue;
    auto s = slice_polynomial(p);
    ASSERT_EQ(bar_involution(s), s);
    if (eval_at_ones(p) == 1) ASSERT_EQ(eval_at_ones(s), 1);
  }
}

TEST(Families, Enumeration) {
  auto f1 = enumerate_family(Family::F1, 1, 1, 100);
  EXPECT_EQ(f1.size(), 2u);
  EXPECT_NE(std::find(f1.begin(), f1.end(), FamilySpec{Family::F1, {1, 1}}), f1.end());
  EXPECT_NE(std::find(f1.begin(), f1.end(), FamilySpec{Family::F1, {-1, -1}}), f1.end());
  EXPECT_TRUE(enumerate_family(Family::F1, 2, 2, 0).empty());
  auto f2 = enumerate_family(Family::F2, 1, 1, 100);
  EXPECT_NE(std::find(f2.begin(), f2.end(), FamilySpec{Family::F2, {1, 1, 1}}), f2.end());
  EXPECT_EQ(enumerate_family(Family::F1, 2, 2, 7), enumerate_family(Family::F1, 2, 2, 7));
  EXPECT_THROW(enumerate_family(Family::F1, 0, 2, 7), InputError);
  // An independent count: solutions of -a + b - c + d = 0 over {+-1, +-2}^4.
  std::size_t expected = 0;
  for (int a : {-2, -1, 1, 2})
    for (int b : {-2, -1, 1, 2})
      for (int c : {-2, -1, 1, 2})
        for (int d : {-2, -1, 1, 2}) expected += (-a + b - c + d == 0);
  EXPECT_EQ(enumerate_family(Family::F1, 2, 2, 100000).size(), expected);
}

TEST(FamilyProperties, MembersAreStronglyIrreducibleAndCoprimeToBar) {
  std::size_t count = 0;
  for (auto [fam, n] : std::vector<std::pair<Family, std::size_t>>{{Family::F1, 1}, {Family::F1, 2}, {Family::F1, 3}, {Family::F2, 1}, {Family::F2, 2}}) {
    for (const auto& spec : enumerate_family(fam, n, 2, 15)) {
      auto p = build_family_poly(spec);
      ASSERT_EQ(eval_at_ones(p), 1);
      auto v = check_strongly_irreducible(p);
      ASSERT_EQ(v.status, Status::proved) << to_string(p);
      ASSERT_TRUE(coprime_with_bar(p)) << to_string(p);
      ASSERT_EQ(eval_at_ones(slice_polynomial(p)), 1);
      ++count;
    }
  }
  EXPECT_GE(count, 50u);
}

}  // namespace
}  // namespace strongirr

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

// Shared helpers for the test suite: terse polynomial literals and seeded
// random generators.

#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "strongirr/parse.hpp"
#include "strongirr/ring.hpp"

namespace strongirr::testing_support {

/// Ordinary integer polynomial literal.
inline Poly<Int> P(std::string_view text, std::size_t nvars = 0) {
  return parse_int_polynomial(text, {.laurent = false, .nvars = nvars});
}

/// Laurent integer polynomial literal.
inline Poly<Int> L(std::string_view text, std::size_t nvars = 0) {
  return parse_int_polynomial(text, {.laurent = true, .nvars = nvars});
}

/// Random polynomial with up to `terms` terms, exponents in [0, max_exp]
/// (or [-max_exp, max_exp] for Laurent rings) and coefficients in
/// [-coeff, coeff].
inline Poly<Int> random_poly(std::mt19937_64& rng, Ring ring, int terms, int max_exp, int coeff) {
  std::uniform_int_distribution<int> ex(ring.laurent ? -max_exp : 0, max_exp);
  std::uniform_int_distribution<int> co(-coeff, coeff);
  std::vector<Poly<Int>::Term> t;
  for (int i = 0; i < terms; ++i) {
    std::vector<int> e(ring.nvars);
    for (auto& v : e) v = ex(rng);
    t.emplace_back(Monomial(std::move(e)), Int(co(rng)));
  }
  return Poly<Int>(ring, std::move(t));
}

/// Random nonconstant polynomial in exactly `ring.nvars` variables with
/// nonzero constant term; useful as a factor in round-trip tests.
inline Poly<Int> random_factor(std::mt19937_64& rng, Ring ring, int terms, int max_exp, int coeff) {
  for (;;) {
    auto p = random_poly(rng, ring, terms, max_exp, coeff) + Poly<Int>::constant(ring, Int(1 + rng() % 3));
    if (!p.is_constant()) return p;
  }
}

}  // namespace strongirr::testing_support

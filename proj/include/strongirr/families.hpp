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

// Two families of linear polynomials with p(1, ..., 1) = 1, and the
// symmetric products p * bar(p) built from them.
//
//   F1:  p = 1 - sum_{i=1}^{2n} (-1)^i k_i x_i,
//        subject to -k1 + k2 - k3 + ... + k_{2n} = 0.
//   F2:  q = 1 + k2 x2 + sum_{i=1}^{2n+1} (-1)^i k_i x_i,
//        subject to -k1 + 2 k2 - k3 + k4 - ... - k_{2n+1} = 0.
//
// The F2 formula is applied as written, so x2 gets the coefficient 2 k2.

#pragma once

#include <string>
#include <vector>

#include "strongirr/gcd.hpp"
#include "strongirr/ring.hpp"

namespace strongirr {

enum class Family { F1, F2 };

inline std::string to_string(Family f) { return f == Family::F1 ? "F1" : "F2"; }

inline Family parse_family(const std::string& s) {
  if (s == "F1" || s == "f1") return Family::F1;
  if (s == "F2" || s == "f2") return Family::F2;
  throw InputError("unknown family '" + s + "' (expected F1 or F2)");
}

struct FamilySpec {
  Family family = Family::F1;
  std::vector<long> k;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Value of the defining linear constraint; zero for valid members.
inline long family_constraint(const FamilySpec& s) {
  long sum = 0;
  for (std::size_t i = 0; i < s.k.size(); ++i) {
    const long sign = i % 2 == 0 ? -1 : 1;  // index i holds k_{i+1}
    const long weight = s.family == Family::F2 && i == 1 ? 2 : 1;
    sum += sign * weight * s.k[i];
  }
  return sum;
}

inline void validate(const FamilySpec& s) {
  const std::size_t len = s.k.size();
  if (len == 0) throw InputError("family coefficient vector is empty");
  if (s.family == Family::F1 && len % 2 != 0) throw InputError("F1 needs an even number (2n) of coefficients");
  if (s.family == Family::F2 && (len % 2 != 1 || len < 3)) throw InputError("F2 needs an odd number (2n+1 >= 3) of coefficients");
  for (long v : s.k)
    if (v == 0) throw InputError("family coefficients must be nonzero");
  if (long c = family_constraint(s); c != 0)
    throw InputError(to_string(s.family) + " constraint violated: alternating sum is " + std::to_string(c) + ", expected 0");
}

/// The family polynomial in the Laurent ring on k.size() variables.
inline Poly<Int> build_family_poly(const FamilySpec& s) {
  validate(s);
  const std::size_t n = s.k.size();
  const Ring ring{n, true};
  std::vector<Poly<Int>::Term> t;
  t.emplace_back(Monomial(n), Int(1));
  for (std::size_t i = 0; i < n; ++i) {
    // -(-1)^i k_i for F1 and +(-1)^i k_i for F2, with i counted from 1.
    const long sign = (i % 2 == 0) ? -1 : 1;
    long c = s.family == Family::F1 ? -sign * s.k[i] : sign * s.k[i];
    if (s.family == Family::F2 && i == 1) c += s.k[1];
    t.emplace_back(Monomial::unit(n, i), Int(c));
  }
  return Poly<Int>(ring, std::move(t));
}

/// p * bar(p), the symmetric product in the Laurent ring.
inline Poly<Int> slice_polynomial(const Poly<Int>& p) {
  if (p.is_zero()) throw InputError("slice polynomial of the zero polynomial");
  return to_laurent(p) * bar_involution(p);
}

/// p and bar(p) share no nonunit factor.
inline bool coprime_with_bar(const Poly<Int>& p) { return coprime(to_laurent(p), bar_involution(p)); }

/// Members with 2n (F1) or 2n+1 (F2) coefficients in [-bound, bound] \ {0},
/// in lexicographic order of the coefficient vector, at most `limit` of them.
inline std::vector<FamilySpec> enumerate_family(Family family, std::size_t n, long bound, std::size_t limit) {
  if (n == 0 || bound <= 0) throw InputError("enumerate_family needs n >= 1 and bound >= 1");
  std::vector<FamilySpec> out;
  if (limit == 0) return out;
  const std::size_t len = family == Family::F1 ? 2 * n : 2 * n + 1;
  std::vector<long> values;
  for (long v = -bound; v <= bound; ++v)
    if (v != 0) values.push_back(v);
  std::vector<std::size_t> idx(len, 0);
  for (;;) {
    FamilySpec s{family, {}};
    for (auto i : idx) s.k.push_back(values[i]);
    if (family_constraint(s) == 0) {
      out.push_back(std::move(s));
      if (out.size() == limit) return out;
    }
    std::size_t pos = len;
    while (pos > 0 && idx[pos - 1] + 1 == values.size()) idx[--pos] = 0;
    if (pos == 0) return out;
    ++idx[pos - 1];
  }
}

}  // namespace strongirr

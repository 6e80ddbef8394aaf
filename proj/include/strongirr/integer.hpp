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

#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace strongirr {

using Int = mpz_class;
using Rat = mpq_class;

/// Coefficient domains supported by the polynomial types: the integers and
/// the rationals.
template <class C>
concept Coefficient = std::same_as<C, Int> || std::same_as<C, Rat>;

// Error taxonomy. Everything derives from Error so callers can catch once.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (ring mismatch, bad exponent, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition of an operation does not hold.
class HypothesisError : public InputError {
 public:
  using InputError::InputError;
};

/// A configured effort budget was exceeded.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline bool is_one(const Int& a) { return a == 1; }
inline bool is_one(const Rat& a) { return a == 1; }

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int abs_int(const Int& a) {
  Int r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

/// Exact quotient; caller guarantees b | a.
inline Int divexact(const Int& a, const Int& b) {
  Int r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divisible(const Int& a, const Int& b) {
  return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

/// Non-negative residue of a modulo m (m > 0).
inline Int mod_nonneg(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Symmetric residue in (-m/2, m/2].
inline Int mod_symmetric(const Int& a, const Int& m) {
  Int r = mod_nonneg(a, m);
  if (2 * r > m) r -= m;
  return r;
}

inline std::uint64_t mod_u64(const Int& a, std::uint64_t p) {
  return mpz_fdiv_ui(a.get_mpz_t(), p);
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// True when a is an exact k-th power of an integer (sign allowed for odd k).
inline bool is_perfect_power(const Int& a, unsigned long k) {
  if (sgn(a) < 0 && k % 2 == 0) return false;
  Int r;
  return mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) != 0;
}

inline bool is_probable_prime(const Int& a) {
  return mpz_probab_prime_p(a.get_mpz_t(), 30) != 0;
}

}  // namespace strongirr

// Copyright 2026 The rayclass Authors.
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

#ifndef RAYCLASS_ARITH_HPP_
#define RAYCLASS_ARITH_HPP_

#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

// Elementary integer arithmetic shared by the group and form modules.
namespace rayclass::arith {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  std::uint64_t value;  // prime^exponent

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a,
                                                             std::int64_t b);

/// Floor-style modulus: result in [0, m) for m > 0.
std::int64_t mod(std::int64_t a, std::int64_t m);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m; nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> inv_mod(std::uint64_t a, std::uint64_t m);

/// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t n);

/// Number of distinct prime divisors.
unsigned omega(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

/// Kronecker symbol (a / n) for n >= 0.
int kronecker(std::int64_t a, std::uint64_t n);

/// A square root of a modulo an odd prime p (Tonelli-Shanks), the smaller of
/// the two roots. nullopt if a is a non-residue.
std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p);

/// True iff d is the discriminant of a quadratic field (d != 1).
bool is_fundamental_discriminant(std::int64_t d);

/// Integer square root, floor.
std::uint64_t isqrt(std::uint64_t n);

}  // namespace rayclass::arith

#endif  // RAYCLASS_ARITH_HPP_

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

#include "rayclass/arith.hpp"

#include <gtest/gtest.h>

#include <numeric>

namespace rayclass::arith {
namespace {

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

TEST(ArithTest, ExtGcdBezout) {
  for (std::int64_t a = -40; a <= 40; ++a) {
    for (std::int64_t b = -40; b <= 40; ++b) {
      const auto [g, x, y] = ext_gcd(a, b);
      EXPECT_EQ(g, std::gcd(a, b));
      EXPECT_EQ(a * x + b * y, g);
    }
  }
}

TEST(ArithTest, ModIsNonNegative) {
  EXPECT_EQ(mod(-7, 3), 2);
  EXPECT_EQ(mod(7, 3), 1);
  EXPECT_EQ(mod(-9, 3), 0);
}

TEST(ArithTest, FactorizeRoundTrip) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    std::uint64_t prod = 1;
    for (const auto& pp : factorize(n)) {
      EXPECT_TRUE(naive_prime(pp.prime));
      prod *= pp.value;
    }
    EXPECT_EQ(prod, n);
  }
  EXPECT_EQ(omega(2310), 5U);
  EXPECT_EQ(euler_phi(15), 8U);
  EXPECT_EQ(euler_phi(11000), 4000U);
}

TEST(ArithTest, IsPrimeMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    ASSERT_EQ(is_prime(n), naive_prime(n)) << n;
  }
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(ArithTest, InverseAndPower) {
  EXPECT_EQ(*inv_mod(3, 11), 4U);
  EXPECT_FALSE(inv_mod(6, 9).has_value());
  EXPECT_EQ(pow_mod(3, 5, 7), 5U);
  EXPECT_EQ(mul_mod(1ULL << 62, 1ULL << 62, 1000000007ULL),
            static_cast<std::uint64_t>((static_cast<unsigned __int128>(1ULL << 62) << 62) %
                                       1000000007ULL));
}

TEST(ArithTest, KroneckerAgainstEulerCriterion) {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 101ULL}) {
    for (std::int64_t a = -60; a <= 60; ++a) {
      const auto r = pow_mod(static_cast<std::uint64_t>(mod(a, p)), (p - 1) / 2, p);
      const int euler = r == 0 ? 0 : (r == 1 ? 1 : -1);
      EXPECT_EQ(kronecker(a, p), euler) << a << " " << p;
    }
  }
  EXPECT_EQ(kronecker(-23, 2), 1);
  EXPECT_EQ(kronecker(-3, 2), -1);
  EXPECT_EQ(kronecker(-4, 2), 0);
}

TEST(ArithTest, SqrtModPrime) {
  for (std::uint64_t p : {3ULL, 5ULL, 13ULL, 17ULL, 97ULL, 7919ULL}) {
    for (std::uint64_t a = 0; a < std::min<std::uint64_t>(p, 300); ++a) {
      const auto r = sqrt_mod_prime(a, p);
      bool residue = false;
      for (std::uint64_t x = 0; x < p; ++x) residue |= (x * x % p == a);
      ASSERT_EQ(r.has_value(), residue);
      if (r) {
        EXPECT_EQ(*r * *r % p, a);
        EXPECT_LE(*r, p - *r);
      }
    }
  }
}

TEST(ArithTest, FundamentalDiscriminants) {
  const std::vector<std::int64_t> expected = {-3, -4, -7, -8, -11, -15, -19, -20, -23, -24};
  std::vector<std::int64_t> got;
  for (std::int64_t d = -1; got.size() < expected.size(); --d) {
    if (is_fundamental_discriminant(d)) got.push_back(d);
  }
  EXPECT_EQ(got, expected);
  EXPECT_TRUE(is_fundamental_discriminant(5));
  EXPECT_FALSE(is_fundamental_discriminant(1));
  EXPECT_FALSE(is_fundamental_discriminant(-16));
  EXPECT_EQ(isqrt(99), 9U);
  EXPECT_EQ(isqrt(100), 10U);
  EXPECT_TRUE(is_squarefree(30));
  EXPECT_FALSE(is_squarefree(12));
}

}  // namespace
}  // namespace rayclass::arith

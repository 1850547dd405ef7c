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

#include "rayclass/zmstar.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "rayclass/arith.hpp"
#include "rayclass/bounds.hpp"
#include "rayclass/error.hpp"

namespace rayclass::zmstar {
namespace {

using abelian::GroupElement;
using abelian::Int;

const specfun::PrimeSieve& sieve() {
  static const specfun::PrimeSieve s(2'000'000);
  return s;
}

std::vector<Int> factors(const UnitGroupStructure& s) {
  const auto d = s.group().invariant_factors();
  return {d.begin(), d.end()};
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t m) {
  std::uint64_t x = a % m;
  std::uint64_t k = 1;
  while (x != 1 % m) {
    x = x * a % m;
    ++k;
  }
  return k;
}

TEST(UnitGroupTest, Examples) {
  EXPECT_EQ(factors(unit_group(8)), (std::vector<Int>{2, 2}));
  const auto s7 = unit_group(7);
  EXPECT_EQ(factors(s7), (std::vector<Int>{6}));
  EXPECT_EQ(s7.generators()[0], 3U);
  EXPECT_EQ(factors(unit_group(15)), (std::vector<Int>{2, 4}));
  EXPECT_EQ(unit_group(2).group().order(), 1U);
  EXPECT_EQ(factors(unit_group(11000)), (std::vector<Int>{2, 2, 10, 100}));
  EXPECT_THROW(unit_group(1), DomainError);
  EXPECT_THROW(unit_group(1'000'001), ResourceError);
  EXPECT_THROW(unit_group(7).dlog(14), DomainError);
}

// Element-order statistics determine a finite abelian group, so matching the
// brute-force order counts of (Z/mZ)^x pins down the invariant factors.
TEST(UnitGroupTest, StructureMatchesBruteForceOrders) {
  for (std::uint64_t m = 2; m <= 1500; ++m) {
    const UnitGroupStructure s = unit_group(m);
    ASSERT_EQ(s.group().order(), arith::euler_phi(m));
    std::map<std::uint64_t, std::uint64_t> brute;
    std::map<std::uint64_t, std::uint64_t> abstract;
    for (std::uint64_t a = 1; a < m; ++a) {
      if (std::gcd(a, m) == 1) ++brute[mult_order(a, m)];
    }
    if (m == 2) brute[1] = 1;
    for (std::uint64_t i = 0; i < s.group().order(); ++i) {
      ++abstract[s.group().element_order(s.group().from_linear_index(i))];
    }
    ASSERT_EQ(brute, abstract) << m;
    for (std::size_t i = 0; i < s.generators().size(); ++i) {
      ASSERT_EQ(mult_order(s.generators()[i], m),
                static_cast<std::uint64_t>(s.group().invariant_factors()[i]));
    }
  }
}

TEST(UnitGroupTest, DlogIsHomomorphismAndBijection) {
  std::mt19937_64 rng(5);
  for (std::uint64_t m : {11ULL, 720ULL, 1024ULL, 9991ULL, 11000ULL, 65520ULL, 999983ULL}) {
    const UnitGroupStructure s = unit_group(m);
    const auto& g = s.group();
    for (int i = 0; i < 10000; ++i) {
      std::uint64_t a = 0;
      std::uint64_t b = 0;
      do a = rng() % m; while (std::gcd(a, m) != 1);
      do b = rng() % m; while (std::gcd(b, m) != 1);
      ASSERT_EQ(s.dlog(a * b % m), g.add(s.dlog(a), s.dlog(b)));
      ASSERT_EQ(s.residue(s.dlog(a)), a);
    }
  }
}

const abelian::Subgroup& find_subgroup(const std::vector<abelian::Subgroup>& subs,
                                       std::uint64_t index) {
  for (const auto& h : subs) {
    if (h.index() == index) return h;
  }
  throw std::logic_error("no subgroup of that index");
}

TEST(VerifySubgroupTest, Examples) {
  const auto s11 = unit_group(11);
  const auto subs11 = abelian::enumerate_subgroups(s11.group());
  const auto& squares = find_subgroup(subs11, 2);
  for (std::uint64_t r : {1ULL, 3ULL, 4ULL, 5ULL, 9ULL}) EXPECT_TRUE(squares.contains(s11.dlog(r)));
  const auto r11 = verify_subgroup(s11, squares, sieve());
  EXPECT_EQ(r11.generating_primes, (std::vector<std::uint64_t>{3}));
  EXPECT_EQ(r11.largest_needed_prime, 3U);
  EXPECT_NEAR(r11.bound, 367.9937113, 1e-6);
  EXPECT_TRUE(r11.pass);
  EXPECT_TRUE(r11.refined_pass);

  const auto s7 = unit_group(7);
  const auto r7 = verify_subgroup(s7, abelian::whole_group(s7.group()), sieve());
  EXPECT_EQ(r7.largest_needed_prime, 3U);
  EXPECT_NEAR(r7.bound, 60.5850609, 1e-6);
  EXPECT_TRUE(r7.pass);

  const auto s4 = unit_group(4);
  const auto r4 = verify_subgroup(s4, abelian::trivial_subgroup(s4.group()), sieve());
  EXPECT_TRUE(r4.trivial);
  EXPECT_TRUE(r4.pass);
  EXPECT_TRUE(r4.generating_primes.empty());

  EXPECT_THROW(verify_subgroup(s7, squares, sieve()), ParentMismatch);
}

TEST(VerifySubgroupTest, ExhaustedSieveIsIncomplete) {
  const auto s13 = unit_group(13);
  const std::vector<GroupElement> minus_one{s13.dlog(12)};
  const auto h = abelian::generated_subgroup(s13.group(), minus_one);
  const specfun::PrimeSieve small(50);
  const auto r = verify_subgroup(s13, h, small);
  EXPECT_TRUE(r.incomplete);
  EXPECT_FALSE(r.pass);
  const auto full = verify_subgroup(s13, h, sieve());
  EXPECT_EQ(full.largest_needed_prime, 103U);
  EXPECT_TRUE(full.pass);
}

TEST(ScanTest, AllPassUpTo300WithClosureAndMinimality) {
  const auto rows = scan(2, 300, sieve());
  ASSERT_FALSE(rows.empty());
  std::uint64_t last_m = 0;
  for (const auto& r : rows) {
    ASSERT_FALSE(r.skipped);
    ASSERT_FALSE(r.incomplete);
    EXPECT_TRUE(r.pass) << r.modulus;
    EXPECT_TRUE(r.refined_pass) << r.modulus;
    EXPECT_LE(static_cast<double>(r.largest_needed_prime), r.bound);
    EXPECT_GE(r.modulus, last_m);
    last_m = r.modulus;

    const auto s = unit_group(r.modulus);
    std::vector<GroupElement> gens;
    for (std::uint64_t g : r.subgroup_generators) gens.push_back(s.dlog(g));
    const auto h = abelian::generated_subgroup(s.group(), gens);
    ASSERT_EQ(h.index(), r.subgroup_index);

    std::vector<GroupElement> prime_classes;
    for (std::uint64_t p : r.generating_primes) prime_classes.push_back(s.dlog(p));
    EXPECT_EQ(abelian::generated_subgroup(s.group(), prime_classes), h);
    prime_classes.pop_back();
    EXPECT_LT(abelian::generated_subgroup(s.group(), prime_classes).order(), h.order());

    // Greedy prefix: every other prime of H below the largest one already lies
    // in the closure of the generating primes smaller than it.
    for (std::uint64_t p = 2; p < r.largest_needed_prime; ++p) {
      if (!arith::is_prime(p) || r.modulus % p == 0 || !h.contains(s.dlog(p))) continue;
      std::vector<GroupElement> smaller;
      for (std::uint64_t q : r.generating_primes) {
        if (q < p) smaller.push_back(s.dlog(q));
      }
      const bool generator = std::find(r.generating_primes.begin(), r.generating_primes.end(),
                                       p) != r.generating_primes.end();
      EXPECT_NE(abelian::generated_subgroup(s.group(), smaller).contains(s.dlog(p)), generator)
          << r.modulus << " " << p;
    }
  }
}

TEST(ScanTest, SubgroupCountsPerModulus) {
  const auto rows = scan(2, 40, sieve());
  std::map<std::uint64_t, std::uint64_t> per_m;
  for (const auto& r : rows) ++per_m[r.modulus];
  for (std::uint64_t m = 2; m <= 40; ++m) {
    const auto total = abelian::enumerate_subgroups(unit_group(m).group()).size();
    EXPECT_EQ(per_m[m], total - 1) << m;  // every subgroup but the trivial one
  }
}

TEST(ScanTest, DeterministicAcrossJobs) {
  ZmScanConfig one;
  ZmScanConfig many;
  many.jobs = 4;
  const auto a = scan(100, 400, sieve(), one);
  const auto b = scan(100, 400, sieve(), many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].modulus, b[i].modulus);
    EXPECT_EQ(a[i].subgroup_generators, b[i].subgroup_generators);
    EXPECT_EQ(a[i].generating_primes, b[i].generating_primes);
  }
}

TEST(ScanTest, EmptyRangeAndSkips) {
  EXPECT_TRUE(scan(1, 1, sieve()).empty());
  EXPECT_TRUE(scan(50, 40, sieve()).empty());
  ZmScanConfig tight;
  tight.subgroup_cap = 3;
  const auto rows = scan(24, 24, sieve(), tight);  // (Z/2)^3 has 16 subgroups
  ASSERT_EQ(rows.size(), 1U);
  EXPECT_TRUE(rows[0].skipped);
  EXPECT_FALSE(rows[0].reason.empty());
}

}  // namespace
}  // namespace rayclass::zmstar

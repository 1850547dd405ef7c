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

#include "rayclass/bounds.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <set>

#include "rayclass/error.hpp"

namespace rayclass::bounds {
namespace {

double truncate2(double v) { return std::floor(v * 100.0) / 100.0; }

TEST(BoundFormulaTest, MainBound) {
  EXPECT_NEAR(main_bound({8, 1, 0, 0, 1}), std::pow(2.71 * std::log(8.0) + 4.13, 2), 1e-12);
  EXPECT_NEAR(main_bound({5, 7, 2, 1, 3}),
              std::pow(3 * (2.71 * std::log(35.0) + 1.29 * 2 + 1.38) + 4.13, 2), 1e-9);
  EXPECT_THROW(main_bound({8, 1, 0, 0, 0}), DomainError);
  EXPECT_THROW(main_bound({1, 4, 0, 3, 1}), DomainError);
}

TEST(BoundFormulaTest, MainBoundIsStrictlyIncreasing) {
  const BoundInput base{12, 30, 1, 2, 2};
  const double b0 = main_bound(base);
  auto bumped = [&](auto field) {
    BoundInput in = base;
    in.*field += 1;
    return main_bound(in);
  };
  EXPECT_GT(bumped(&BoundInput::delta), b0);
  EXPECT_GT(bumped(&BoundInput::norm_m0), b0);
  EXPECT_GT(bumped(&BoundInput::m_infty), b0);
  EXPECT_GT(bumped(&BoundInput::omega), b0);
  EXPECT_GT(bumped(&BoundInput::index), b0);
}

// Reference values from 30-digit evaluation of the formulas.
TEST(BoundFormulaTest, ZmBound) {
  EXPECT_NEAR(zm_bound(11, 2), 367.9937113, 1e-6);
  EXPECT_NEAR(zm_bound(2, 1), 7.6872482, 1e-6);
  EXPECT_NEAR(zm_bound(11000, 1), 1385.5221151, 1e-6);
  EXPECT_THROW(zm_bound(1, 1), DomainError);
  EXPECT_THROW(zm_bound(5, 0), DomainError);
}

TEST(BoundFormulaTest, IsogenyAndCyclotomic) {
  EXPECT_NEAR(isogeny_bound(23, 1, 1), 255.6144234, 1e-6);
  EXPECT_NEAR(isogeny_bound(47, 1, 1), 385.4145504, 1e-6);
  EXPECT_NEAR(isogeny_bound(23, 1, 2), 4 * isogeny_bound(23, 1, 1), 1e-9);
  EXPECT_THROW(isogeny_bound(2, 1, 1), DomainError);
  EXPECT_DOUBLE_EQ(cyclotomic_relative_bound(1, 1.0), 46.7856);
  EXPECT_NEAR(cyclotomic_relative_bound(1, std::log(1e6)), 1728.0676945, 1e-6);
  EXPECT_GT(cyclotomic_relative_bound(2, 3.0), cyclotomic_relative_bound(1, 3.0));
  EXPECT_GT(cyclotomic_relative_bound(1, 3.1), cyclotomic_relative_bound(1, 3.0));
}

TEST(BoundFormulaTest, SimplifiedForms) {
  for (double dn = 12; dn < 1e12; dn *= 1.7) {
    const double l = std::log(dn);
    EXPECT_NEAR(simplified_bound(dn), 62 * l * l, 1e-9 * l * l);
    EXPECT_NEAR(bach_bound(dn), 72 * l * l, 1e-9 * l * l);
    EXPECT_LE(simplified_bound_intermediate(dn), simplified_bound(dn));
    // index 1 with |m_inf| and omega at their upper estimates stays below 62 (log dn)^2
    const RemarkEstimates est = remark_estimates(dn);
    EXPECT_LE(main_bound_from_log(1, l, est.minf_upper, est.omega_upper), simplified_bound(dn))
        << dn;
  }
  EXPECT_THROW(remark_estimates(11.9), DomainError);
}

TEST(LimitTermTest, Examples) {
  EXPECT_NEAR(static_cast<double>(limit_term(95.0L, 1e-6L)) / (std::pow(std::log(95.0), 2) / 2), 1.0,
              1e-4);
  EXPECT_EQ(limit_term(1.0L, 0.05L), 0.0L);
  EXPECT_NEAR(static_cast<double>(limit_term(std::exp(2.0L), 1e-7L)), 2.0, 1e-6);
}

TEST(LimitTermTest, FirstOrderConvergence) {
  for (long double x : {2.0L, 10.0L, 95.0L, 1e4L}) {
    const long double target = std::log(x) * std::log(x) / 2;
    const long double e1 = std::fabs(limit_term(x, 1e-3L) - target);
    const long double e2 = std::fabs(limit_term(x, 5e-4L) - target);
    EXPECT_NEAR(static_cast<double>(e1 / e2), 2.0, 0.05) << static_cast<double>(x);
  }
}

TEST(LimitTermTest, BranchesAgree) {
  // |b log x| straddles the series / closed-form switch at 0.5.
  const long double x = 1e4L;
  const long double b = 0.5L / std::log(x);
  EXPECT_NEAR(static_cast<double>(limit_term(x, b * (1 - 1e-12L))),
              static_cast<double>(limit_term(x, b * (1 + 1e-12L))), 1e-9);
  const long double direct = (std::pow(x, 0.1L) - 0.1L * std::log(x) - 1) / (0.01L * std::pow(x, 0.1L));
  EXPECT_NEAR(static_cast<double>(limit_term(x, 0.1L)), static_cast<double>(direct), 1e-12);
}

TEST(SFunctionsTest, FrozenValuesAt95) {
  // 30-digit evaluation of the defining formulas, rounded to 6 decimals.
  const SFunctions s = s_functions({1.0L, 95.0L});
  EXPECT_NEAR(static_cast<double>(4 * s.s1), 2.708891, 5e-7);
  EXPECT_NEAR(static_cast<double>(4 * s.s2), 4.127754, 5e-7);
  EXPECT_NEAR(static_cast<double>(4 * s.s3), 1.375039, 5e-7);
  EXPECT_NEAR(static_cast<double>(4 * s.s4), 1.286460, 5e-7);
  EXPECT_NEAR(static_cast<double>(s.s5 + 2 * 1.03883L / std::exp(1.0L)), -0.194005, 5e-7);
}

TEST(SFunctionsTest, ContinuousAtAEqualsOne) {
  const SFunctions at1 = s_functions({1.0L, 95.0L});
  const SFunctions near = s_functions({1.0L - 1e-7L, 95.0L});
  EXPECT_NEAR(static_cast<double>(near.s1), static_cast<double>(at1.s1), 1e-6);
  EXPECT_NEAR(static_cast<double>(near.s2), static_cast<double>(at1.s2), 1e-6);
  EXPECT_NEAR(static_cast<double>(near.s3), static_cast<double>(at1.s3), 1e-6);
  EXPECT_NEAR(static_cast<double>(near.s4), static_cast<double>(at1.s4), 1e-5);
  EXPECT_NEAR(static_cast<double>(near.s5), static_cast<double>(at1.s5), 1e-6);
  EXPECT_THROW(s_functions({0.0L, 95.0L}), DomainError);
  EXPECT_THROW(s_functions({1.0L, 0.5L}), DomainError);
}

TEST(ConstantDerivationTest, AllCertificatesPassWithTightSlack) {
  const auto start = std::chrono::steady_clock::now();
  const ConstantDerivation d = derive_main_constants();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_TRUE(d.all_pass());
  EXPECT_LT(seconds, 1.0);
  for (auto [computed, published] : {std::pair{d.c_log, 2.71}, std::pair{d.c_inf, 1.29},
                                     std::pair{d.c_omega, 1.38}, std::pair{d.c_add, 4.13}}) {
    const long double slack = published - computed;
    EXPECT_GT(slack, 0.0L);
    EXPECT_LT(slack, 0.01L);
  }
  EXPECT_LT(d.s5_margin, 0.0L);
  for (const auto& c : d.certificates) {
    EXPECT_TRUE(c.pass) << c.name;
    EXPECT_GT(c.slack, 0.0L) << c.name;
  }
}

TEST(ConstantDerivationTest, CertifyRelations) {
  EXPECT_TRUE(certify("a", 1.0L, 2.0, Relation::kLessEqual).pass);
  EXPECT_FALSE(certify("b", 2.0L - 1e-12L, 2.0, Relation::kLessEqual).pass);
  EXPECT_TRUE(certify("c", 3.0L, 2.0, Relation::kGreaterEqual).pass);
  EXPECT_TRUE(certify("d", 5.0L, 5.0, Relation::kEqual).pass);
  EXPECT_FALSE(certify("e", 5.0L, 6.0, Relation::kEqual).pass);
  EXPECT_EQ(relation_symbol(Relation::kLess), "<");
}

TEST(RemarkTest, SecondaryConstantsHold) {
  const auto certs = remark_certificates();
  EXPECT_GE(certs.size(), 15U);
  for (const auto& c : certs) {
    EXPECT_TRUE(c.pass) << c.name << " computed " << static_cast<double>(c.computed);
  }
  const RemarkEstimates est = remark_estimates(std::exp(10.0));
  EXPECT_NEAR(est.minf_upper, 0.71 * 10 + 1.07, 1e-12);
  EXPECT_NEAR(est.omega_upper, 10 / std::log(2.0), 1e-12);
}

TEST(RemarkTest, SmallCaseValues) {
  const auto values = small_case_values();
  ASSERT_EQ(values.size(), 4U);
  EXPECT_DOUBLE_EQ(truncate2(values[0].value), 95.59);
  EXPECT_DOUBLE_EQ(truncate2(values[1].value), 97.44);
  EXPECT_DOUBLE_EQ(truncate2(values[2].value), 95.36);
  EXPECT_DOUBLE_EQ(truncate2(values[3].value), 133.52);
}

TEST(RemarkTest, IsogenyExceptionsAreTheFiveSmallCases) {
  std::set<std::pair<std::int64_t, std::uint64_t>> got;
  for (const auto& e : isogeny_small_case_exceptions()) {
    got.emplace(e.field_discriminant, e.conductor_norm);
    EXPECT_GT(e.factor, 26.0);
  }
  const std::set<std::pair<std::int64_t, std::uint64_t>> expected = {
      {-4, 1}, {-4, 2}, {-3, 1}, {-3, 3}, {5, 1}};
  EXPECT_EQ(got, expected);
}

TEST(ConstantTableTest, NamesUniqueAndValuesPresent) {
  std::set<std::string_view> names;
  std::set<double> values;
  for (const auto& c : constants::table()) {
    EXPECT_TRUE(names.insert(c.name).second) << c.name;
    EXPECT_FALSE(c.role.empty());
    values.insert(c.value);
  }
  for (double v : {2.71, 1.29, 1.38, 4.13, 16.0, 26.0, 62.0, 72.0, 0.71, 1.07, 0.67, 1.06, 4.73,
                   1.03883, 0.12}) {
    EXPECT_EQ(values.count(v), 1U) << v;
  }
}

}  // namespace
}  // namespace rayclass::bounds

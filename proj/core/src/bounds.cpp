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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "rayclass/arith.hpp"
#include "rayclass/error.hpp"
#include "rayclass/specfun.hpp"

namespace rayclass::bounds {

namespace constants {

std::span<const NamedConstant> table() {
  static constexpr std::array<NamedConstant, 24> kTable = {{
      {"log_coefficient", kLogCoefficient, "coefficient of log(Delta N(m0)) in the ray class bound"},
      {"infinity_coefficient", kInfinityCoefficient, "coefficient of |m_inf| in the ray class bound"},
      {"omega_coefficient", kOmegaCoefficient, "coefficient of omega(m0) in the ray class bound"},
      {"additive", kAdditive, "additive constant inside the square of the ray class bound"},
      {"integer_constant", kIntegerConstant, "p <= 16 (index log m)^2 for subgroups of (Z/mZ)^x"},
      {"isogeny_constant", kIsogenyConstant, "26 (h+ log(Delta N(f)))^2 isogeny-graph connectivity"},
      {"simplified_constant", kSimplifiedConstant, "62 (log Delta N(m0))^2 simplified bound"},
      {"bach_comparison", kBachComparisonConstant, "72 (log Delta N(m0))^2 comparison bound"},
      {"simplified_slope", kSimplifiedLogSlope, "slope of (5.62 L + 5.52)^2"},
      {"simplified_intercept", kSimplifiedIntercept, "intercept of (5.62 L + 5.52)^2"},
      {"log12_floor", kLog12Floor, "log 12 >= 2.48, smallest non-trivial Delta N(m0)"},
      {"degree_slope", kDegreeSlope, "|m_inf| <= n <= 0.71 log(Delta N(m0)) + 1.07"},
      {"degree_intercept", kDegreeIntercept, "|m_inf| <= n <= 0.71 log(Delta N(m0)) + 1.07"},
      {"omega_ratio_integers", kOmegaRatioIntegers, "omega(m)/log m <= 0.67 for m > 11000"},
      {"omega_li_correction", kOmegaLiCorrection, "omega(m) <= li(log m) + 0.12 sqrt(log m)"},
      {"omega_ratio_isogeny", kOmegaRatioIsogeny, "omega(f)/log(Delta N(f)) <= 1.06"},
      {"isogeny_log_floor", kIsogenyLogFloor, "log(Delta N(f)) >= 4.73 outside the exceptions"},
      {"odlyzko_quartic_root_disc", kOdlyzkoQuarticRootDisc, "root discriminant floor for quartic fields"},
      {"degree_three_log_floor", kDegreeThreeLogFloor, "log(Delta N) >= 2.74 when n > 2"},
      {"degree_six_log_floor", kDegreeSixLogFloor, "log(Delta N) >= 6.99 when n >= 6"},
      {"chebyshev_constant", kChebyshevConstant, "psi(x) <= 1.03883 x"},
      {"small_norm_cutoff", kSmallNormCutoff, "case split on the smallest prime norm"},
      {"integer_exhaustive_cutoff", kIntegerExhaustiveCutoff, "moduli m <= 11000 are checked exhaustively"},
      {"trivial_ray_threshold", kTrivialRayThreshold, "Delta N(m0) < 12 gives a trivial ray class group"},
  }};
  return kTable;
}

}  // namespace constants

namespace {

using namespace constants;

constexpr long double kE = 2.718281828459045235360287471352662498L;

void require(bool condition, const char* message) {
  if (!condition) {
    throw DomainError(message);
  }
}

// log(2 pi) - psi(2), the per-degree slope of Bach's discriminant estimate.
long double degree_slope_denominator() {
  return std::log(2.0L * specfun::kPi) - specfun::digamma(2.0L);
}

// Log-spaced grid on [lo, hi] inclusive.
std::vector<long double> log_grid(long double lo, long double hi,
                                  std::size_t points) {
  std::vector<long double> grid(points);
  const long double llo = std::log(lo);
  const long double lhi = std::log(hi);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = std::exp(llo + (lhi - llo) * static_cast<long double>(i) /
                                 static_cast<long double>(points - 1));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

}  // namespace

void BoundInput::validate() const {
  require(delta >= 1, "BoundInput: delta must be >= 1");
  require(norm_m0 >= 1, "BoundInput: norm_m0 must be >= 1");
  require(index >= 1, "BoundInput: index must be >= 1");
  const double log2_total =
      std::log2(static_cast<double>(delta)) + std::log2(static_cast<double>(norm_m0));
  require(static_cast<double>(omega) <= log2_total + 1e-9,
          "BoundInput: omega exceeds log2(delta * norm_m0)");
}

double main_bound_from_log(std::uint64_t index, double log_delta_norm,
                           double m_infty, double omega) {
  require(index >= 1, "main_bound: index must be >= 1");
  const double inner = static_cast<double>(index) *
                           (kLogCoefficient * log_delta_norm +
                            kInfinityCoefficient * m_infty +
                            kOmegaCoefficient * omega) +
                       kAdditive;
  return inner * inner;
}

double main_bound(const BoundInput& input) {
  input.validate();
  const double log_dn = std::log(static_cast<double>(input.delta)) +
                        std::log(static_cast<double>(input.norm_m0));
  return main_bound_from_log(input.index, log_dn,
                             static_cast<double>(input.m_infty),
                             static_cast<double>(input.omega));
}

double simplified_bound(double delta_times_norm) {
  require(delta_times_norm >= kTrivialRayThreshold,
          "simplified_bound: Delta N(m0) must be >= 12");
  const double l = std::log(delta_times_norm);
  return kSimplifiedConstant * l * l;
}

double simplified_bound_intermediate(double delta_times_norm) {
  require(delta_times_norm >= kTrivialRayThreshold,
          "simplified_bound_intermediate: Delta N(m0) must be >= 12");
  const double inner =
      kSimplifiedLogSlope * std::log(delta_times_norm) + kSimplifiedIntercept;
  return inner * inner;
}

double bach_bound(double delta_times_norm) {
  require(delta_times_norm >= kTrivialRayThreshold,
          "bach_bound: Delta N(m0) must be >= 12");
  const double l = std::log(delta_times_norm);
  return kBachComparisonConstant * l * l;
}

double zm_bound(std::uint64_t m, std::uint64_t index) {
  require(m >= 2, "zm_bound: m must be >= 2");
  require(index >= 1, "zm_bound: index must be >= 1");
  const double t = static_cast<double>(index) * std::log(static_cast<double>(m));
  return kIntegerConstant * t * t;
}

double isogeny_bound(std::uint64_t delta, std::uint64_t conductor_norm,
                     std::uint64_t h_plus) {
  require(h_plus >= 1, "isogeny_bound: h_plus must be >= 1");
  require(delta >= 1 && conductor_norm >= 1,
          "isogeny_bound: delta and conductor_norm must be >= 1");
  require(static_cast<double>(delta) * static_cast<double>(conductor_norm) >= 3,
          "isogeny_bound: delta * conductor_norm must be >= 3");
  const double t = static_cast<double>(h_plus) *
                   (std::log(static_cast<double>(delta)) +
                    std::log(static_cast<double>(conductor_norm)));
  return kIsogenyConstant * t * t;
}

double cyclotomic_relative_bound(std::uint64_t h_k0, double log_delta) {
  require(h_k0 >= 1, "cyclotomic_relative_bound: h_k0 must be >= 1");
  require(log_delta > 0 && std::isfinite(log_delta),
          "cyclotomic_relative_bound: log_delta must be > 0");
  const double inner =
      kLogCoefficient * static_cast<double>(h_k0) * log_delta + kAdditive;
  return inner * inner;
}

long double limit_term(long double x, long double b) {
  require(x > 0 && std::isfinite(x), "limit_term: x must be > 0");
  require(b != 0 && std::isfinite(b), "limit_term: b must be non-zero");
  const long double log_x = std::log(x);
  const long double z = b * log_x;
  if (std::fabs(z) < 0.5L) {
    // (e^z - 1 - z) / b^2 = (log x)^2 * sum_{k>=2} z^(k-2) / k!
    long double term = 0.5L;
    long double sum = 0.0L;
    for (int k = 2; k < 60; ++k) {
      sum += term;
      term *= z / static_cast<long double>(k + 1);
      if (std::fabs(term) < 1e-25L) {
        break;
      }
    }
    return log_x * log_x * sum * std::exp(-z);
  }
  return (std::expm1(z) - z) / (b * b * std::exp(z));
}

SFunctions s_functions(const SmoothingParams& params) {
  const long double a = params.a;
  const long double x = params.x;
  require(a > 0 && a <= 1, "s_functions: a must lie in (0, 1]");
  require(x >= 1 && std::isfinite(x), "s_functions: x must be >= 1");

  const long double log_x = std::log(x);
  const long double sqrt_x = std::sqrt(x);
  const long double x_pow = std::pow(x, a + 0.5L);  // x^(a + 1/2)

  SFunctions s;
  s.s1 = 2.0L / (2.0L * a + 1.0L) * (1.0L + ((2.0L + a) * log_x + 1.0L) / x_pow);
  const long double harmonic = 1.0L / a + 1.0L / (a + 1.0L);
  s.s2 = s.s1 * harmonic + log_x / x_pow * (1.5L + harmonic) +
         (1.0L / (a * a) + 1.0L / ((a + 1.0L) * (a + 1.0L))) / x_pow;
  s.s3 = 2.0L * log_x / (kE * a * sqrt_x);

  long double bracket = 0;
  if (a == 1.0L) {
    bracket = log_x * log_x / 2.0L;
  } else {
    const long double b = a - 1.0L;
    bracket = 1.0L / (b * b) - log_x / (b * std::pow(x, b)) -
              1.0L / (b * b * std::pow(x, b));
  }
  const long double psi_gap =
      specfun::digamma((a + 1.0L) / 2.0L) - specfun::digamma((a + 2.0L) / 2.0L);
  s.s4 = 1.0L / ((a - 2.0L) * (a - 2.0L) * std::pow(x, 2.5L)) -
         s.s1 / 2.0L * psi_gap + 1.0L / (a * a * sqrt_x) +
         bracket / std::pow(x, 1.5L);
  s.s5 = s.s1 * (specfun::digamma(a + 1.0L) - std::log(2.0L * specfun::kPi));
  return s;
}

std::string_view relation_symbol(Relation relation) {
  switch (relation) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kLess:
      return "<";
    case Relation::kGreaterEqual:
      return ">=";
    case Relation::kEqual:
      return "=";
  }
  return "?";
}

Certification certify(std::string name, long double computed, double published,
                      Relation relation, long double margin) {
  Certification c;
  c.name = std::move(name);
  c.computed = computed;
  c.published = published;
  c.relation = relation;
  switch (relation) {
    case Relation::kLessEqual:
    case Relation::kLess:
      c.slack = static_cast<long double>(published) - computed;
      c.pass = c.slack >= margin;
      break;
    case Relation::kGreaterEqual:
      c.slack = computed - static_cast<long double>(published);
      c.pass = c.slack >= margin;
      break;
    case Relation::kEqual:
      c.slack = computed == static_cast<long double>(published)
                    ? 0.0L
                    : -std::fabs(computed - static_cast<long double>(published));
      c.pass = c.slack == 0;
      break;
  }
  return c;
}

bool ConstantDerivation::all_pass() const {
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const Certification& c) { return c.pass; });
}

ConstantDerivation evaluate_main_constants() {
  const long double chebyshev = kChebyshevConstant;
  const SFunctions at95 = s_functions({1.0L, kSmallNormCutoff});

  ConstantDerivation d;
  d.c_log = 4.0L * at95.s1;
  d.c_inf = 4.0L * at95.s4;
  d.c_omega = 4.0L * at95.s3;
  d.c_add = 4.0L * at95.s2;
  d.s5_margin = at95.s5 + 2.0L * chebyshev / kE;

  auto& out = d.certificates;
  out.push_back(certify("4*s1(95) <= 2.71", d.c_log, kLogCoefficient, Relation::kLessEqual));
  out.push_back(certify("4*s4(95) <= 1.29", d.c_inf, kInfinityCoefficient, Relation::kLessEqual));
  out.push_back(certify("4*s3(95) <= 1.38", d.c_omega, kOmegaCoefficient, Relation::kLessEqual));
  out.push_back(certify("4*s2(95) <= 4.13", d.c_add, kAdditive, Relation::kLessEqual));
  out.push_back(certify("s5(95) + 2C/e < 0", d.s5_margin, 0.0, Relation::kLess));

  // s1 > 2/3 and psi(2) < log(2 pi), so s5 + 2C/e is below this for every x.
  const long double uniform =
      2.0L / 3.0L * (specfun::digamma(2.0L) - std::log(2.0L * specfun::kPi)) +
      2.0L * chebyshev / kE;
  out.push_back(certify("2/3*(psi(2) - log(2pi)) + 2C/e < 0", uniform, 0.0, Relation::kLess));

  long double worst_s5 = -1e300L;
  for (long double x : log_grid(kSmallNormCutoff, 1e8L, 4001)) {
    worst_s5 = std::max(worst_s5, s_functions({1.0L, x}).s5 + 2.0L * chebyshev / kE);
  }
  out.push_back(certify("max_{x in [95,1e8]} s5(x) + 2C/e < 0", worst_s5, 0.0, Relation::kLess));

  std::array<long double, 4> worst_step;
  worst_step.fill(-1e300L);
  SFunctions prev = at95;
  const auto grid = log_grid(kSmallNormCutoff, 1e6L, 4001);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const SFunctions cur = s_functions({1.0L, grid[i]});
    worst_step[0] = std::max(worst_step[0], cur.s1 - prev.s1);
    worst_step[1] = std::max(worst_step[1], cur.s2 - prev.s2);
    worst_step[2] = std::max(worst_step[2], cur.s3 - prev.s3);
    worst_step[3] = std::max(worst_step[3], cur.s4 - prev.s4);
    prev = cur;
  }
  for (std::size_t i = 0; i < worst_step.size(); ++i) {
    out.push_back(certify("s" + std::to_string(i + 1) +
                              " decreasing on [95,1e6] (max step < 0)",
                          worst_step[i], 0.0, Relation::kLess, kMonotoneStepMargin));
  }
  return d;
}

ConstantDerivation derive_main_constants() {
  ConstantDerivation d = evaluate_main_constants();
  for (const auto& c : d.certificates) {
    if (!c.pass) {
      throw CertificationFailure("certificate failed: " + c.name);
    }
  }
  return d;
}

RemarkEstimates remark_estimates(double delta_times_norm) {
  require(delta_times_norm >= kTrivialRayThreshold,
          "remark_estimates: Delta N(m0) must be >= 12");
  const double l = std::log(delta_times_norm);
  return {kDegreeSlope * l + kDegreeIntercept, l / std::numbers::ln2};
}

double isogeny_constant_factor(double log_delta_norm, unsigned omega) {
  require(log_delta_norm > 0, "isogeny_constant_factor: log must be > 0");
  const double inner = kLogCoefficient +
                       kOmegaCoefficient * static_cast<double>(omega) / log_delta_norm +
                       kAdditive / log_delta_norm;
  return inner * inner;
}

std::vector<IsogenySmallCase> isogeny_small_case_exceptions() {
  const double cutoff = std::exp(kIsogenyLogFloor);
  const auto max_abs = static_cast<std::int64_t>(cutoff);
  std::vector<IsogenySmallCase> out;
  for (std::int64_t abs_d = 3; abs_d <= max_abs; ++abs_d) {
    for (std::int64_t d : {-abs_d, abs_d}) {
      if (!arith::is_fundamental_discriminant(d)) {
        continue;
      }
      for (std::uint64_t norm = 1;
           static_cast<double>(abs_d) * static_cast<double>(norm) < cutoff; ++norm) {
        // Largest number of distinct prime ideals in an ideal of this norm.
        bool realizable = true;
        unsigned omega = 0;
        for (const auto& pp : arith::factorize(norm)) {
          const int chi = arith::kronecker(d, pp.prime);
          if (chi == 1) {
            omega += pp.exponent >= 2 ? 2 : 1;
          } else if (chi == -1) {
            if (pp.exponent % 2 == 1) {
              realizable = false;
              break;
            }
            omega += 1;
          } else {
            omega += 1;
          }
        }
        if (!realizable) {
          continue;
        }
        const double l = std::log(static_cast<double>(abs_d) * static_cast<double>(norm));
        const double factor = isogeny_constant_factor(l, omega);
        if (factor > kIsogenyConstant) {
          const std::uint64_t r = arith::isqrt(norm);
          out.push_back({d, norm, omega, factor, r * r == norm});
        }
      }
    }
  }
  return out;
}

std::vector<SmallCaseValue> small_case_values() {
  return {
      {"n=1, |m_inf|=1, N(m0)>=3",
       main_bound(BoundInput{1, 3, 1, 1, 1})},
      {"n=1, |m_inf|=0, N(m0)>=5",
       main_bound(BoundInput{1, 5, 0, 1, 1})},
      {"n=2, Delta N(m0)>=8", main_bound(BoundInput{8, 1, 0, 0, 1})},
      {"n>2, log(Delta N(m0))>=2.74",
       main_bound_from_log(1, kDegreeThreeLogFloor, 0, 0)},
  };
}

std::vector<Certification> remark_certificates() {
  const long double slope = degree_slope_denominator();
  const long double log11000 = std::log(static_cast<long double>(kIntegerExhaustiveCutoff));
  const long double omega_ratio =
      (specfun::log_integral(log11000) + kOmegaLiCorrection * std::sqrt(log11000)) / log11000;
  const long double pre62 =
      (kSimplifiedLogSlope + kSimplifiedIntercept / kLog12Floor);

  std::vector<Certification> out;
  out.push_back(certify("1/(log(2pi) - psi(2)) <= 0.71", 1.0L / slope, kDegreeSlope,
                        Relation::kLessEqual));
  out.push_back(certify("1.5/(log(2pi) - psi(2)) <= 1.07", 1.5L / slope, kDegreeIntercept,
                        Relation::kLessEqual));
  out.push_back(certify("2.71 + 1.29*0.71 + 1.38/log(2) <= 5.62",
                        kLogCoefficient + kInfinityCoefficient * (long double)kDegreeSlope +
                            kOmegaCoefficient / std::log(2.0L),
                        kSimplifiedLogSlope, Relation::kLessEqual));
  out.push_back(certify("1.29*1.07 + 4.13 <= 5.52",
                        kInfinityCoefficient * (long double)kDegreeIntercept + kAdditive,
                        kSimplifiedIntercept, Relation::kLessEqual));
  out.push_back(certify("log(12) >= 2.48", std::log(12.0L), kLog12Floor,
                        Relation::kGreaterEqual));
  out.push_back(certify("(5.62 + 5.52/2.48)^2 <= 62", pre62 * pre62, kSimplifiedConstant,
                        Relation::kLessEqual));
  out.push_back(certify("(li(log 11000) + 0.12 sqrt(log 11000))/log 11000 <= 0.67",
                        omega_ratio, kOmegaRatioIntegers, Relation::kLessEqual));
  const long double integer_inner =
      kLogCoefficient + (kInfinityCoefficient + kAdditive / 2.0L) / log11000 +
      kOmegaCoefficient * (long double)kOmegaRatioIntegers;
  out.push_back(certify("(2.71 + (1.29 + 4.13/2)/log 11000 + 1.38*0.67)^2 <= 16",
                        integer_inner * integer_inner, kIntegerConstant,
                        Relation::kLessEqual));
  out.push_back(certify("3(log(2pi) - psi(2)) - 3/2 >= 2.74", 3.0L * slope - 1.5L,
                        kDegreeThreeLogFloor, Relation::kGreaterEqual));
  out.push_back(certify("6(log(2pi) - psi(2)) - 3/2 >= 6.99", 6.0L * slope - 1.5L,
                        kDegreeSixLogFloor, Relation::kGreaterEqual));
  out.push_back(certify("4 log(3.263) >= 4.73",
                        4.0L * std::log(static_cast<long double>(kOdlyzkoQuarticRootDisc)),
                        kIsogenyLogFloor, Relation::kGreaterEqual));
  out.push_back(certify("5/4.73 <= 1.06", 5.0L / kIsogenyLogFloor, kOmegaRatioIsogeny,
                        Relation::kLessEqual));
  out.push_back(certify("5/log(2310) + 1/log(13) <= 1.06",
                        5.0L / std::log(2310.0L) + 1.0L / std::log(13.0L),
                        kOmegaRatioIsogeny, Relation::kLessEqual));
  const long double isogeny_inner = kLogCoefficient +
                                    kOmegaCoefficient * (long double)kOmegaRatioIsogeny +
                                    kAdditive / (long double)kIsogenyLogFloor;
  out.push_back(certify("(2.71 + 1.38*1.06 + 4.13/4.73)^2 <= 26",
                        isogeny_inner * isogeny_inner, kIsogenyConstant,
                        Relation::kLessEqual));
  out.push_back(certify("isogeny small-case exceptions = 5",
                        static_cast<long double>(isogeny_small_case_exceptions().size()),
                        5.0, Relation::kEqual));
  for (const auto& sc : small_case_values()) {
    out.push_back(certify("B(" + sc.label + ") >= 95", sc.value, kSmallNormCutoff,
                          Relation::kGreaterEqual));
  }
  return out;
}

}  // namespace rayclass::bounds

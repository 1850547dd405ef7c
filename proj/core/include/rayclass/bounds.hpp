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

#ifndef RAYCLASS_BOUNDS_HPP_
#define RAYCLASS_BOUNDS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rayclass::bounds {

// Published constants, stored as the exact decimal literals they appear as.
namespace constants {

inline constexpr double kLogCoefficient = 2.71;       // of log(Delta N(m0))
inline constexpr double kInfinityCoefficient = 1.29;  // of |m_inf|
inline constexpr double kOmegaCoefficient = 1.38;     // of omega(m0)
inline constexpr double kAdditive = 4.13;
inline constexpr double kIntegerConstant = 16.0;      // p <= 16 (i log m)^2
inline constexpr double kIsogenyConstant = 26.0;
inline constexpr double kSimplifiedConstant = 62.0;
inline constexpr double kBachComparisonConstant = 72.0;
inline constexpr double kSimplifiedLogSlope = 5.62;
inline constexpr double kSimplifiedIntercept = 5.52;
inline constexpr double kLog12Floor = 2.48;
inline constexpr double kDegreeSlope = 0.71;      // |m_inf| <= 0.71 log + 1.07
inline constexpr double kDegreeIntercept = 1.07;
inline constexpr double kOmegaRatioIntegers = 0.67;
inline constexpr double kOmegaLiCorrection = 0.12;
inline constexpr double kOmegaRatioIsogeny = 1.06;
inline constexpr double kIsogenyLogFloor = 4.73;
inline constexpr double kOdlyzkoQuarticRootDisc = 3.263;
inline constexpr double kDegreeThreeLogFloor = 2.74;
inline constexpr double kDegreeSixLogFloor = 6.99;
inline constexpr double kChebyshevConstant = 1.03883;  // psi(x) <= C x
inline constexpr double kSmallNormCutoff = 95.0;
inline constexpr double kIntegerExhaustiveCutoff = 11000.0;
inline constexpr double kTrivialRayThreshold = 12.0;

struct NamedConstant {
  std::string_view name;
  double value;
  std::string_view role;
};

/// Every constant above with a one-line description of where it enters.
std::span<const NamedConstant> table();

}  // namespace constants

/// Inputs of the ray class bound: absolute discriminant, norm of the finite
/// modulus, number of real places in the modulus, number of primes dividing
/// the finite modulus, and the subgroup index.
struct BoundInput {
  std::uint64_t delta = 1;
  std::uint64_t norm_m0 = 1;
  std::uint64_t m_infty = 0;
  std::uint64_t omega = 0;
  std::uint64_t index = 1;

  /// Throws DomainError when an invariant is violated.
  void validate() const;
};

/// (index (2.71 log(delta norm_m0) + 1.29 m_infty + 1.38 omega) + 4.13)^2
double main_bound(const BoundInput& input);

/// Same formula with log(delta norm_m0) supplied directly.
double main_bound_from_log(std::uint64_t index, double log_delta_norm,
                           double m_infty, double omega);

/// 62 (log dn)^2, for dn >= 12.
double simplified_bound(double delta_times_norm);
/// (5.62 log dn + 5.52)^2, the form before the log(12) >= 2.48 step.
double simplified_bound_intermediate(double delta_times_norm);
/// 72 (log dn)^2.
double bach_bound(double delta_times_norm);

/// 16 (index log m)^2.
double zm_bound(std::uint64_t m, std::uint64_t index);

/// 26 (h_plus log(delta conductor_norm))^2; requires delta conductor_norm >= 3.
double isogeny_bound(std::uint64_t delta, std::uint64_t conductor_norm,
                     std::uint64_t h_plus);

/// (2.71 h_k0 log_delta + 4.13)^2 for the relative class group of a
/// cyclotomic field.
double cyclotomic_relative_bound(std::uint64_t h_k0, double log_delta);

// ---------------------------------------------------------------------------
// Analytic stack behind the constants.

struct SmoothingParams {
  long double a = 1.0L;  // in (0, 1]; a == 1 selects the limiting form
  long double x = 95.0L;  // >= 1
};

struct SFunctions {
  long double s1 = 0, s2 = 0, s3 = 0, s4 = 0, s5 = 0;
};

/// The five auxiliary functions bounding sqrt(x)/(a+1)^2. At a == 1 the
/// bracket in s4 is replaced by its limit (log x)^2 / 2.
SFunctions s_functions(const SmoothingParams& params);

/// (x^b - b log x - 1) / (b^2 x^b), which tends to (log x)^2 / 2 as b -> 0.
/// Evaluated without cancellation for small |b log x|. Requires x > 0, b != 0.
long double limit_term(long double x, long double b);

enum class Relation { kLessEqual, kLess, kGreaterEqual, kEqual };

/// One-sided inequality "computed REL published" with its margin.
struct Certification {
  std::string name;
  long double computed = 0;
  double published = 0;
  Relation relation = Relation::kLessEqual;
  long double slack = 0;  // distance to failure, positive when the claim holds
  bool pass = false;
};

/// Margin required on every one-sided certificate of a constant.
inline constexpr long double kCertificationMargin = 1e-9L;
/// Margin for grid monotonicity steps, whose true size near x = 1e6 is about
/// 1e-10; long double rounding on values of order 1 stays below 1e-17.
inline constexpr long double kMonotoneStepMargin = 1e-15L;

Certification certify(std::string name, long double computed, double published,
                      Relation relation, long double margin = kCertificationMargin);

std::string_view relation_symbol(Relation relation);

struct ConstantDerivation {
  long double c_log = 0;    // 4 s1(95)
  long double c_inf = 0;    // 4 s4(95)
  long double c_omega = 0;  // 4 s3(95)
  long double c_add = 0;    // 4 s2(95)
  long double s5_margin = 0;  // s5(95) + 2C/e
  std::vector<Certification> certificates;

  bool all_pass() const;
};

/// Evaluates the s-functions at x = 95, a -> 1 in long double and certifies
/// each coefficient against its published value, the sign of s5 + 2C/e on
/// [95, 1e8], and monotonicity of s1..s4 on [95, 1e6].
/// Throws CertificationFailure if any certificate fails.
ConstantDerivation derive_main_constants();

/// Same as derive_main_constants() but never throws.
ConstantDerivation evaluate_main_constants();

struct RemarkEstimates {
  double minf_upper = 0;   // 0.71 log dn + 1.07
  double omega_upper = 0;  // log dn / log 2
};

/// Upper bounds for |m_inf| and omega(m0) in terms of dn = Delta N(m0) >= 12.
RemarkEstimates remark_estimates(double delta_times_norm);

/// Certificates for the secondary constants: degree estimate (0.71, 1.07),
/// the 62 and 16 simplifications, the li-based 0.67, the isogeny chain
/// (1.06, 4.73, 6.99, 26), the degree-3 floor 2.74, and the small-norm case
/// values.
std::vector<Certification> remark_certificates();

/// (2.71 + 1.38 omega / L + 4.13 / L)^2 with L = log(Delta N(f)).
double isogeny_constant_factor(double log_delta_norm, unsigned omega);

struct IsogenySmallCase {
  std::int64_t field_discriminant = 0;
  std::uint64_t conductor_norm = 1;
  unsigned omega = 0;
  double factor = 0;
  bool norm_is_square = false;
};

/// All (quadratic field, conductor norm) pairs with log(Delta N(f)) < 4.73,
/// N(f) the norm of some ideal, and isogeny_constant_factor > 26 for the
/// largest possible number of prime ideals dividing f.
std::vector<IsogenySmallCase> isogeny_small_case_exceptions();

struct SmallCaseValue {
  std::string label;
  double value = 0;
};

/// The four lower bounds used when the smallest prime has norm <= 95.
std::vector<SmallCaseValue> small_case_values();

}  // namespace rayclass::bounds

#endif  // RAYCLASS_BOUNDS_HPP_

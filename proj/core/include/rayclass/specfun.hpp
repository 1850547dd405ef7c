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

#ifndef RAYCLASS_SPECFUN_HPP_
#define RAYCLASS_SPECFUN_HPP_

#include <cstdint>

namespace rayclass::specfun {

inline constexpr long double kEulerGamma =
    0.577215664901532860606512090082402431L;
inline constexpr long double kPi = 3.141592653589793238462643383279502884L;

/// Logarithmic derivative of the gamma function for x > 0.
///
/// The argument is shifted above 10 with psi(x) = psi(x + 1) - 1/x, then the
/// asymptotic Bernoulli expansion is summed. Absolute error is below 1e-12
/// for double on (0, 100], and near long double epsilon for the long double
/// overload. Throws DomainError for x <= 0 or non-finite x.
double digamma(double x);
long double digamma(long double x);

/// Derivative of digamma, same strategy and domain as digamma().
double trigamma(double x);
long double trigamma(long double x);

/// Principal-value logarithmic integral li(x) for x > 1, evaluated as
/// Ei(log x) through Ramanujan's series. Throws DomainError for x <= 1.
double log_integral(double x);
long double log_integral(long double x);

/// log p when m = p^k, otherwise 0.
double von_mangoldt(std::uint64_t m);

}  // namespace rayclass::specfun

#endif  // RAYCLASS_SPECFUN_HPP_

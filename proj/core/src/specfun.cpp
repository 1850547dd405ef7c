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

#include "rayclass/specfun.hpp"

#include <array>
#include <cmath>
#include <concepts>
#include <string>

#include "rayclass/arith.hpp"
#include "rayclass/error.hpp"

namespace rayclass::specfun {
namespace {

// B_2, B_4, ..., B_20.
constexpr std::array<long double, 10> kBernoulliEven = {
    1.0L / 6.0L,        -1.0L / 30.0L,        1.0L / 42.0L,
    -1.0L / 30.0L,      5.0L / 66.0L,         -691.0L / 2730.0L,
    7.0L / 6.0L,        -3617.0L / 510.0L,    43867.0L / 798.0L,
    -174611.0L / 330.0L};

constexpr long double kAsymptoticThreshold = 10.0L;

void require_positive(long double x, const char* name) {
  if (!(x > 0.0L) || !std::isfinite(x)) {
    throw DomainError(std::string(name) + ": argument must be finite and > 0");
  }
}

template <std::floating_point T>
T digamma_impl(T x_in) {
  require_positive(x_in, "digamma");
  long double x = x_in;
  long double shift = 0.0L;
  while (x < kAsymptoticThreshold) {
    shift += 1.0L / x;
    x += 1.0L;
  }
  const long double inv2 = 1.0L / (x * x);
  long double power = inv2;
  long double series = 0.0L;
  for (std::size_t k = 0; k < kBernoulliEven.size(); ++k) {
    series += kBernoulliEven[k] / (2.0L * static_cast<long double>(k + 1)) * power;
    power *= inv2;
  }
  return static_cast<T>(std::log(x) - 0.5L / x - series - shift);
}

template <std::floating_point T>
T trigamma_impl(T x_in) {
  require_positive(x_in, "trigamma");
  long double x = x_in;
  long double shift = 0.0L;
  while (x < kAsymptoticThreshold) {
    shift += 1.0L / (x * x);
    x += 1.0L;
  }
  const long double inv = 1.0L / x;
  const long double inv2 = inv * inv;
  long double power = inv2 * inv;
  long double series = 0.0L;
  for (long double b : kBernoulliEven) {
    series += b * power;
    power *= inv2;
  }
  return static_cast<T>(inv + 0.5L * inv2 + series + shift);
}

template <std::floating_point T>
T log_integral_impl(T x_in) {
  if (!(x_in > 1.0L) || !std::isfinite(x_in)) {
    throw DomainError("log_integral: argument must be finite and > 1");
  }
  const long double u = std::log(static_cast<long double>(x_in));
  // Ramanujan: li(x) = gamma + log u
  //   + sqrt(x) * sum_{n>=1} (-1)^(n-1) u^n / (n! 2^(n-1)) * sum_{k<=(n-1)/2} 1/(2k+1)
  long double sum = 0.0L;
  long double coeff = 1.0L;  // (-1)^(n-1) u^n / (n! 2^(n-1))
  long double inner = 0.0L;
  for (int n = 1; n < 2000; ++n) {
    coeff *= (n == 1 ? u : -u / (2.0L * static_cast<long double>(n)));
    if ((n - 1) % 2 == 0) {
      inner += 1.0L / static_cast<long double>(n);
    }
    const long double term = coeff * inner;
    sum += term;
    if (n > u && std::fabs(term) <= 1e-22L * std::fabs(sum)) {
      break;
    }
  }
  return static_cast<T>(kEulerGamma + std::log(u) +
                        std::sqrt(static_cast<long double>(x_in)) * sum);
}

}  // namespace

double digamma(double x) { return digamma_impl(x); }
long double digamma(long double x) { return digamma_impl(x); }
double trigamma(double x) { return trigamma_impl(x); }
long double trigamma(long double x) { return trigamma_impl(x); }
double log_integral(double x) { return log_integral_impl(x); }
long double log_integral(long double x) { return log_integral_impl(x); }

double von_mangoldt(std::uint64_t m) {
  if (m < 2) {
    return 0.0;
  }
  const auto factors = arith::factorize(m);
  if (factors.size() != 1) {
    return 0.0;
  }
  return std::log(static_cast<double>(factors.front().prime));
}

}  // namespace rayclass::specfun

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

#include "rayclass/sieve.hpp"

#include <cmath>
#include <string>

#include "rayclass/error.hpp"

namespace rayclass::specfun {

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit) {
  if (limit >= (std::uint64_t{1} << 32)) {
    throw ResourceError("PrimeSieve: limit must be below 2^32");
  }
  const std::uint64_t odd_count = limit / 2 + 1;
  odd_composite_.assign(odd_count, false);
  if (odd_count > 0) {
    odd_composite_[0] = true;  // 1 is not prime
  }
  for (std::uint64_t p = 3; p * p <= limit; p += 2) {
    if (odd_composite_[p / 2]) {
      continue;
    }
    for (std::uint64_t q = p * p; q <= limit; q += 2 * p) {
      odd_composite_[q / 2] = true;
    }
  }
  if (limit >= 2) {
    primes_.push_back(2);
  }
  for (std::uint64_t n = 3; n <= limit; n += 2) {
    if (!odd_composite_[n / 2]) {
      primes_.push_back(static_cast<std::uint32_t>(n));
    }
  }
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
  if (n > limit_) {
    throw ResourceError("PrimeSieve::is_prime: " + std::to_string(n) +
                        " exceeds sieve limit " + std::to_string(limit_));
  }
  if (n < 2) {
    return false;
  }
  if (n % 2 == 0) {
    return n == 2;
  }
  return !odd_composite_[n / 2];
}

long double PrimeSieve::chebyshev_psi(double x) const {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("chebyshev_psi: x must be finite and >= 0");
  }
  // Largest integer strictly below x.
  const double top = std::ceil(x) - 1.0;
  if (top < 2.0) {
    return 0.0L;
  }
  const auto n_max = static_cast<std::uint64_t>(top);
  if (n_max > limit_) {
    throw ResourceError("chebyshev_psi: x exceeds sieve limit " +
                        std::to_string(limit_));
  }
  long double sum = 0.0L;
  for (std::uint32_t p : primes_) {
    if (p > n_max) {
      break;
    }
    const long double log_p = std::log(static_cast<long double>(p));
    for (std::uint64_t pk = p; pk <= n_max; pk *= p) {
      sum += log_p;
      if (pk > n_max / p) {
        break;
      }
    }
  }
  return sum;
}

std::vector<long double> PrimeSieve::chebyshev_prefix(std::uint64_t n_max) const {
  if (n_max > limit_) {
    throw ResourceError("chebyshev_prefix: n_max exceeds sieve limit " +
                        std::to_string(limit_));
  }
  std::vector<long double> jump(n_max + 1, 0.0L);
  for (std::uint32_t p : primes_) {
    if (p > n_max) {
      break;
    }
    const long double log_p = std::log(static_cast<long double>(p));
    for (std::uint64_t pk = p; pk <= n_max; pk *= p) {
      jump[pk] = log_p;
      if (pk > n_max / p) {
        break;
      }
    }
  }
  long double running = 0.0L;
  for (auto& v : jump) {
    running += v;
    v = running;
  }
  return jump;
}

}  // namespace rayclass::specfun

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

#ifndef RAYCLASS_SIEVE_HPP_
#define RAYCLASS_SIEVE_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace rayclass::specfun {

/// Default upper limit for PrimeSieve when nothing else is configured.
inline constexpr std::uint64_t kDefaultSieveLimit = 100'000'000;

/// Immutable table of all primes up to a fixed limit (odd-only Eratosthenes).
/// Safe to share read-only across threads once constructed.
class PrimeSieve {
 public:
  /// Throws ResourceError if limit >= 2^32.
  explicit PrimeSieve(std::uint64_t limit = kDefaultSieveLimit);

  std::uint64_t limit() const { return limit_; }

  /// Throws ResourceError when n exceeds limit().
  bool is_prime(std::uint64_t n) const;

  /// All primes <= limit(), ascending.
  std::span<const std::uint32_t> primes() const { return primes_; }

  /// Chebyshev psi(x) = sum of von_mangoldt(m) over integers 1 <= m < x.
  /// Throws ResourceError when some m < x exceeds limit(), DomainError for
  /// negative or non-finite x.
  long double chebyshev_psi(double x) const;

  /// Prefix table: entry n holds sum of von_mangoldt(m) for m <= n, for
  /// n = 0..n_max. chebyshev_psi(x) equals entry ceil(x) - 1.
  std::vector<long double> chebyshev_prefix(std::uint64_t n_max) const;

 private:
  std::uint64_t limit_;
  std::vector<bool> odd_composite_;  // index i <-> 2i + 1
  std::vector<std::uint32_t> primes_;
};

}  // namespace rayclass::specfun

#endif  // RAYCLASS_SIEVE_HPP_

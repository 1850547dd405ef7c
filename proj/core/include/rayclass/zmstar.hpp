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

#ifndef RAYCLASS_ZMSTAR_HPP_
#define RAYCLASS_ZMSTAR_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rayclass/abelian.hpp"
#include "rayclass/sieve.hpp"

namespace rayclass::zmstar {

inline constexpr std::uint64_t kDefaultModulusLimit = 1'000'000;

/// (Z/mZ)^x as an abstract invariant-factor group, with one generating
/// residue per invariant factor and a full discrete-log table.
class UnitGroupStructure {
 public:
  std::uint64_t modulus() const { return modulus_; }
  const abelian::FiniteAbelianGroup& group() const { return group_; }
  std::span<const std::uint64_t> generators() const { return generators_; }

  /// Exponent vector of a unit residue; DomainError if gcd(residue, m) != 1.
  abelian::GroupElement dlog(std::uint64_t residue) const;
  /// Inverse of dlog.
  std::uint64_t residue(const abelian::GroupElement& e) const;
  bool is_unit(std::uint64_t residue) const;

 private:
  friend UnitGroupStructure unit_group(std::uint64_t, std::uint64_t);

  std::uint64_t modulus_ = 1;
  abelian::FiniteAbelianGroup group_;
  std::vector<std::uint64_t> generators_;
  std::vector<std::int32_t> dlog_code_;  // residue -> linear index, -1 if not a unit
};

/// CRT decomposition with the smallest primitive root of each odd prime
/// power, <-1, 5> for 2^k with k >= 3, normalized to invariant factors.
/// Throws DomainError for m < 2, ResourceError above limit.
UnitGroupStructure unit_group(std::uint64_t m, std::uint64_t limit = kDefaultModulusLimit);

struct ZmVerificationResult {
  std::uint64_t modulus = 0;
  std::uint64_t subgroup_order = 0;
  std::uint64_t subgroup_index = 0;
  /// Residues of the Hermite generators of the subgroup.
  std::vector<std::uint64_t> subgroup_generators;
  double bound = 0;          // 16 (index log m)^2
  double refined_bound = 0;  // (index (2.71 log m + 1.29 + 1.38 omega(m)) + 4.13)^2
  /// Primes, ascending, each of which enlarged the closure of the earlier ones.
  std::vector<std::uint64_t> generating_primes;
  std::uint64_t largest_needed_prime = 0;
  std::uint64_t primes_examined = 0;
  bool pass = false;          // largest_needed_prime <= bound
  bool refined_pass = false;  // largest_needed_prime < refined_bound
  bool trivial = false;       // vacuous pass for the trivial subgroup
  bool incomplete = false;    // prime table exhausted before closure
  bool skipped = false;
  std::string reason;
};

/// Walks the primes coprime to m in increasing order, keeps those whose
/// class lies in h, and stops once their closure equals h.
/// Throws ParentMismatch if h is not a subgroup of structure.group().
ZmVerificationResult verify_subgroup(const UnitGroupStructure& structure,
                                     const abelian::Subgroup& h,
                                     const specfun::PrimeSieve& sieve);

struct ZmScanConfig {
  unsigned jobs = 1;
  std::uint64_t subgroup_cap = abelian::kDefaultSubgroupCap;
  std::uint64_t modulus_limit = kDefaultModulusLimit;
  /// Called after each modulus completes with (modulus, done, total).
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> progress;
};

/// Every non-trivial subgroup of every (Z/mZ)^x for m in [m_min, m_max],
/// ordered by m, then index, then canonical basis. Moduli whose subgroup
/// count exceeds the cap yield a single skipped row.
std::vector<ZmVerificationResult> scan(std::uint64_t m_min, std::uint64_t m_max,
                                       const specfun::PrimeSieve& sieve,
                                       const ZmScanConfig& config = {});

}  // namespace rayclass::zmstar

#endif  // RAYCLASS_ZMSTAR_HPP_

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

#ifndef RAYCLASS_QUADFORMS_HPP_
#define RAYCLASS_QUADFORMS_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rayclass/abelian.hpp"

namespace rayclass::quadforms {

using Int = std::int64_t;

inline constexpr std::uint64_t kDefaultDiscriminantLimit = 10'000'000;

/// Binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
  Int a = 1;
  Int b = 0;
  Int c = 0;

  Int discriminant() const;
  bool is_positive_definite() const { return a > 0 && discriminant() < 0; }
  bool is_primitive() const;
  /// |b| <= a <= c, with b >= 0 when |b| = a or a = c.
  bool is_reduced() const;

  bool operator==(const QuadForm&) const = default;
  auto operator<=>(const QuadForm&) const = default;
};

/// Unique reduced form equivalent to f. DomainError unless positive definite.
QuadForm reduce(QuadForm f);
/// Gaussian composition of two forms of the same discriminant, reduced.
/// ParentMismatch if the discriminants differ.
QuadForm compose(const QuadForm& f, const QuadForm& g);
QuadForm inverse(const QuadForm& f);
/// x^2 + bxy + cy^2 with b = D mod 2.
QuadForm principal_form(Int discriminant);

std::string to_string(const QuadForm& f);

/// Form class group Cl(D) for D = fundamental * conductor^2 < 0, with a
/// dictionary between reduced forms and exponent vectors.
class FormClassGroup {
 public:
  Int discriminant() const { return discriminant_; }
  Int fundamental_discriminant() const { return fundamental_; }
  Int conductor() const { return conductor_; }
  std::uint64_t class_number() const { return forms_.size(); }
  const abelian::FiniteAbelianGroup& group() const { return group_; }

  /// Reduced primitive forms, sorted; the principal form comes first.
  std::span<const QuadForm> forms() const { return forms_; }
  /// Position of the class of f in forms(); DomainError on discriminant or
  /// primitivity mismatch.
  std::size_t index_of(const QuadForm& f) const;
  abelian::GroupElement element_of(const QuadForm& f) const;
  const QuadForm& form_of(const abelian::GroupElement& e) const;

 private:
  friend FormClassGroup class_group(Int, Int, std::uint64_t);

  Int discriminant_ = -4;
  Int fundamental_ = -4;
  Int conductor_ = 1;
  std::vector<QuadForm> forms_;
  abelian::FiniteAbelianGroup group_;
  std::vector<abelian::GroupElement> elements_;      // parallel to forms_
  std::vector<std::size_t> form_by_linear_index_;
  std::unordered_map<Int, std::size_t> index_by_ab_;  // key a * 2^32 + (b + 2^31)
};

/// Throws DomainError unless fundamental < 0 is a fundamental discriminant and
/// conductor >= 1; ResourceError if |D| exceeds limit.
FormClassGroup class_group(Int fundamental, Int conductor,
                           std::uint64_t limit = kDefaultDiscriminantLimit);

/// Class of a prime ideal of norm p: the form (p, b, c) with the smallest
/// b >= 0. Empty if p is inert. DomainError if p divides the conductor or p
/// is not prime.
std::optional<QuadForm> prime_form(const FormClassGroup& cl, std::uint64_t p);

struct ConnectivityResult {
  Int fundamental_discriminant = 0;
  Int conductor = 0;
  Int discriminant = 0;
  std::uint64_t conductor_norm = 0;
  std::uint64_t class_number = 0;
  std::vector<Int> invariant_factors;
  double bound = 0;  // 26 (log(|D_K| N(f)))^2
  /// Primes, ascending, each of which enlarged the closure of the earlier ones.
  std::vector<std::uint64_t> generating_primes;
  /// Prime at which the closure first reached the whole group; 0 for h = 1.
  std::uint64_t threshold_prime = 0;
  std::uint64_t primes_below_bound = 0;
  bool pass = false;
  /// Among the small cases (D_K, N(f)) in {(-4,1), (-4,2), (-3,1), (-3,3), (5,1)}.
  bool exceptional = false;
  std::string note;
};

/// Checks that prime classes of norm below the bound generate the whole
/// ring class group. The ray class field of the conductor f Z_K contains the
/// ring class field, and h_plus must be 1 for imaginary quadratic fields.
ConnectivityResult verify_connectivity(Int fundamental, Int conductor, std::uint64_t h_plus = 1,
                                       std::uint64_t limit = kDefaultDiscriminantLimit);

/// Negative fundamental discriminants with lo <= |D| <= hi, by increasing |D|.
std::vector<Int> negative_fundamental_discriminants(std::uint64_t lo, std::uint64_t hi);

struct QuadScanConfig {
  unsigned jobs = 1;
  std::uint64_t discriminant_limit = kDefaultDiscriminantLimit;
  std::function<void(std::uint64_t, std::uint64_t)> progress;  // (done, total)
};

/// verify_connectivity over every negative fundamental discriminant in the
/// |D_K| range and every conductor in [conductor_min, conductor_max], ordered
/// by |D_K| then conductor.
std::vector<ConnectivityResult> scan_discriminants(std::uint64_t absdisc_min,
                                                   std::uint64_t absdisc_max,
                                                   Int conductor_min, Int conductor_max,
                                                   const QuadScanConfig& config = {});

}  // namespace rayclass::quadforms

#endif  // RAYCLASS_QUADFORMS_HPP_

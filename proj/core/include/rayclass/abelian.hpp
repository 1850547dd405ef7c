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

#ifndef RAYCLASS_ABELIAN_HPP_
#define RAYCLASS_ABELIAN_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rayclass/error.hpp"

namespace rayclass::abelian {

using Int = std::int64_t;

inline constexpr std::uint64_t kDefaultSubgroupCap = 1'000'000;
inline constexpr std::uint64_t kDefaultOrderLimit = 100'000'000;

/// Exponent vector of an element; component i lives in Z/d_i.
struct GroupElement {
  std::vector<Int> exponents;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... | d_k, every d_i >= 2.
/// The trivial group has no factors. Copies share the factor storage.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup();
  /// Throws DomainError unless the factors form a divisibility chain of
  /// integers >= 2, ResourceError if the order overflows 64 bits.
  explicit FiniteAbelianGroup(std::vector<Int> invariant_factors);

  /// Normalizes Z/n_1 x ... x Z/n_r (any orders >= 1) to invariant factors.
  static FiniteAbelianGroup from_cyclic_orders(std::span<const Int> orders);

  std::span<const Int> invariant_factors() const { return *factors_; }
  std::size_t rank() const { return factors_->size(); }
  std::uint64_t order() const { return order_; }
  /// Largest invariant factor, 1 for the trivial group.
  Int exponent() const;

  GroupElement identity() const;
  /// Reduces each exponent into [0, d_i). Throws ParentMismatch on a length
  /// mismatch.
  GroupElement element(std::vector<Int> exponents) const;
  GroupElement add(const GroupElement& g, const GroupElement& h) const;
  GroupElement negate(const GroupElement& g) const;
  GroupElement scale(const GroupElement& g, Int k) const;
  std::uint64_t element_order(const GroupElement& g) const;

  /// True when g has the right length and every entry is reduced.
  bool contains(const GroupElement& g) const;
  /// Throws ParentMismatch unless contains(g).
  void check(const GroupElement& g) const;

  /// Mixed-radix position of g in [0, order()).
  std::uint64_t linear_index(const GroupElement& g) const;
  GroupElement from_linear_index(std::uint64_t index) const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return *a.factors_ == *b.factors_;
  }

 private:
  std::shared_ptr<const std::vector<Int>> factors_;
  std::uint64_t order_ = 1;
};

/// Subgroup stored through the Hermite basis of its preimage lattice in Z^k:
/// an upper-triangular k x k matrix with positive diagonal h_ii | d_i and
/// 0 <= h_ij < h_jj above the diagonal. The basis is unique per subgroup.
class Subgroup {
 public:
  const FiniteAbelianGroup& group() const { return group_; }
  /// Row-major k x k.
  std::span<const Int> basis() const { return basis_; }
  Int basis_entry(std::size_t row, std::size_t col) const {
    return basis_[row * group_.rank() + col];
  }

  std::uint64_t index() const { return index_; }
  std::uint64_t order() const { return group_.order() / index_; }
  bool is_trivial() const { return order() == 1; }
  bool is_whole() const { return index_ == 1; }

  /// Throws ParentMismatch if g is not an element of group().
  bool contains(const GroupElement& g) const;

  /// Non-identity rows of the basis, reduced into the group.
  std::vector<GroupElement> generators() const;
  /// All order() elements. Throws ResourceError above order_limit.
  std::vector<GroupElement> elements(std::uint64_t order_limit = kDefaultOrderLimit) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.basis_ == b.basis_;
  }
  /// Canonical order: by index, then basis lexicographically.
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b);

 private:
  friend class SubgroupBuilder;
  Subgroup(FiniteAbelianGroup group, std::vector<Int> basis);

  FiniteAbelianGroup group_;
  std::vector<Int> basis_;
  std::uint64_t index_ = 1;
};

/// The smallest subgroup containing gens; the trivial subgroup for no gens.
Subgroup generated_subgroup(const FiniteAbelianGroup& group,
                            std::span<const GroupElement> gens);
Subgroup trivial_subgroup(const FiniteAbelianGroup& group);
Subgroup whole_group(const FiniteAbelianGroup& group);
/// Smallest subgroup containing h and g.
Subgroup join(const Subgroup& h, const GroupElement& g);
bool membership(const Subgroup& h, const GroupElement& g);

class SubgroupCapExceeded : public ResourceError {
 public:
  explicit SubgroupCapExceeded(std::uint64_t cap);
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

/// Calls visit(subgroup) once per subgroup. Returns the number visited.
/// Throws SubgroupCapExceeded once more than cap subgroups exist and
/// ResourceError when the group order exceeds order_limit.
std::uint64_t for_each_subgroup(const FiniteAbelianGroup& group,
                                const std::function<void(const Subgroup&)>& visit,
                                std::uint64_t cap = kDefaultSubgroupCap,
                                std::uint64_t order_limit = kDefaultOrderLimit);

/// Every subgroup, sorted canonically (trivial subgroup last, whole group
/// first).
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& group,
                                          std::uint64_t cap = kDefaultSubgroupCap,
                                          std::uint64_t order_limit = kDefaultOrderLimit);

// ---------------------------------------------------------------------------
// Characters.

/// exp(2 pi i numerator / denominator), numerator reduced mod denominator.
struct RootOfUnity {
  Int numerator = 0;
  Int denominator = 1;

  bool is_one() const { return numerator == 0; }
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// chi(e) = exp(2 pi i sum_i w_i e_i / d_i), values as exact roots of unity of
/// order dividing the group exponent.
class Character {
 public:
  Character(FiniteAbelianGroup group, std::vector<Int> weights);

  const FiniteAbelianGroup& group() const { return group_; }
  std::span<const Int> weights() const { return weights_; }
  RootOfUnity value(const GroupElement& g) const;
  bool is_principal() const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.group_ == b.group_ && a.weights_ == b.weights_;
  }

 private:
  FiniteAbelianGroup group_;
  std::vector<Int> weights_;
};

/// The index() characters of the group that are trivial on h, i.e. the
/// characters of G/H lifted to G, sorted by weights. Solved directly from the
/// Hermite basis. Throws ResourceError when h.index() exceeds index_limit.
std::vector<Character> characters_trivial_on(const Subgroup& h,
                                             std::uint64_t index_limit = 1'000'000);

/// Exact formal sum of N-th roots of unity, sum_a c_a zeta_N^a.
class CyclotomicSum {
 public:
  explicit CyclotomicSum(Int order);

  void add(const RootOfUnity& root, Int multiplicity = 1);
  Int order() const { return order_; }

  /// Value reduced modulo the N-th cyclotomic polynomial.
  std::vector<Int> reduced() const;
  bool is_zero() const;
  /// The integer value if the sum is rational, nullopt otherwise.
  std::optional<Int> as_integer() const;

 private:
  Int order_;
  std::vector<Int> counts_;
};

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<Int> cyclotomic_polynomial(Int n);

// ---------------------------------------------------------------------------
// Presentations.

/// Result of reducing Z^r modulo a full-rank relation lattice to invariant
/// factors.
struct Presentation {
  FiniteAbelianGroup group;
  /// r x k: old coordinates x map to new exponents x * coordinate_map mod d.
  std::vector<std::vector<Int>> coordinate_map;
  /// k x r: new generator i is sum_j generator_words[i][j] * old generator j.
  std::vector<std::vector<Int>> generator_words;

  GroupElement coordinates(std::span<const Int> old) const;
};

/// Smith normal form reduction of the relation rows (each of length
/// num_generators). Throws DomainError if the relations do not have full rank.
Presentation decompose_relations(std::size_t num_generators,
                                 const std::vector<std::vector<Int>>& relations);

}  // namespace rayclass::abelian

#endif  // RAYCLASS_ABELIAN_HPP_

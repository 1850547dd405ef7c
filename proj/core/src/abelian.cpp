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

#include "rayclass/abelian.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

#include "rayclass/arith.hpp"

namespace rayclass::abelian {
namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

Int mul_add_mod(Int a, Int b, Int c, Int m) {
  // (a * b + c) mod m in [0, m)
  const i128 v = static_cast<i128>(a) * b + c;
  i128 r = v % m;
  if (r < 0) {
    r += m;
  }
  return static_cast<Int>(r);
}

Int checked(i128 v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) {
    throw ResourceError("integer overflow in Smith normal form");
  }
  return static_cast<Int>(v);
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> out{1};
  for (const auto& pp : arith::factorize(static_cast<std::uint64_t>(n))) {
    const std::size_t base = out.size();
    Int power = 1;
    for (unsigned e = 0; e < pp.exponent; ++e) {
      power *= static_cast<Int>(pp.prime);
      for (std::size_t i = 0; i < base; ++i) {
        out.push_back(out[i] * power);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteAbelianGroup

FiniteAbelianGroup::FiniteAbelianGroup()
    : factors_(std::make_shared<const std::vector<Int>>()) {}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> invariant_factors) {
  u128 order = 1;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    const Int d = invariant_factors[i];
    if (d < 2) {
      throw DomainError("FiniteAbelianGroup: invariant factors must be >= 2");
    }
    if (i > 0 && d % invariant_factors[i - 1] != 0) {
      throw DomainError("FiniteAbelianGroup: invariant factors must form a divisibility chain");
    }
    order *= static_cast<u128>(d);
    if (order > std::numeric_limits<std::uint64_t>::max()) {
      throw ResourceError("FiniteAbelianGroup: order does not fit in 64 bits");
    }
  }
  order_ = static_cast<std::uint64_t>(order);
  factors_ = std::make_shared<const std::vector<Int>>(std::move(invariant_factors));
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(std::span<const Int> orders) {
  std::vector<std::vector<Int>> relations(orders.size(), std::vector<Int>(orders.size(), 0));
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1) {
      throw DomainError("from_cyclic_orders: orders must be >= 1");
    }
    relations[i][i] = orders[i];
  }
  return decompose_relations(orders.size(), relations).group;
}

Int FiniteAbelianGroup::exponent() const {
  return factors_->empty() ? 1 : factors_->back();
}

GroupElement FiniteAbelianGroup::identity() const {
  return GroupElement{std::vector<Int>(rank(), 0)};
}

GroupElement FiniteAbelianGroup::element(std::vector<Int> exponents) const {
  if (exponents.size() != rank()) {
    throw ParentMismatch("element: exponent vector has the wrong length");
  }
  for (std::size_t i = 0; i < rank(); ++i) {
    exponents[i] = arith::mod(exponents[i], (*factors_)[i]);
  }
  return GroupElement{std::move(exponents)};
}

bool FiniteAbelianGroup::contains(const GroupElement& g) const {
  if (g.exponents.size() != rank()) {
    return false;
  }
  for (std::size_t i = 0; i < rank(); ++i) {
    if (g.exponents[i] < 0 || g.exponents[i] >= (*factors_)[i]) {
      return false;
    }
  }
  return true;
}

void FiniteAbelianGroup::check(const GroupElement& g) const {
  if (!contains(g)) {
    throw ParentMismatch("element does not belong to this group");
  }
}

GroupElement FiniteAbelianGroup::add(const GroupElement& g, const GroupElement& h) const {
  check(g);
  check(h);
  GroupElement out = g;
  for (std::size_t i = 0; i < rank(); ++i) {
    out.exponents[i] += h.exponents[i];
    if (out.exponents[i] >= (*factors_)[i]) {
      out.exponents[i] -= (*factors_)[i];
    }
  }
  return out;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& g) const {
  check(g);
  GroupElement out = g;
  for (std::size_t i = 0; i < rank(); ++i) {
    out.exponents[i] = out.exponents[i] == 0 ? 0 : (*factors_)[i] - out.exponents[i];
  }
  return out;
}

GroupElement FiniteAbelianGroup::scale(const GroupElement& g, Int k) const {
  check(g);
  GroupElement out = g;
  for (std::size_t i = 0; i < rank(); ++i) {
    out.exponents[i] = mul_add_mod(g.exponents[i], k, 0, (*factors_)[i]);
  }
  return out;
}

std::uint64_t FiniteAbelianGroup::element_order(const GroupElement& g) const {
  check(g);
  Int order = 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    const Int d = (*factors_)[i];
    const Int component = d / std::gcd(d, g.exponents[i]);
    order = std::lcm(order, component);
  }
  return static_cast<std::uint64_t>(order);
}

std::uint64_t FiniteAbelianGroup::linear_index(const GroupElement& g) const {
  check(g);
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    index = index * static_cast<std::uint64_t>((*factors_)[i]) +
            static_cast<std::uint64_t>(g.exponents[i]);
  }
  return index;
}

GroupElement FiniteAbelianGroup::from_linear_index(std::uint64_t index) const {
  if (index >= order_) {
    throw DomainError("from_linear_index: index out of range");
  }
  GroupElement g = identity();
  for (std::size_t i = rank(); i-- > 0;) {
    const auto d = static_cast<std::uint64_t>((*factors_)[i]);
    g.exponents[i] = static_cast<Int>(index % d);
    index /= d;
  }
  return g;
}

// ---------------------------------------------------------------------------
// Subgroup

class SubgroupBuilder {
 public:
  static Subgroup make(FiniteAbelianGroup group, std::vector<Int> basis) {
    return Subgroup(std::move(group), std::move(basis));
  }
};

Subgroup::Subgroup(FiniteAbelianGroup group, std::vector<Int> basis)
    : group_(std::move(group)), basis_(std::move(basis)) {
  const std::size_t k = group_.rank();
  index_ = 1;
  for (std::size_t i = 0; i < k; ++i) {
    index_ *= static_cast<std::uint64_t>(basis_[i * k + i]);
  }
}

std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
  if (auto c = a.index_ <=> b.index_; c != 0) {
    return c;
  }
  const auto fa = a.group_.invariant_factors();
  const auto fb = b.group_.invariant_factors();
  if (auto c = std::lexicographical_compare_three_way(fa.begin(), fa.end(), fb.begin(), fb.end());
      c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(a.basis_.begin(), a.basis_.end(),
                                                b.basis_.begin(), b.basis_.end());
}

bool Subgroup::contains(const GroupElement& g) const {
  group_.check(g);
  const std::size_t k = group_.rank();
  const auto d = group_.invariant_factors();
  std::vector<Int> w = g.exponents;
  for (std::size_t c = 0; c < k; ++c) {
    const Int v = arith::mod(w[c], d[c]);
    const Int h = basis_[c * k + c];
    if (v % h != 0) {
      return false;
    }
    const Int q = v / h;
    if (q == 0) {
      continue;
    }
    for (std::size_t l = c + 1; l < k; ++l) {
      w[l] = mul_add_mod(-q, basis_[c * k + l], w[l], d[l]);
    }
  }
  return true;
}

std::vector<GroupElement> Subgroup::generators() const {
  const std::size_t k = group_.rank();
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Int> row(basis_.begin() + static_cast<std::ptrdiff_t>(i * k),
                         basis_.begin() + static_cast<std::ptrdiff_t>((i + 1) * k));
    GroupElement g = group_.element(std::move(row));
    if (g != group_.identity()) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<GroupElement> Subgroup::elements(std::uint64_t order_limit) const {
  if (order() > order_limit) {
    throw ResourceError("Subgroup::elements: subgroup order exceeds limit");
  }
  const std::size_t k = group_.rank();
  const auto d = group_.invariant_factors();
  std::vector<Int> radix(k);
  for (std::size_t i = 0; i < k; ++i) {
    radix[i] = d[i] / basis_[i * k + i];
  }
  std::vector<GroupElement> out;
  out.reserve(order());
  std::vector<Int> coeff(k, 0);
  while (true) {
    std::vector<Int> e(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (coeff[i] == 0) {
        continue;
      }
      for (std::size_t j = i; j < k; ++j) {
        e[j] = mul_add_mod(coeff[i], basis_[i * k + j], e[j], d[j]);
      }
    }
    out.push_back(GroupElement{std::move(e)});
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++coeff[pos] < radix[pos]) {
        break;
      }
      coeff[pos] = 0;
      if (pos == 0) {
        return out;
      }
    }
    if (k == 0) {
      return out;
    }
  }
}

Subgroup generated_subgroup(const FiniteAbelianGroup& group,
                            std::span<const GroupElement> gens) {
  const std::size_t k = group.rank();
  const auto d = group.invariant_factors();
  std::vector<std::vector<Int>> pending;
  for (const auto& g : gens) {
    group.check(g);
    if (std::any_of(g.exponents.begin(), g.exponents.end(), [](Int v) { return v != 0; })) {
      pending.push_back(g.exponents);
    }
  }
  std::vector<Int> basis(k * k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<Int> pivot(k, 0);
    pivot[c] = d[c];
    for (auto& r : pending) {
      if (r[c] == 0) {
        continue;
      }
      const auto [g, s, t] = arith::ext_gcd(pivot[c], r[c]);
      const Int a = pivot[c] / g;
      const Int b = r[c] / g;
      std::vector<Int> np(k, 0);
      std::vector<Int> nr(k, 0);
      np[c] = g;
      for (std::size_t j = c + 1; j < k; ++j) {
        const i128 pj = pivot[j];
        const i128 rj = r[j];
        i128 x = (s * pj + t * rj) % d[j];
        i128 y = (a * rj - b * pj) % d[j];
        np[j] = static_cast<Int>(x < 0 ? x + d[j] : x);
        nr[j] = static_cast<Int>(y < 0 ? y + d[j] : y);
      }
      pivot = std::move(np);
      r = std::move(nr);
    }
    // (d_c / h_cc) * pivot - d_c e_c lies in the lattice and vanishes up to c.
    const Int mult = d[c] / pivot[c];
    std::vector<Int> extra(k, 0);
    bool nonzero = false;
    for (std::size_t j = c + 1; j < k; ++j) {
      extra[j] = mul_add_mod(mult, pivot[j], 0, d[j]);
      nonzero = nonzero || extra[j] != 0;
    }
    if (nonzero) {
      pending.push_back(std::move(extra));
    }
    std::copy(pivot.begin(), pivot.end(), basis.begin() + static_cast<std::ptrdiff_t>(c * k));
    std::erase_if(pending, [](const std::vector<Int>& r) {
      return std::all_of(r.begin(), r.end(), [](Int v) { return v == 0; });
    });
  }
  for (std::size_t j = 0; j < k; ++j) {
    const Int h = basis[j * k + j];
    for (std::size_t i = 0; i < j; ++i) {
      const Int q = floor_div(basis[i * k + j], h);
      if (q == 0) {
        continue;
      }
      for (std::size_t l = j; l < k; ++l) {
        basis[i * k + l] -= q * basis[j * k + l];
      }
    }
  }
  return SubgroupBuilder::make(group, std::move(basis));
}

Subgroup trivial_subgroup(const FiniteAbelianGroup& group) {
  return generated_subgroup(group, {});
}

Subgroup whole_group(const FiniteAbelianGroup& group) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < group.rank(); ++i) {
    GroupElement g = group.identity();
    g.exponents[i] = 1;
    gens.push_back(std::move(g));
  }
  return generated_subgroup(group, gens);
}

Subgroup join(const Subgroup& h, const GroupElement& g) {
  if (h.contains(g)) {
    return h;
  }
  std::vector<GroupElement> gens = h.generators();
  gens.push_back(g);
  return generated_subgroup(h.group(), gens);
}

bool membership(const Subgroup& h, const GroupElement& g) { return h.contains(g); }

SubgroupCapExceeded::SubgroupCapExceeded(std::uint64_t cap)
    : ResourceError("subgroup count exceeds cap " + std::to_string(cap)), cap_(cap) {}

namespace {

// Bottom-up enumeration of Hermite bases. Row i is (0..0, h, x_{i+1}, ...)
// with h | d_i; the lattice contains d_i e_i iff (d_i / h) * x lies in the
// span of the rows below, which is solved column by column.
class SubgroupEnumerator {
 public:
  SubgroupEnumerator(const FiniteAbelianGroup& group,
                     const std::function<void(const Subgroup&)>& visit, std::uint64_t cap)
      : group_(group),
        d_(group.invariant_factors().begin(), group.invariant_factors().end()),
        k_(group.rank()),
        visit_(visit),
        cap_(cap),
        basis_(k_ * k_, 0) {
    for (Int di : d_) {
      divisors_.push_back(divisors(di));
    }
  }

  std::uint64_t run() {
    place_row(static_cast<std::ptrdiff_t>(k_) - 1);
    return count_;
  }

 private:
  void place_row(std::ptrdiff_t i) {
    if (i < 0) {
      if (++count_ > cap_) {
        throw SubgroupCapExceeded(cap_);
      }
      visit_(SubgroupBuilder::make(group_, basis_));
      return;
    }
    const auto row = static_cast<std::size_t>(i);
    for (Int h : divisors_[row]) {
      std::fill(basis_.begin() + static_cast<std::ptrdiff_t>(row * k_),
                basis_.begin() + static_cast<std::ptrdiff_t>((row + 1) * k_), 0);
      basis_[row * k_ + row] = h;
      std::vector<Int> carry(k_, 0);
      place_offdiagonal(row, d_[row] / h, row + 1, carry);
    }
  }

  void place_offdiagonal(std::size_t row, Int t, std::size_t col, const std::vector<Int>& carry) {
    if (col == k_) {
      place_row(static_cast<std::ptrdiff_t>(row) - 1);
      return;
    }
    const Int h = basis_[col * k_ + col];
    const Int c = arith::mod(carry[col], h);
    const Int g = std::gcd(t, h);
    if (c % g != 0) {
      return;
    }
    const Int step = h / g;
    Int x0 = 0;
    if (step > 1) {
      const auto inv = arith::inv_mod(static_cast<std::uint64_t>(arith::mod(t / g, step)),
                                      static_cast<std::uint64_t>(step));
      x0 = mul_add_mod(arith::mod(-c / g, step), static_cast<Int>(*inv), 0, step);
    }
    for (Int x = x0; x < h; x += step) {
      basis_[row * k_ + col] = x;
      const Int q = static_cast<Int>((static_cast<i128>(t) * x + carry[col]) / h);
      std::vector<Int> next = carry;
      for (std::size_t l = col + 1; l < k_; ++l) {
        next[l] = mul_add_mod(-q, basis_[col * k_ + l], carry[l], d_[l]);
      }
      place_offdiagonal(row, t, col + 1, next);
    }
    basis_[row * k_ + col] = 0;
  }

  const FiniteAbelianGroup& group_;
  std::vector<Int> d_;
  std::size_t k_;
  const std::function<void(const Subgroup&)>& visit_;
  std::uint64_t cap_;
  std::uint64_t count_ = 0;
  std::vector<Int> basis_;
  std::vector<std::vector<Int>> divisors_;
};

}  // namespace

std::uint64_t for_each_subgroup(const FiniteAbelianGroup& group,
                                const std::function<void(const Subgroup&)>& visit,
                                std::uint64_t cap, std::uint64_t order_limit) {
  if (group.order() > order_limit) {
    throw ResourceError("enumerate_subgroups: group order " + std::to_string(group.order()) +
                        " exceeds limit " + std::to_string(order_limit));
  }
  SubgroupEnumerator e(group, visit, cap);
  return e.run();
}

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& group, std::uint64_t cap,
                                          std::uint64_t order_limit) {
  std::vector<Subgroup> out;
  for_each_subgroup(group, [&](const Subgroup& h) { out.push_back(h); }, cap, order_limit);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Characters

Character::Character(FiniteAbelianGroup group, std::vector<Int> weights)
    : group_(std::move(group)) {
  weights_ = group_.element(std::move(weights)).exponents;
}

RootOfUnity Character::value(const GroupElement& g) const {
  group_.check(g);
  const Int n = group_.exponent();
  const auto d = group_.invariant_factors();
  Int acc = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    acc = mul_add_mod(weights_[i] * g.exponents[i] % d[i], n / d[i], acc, n);
  }
  return {acc, n};
}

bool Character::is_principal() const {
  return std::all_of(weights_.begin(), weights_.end(), [](Int w) { return w == 0; });
}

std::vector<Character> characters_trivial_on(const Subgroup& h, std::uint64_t index_limit) {
  if (h.index() > index_limit) {
    throw ResourceError("characters_trivial_on: index exceeds limit");
  }
  const FiniteAbelianGroup& group = h.group();
  const auto d = group.invariant_factors();
  const std::size_t k = d.size();
  const Int n = group.exponent();

  // w is trivial on row r of the Hermite basis iff
  // sum_{j >= r} w_j h_rj (n / d_j) = 0 mod n. Rows are solved last to first;
  // row r fixes w_r modulo d_r / h_rr, leaving h_rr choices.
  std::vector<std::vector<Int>> solutions;
  std::vector<Int> w(k, 0);
  std::function<void(std::size_t)> solve = [&](std::size_t r) {
    if (r == 0) {
      solutions.push_back(w);
      return;
    }
    const std::size_t row = r - 1;
    Int s = 0;
    for (std::size_t j = r; j < k; ++j) {
      s = mul_add_mod(w[j] * (n / d[j]) % n, h.basis_entry(row, j), s, n);
    }
    const Int hrr = h.basis_entry(row, row);
    const Int a = hrr * (n / d[row]) % n;
    const Int g = (n / d[row]) * hrr;
    const Int rhs = arith::mod(-s, n);
    if (rhs % g != 0) {
      throw std::logic_error("characters_trivial_on: inconsistent annihilator system");
    }
    const Int step = d[row] / hrr;
    Int w0 = 0;
    if (step > 1) {
      const Int inv = static_cast<Int>(*arith::inv_mod(static_cast<std::uint64_t>((a / g) % step),
                                                       static_cast<std::uint64_t>(step)));
      w0 = mul_add_mod(rhs / g % step, inv, 0, step);
    }
    for (Int t = 0; t < hrr; ++t) {
      w[row] = w0 + t * step;
      solve(row);
    }
    w[row] = 0;
  };
  solve(k);
  std::sort(solutions.begin(), solutions.end());

  std::vector<Character> out;
  out.reserve(solutions.size());
  for (auto& sol : solutions) {
    out.emplace_back(group, std::move(sol));
  }
  return out;
}

std::vector<Int> cyclotomic_polynomial(Int n) {
  if (n < 1) {
    throw DomainError("cyclotomic_polynomial: n must be >= 1");
  }
  static std::mutex mutex;
  static std::map<Int, std::vector<Int>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) {
      return it->second;
    }
  }
  // X^n - 1 divided by Phi_e for every proper divisor e of n.
  std::vector<Int> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (Int e : divisors(n)) {
    if (e == n) {
      continue;
    }
    const std::vector<Int> divisor = cyclotomic_polynomial(e);
    const std::size_t dd = divisor.size() - 1;
    std::vector<Int> quotient(poly.size() - dd, 0);
    for (std::size_t deg = poly.size() - 1; deg + 1 > dd; --deg) {
      const Int c = poly[deg];
      if (c != 0) {
        quotient[deg - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) {
          poly[deg - dd + j] -= c * divisor[j];
        }
      }
      if (deg == dd) {
        break;
      }
    }
    poly = std::move(quotient);
  }
  std::lock_guard lock(mutex);
  cache.emplace(n, poly);
  return poly;
}

CyclotomicSum::CyclotomicSum(Int order) : order_(order) {
  if (order < 1) {
    throw DomainError("CyclotomicSum: order must be >= 1");
  }
  counts_.assign(static_cast<std::size_t>(order), 0);
}

void CyclotomicSum::add(const RootOfUnity& root, Int multiplicity) {
  if (order_ % root.denominator != 0) {
    throw ParentMismatch("CyclotomicSum: root order does not divide the sum order");
  }
  const Int a = arith::mod(root.numerator, root.denominator) * (order_ / root.denominator);
  counts_[static_cast<std::size_t>(a)] += multiplicity;
}

std::vector<Int> CyclotomicSum::reduced() const {
  const std::vector<Int> phi = cyclotomic_polynomial(order_);
  const std::size_t deg_phi = phi.size() - 1;
  std::vector<Int> r = counts_;
  for (std::size_t deg = r.size(); deg-- > deg_phi;) {
    const Int c = r[deg];
    if (c == 0) {
      continue;
    }
    for (std::size_t j = 0; j <= deg_phi; ++j) {
      r[deg - deg_phi + j] -= c * phi[j];
    }
  }
  r.resize(deg_phi);
  return r;
}

bool CyclotomicSum::is_zero() const {
  const auto r = reduced();
  return std::all_of(r.begin(), r.end(), [](Int v) { return v == 0; });
}

std::optional<Int> CyclotomicSum::as_integer() const {
  const auto r = reduced();
  if (std::any_of(r.begin() + 1, r.end(), [](Int v) { return v != 0; })) {
    return std::nullopt;
  }
  return r.front();
}

// ---------------------------------------------------------------------------
// Presentations

GroupElement Presentation::coordinates(std::span<const Int> old) const {
  if (old.size() != coordinate_map.size()) {
    throw ParentMismatch("Presentation::coordinates: wrong number of old coordinates");
  }
  const auto d = group.invariant_factors();
  std::vector<Int> e(d.size(), 0);
  for (std::size_t j = 0; j < old.size(); ++j) {
    if (old[j] == 0) {
      continue;
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
      e[i] = mul_add_mod(arith::mod(old[j], d[i]), coordinate_map[j][i], e[i], d[i]);
    }
  }
  return GroupElement{std::move(e)};
}

Presentation decompose_relations(std::size_t num_generators,
                                 const std::vector<std::vector<Int>>& relations) {
  const std::size_t n = num_generators;
  std::vector<std::vector<Int>> a = relations;
  for (const auto& row : a) {
    if (row.size() != n) {
      throw DomainError("decompose_relations: relation has the wrong length");
    }
  }
  const std::size_t m = a.size();
  std::vector<std::vector<Int>> v(n, std::vector<Int>(n, 0));
  std::vector<std::vector<Int>> vinv(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    v[i][i] = 1;
    vinv[i][i] = 1;
  }

  // col_j -= q col_t, tracked in V and V^{-1}.
  auto column_op = [&](std::size_t j, std::size_t t, Int q) {
    for (std::size_t i = 0; i < m; ++i) {
      a[i][j] = checked(static_cast<i128>(a[i][j]) - static_cast<i128>(q) * a[i][t]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      v[i][j] = checked(static_cast<i128>(v[i][j]) - static_cast<i128>(q) * v[i][t]);
    }
    for (std::size_t l = 0; l < n; ++l) {
      vinv[t][l] = checked(static_cast<i128>(vinv[t][l]) + static_cast<i128>(q) * vinv[j][l]);
    }
  };
  auto row_op = [&](std::size_t i, std::size_t t, Int q) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = checked(static_cast<i128>(a[i][j]) - static_cast<i128>(q) * a[t][j]);
    }
  };

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t pi = m;
      std::size_t pj = n;
      Int best = 0;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          const Int val = a[i][j] < 0 ? -a[i][j] : a[i][j];
          if (val != 0 && (best == 0 || val < best)) {
            best = val;
            pi = i;
            pj = j;
          }
        }
      }
      if (best == 0) {
        throw DomainError("decompose_relations: relations do not have full rank");
      }
      std::swap(a[t], a[pi]);
      if (pj != t) {
        for (std::size_t i = 0; i < m; ++i) {
          std::swap(a[i][t], a[i][pj]);
        }
        for (std::size_t i = 0; i < n; ++i) {
          std::swap(v[i][t], v[i][pj]);
        }
        std::swap(vinv[t], vinv[pj]);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] != 0) {
          row_op(i, t, a[i][t] / a[t][t]);
          clean = clean && a[i][t] == 0;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] != 0) {
          column_op(j, t, a[t][j] / a[t][t]);
          clean = clean && a[t][j] == 0;
        }
      }
      if (!clean) {
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t l = 0; l < n; ++l) {
              a[t][l] = checked(static_cast<i128>(a[t][l]) + a[i][l]);
            }
            divisible = false;
            break;
          }
        }
      }
      if (divisible) {
        break;
      }
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) {
        x = -x;
      }
    }
  }

  std::vector<Int> factors;
  std::vector<std::size_t> kept;
  for (std::size_t t = 0; t < n; ++t) {
    if (a[t][t] > 1) {
      factors.push_back(a[t][t]);
      kept.push_back(t);
    }
  }
  Presentation p;
  p.group = FiniteAbelianGroup(factors);
  p.coordinate_map.assign(n, std::vector<Int>(kept.size(), 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t c = 0; c < kept.size(); ++c) {
      p.coordinate_map[j][c] = arith::mod(v[j][kept[c]], factors[c]);
    }
  }
  for (std::size_t c = 0; c < kept.size(); ++c) {
    p.generator_words.push_back(vinv[kept[c]]);
  }
  return p;
}

}  // namespace rayclass::abelian

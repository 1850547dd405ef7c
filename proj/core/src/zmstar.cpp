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

#include "rayclass/zmstar.hpp"

#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "rayclass/arith.hpp"
#include "rayclass/bounds.hpp"
#include "rayclass/error.hpp"

namespace rayclass::zmstar {
namespace {

using abelian::GroupElement;
using abelian::Int;

bool is_primitive_root(std::uint64_t g, std::uint64_t q, std::uint64_t phi,
                       const std::vector<arith::PrimePower>& phi_factors) {
  if (std::gcd(g, q) != 1) {
    return false;
  }
  for (const auto& pp : phi_factors) {
    if (arith::pow_mod(g, phi / pp.prime, q) == 1) {
      return false;
    }
  }
  return true;
}

std::uint64_t smallest_primitive_root(std::uint64_t q, std::uint64_t phi) {
  const auto phi_factors = arith::factorize(phi);
  for (std::uint64_t g = 2; g < q; ++g) {
    if (is_primitive_root(g, q, phi, phi_factors)) {
      return g;
    }
  }
  return 1;  // q == 2
}

}  // namespace

UnitGroupStructure unit_group(std::uint64_t m, std::uint64_t limit) {
  if (m < 2) {
    throw DomainError("unit_group: modulus must be >= 2");
  }
  if (m > limit) {
    throw ResourceError("unit_group: modulus " + std::to_string(m) + " exceeds limit " +
                        std::to_string(limit));
  }
  std::vector<std::uint64_t> component_gens;
  std::vector<Int> component_orders;
  for (const auto& pp : arith::factorize(m)) {
    const std::uint64_t q = pp.value;
    const std::uint64_t rest = m / q;
    // x = g mod q, x = 1 mod rest.
    auto lift = [&](std::uint64_t g) -> std::uint64_t {
      if (rest == 1) {
        return g % m;
      }
      const std::uint64_t inv_q = *arith::inv_mod(q % rest, rest);
      const std::uint64_t t =
          arith::mul_mod(arith::mod(1 - static_cast<Int>(g % rest), static_cast<Int>(rest)),
                         inv_q, rest);
      return (g + q * t) % m;
    };
    if (pp.prime == 2) {
      if (pp.exponent == 2) {
        component_gens.push_back(lift(3));
        component_orders.push_back(2);
      } else if (pp.exponent >= 3) {
        component_gens.push_back(lift(q - 1));
        component_orders.push_back(2);
        component_gens.push_back(lift(5));
        component_orders.push_back(static_cast<Int>(q / 4));
      }
      continue;
    }
    const std::uint64_t phi = q / pp.prime * (pp.prime - 1);
    component_gens.push_back(lift(smallest_primitive_root(q, phi)));
    component_orders.push_back(static_cast<Int>(phi));
  }

  std::vector<std::vector<Int>> relations(component_orders.size(),
                                          std::vector<Int>(component_orders.size(), 0));
  for (std::size_t i = 0; i < component_orders.size(); ++i) {
    relations[i][i] = component_orders[i];
  }
  const abelian::Presentation p = abelian::decompose_relations(component_orders.size(), relations);

  UnitGroupStructure s;
  s.modulus_ = m;
  s.group_ = p.group;
  for (const auto& word : p.generator_words) {
    std::uint64_t r = 1 % m;
    for (std::size_t j = 0; j < word.size(); ++j) {
      const auto e = static_cast<std::uint64_t>(arith::mod(word[j], component_orders[j]));
      r = arith::mul_mod(r, arith::pow_mod(component_gens[j], e, m), m);
    }
    s.generators_.push_back(r);
  }

  // Odometer over exponent vectors; g_i^{d_i} = 1 so wrapping needs no fixup.
  s.dlog_code_.assign(m, -1);
  const auto d = s.group_.invariant_factors();
  const std::size_t k = d.size();
  std::vector<Int> e(k, 0);
  std::uint64_t residue = 1 % m;
  const std::uint64_t order = s.group_.order();
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    if (s.dlog_code_[residue] != -1 || std::gcd(residue, m) != 1) {
      throw std::logic_error("unit_group: generators do not present (Z/mZ)^x");
    }
    s.dlog_code_[residue] = static_cast<std::int32_t>(idx);
    for (std::size_t pos = k; pos-- > 0;) {
      residue = arith::mul_mod(residue, s.generators_[pos], m);
      if (++e[pos] < d[pos]) {
        break;
      }
      e[pos] = 0;
    }
  }
  if (order != arith::euler_phi(m)) {
    throw std::logic_error("unit_group: order differs from phi(m)");
  }
  return s;
}

bool UnitGroupStructure::is_unit(std::uint64_t r) const {
  return dlog_code_[r % modulus_] >= 0;
}

GroupElement UnitGroupStructure::dlog(std::uint64_t r) const {
  const std::int32_t code = dlog_code_[r % modulus_];
  if (code < 0) {
    throw DomainError("dlog: " + std::to_string(r) + " is not a unit modulo " +
                      std::to_string(modulus_));
  }
  return group_.from_linear_index(static_cast<std::uint64_t>(code));
}

std::uint64_t UnitGroupStructure::residue(const GroupElement& e) const {
  group_.check(e);
  std::uint64_t r = 1 % modulus_;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    r = arith::mul_mod(r, arith::pow_mod(generators_[i], static_cast<std::uint64_t>(e.exponents[i]),
                                         modulus_),
                       modulus_);
  }
  return r;
}

ZmVerificationResult verify_subgroup(const UnitGroupStructure& structure,
                                     const abelian::Subgroup& h,
                                     const specfun::PrimeSieve& sieve) {
  if (!(h.group() == structure.group())) {
    throw ParentMismatch("verify_subgroup: subgroup of a different group");
  }
  const std::uint64_t m = structure.modulus();
  ZmVerificationResult r;
  r.modulus = m;
  r.subgroup_order = h.order();
  r.subgroup_index = h.index();
  for (const auto& g : h.generators()) {
    r.subgroup_generators.push_back(structure.residue(g));
  }
  r.bound = bounds::zm_bound(m, h.index());
  r.refined_bound = bounds::main_bound(bounds::BoundInput{1, m, 1, arith::omega(m), h.index()});
  if (h.is_trivial()) {
    r.trivial = true;
    r.pass = true;
    r.refined_pass = true;
    r.reason = "trivial subgroup (vacuous)";
    return r;
  }

  abelian::Subgroup closure = abelian::trivial_subgroup(h.group());
  bool complete = false;
  for (std::uint32_t p : sieve.primes()) {
    if (m % p == 0) {
      continue;
    }
    ++r.primes_examined;
    const GroupElement e = structure.dlog(p);
    if (!h.contains(e) || closure.contains(e)) {
      continue;
    }
    closure = abelian::join(closure, e);
    r.generating_primes.push_back(p);
    if (closure == h) {
      complete = true;
      break;
    }
  }
  if (!complete) {
    r.incomplete = true;
    r.pass = false;
    r.refined_pass = false;
    r.reason = "prime table exhausted at " + std::to_string(sieve.limit()) +
               " before the closure reached the subgroup";
    return r;
  }
  r.largest_needed_prime = r.generating_primes.back();
  const auto largest = static_cast<double>(r.largest_needed_prime);
  r.pass = largest <= r.bound;
  r.refined_pass = largest < r.refined_bound;
  return r;
}

namespace {

std::vector<ZmVerificationResult> verify_modulus(std::uint64_t m, const specfun::PrimeSieve& sieve,
                                                 const ZmScanConfig& config) {
  std::vector<ZmVerificationResult> rows;
  auto skip = [&](std::string reason) {
    ZmVerificationResult r;
    r.modulus = m;
    r.skipped = true;
    r.reason = std::move(reason);
    rows.push_back(std::move(r));
  };
  if (m > config.modulus_limit) {
    skip("modulus exceeds limit " + std::to_string(config.modulus_limit));
    return rows;
  }
  const UnitGroupStructure structure = unit_group(m, config.modulus_limit);
  std::vector<abelian::Subgroup> subgroups;
  try {
    subgroups = abelian::enumerate_subgroups(structure.group(), config.subgroup_cap);
  } catch (const abelian::SubgroupCapExceeded& e) {
    skip(e.what());
    return rows;
  }
  for (const auto& h : subgroups) {
    if (h.is_trivial()) {
      continue;
    }
    rows.push_back(verify_subgroup(structure, h, sieve));
  }
  return rows;
}

}  // namespace

std::vector<ZmVerificationResult> scan(std::uint64_t m_min, std::uint64_t m_max,
                                       const specfun::PrimeSieve& sieve,
                                       const ZmScanConfig& config) {
  m_min = std::max<std::uint64_t>(m_min, 2);
  if (m_max < m_min) {
    return {};
  }
  const std::uint64_t total = m_max - m_min + 1;
  std::vector<std::vector<ZmVerificationResult>> slots(total);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mutex;

  auto worker = [&] {
    for (std::uint64_t i = next++; i < total; i = next++) {
      slots[i] = verify_modulus(m_min + i, sieve, config);
      const std::uint64_t finished = ++done;
      if (config.progress) {
        std::lock_guard lock(progress_mutex);
        config.progress(m_min + i, finished, total);
      }
    }
  };
  const unsigned jobs = std::max(1U, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back(worker);
    }
  }

  std::vector<ZmVerificationResult> out;
  for (auto& slot : slots) {
    std::move(slot.begin(), slot.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace rayclass::zmstar

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

// Independent oracles for finite abelian groups: the list of all groups of a
// given order and the p-group subgroup counting formula.

#ifndef RAYCLASS_TESTS_ABELIAN_ORACLE_HPP_
#define RAYCLASS_TESTS_ABELIAN_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "rayclass/abelian.hpp"
#include "rayclass/arith.hpp"

namespace rayclass::abelian::oracle {

using Partition = std::vector<int>;  // non-increasing parts

inline void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

// Every abelian group of order n, as (group, per-prime partition types).
struct TypedGroup {
  FiniteAbelianGroup group;
  std::vector<std::pair<std::uint64_t, Partition>> sylow;
};

inline std::vector<TypedGroup> abelian_groups_of_order(std::uint64_t n) {
  std::vector<TypedGroup> out{TypedGroup{}};
  for (const auto& pp : arith::factorize(n)) {
    std::vector<TypedGroup> next;
    for (const auto& partial : out) {
      for (const auto& lambda : partitions(static_cast<int>(pp.exponent))) {
        TypedGroup t = partial;
        t.sylow.emplace_back(pp.prime, lambda);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  for (auto& t : out) {
    std::vector<Int> cyclic;
    for (const auto& [p, lambda] : t.sylow) {
      for (int part : lambda) {
        Int q = 1;
        for (int i = 0; i < part; ++i) q *= static_cast<Int>(p);
        cyclic.push_back(q);
      }
    }
    t.group = FiniteAbelianGroup::from_cyclic_orders(cyclic);
  }
  return out;
}

inline std::uint64_t ipow(std::uint64_t p, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= p;
  return r;
}

inline std::uint64_t gaussian_binomial(int n, int k, std::uint64_t p) {
  if (k < 0 || k > n) return 0;
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(p, n - i) - 1;
    den *= ipow(p, i + 1) - 1;
  }
  return num / den;
}

// Conjugate partition, lambda'_i = #{j : lambda_j >= i}, indexed from 1.
inline std::vector<int> conjugate(const Partition& lambda, int length) {
  std::vector<int> c(static_cast<std::size_t>(length) + 2, 0);
  for (int i = 1; i <= length; ++i) {
    for (int part : lambda) c[i] += part >= i ? 1 : 0;
  }
  return c;
}

// Number of subgroups of an abelian p-group of type lambda: sum over mu
// inside lambda of prod_i p^{mu'_{i+1}(lambda'_i - mu'_i)}
// [lambda'_i - mu'_{i+1} choose mu'_i - mu'_{i+1}]_p.
inline std::uint64_t p_group_subgroup_count(std::uint64_t p, const Partition& lambda) {
  const int top = lambda.empty() ? 0 : lambda.front();
  const auto lc = conjugate(lambda, top);
  std::uint64_t total = 0;
  Partition mu(lambda.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == lambda.size()) {
      const auto mc = conjugate(mu, top);
      std::uint64_t term = 1;
      for (int i = 1; i <= top; ++i) {
        term *= ipow(p, mc[i + 1] * (lc[i] - mc[i]));
        term *= gaussian_binomial(lc[i] - mc[i + 1], mc[i] - mc[i + 1], p);
      }
      total += term;
      return;
    }
    const int hi = j == 0 ? lambda[j] : std::min(lambda[j], mu[j - 1]);
    for (int v = 0; v <= hi; ++v) {
      mu[j] = v;
      rec(j + 1);
    }
    mu[j] = 0;
  };
  rec(0);
  return total;
}

}  // namespace rayclass::abelian::oracle

#endif  // RAYCLASS_TESTS_ABELIAN_ORACLE_HPP_
